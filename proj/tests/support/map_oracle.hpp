#pragma once

// Multiprecision reference for the standard map. Every binary64 operation of
// the recurrence is evaluated in 100-digit arithmetic and then rounded to the
// nearest double (ties to even), so the result is what an ideal IEEE-754
// machine with a correctly rounded sine would produce.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>

namespace qgc::oracle {

using Mp = boost::multiprecision::cpp_bin_float_100;

inline double round_to_double(const Mp& v) {
  double d = v.convert_to<double>();
  // Guard against double rounding inside convert_to: pick the closest of
  // d and its two neighbours, ties to even mantissa.
  double best = d;
  Mp best_err = abs(v - Mp(d));
  for (double cand : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
    Mp err = abs(v - Mp(cand));
    if (err < best_err) {
      best = cand;
      best_err = err;
    } else if (err == best_err) {
      std::uint64_t bc, bb;
      std::memcpy(&bc, &cand, 8);
      std::memcpy(&bb, &best, 8);
      if ((bc & 1u) == 0) best = cand;
    }
  }
  return best;
}

inline double rn_add(double a, double b) { return round_to_double(Mp(a) + Mp(b)); }
inline double rn_sub(double a, double b) { return round_to_double(Mp(a) - Mp(b)); }
inline double rn_mul(double a, double b) { return round_to_double(Mp(a) * Mp(b)); }
inline double rn_div(double a, double b) { return round_to_double(Mp(a) / Mp(b)); }
inline double rn_sin(double a) { return round_to_double(sin(Mp(a))); }

inline constexpr double kOracleTwoPi = 0x1.921fb54442d18p+2;

inline double oracle_wrap(double a) {
  double q = std::floor(rn_div(a, kOracleTwoPi));
  double r = rn_sub(a, rn_mul(kOracleTwoPi, q));
  if (r < 0.0) r = rn_add(r, kOracleTwoPi);
  if (r >= kOracleTwoPi) r = 0.0;
  return r;
}

struct OracleState {
  double x, y, k;
};

inline OracleState oracle_step(OracleState s) {
  double kick = rn_mul(s.k, rn_sin(s.y));
  s.x = oracle_wrap(rn_add(s.x, kick));
  s.y = oracle_wrap(rn_add(s.y, s.x));
  return s;
}

inline OracleState oracle_skip(OracleState s, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) s = oracle_step(s);
  return s;
}

inline std::uint32_t oracle_box(double v, std::size_t extent) {
  double t = std::floor(rn_mul(rn_div(v, kOracleTwoPi), static_cast<double>(extent)));
  auto idx = static_cast<std::uint64_t>(t) + 1;
  return static_cast<std::uint32_t>(idx > extent ? extent : idx);
}

// Exact-real trajectory (no per-step rounding) at 400 digits, with the true
// 2*pi as modulus. Used only to report how fast the two models separate.
using MpWide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

struct WideState {
  MpWide x, y, k;
};

inline WideState wide_step(WideState s) {
  static const MpWide two_pi = 2 * boost::math::constants::pi<MpWide>();
  s.x = s.x + s.k * sin(s.y);
  s.x = s.x - two_pi * floor(s.x / two_pi);
  s.y = s.y + s.x;
  s.y = s.y - two_pi * floor(s.y / two_pi);
  return s;
}

inline std::string hex_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", d);
  return buf;
}

}  // namespace qgc::oracle
