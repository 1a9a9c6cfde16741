#include "qgc/chaos.hpp"

#include <cmath>
#include <stdexcept>

namespace qgc {

namespace {

// Double-double arithmetic. Every routine below is a fixed sequence of
// IEEE-754 round-to-nearest operations.
struct DD {
  double hi;
  double lo;
};

DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

DD fast_two_sum(double a, double b) {
  double s = a + b;
  double err = b - (s - a);
  return {s, err};
}

DD split(double a) {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  double c = kSplitter * a;
  double hi = c - (c - a);
  return {hi, a - hi};
}

DD two_prod(double a, double b) {
  double p = a * b;
  DD as = split(a);
  DD bs = split(b);
  double err = ((as.hi * bs.hi - p) + as.hi * bs.lo + as.lo * bs.hi) + as.lo * bs.lo;
  return {p, err};
}

DD add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = fast_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return fast_two_sum(s.hi, s.lo);
}

DD neg(DD a) { return {-a.hi, -a.lo}; }

DD mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return fast_two_sum(p.hi, p.lo);
}

// Division by a small exact integer.
DD div(DD a, double b) {
  double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  DD r = two_sum(a.hi, -p.hi);
  r.lo -= p.lo;
  r.lo += a.lo;
  double q2 = (r.hi + r.lo) / b;
  return fast_two_sum(q1, q2);
}

// pi/2 as an unevaluated sum of three doubles (~160 bits).
constexpr double kPio2Hi = 0x1.921fb54442d18p+0;
constexpr double kPio2Mid = 0x1.1a62633145c07p-54;
constexpr double kPio2Lo = -0x1.f1976b7ed8fbcp-110;
constexpr double kTwoOverPi = 0x1.45f306dc9c883p-1;

// Enough terms for |r| <= pi/4 + eps: the first omitted term is below 2^-110.
constexpr int kSeriesTerms = 14;

// sin r = r (1 - r^2/(2*3) (1 - r^2/(4*5) (1 - ...)))
DD sin_series(DD r) {
  DD r2 = mul(r, r);
  DD t{1.0, 0.0};
  for (int k = kSeriesTerms; k >= 1; --k) {
    double d = static_cast<double>((2 * k) * (2 * k + 1));
    t = add(DD{1.0, 0.0}, neg(div(mul(t, r2), d)));
  }
  return mul(r, t);
}

// cos r = 1 - r^2/(1*2) (1 - r^2/(3*4) (1 - ...))
DD cos_series(DD r) {
  DD r2 = mul(r, r);
  DD t{1.0, 0.0};
  for (int k = kSeriesTerms; k >= 1; --k) {
    double d = static_cast<double>((2 * k - 1) * (2 * k));
    t = add(DD{1.0, 0.0}, neg(div(mul(t, r2), d)));
  }
  return t;
}

}  // namespace

double portable_sin(double y) {
  if (!std::isfinite(y) || y < 0.0 || y > kTwoPi) {
    throw std::domain_error("portable_sin expects an argument in [0, 2pi]");
  }
  const double k = std::floor(y * kTwoOverPi + 0.5);  // quadrant 0..4

  // r = y - k*pi/2, with each product taken exactly.
  DD p1 = two_prod(k, kPio2Hi);
  DD p2 = two_prod(k, kPio2Mid);
  DD r = two_sum(y, -p1.hi);
  r = add(r, DD{-p1.lo, 0.0});
  r = add(r, neg(p2));
  r = add(r, DD{-(k * kPio2Lo), 0.0});

  DD v;
  switch (static_cast<int>(k) & 3) {
    case 0: v = sin_series(r); break;
    case 1: v = cos_series(r); break;
    case 2: v = neg(sin_series(r)); break;
    default: v = neg(cos_series(r)); break;
  }
  // v is normalised, so v.hi is v rounded to nearest.
  return v.hi + 0.0;
}

double wrap_two_pi(double a) {
  double r = a - kTwoPi * std::floor(a / kTwoPi);
  // a/2pi can round up to an integer when a sits just below a multiple.
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

MapState step(MapState s) {
  if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.k)) {
    throw std::invalid_argument("standard map state must be finite");
  }
  // Keep y inside the sine's domain even if the caller passed a raw value.
  const double y_in = (s.y >= 0.0 && s.y < kTwoPi) ? s.y : wrap_two_pi(s.y);
  const double kick = s.k * portable_sin(y_in);
  s.x = wrap_two_pi(s.x + kick);
  s.y = wrap_two_pi(y_in + s.x);
  return s;
}

MapState skip(MapState s, std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) s = step(s);
  return s;
}

std::uint32_t box_index(double v, std::size_t extent) {
  const double scaled = std::floor(v / kTwoPi * static_cast<double>(extent));
  auto idx = static_cast<std::size_t>(scaled) + 1;
  if (idx > extent) idx = extent;
  return static_cast<std::uint32_t>(idx);
}

std::pair<PermBoxes, MapState> gen_perm_boxes(MapState s, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("permutation box extents must be positive");
  }
  PermBoxes b;
  b.pr1.resize(cols);
  b.pc1.resize(cols);
  b.pr2.resize(cols);
  b.pc2.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    s = step(s);
    b.pr1[j] = box_index(s.x, rows);
    b.pc1[j] = box_index(s.y, cols);
    s = step(s);
    b.pr2[j] = box_index(s.x, rows);
    b.pc2[j] = box_index(s.y, cols);
  }
  return {std::move(b), s};
}

}  // namespace qgc
