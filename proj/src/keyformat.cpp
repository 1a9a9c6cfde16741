#include "qgc/keyformat.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "qgc/chaos.hpp"
#include "qgc/error.hpp"
#include "qgc/netpbm.hpp"
#include "qgc/random.hpp"

namespace qgc {

namespace {

constexpr double kMinK = 18.0;
constexpr double kMaxGeneratedK = 200.0;
constexpr std::size_t kKeyOrder = 256;
constexpr std::size_t kHeaderSize = kKeyFileSize - kKeyOrder * kKeyOrder;

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool in_open_phase_interval(double v) { return std::isfinite(v) && v > 0.0 && v < kTwoPi; }

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> b, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[at + i];
  return v;
}

}  // namespace

KeyReport validate_parameters(const KeyParameters& p) {
  KeyReport r;
  if (!in_open_phase_interval(p.x0)) r.violations.push_back("x0 = " + fmt_double(p.x0) + " is outside (0, 2pi)");
  if (!in_open_phase_interval(p.y0)) r.violations.push_back("y0 = " + fmt_double(p.y0) + " is outside (0, 2pi)");
  if (!std::isfinite(p.k) || !(p.k > kMinK)) {
    r.violations.push_back("K = " + fmt_double(p.k) + ": K <= 18.0");
  }
  if (p.ns == 0) {
    r.violations.push_back("NS must be a positive integer");
  } else if (p.ns <= 100) {
    r.warnings.push_back("NS = " + std::to_string(p.ns) + " is not above the recommended 100");
  }
  if (p.rounds < 1 || p.rounds > 16) {
    r.violations.push_back("NR = " + std::to_string(p.rounds) + " is outside 1..16");
  }
  return r;
}

KeyReport validate_key(const SecretKey& key) {
  KeyReport r = validate_parameters(key.params);
  const Quasigroup& q = key.quasigroup;
  if (q.order() != kKeyOrder) {
    r.violations.push_back("quasigroup order is " + std::to_string(q.order()) + ", expected 256");
    return r;
  }
  try {
    if (auto v = validate_latin_square(q.mul_table(), q.order())) {
      r.violations.push_back("quasigroup is not a Latin square: " + v->describe());
    }
  } catch (const std::invalid_argument& e) {
    r.violations.push_back(std::string("quasigroup table malformed: ") + e.what());
  }
  return r;
}

std::vector<std::uint8_t> serialize_key(const SecretKey& key) {
  if (key.quasigroup.order() != kKeyOrder) {
    throw ValidationError("only order-256 quasigroups can be serialized");
  }
  const KeyParameters& p = key.params;
  std::vector<std::uint8_t> out;
  out.reserve(kKeyFileSize);
  out.insert(out.end(), std::begin(kKeyMagic), std::end(kKeyMagic));
  put_u64(out, std::bit_cast<std::uint64_t>(p.x0));
  put_u64(out, std::bit_cast<std::uint64_t>(p.y0));
  put_u64(out, std::bit_cast<std::uint64_t>(p.k));
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(p.ns >> (8 * i)));
  out.push_back(p.rounds);
  out.push_back(p.seed1);
  out.push_back(p.seed2);
  out.push_back(0);
  for (Symbol s : key.quasigroup.mul_table()) out.push_back(static_cast<std::uint8_t>(s - 1));
  return out;
}

SecretKey parse_key(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kKeyFileSize) {
    throw KeyFormatError("key file has " + std::to_string(bytes.size()) + " bytes, expected " +
                         std::to_string(kKeyFileSize) + " bytes");
  }
  if (std::memcmp(bytes.data(), kKeyMagic, 4) != 0) {
    throw KeyFormatError("bad magic: not a QGC1 key file");
  }
  KeyParameters p;
  p.x0 = std::bit_cast<double>(get_u64(bytes, 4));
  p.y0 = std::bit_cast<double>(get_u64(bytes, 12));
  p.k = std::bit_cast<double>(get_u64(bytes, 20));
  p.ns = static_cast<std::uint32_t>(bytes[28]) | static_cast<std::uint32_t>(bytes[29]) << 8 |
         static_cast<std::uint32_t>(bytes[30]) << 16 | static_cast<std::uint32_t>(bytes[31]) << 24;
  p.rounds = bytes[32];
  p.seed1 = bytes[33];
  p.seed2 = bytes[34];
  if (bytes[35] != 0) throw KeyFormatError("reserved header byte is not zero");

  const KeyReport report = validate_parameters(p);
  if (!report.ok()) throw KeyFormatError("key parameter out of range: " + report.violations.front());

  std::vector<Symbol> table(kKeyOrder * kKeyOrder);
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = static_cast<Symbol>(bytes[kHeaderSize + i] + 1);
  }
  if (auto v = validate_latin_square(table, kKeyOrder)) {
    throw KeyFormatError("quasigroup payload is not a Latin square: " + v->describe());
  }
  return SecretKey{p, Quasigroup::from_table(std::move(table), kKeyOrder)};
}

SecretKey generate_key(std::uint64_t seed, unsigned rounds) {
  if (rounds < 1 || rounds > 16) throw std::invalid_argument("NR must be in 1..16");
  SeededRng rng(seed);
  auto phase = [&rng] {
    double v;
    do {
      v = rng.unit() * kTwoPi;
    } while (!in_open_phase_interval(v));
    return v;
  };
  KeyParameters p;
  p.x0 = phase();
  p.y0 = phase();
  p.k = kMaxGeneratedK - rng.unit() * (kMaxGeneratedK - kMinK);  // (18, 200]
  if (!(p.k > kMinK)) p.k = kMaxGeneratedK;
  p.ns = static_cast<std::uint32_t>(101 + rng.below(1000));
  p.rounds = static_cast<std::uint8_t>(rounds);
  p.seed1 = static_cast<std::uint8_t>(rng.below(256));
  p.seed2 = static_cast<std::uint8_t>(rng.below(256));
  return SecretKey{p, generate_quasigroup(kKeyOrder, rng.next())};
}

std::vector<std::uint8_t> qg_to_pgm(const SecretKey& key) {
  if (key.quasigroup.order() != kKeyOrder) throw ValidationError("key quasigroup must have order 256");
  GrayImage g{kKeyOrder, kKeyOrder, {}};
  g.data.reserve(kKeyOrder * kKeyOrder);
  for (Symbol s : key.quasigroup.mul_table()) g.data.push_back(static_cast<std::uint8_t>(s - 1));
  return pgm_write(g);
}

SecretKey qg_from_pgm(std::span<const std::uint8_t> pgm, const KeyParameters& params) {
  const GrayImage g = pgm_read(pgm);
  if (g.width != kKeyOrder || g.height != kKeyOrder) {
    throw ImageFormatError("quasigroup image must be 256x256, got " + std::to_string(g.width) +
                           "x" + std::to_string(g.height));
  }
  std::vector<Symbol> table(g.data.begin(), g.data.end());
  for (Symbol& s : table) ++s;
  if (auto v = validate_latin_square(table, kKeyOrder)) {
    throw KeyFormatError("quasigroup image is not a Latin square: " + v->describe());
  }
  const KeyReport report = validate_parameters(params);
  if (!report.ok()) throw KeyFormatError("key parameter out of range: " + report.violations.front());
  return SecretKey{params, Quasigroup::from_table(std::move(table), kKeyOrder)};
}

}  // namespace qgc
