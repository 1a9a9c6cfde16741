#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgc/quasigroup.hpp"

namespace qgc {

/// Scalar part of a secret key.
struct KeyParameters {
  double x0 = 0.0;          ///< map initial x, open interval (0, 2pi)
  double y0 = 0.0;          ///< map initial y, open interval (0, 2pi)
  double k = 0.0;           ///< map kick strength, > 18
  std::uint32_t ns = 0;     ///< warm-up steps before each round, >= 1
  std::uint8_t rounds = 0;  ///< NR, 1..16
  std::uint8_t seed1 = 0;   ///< column-pass seed byte; used as symbol seed1 + 1
  std::uint8_t seed2 = 0;   ///< row-pass seed byte; used as symbol seed2 + 1

  bool operator==(const KeyParameters&) const = default;
};

/// Full secret key: scalar parameters plus an order-256 quasigroup.
struct SecretKey {
  KeyParameters params;
  Quasigroup quasigroup;

  bool operator==(const SecretKey&) const = default;
};

struct KeyReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks every field; NS <= 100 only warns.
KeyReport validate_key(const SecretKey& key);
KeyReport validate_parameters(const KeyParameters& params);

// Binary key file, little-endian:
//   "QGC1" | x0 f64 | y0 f64 | K f64 | NS u32 | NR u8 | seed1 u8 | seed2 u8 |
//   reserved u8 (0) | 256*256 table bytes, row-major, byte v = symbol v+1
inline constexpr std::size_t kKeyFileSize = 4 + 3 * 8 + 4 + 4 + 256 * 256;
inline constexpr char kKeyMagic[4] = {'Q', 'G', 'C', '1'};

std::vector<std::uint8_t> serialize_key(const SecretKey& key);

/// Throws KeyFormatError on bad magic, wrong length, non-zero reserved
/// byte, out-of-range fields or a payload that is not a Latin square.
SecretKey parse_key(std::span<const std::uint8_t> bytes);

/// Deterministic key from a 64-bit seed. Throws std::invalid_argument if
/// `rounds` is outside 1..16.
SecretKey generate_key(std::uint64_t seed, unsigned rounds);

/// 256x256 P5 image of the quasigroup, pixel = symbol - 1.
std::vector<std::uint8_t> qg_to_pgm(const SecretKey& key);

/// Imports a quasigroup image and combines it with `params`. Throws
/// ImageFormatError for a malformed or wrongly sized PGM and KeyFormatError
/// when the content is not a Latin square or the parameters are invalid.
SecretKey qg_from_pgm(std::span<const std::uint8_t> pgm, const KeyParameters& params);

}  // namespace qgc
