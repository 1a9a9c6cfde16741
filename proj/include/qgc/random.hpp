#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qgc {

/// Portable deterministic sampling on top of std::mt19937_64.
///
/// The standard distributions are implementation-defined, so keys generated
/// from the same seed would differ between standard libraries. These helpers
/// only rely on the engine's fully specified output sequence.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qgc
