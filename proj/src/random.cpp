#include "qgc/random.hpp"

#include <limits>

namespace qgc {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

double SeededRng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace qgc
