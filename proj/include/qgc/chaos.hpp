#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qgc {

/// 2*pi rounded to binary64. The map's phase space is [0, kTwoPi).
inline constexpr double kTwoPi = 0x1.921fb54442d18p+2;

/// Sine for arguments in [0, 2*pi], identical on every IEEE-754 platform.
///
/// The argument is reduced by a triple-double pi/2 and the Taylor series of
/// sin or cos is summed in double-double arithmetic (Horner, highest term
/// first). The result is the correctly rounded binary64 sine except in
/// cases closer than ~2^-100 to a rounding boundary. Only +, -, *, / and
/// floor are used, so results do not depend on the platform libm. Callers
/// must build with floating-point contraction disabled.
double portable_sin(double y);

/// Maps any finite real into [0, kTwoPi).
double wrap_two_pi(double a);

/// Point of the chaotic standard map together with its kick strength K.
struct MapState {
  double x = 0.0;
  double y = 0.0;
  double k = 0.0;

  bool operator==(const MapState&) const = default;
};

/// One iteration: x <- (x + K sin y) mod 2pi, then y <- (y + x) mod 2pi using
/// the updated x. Throws std::invalid_argument on non-finite state.
MapState step(MapState s);

/// `count` successive steps.
MapState skip(MapState s, std::uint64_t count);

/// Row and column swap schedules, entries 1-based.
struct PermBoxes {
  std::vector<std::uint32_t> pr1, pc1, pr2, pc2;
};

/// Index 1 + floor(v / 2pi * extent), clamped to `extent`.
std::uint32_t box_index(double v, std::size_t extent);

/// Draws NW entries of each box, two map steps per entry. Returns the boxes
/// and the advanced state. Throws std::invalid_argument if either extent is 0.
std::pair<PermBoxes, MapState> gen_perm_boxes(MapState s, std::size_t rows, std::size_t cols);

}  // namespace qgc
