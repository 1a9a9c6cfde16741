#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qgc {

/// Quasigroup element. Symbols are 1-based: an order-n quasigroup uses 1..n.
using Symbol = std::uint16_t;

/// Largest order the cipher needs; Symbol can represent 1..kMaxOrder.
inline constexpr std::size_t kMaxOrder = 256;

/// First place where a table stops being a Latin square.
struct LatinViolation {
  enum class Axis { Row, Column };
  Axis axis;
  std::size_t index;        ///< 1-based row or column number
  Symbol symbol;            ///< duplicated symbol
  std::size_t first_at;     ///< 1-based position of the first occurrence
  std::size_t repeated_at;  ///< 1-based position of the repeat

  std::string describe() const;
};

/// Checks the Latin property of a row-major order x order table.
/// Returns std::nullopt when every row and column is a permutation of 1..order.
/// Throws std::invalid_argument when the table is not square or holds a
/// symbol outside 1..order.
std::optional<LatinViolation> validate_latin_square(std::span<const Symbol> cells,
                                                    std::size_t order);

/// Nested-row overload; the squareness check covers ragged rows.
std::optional<LatinViolation> validate_latin_square(
    const std::vector<std::vector<Symbol>>& rows);

struct DivisionTables {
  std::vector<Symbol> ldiv;  ///< ldiv[x][z] = y  with  x*y = z
  std::vector<Symbol> rdiv;  ///< rdiv[z][y] = x  with  x*y = z
};

/// Builds both division tables from a Cayley table. Throws ValidationError
/// if `mul` is not a Latin square.
DivisionTables derive_divisions(std::span<const Symbol> mul, std::size_t order);

/// Finite quasigroup held as three precomputed lookup tables.
///
/// Instances are immutable once built, so they can be shared freely between
/// threads. The checked accessors throw std::out_of_range for symbols outside
/// 1..order; the `*_unchecked` variants are for inner loops whose inputs are
/// already known to be in range.
class Quasigroup {
 public:
  /// Validates `cayley` and derives the division tables.
  static Quasigroup from_table(std::vector<Symbol> cayley, std::size_t order);
  static Quasigroup from_rows(const std::vector<std::vector<Symbol>>& rows);

  /// Cyclic group table mul[x][y] = ((x + y - 2) mod n) + 1.
  static Quasigroup cyclic(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  Symbol mul(Symbol x, Symbol y) const;
  Symbol ldiv(Symbol x, Symbol z) const;
  Symbol rdiv(Symbol z, Symbol y) const;

  Symbol mul_unchecked(Symbol x, Symbol y) const noexcept {
    return mul_[index(x, y)];
  }
  Symbol ldiv_unchecked(Symbol x, Symbol z) const noexcept {
    return ldiv_[index(x, z)];
  }
  Symbol rdiv_unchecked(Symbol z, Symbol y) const noexcept {
    return rdiv_[index(z, y)];
  }

  std::span<const Symbol> mul_table() const noexcept { return mul_; }
  std::span<const Symbol> ldiv_table() const noexcept { return ldiv_; }
  std::span<const Symbol> rdiv_table() const noexcept { return rdiv_; }

  bool operator==(const Quasigroup& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }

 private:
  Quasigroup(std::size_t order, std::vector<Symbol> mul, DivisionTables div);

  std::size_t index(Symbol a, Symbol b) const noexcept {
    return (static_cast<std::size_t>(a) - 1) * order_ + (static_cast<std::size_t>(b) - 1);
  }
  void check_symbol(Symbol s) const;

  std::size_t order_;
  std::vector<Symbol> mul_;
  std::vector<Symbol> ldiv_;
  std::vector<Symbol> rdiv_;
};

/// Seeded random quasigroup: random row, column and symbol permutations
/// applied to the cyclic table. Deterministic in `seed` on every platform.
/// This is an isotopy of Z_n, so it does not sample Latin squares uniformly.
Quasigroup generate_quasigroup(std::size_t order, std::uint64_t seed);

}  // namespace qgc
