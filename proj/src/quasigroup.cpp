#include "qgc/quasigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qgc/error.hpp"
#include "qgc/random.hpp"

namespace qgc {

std::string LatinViolation::describe() const {
  std::ostringstream os;
  os << (axis == Axis::Row ? "row " : "column ") << index << " repeats symbol " << symbol
     << " at positions " << first_at << " and " << repeated_at;
  return os.str();
}

std::optional<LatinViolation> validate_latin_square(std::span<const Symbol> cells,
                                                    std::size_t order) {
  if (order == 0 || order > kMaxOrder) {
    throw std::invalid_argument("Latin square order must be in 1..256");
  }
  if (cells.size() != order * order) {
    throw std::invalid_argument("table is not square: " + std::to_string(cells.size()) +
                                " cells for order " + std::to_string(order));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] < 1 || cells[i] > order) {
      throw std::invalid_argument("entry " + std::to_string(cells[i]) + " at (" +
                                  std::to_string(i / order + 1) + "," +
                                  std::to_string(i % order + 1) + ") is outside 1.." +
                                  std::to_string(order));
    }
  }

  // seen[s] holds the 1-based position where symbol s was first met, 0 if not yet.
  std::vector<std::size_t> seen(order + 1);
  for (std::size_t r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order; ++c) {
      Symbol s = cells[r * order + c];
      if (seen[s] != 0) {
        return LatinViolation{LatinViolation::Axis::Row, r + 1, s, seen[s], c + 1};
      }
      seen[s] = c + 1;
    }
  }
  for (std::size_t c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order; ++r) {
      Symbol s = cells[r * order + c];
      if (seen[s] != 0) {
        return LatinViolation{LatinViolation::Axis::Column, c + 1, s, seen[s], r + 1};
      }
      seen[s] = r + 1;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Symbol> flatten_rows(const std::vector<std::vector<Symbol>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Symbol> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw std::invalid_argument("table is not square: row " + std::to_string(r + 1) +
                                  " has " + std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return flat;
}

}  // namespace

std::optional<LatinViolation> validate_latin_square(
    const std::vector<std::vector<Symbol>>& rows) {
  auto flat = flatten_rows(rows);
  return validate_latin_square(flat, rows.size());
}

DivisionTables derive_divisions(std::span<const Symbol> mul, std::size_t order) {
  if (auto violation = validate_latin_square(mul, order)) {
    throw ValidationError("not a Latin square: " + violation->describe());
  }
  DivisionTables t{std::vector<Symbol>(mul.size()), std::vector<Symbol>(mul.size())};
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t z = mul[x * order + y] - 1u;
      t.ldiv[x * order + z] = static_cast<Symbol>(y + 1);
      t.rdiv[z * order + y] = static_cast<Symbol>(x + 1);
    }
  }
  return t;
}

Quasigroup::Quasigroup(std::size_t order, std::vector<Symbol> mul, DivisionTables div)
    : order_(order), mul_(std::move(mul)), ldiv_(std::move(div.ldiv)), rdiv_(std::move(div.rdiv)) {}

Quasigroup Quasigroup::from_table(std::vector<Symbol> cayley, std::size_t order) {
  auto div = derive_divisions(cayley, order);
  return Quasigroup(order, std::move(cayley), std::move(div));
}

Quasigroup Quasigroup::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  return from_table(flatten_rows(rows), rows.size());
}

Quasigroup Quasigroup::cyclic(std::size_t order) {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("quasigroup order must be in 1..256");
  }
  std::vector<Symbol> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      t[x * order + y] = static_cast<Symbol>((x + y) % order + 1);
    }
  }
  return from_table(std::move(t), order);
}

void Quasigroup::check_symbol(Symbol s) const {
  if (s < 1 || s > order_) {
    throw std::out_of_range("symbol " + std::to_string(s) + " outside 1.." +
                            std::to_string(order_));
  }
}

Symbol Quasigroup::mul(Symbol x, Symbol y) const {
  check_symbol(x);
  check_symbol(y);
  return mul_unchecked(x, y);
}

Symbol Quasigroup::ldiv(Symbol x, Symbol z) const {
  check_symbol(x);
  check_symbol(z);
  return ldiv_unchecked(x, z);
}

Symbol Quasigroup::rdiv(Symbol z, Symbol y) const {
  check_symbol(z);
  check_symbol(y);
  return rdiv_unchecked(z, y);
}

Quasigroup generate_quasigroup(std::size_t order, std::uint64_t seed) {
  if (order < 2 || order > kMaxOrder) {
    throw std::invalid_argument("generated quasigroup order must be in 2..256");
  }
  SeededRng rng(seed);
  std::vector<std::size_t> rows(order), cols(order), symbols(order);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::iota(symbols.begin(), symbols.end(), 0);
  rng.shuffle(std::span(rows));
  rng.shuffle(std::span(cols));
  rng.shuffle(std::span(symbols));

  std::vector<Symbol> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      t[x * order + y] = static_cast<Symbol>(symbols[(rows[x] + cols[y]) % order] + 1);
    }
  }
  return Quasigroup::from_table(std::move(t), order);
}

}  // namespace qgc
