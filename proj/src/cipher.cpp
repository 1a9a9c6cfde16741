#include "qgc/cipher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qgc/error.hpp"
#include "qgc/keyformat.hpp"

namespace qgc {

ImageRGB::ImageRGB(std::size_t h, std::size_t w) : height(h), width(w) {
  if (h == 0 || w == 0) throw std::invalid_argument("image dimensions must be positive");
  data.assign(h * w * 3, 0);
}

ImageRGB::ImageRGB(std::size_t h, std::size_t w, std::vector<std::uint8_t> bytes)
    : height(h), width(w), data(std::move(bytes)) {
  if (h == 0 || w == 0) throw std::invalid_argument("image dimensions must be positive");
  if (data.size() != h * w * 3) {
    throw std::invalid_argument("image payload has " + std::to_string(data.size()) +
                                " bytes, expected " + std::to_string(h * w * 3));
  }
}

PixelMatrix::PixelMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

PixelMatrix::PixelMatrix(std::size_t rows, std::size_t cols, std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != rows * cols) {
    throw std::invalid_argument("matrix payload does not match its dimensions");
  }
}

void PixelMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  Symbol* ra = &cells_[a * cols_];
  Symbol* rb = &cells_[b * cols_];
  std::swap_ranges(ra, ra + cols_, rb);
}

void PixelMatrix::swap_cols(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap(cells_[r * cols_ + a], cells_[r * cols_ + b]);
  }
}

MatrixDims reshape_dims(std::size_t height, std::size_t width) {
  if (height == 0 || width == 0) throw std::invalid_argument("image dimensions must be positive");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t h = height, w = width;
  if (h > kMax / 3 / w) throw std::overflow_error("3*H*W does not fit in 64 bits");
  const std::uint64_t total = 3 * h * w;

  std::uint64_t d = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(total)));
  while (d > 0 && d * d > total) --d;
  while ((d + 1) * (d + 1) <= total) ++d;
  for (; d >= 1; --d) {
    if (total % d == 0) break;
  }
  return {static_cast<std::size_t>(d), static_cast<std::size_t>(total / d)};
}

PixelMatrix flatten(const ImageRGB& img) {
  if (img.data.size() != img.height * img.width * 3 || img.data.empty()) {
    throw std::invalid_argument("image payload does not match its dimensions");
  }
  const MatrixDims dims = reshape_dims(img.height, img.width);
  return PixelMatrix(dims.rows, dims.cols, std::vector<Symbol>(img.data.begin(), img.data.end()));
}

ImageRGB unflatten(const PixelMatrix& m, std::size_t height, std::size_t width) {
  const MatrixDims dims = reshape_dims(height, width);
  if (dims.rows != m.rows() || dims.cols != m.cols()) {
    throw std::invalid_argument("matrix dimensions do not match a " + std::to_string(height) +
                                "x" + std::to_string(width) + " image");
  }
  std::vector<std::uint8_t> bytes;
  bytes.reserve(m.cells().size());
  for (Symbol v : m.cells()) {
    if (v > 255) throw std::out_of_range("matrix cell exceeds a byte");
    bytes.push_back(static_cast<std::uint8_t>(v));
  }
  return ImageRGB(height, width, std::move(bytes));
}

void substitute_columns(PixelMatrix& m, const Quasigroup& q, Symbol seed1) {
  // The chain is always the last cell written; at the top of a column that
  // is the bottom cell of the previous column.
  Symbol chain = seed1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      chain = q.mul_unchecked(chain, m(i, j));
      m(i, j) = chain;
    }
  }
}

void substitute_rows(PixelMatrix& m, const Quasigroup& q, Symbol seed2) {
  // Scans from the last cell backwards; at a row's right edge the chain is
  // P(i+1, 1), which is the last cell written in the row below.
  Symbol chain = seed2;
  for (std::size_t i = m.rows(); i-- > 0;) {
    for (std::size_t j = m.cols(); j-- > 0;) {
      chain = q.mul_unchecked(m(i, j), chain);
      m(i, j) = chain;
    }
  }
}

void recover_rows(PixelMatrix& m, const Quasigroup& q, Symbol seed2) {
  // Chains come from the pre-recovery values. Each cell is read before it is
  // overwritten, so carrying the previous original value is the same as
  // reading a frozen copy.
  Symbol chain = seed2;
  for (std::size_t i = m.rows(); i-- > 0;) {
    for (std::size_t j = m.cols(); j-- > 0;) {
      const Symbol c = m(i, j);
      m(i, j) = q.rdiv_unchecked(c, chain);
      chain = c;
    }
  }
}

void recover_columns(PixelMatrix& m, const Quasigroup& q, Symbol seed1) {
  Symbol chain = seed1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Symbol c = m(i, j);
      m(i, j) = q.ldiv_unchecked(chain, c);
      chain = c;
    }
  }
}

namespace {

void check_seeds(const Quasigroup& q, Symbol seed1, Symbol seed2) {
  if (seed1 < 1 || seed1 > q.order() || seed2 < 1 || seed2 > q.order()) {
    throw std::out_of_range("substitution seeds must be symbols in 1.." +
                            std::to_string(q.order()));
  }
}

void to_symbols(PixelMatrix& m, std::size_t order) {
  for (Symbol& v : m.cells()) {
    if (v >= order) {
      throw std::out_of_range("cell value " + std::to_string(v) + " does not fit quasigroup of order " +
                              std::to_string(order));
    }
    ++v;
  }
}

void to_bytes(PixelMatrix& m) {
  for (Symbol& v : m.cells()) --v;
}

}  // namespace

PixelMatrix substitute_forward(PixelMatrix m, const Quasigroup& q, Symbol seed1, Symbol seed2) {
  check_seeds(q, seed1, seed2);
  to_symbols(m, q.order());
  substitute_columns(m, q, seed1);
  substitute_rows(m, q, seed2);
  to_bytes(m);
  return m;
}

PixelMatrix substitute_inverse(PixelMatrix c, const Quasigroup& q, Symbol seed1, Symbol seed2) {
  check_seeds(q, seed1, seed2);
  to_symbols(c, q.order());
  recover_rows(c, q, seed2);
  recover_columns(c, q, seed1);
  to_bytes(c);
  return c;
}

std::uint32_t compute_nsk(const PixelMatrix& m) {
  const std::uint64_t sum = std::accumulate(m.cells().begin(), m.cells().end(), std::uint64_t{0});
  return static_cast<std::uint32_t>(sum % 256);
}

namespace {

void check_shape(const PixelMatrix& m) {
  if (m.rows() == 0 || m.cols() < m.rows()) {
    throw std::invalid_argument("permutation needs a non-empty matrix with cols >= rows");
  }
}

}  // namespace

std::pair<PixelMatrix, MapState> permute_forward(PixelMatrix m, MapState s) {
  check_shape(m);
  s = skip(s, compute_nsk(m));
  auto [boxes, after] = gen_perm_boxes(s, m.rows(), m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    m.swap_rows(boxes.pr1[j] - 1, boxes.pr2[j] - 1);
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    m.swap_cols(boxes.pc1[j] - 1, boxes.pc2[j] - 1);
  }
  return {std::move(m), after};
}

std::pair<PixelMatrix, MapState> permute_inverse(PixelMatrix c, MapState s) {
  check_shape(c);
  // Swaps preserve the cell sum, so NSK computed here equals the forward NSK.
  s = skip(s, compute_nsk(c));
  auto [boxes, after] = gen_perm_boxes(s, c.rows(), c.cols());
  for (std::size_t j = c.cols(); j-- > 0;) {
    c.swap_cols(boxes.pc2[j] - 1, boxes.pc1[j] - 1);
  }
  for (std::size_t j = c.rows(); j-- > 0;) {
    c.swap_rows(boxes.pr2[j] - 1, boxes.pr1[j] - 1);
  }
  return {std::move(c), after};
}

namespace {

void require_valid(const SecretKey& key) {
  const KeyReport report = validate_key(key);
  if (!report.ok()) throw ValidationError("invalid key: " + report.violations.front());
}

MapState round_start(const KeyParameters& p) {
  return skip(MapState{p.x0, p.y0, p.k}, p.ns);
}

}  // namespace

ImageRGB encrypt(const ImageRGB& img, const SecretKey& key) {
  require_valid(key);
  const KeyParameters& p = key.params;
  const Symbol s1 = static_cast<Symbol>(p.seed1 + 1);
  const Symbol s2 = static_cast<Symbol>(p.seed2 + 1);
  const MapState start = round_start(p);

  PixelMatrix m = flatten(img);
  for (unsigned round = 0; round < p.rounds; ++round) {
    m = substitute_forward(std::move(m), key.quasigroup, s1, s2);
    m = permute_forward(std::move(m), start).first;
  }
  return unflatten(m, img.height, img.width);
}

ImageRGB decrypt(const ImageRGB& img, const SecretKey& key) {
  require_valid(key);
  const KeyParameters& p = key.params;
  const Symbol s1 = static_cast<Symbol>(p.seed1 + 1);
  const Symbol s2 = static_cast<Symbol>(p.seed2 + 1);
  const MapState start = round_start(p);

  PixelMatrix c = flatten(img);
  for (unsigned round = 0; round < p.rounds; ++round) {
    c = permute_inverse(std::move(c), start).first;
    c = substitute_inverse(std::move(c), key.quasigroup, s1, s2);
  }
  return unflatten(c, img.height, img.width);
}

}  // namespace qgc
