#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qgc/chaos.hpp"
#include "qgc/quasigroup.hpp"

namespace qgc {

struct SecretKey;

/// 24-bit colour image, interleaved RGB, row-major.
struct ImageRGB {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<std::uint8_t> data;  ///< height * width * 3 bytes

  ImageRGB() = default;
  /// Zero-filled image; throws std::invalid_argument for a zero dimension.
  ImageRGB(std::size_t h, std::size_t w);
  /// Throws std::invalid_argument if `bytes` is not h * w * 3 long.
  ImageRGB(std::size_t h, std::size_t w, std::vector<std::uint8_t> bytes);

  std::uint8_t& at(std::size_t row, std::size_t col, std::size_t channel) {
    return data[(row * width + col) * 3 + channel];
  }
  std::uint8_t at(std::size_t row, std::size_t col, std::size_t channel) const {
    return data[(row * width + col) * 3 + channel];
  }
  std::size_t pixel_count() const noexcept { return height * width; }

  bool operator==(const ImageRGB&) const = default;
};

/// NH x NW working matrix. Cells hold bytes 0..255 between stages and
/// quasigroup symbols 1..order while a substitution pass runs.
class PixelMatrix {
 public:
  PixelMatrix() = default;
  PixelMatrix(std::size_t rows, std::size_t cols);
  PixelMatrix(std::size_t rows, std::size_t cols, std::vector<Symbol> cells);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// 0-based access.
  Symbol& operator()(std::size_t r, std::size_t c) noexcept { return cells_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const noexcept { return cells_[r * cols_ + c]; }

  std::vector<Symbol>& cells() noexcept { return cells_; }
  const std::vector<Symbol>& cells() const noexcept { return cells_; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void swap_cols(std::size_t a, std::size_t b) noexcept;

  bool operator==(const PixelMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> cells_;
};

struct MatrixDims {
  std::size_t rows;
  std::size_t cols;
  bool operator==(const MatrixDims&) const = default;
};

/// Factor 3*H*W as rows * cols with cols >= rows and cols - rows minimal.
/// Throws std::invalid_argument for zero sizes and std::overflow_error if
/// 3*H*W does not fit in 64 bits.
MatrixDims reshape_dims(std::size_t height, std::size_t width);

/// Image bytes in (row, col, channel) order, channel fastest, laid into the
/// matrix row-major.
PixelMatrix flatten(const ImageRGB& img);
ImageRGB unflatten(const PixelMatrix& m, std::size_t height, std::size_t width);

// --- Substitution -----------------------------------------------------------
//
// The symbol-level passes work in place on cells that already hold symbols.
// `substitute_forward` / `substitute_inverse` wrap them with the byte <-> symbol
// shift (+1 before, -1 after).

/// Column-wise chained pass, first cell to last: P = chain * P.
void substitute_columns(PixelMatrix& m, const Quasigroup& q, Symbol seed1);
/// Row-wise chained pass, last cell to first: P = P * chain.
void substitute_rows(PixelMatrix& m, const Quasigroup& q, Symbol seed2);
/// Undo of substitute_rows via right division against a frozen copy.
void recover_rows(PixelMatrix& m, const Quasigroup& q, Symbol seed2);
/// Undo of substitute_columns via left division against a frozen copy.
void recover_columns(PixelMatrix& m, const Quasigroup& q, Symbol seed1);

/// Byte-level substitution. Cells must be in 0..order-1 and the seeds in
/// 1..order; otherwise throws std::out_of_range.
PixelMatrix substitute_forward(PixelMatrix m, const Quasigroup& q, Symbol seed1, Symbol seed2);
PixelMatrix substitute_inverse(PixelMatrix c, const Quasigroup& q, Symbol seed1, Symbol seed2);

// --- Permutation ------------------------------------------------------------

/// Sum of all cells mod 256.
std::uint32_t compute_nsk(const PixelMatrix& m);

/// Skips NSK(m) map steps, draws permutation boxes, then swaps rows
/// j = 1..NH and columns j = 1..NW. `s` must already be advanced by NS.
/// Returns the permuted matrix and the final map state.
std::pair<PixelMatrix, MapState> permute_forward(PixelMatrix m, MapState s);
/// Exact inverse of permute_forward: columns, then rows, in reverse order.
std::pair<PixelMatrix, MapState> permute_inverse(PixelMatrix c, MapState s);

// --- Pipelines --------------------------------------------------------------

/// Every round restarts the map at (x0, y0), skips NS steps, substitutes,
/// then permutes. Throws ValidationError for an invalid key.
ImageRGB encrypt(const ImageRGB& img, const SecretKey& key);
ImageRGB decrypt(const ImageRGB& img, const SecretKey& key);

}  // namespace qgc
