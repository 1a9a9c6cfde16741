#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qgc/cipher.hpp"

namespace qgc {

struct GrayImage {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<std::uint8_t> data;

  bool operator==(const GrayImage&) const = default;
};

/// Binary P6, maxval 255. Header comments are skipped. Throws
/// ImageFormatError for a wrong magic, maxval other than 255 or a short payload.
ImageRGB ppm_read(std::span<const std::uint8_t> bytes);
/// Canonical header "P6\n<w> <h>\n255\n" followed by the payload.
std::vector<std::uint8_t> ppm_write(const ImageRGB& img);

/// Binary P5, maxval 255.
GrayImage pgm_read(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> pgm_write(const GrayImage& img);

// File helpers. Failures throw IoError.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over `path`, so a failed
/// write never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace qgc
