#include "qgc/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <string>

#include "qgc/error.hpp"

namespace qgc {

namespace {

struct Header {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t payload_offset = 0;
};

class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const std::uint8_t> b) : bytes_(b) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t read_number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw ImageFormatError(std::string("malformed header: expected ") + what);
    }
    std::size_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      if (v > std::numeric_limits<std::size_t>::max() / 10 - 10) {
        throw ImageFormatError(std::string("header value too large: ") + what);
      }
      v = v * 10 + (bytes_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw ImageFormatError("malformed header: missing whitespace before raster");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

Header parse_header(std::span<const std::uint8_t> bytes, char kind, std::size_t channels) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != static_cast<std::uint8_t>(kind)) {
    throw ImageFormatError(std::string("wrong magic: expected P") + kind);
  }
  HeaderScanner s(bytes);
  s.advance(2);
  Header h;
  h.width = s.read_number("width");
  h.height = s.read_number("height");
  const std::size_t maxval = s.read_number("maxval");
  if (maxval != 255) {
    throw ImageFormatError("unsupported maxval " + std::to_string(maxval) +
                           ": only 8-bit (maxval 255) images are supported");
  }
  s.single_space();
  if (h.width == 0 || h.height == 0) throw ImageFormatError("image has a zero dimension");
  if (h.height > std::numeric_limits<std::size_t>::max() / h.width / channels) {
    throw ImageFormatError("image dimensions overflow");
  }
  h.payload_offset = s.pos();
  const std::size_t need = h.width * h.height * channels;
  if (bytes.size() - h.payload_offset < need) {
    throw ImageFormatError("truncated payload: expected " + std::to_string(need) + " bytes, found " +
                           std::to_string(bytes.size() - h.payload_offset));
  }
  return h;
}

std::vector<std::uint8_t> header_bytes(char kind, std::size_t w, std::size_t h) {
  const std::string head = std::string("P") + kind + "\n" + std::to_string(w) + " " +
                           std::to_string(h) + "\n255\n";
  return {head.begin(), head.end()};
}

}  // namespace

ImageRGB ppm_read(std::span<const std::uint8_t> bytes) {
  const Header h = parse_header(bytes, '6', 3);
  auto first = bytes.begin() + static_cast<std::ptrdiff_t>(h.payload_offset);
  std::vector<std::uint8_t> data(first, first + static_cast<std::ptrdiff_t>(h.width * h.height * 3));
  return ImageRGB(h.height, h.width, std::move(data));
}

std::vector<std::uint8_t> ppm_write(const ImageRGB& img) {
  if (img.data.size() != img.height * img.width * 3 || img.data.empty()) {
    throw ImageFormatError("image payload does not match its dimensions");
  }
  auto out = header_bytes('6', img.width, img.height);
  out.insert(out.end(), img.data.begin(), img.data.end());
  return out;
}

GrayImage pgm_read(std::span<const std::uint8_t> bytes) {
  const Header h = parse_header(bytes, '5', 1);
  auto first = bytes.begin() + static_cast<std::ptrdiff_t>(h.payload_offset);
  return GrayImage{h.height, h.width,
                   std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(h.width * h.height))};
}

std::vector<std::uint8_t> pgm_write(const GrayImage& img) {
  if (img.data.size() != img.height * img.width || img.data.empty()) {
    throw ImageFormatError("image payload does not match its dimensions");
  }
  auto out = header_bytes('5', img.width, img.height);
  out.insert(out.end(), img.data.begin(), img.data.end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());
  return data;
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

}  // namespace qgc
