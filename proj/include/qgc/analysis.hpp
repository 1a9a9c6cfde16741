#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgc/cipher.hpp"
#include "qgc/keyformat.hpp"

namespace qgc {

using ChannelTriple = std::array<double, 3>;
/// [plain channel][cipher channel], channels ordered R, G, B.
using ChannelMatrix = std::array<std::array<double, 3>, 3>;

enum class Direction { Horizontal, Vertical };

struct ChannelHistogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;
};

ChannelHistogram histogram(std::span<const std::uint8_t> values);

/// Copies channel `c` (0 = R, 1 = G, 2 = B) out of an interleaved image.
std::vector<std::uint8_t> extract_channel(const ImageRGB& img, std::size_t c);

/// Shannon entropy in bits. Throws std::invalid_argument on empty input.
double entropy(std::span<const std::uint8_t> values);
double entropy(const ChannelHistogram& h);
ChannelTriple channel_entropies(const ImageRGB& img);

/// Pearson coefficient of two equally sized samples. When both samples are
/// constant the result is 1; when exactly one is constant it is 0.
/// Throws std::invalid_argument on size mismatch or empty input.
double corr2d(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

ChannelMatrix channel_correlations(const ImageRGB& a, const ImageRGB& b);

/// Correlation over all (W-1)*H horizontal or (H-1)*W vertical neighbour
/// pairs of a height x width channel.
double adjacent_corr(std::span<const std::uint8_t> channel, std::size_t height, std::size_t width,
                     Direction dir);

struct AdjacentCorrelation {
  ChannelTriple horizontal{};
  ChannelTriple vertical{};
};
AdjacentCorrelation adjacent_correlations(const ImageRGB& img);

/// Per-channel percentage of differing bytes.
ChannelTriple npcr(const ImageRGB& a, const ImageRGB& b);
/// Per-channel mean |a - b| / 255, in percent.
ChannelTriple uaci(const ImageRGB& a, const ImageRGB& b);

/// Ideal values for two independent uniform L-bit images.
double expected_npcr(unsigned bits = 8);
double expected_uaci(unsigned bits = 8);

/// H(I1) + H(I2) - H(I1, I2) over the pooled bytes of all channels, bytes
/// paired by position.
double mutual_information(const ImageRGB& a, const ImageRGB& b);

/// Optional-field bundle emitted by the analysis front end.
struct MetricReport {
  std::optional<ChannelTriple> entropy;
  std::optional<ChannelMatrix> correlation;
  std::optional<AdjacentCorrelation> adjacent;
  std::optional<ChannelTriple> npcr;
  std::optional<ChannelTriple> uaci;
  std::optional<double> mutual_information;
};

// --- Key sensitivity --------------------------------------------------------

struct KeyPerturbation {
  std::string label;
  SecretKey key;
};

/// The 13 single-component changes: six quasigroup row/column interchanges,
/// seed1, seed2, NR and NS by one unit, then K, y0 and x0 by 1e-14.
std::vector<KeyPerturbation> key_perturbations(const SecretKey& base);

struct SensitivityRow {
  std::string label;
  ChannelMatrix cipher_correlation{};  ///< baseline cipher vs perturbed cipher
  double mutual_information = 0.0;     ///< baseline cipher vs perturbed cipher
  ChannelMatrix decrypt_correlation{};  ///< plain vs baseline cipher decrypted with perturbed key
};

struct KeySensitivityReport {
  std::vector<SensitivityRow> rows;
};

KeySensitivityReport key_sensitivity_suite(const ImageRGB& img, const SecretKey& key);

// --- Differential -----------------------------------------------------------

struct DifferentialSample {
  std::size_t trial = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t channel = 0;
  std::uint8_t before = 0;
  std::uint8_t after = 0;
  ChannelTriple npcr{};
  ChannelTriple uaci{};
};

struct DifferentialReport {
  std::vector<DifferentialSample> samples;
  ChannelTriple mean_npcr{};
  ChannelTriple mean_uaci{};
  /// Set when the image has too few pixels for the statistics to mean anything.
  bool degenerate = false;
};

/// Images with fewer pixels than this are flagged degenerate.
inline constexpr std::size_t kMinMeaningfulPixels = 256;

/// Trial 0 perturbs the first pixel and trial 1 the last; the rest use
/// distinct random pixels while enough remain. One channel byte moves by
/// one unit (+1, or -1 at 255). Throws std::invalid_argument if trials is 0.
DifferentialReport differential_suite(const ImageRGB& img, const SecretKey& key, std::size_t trials,
                                      std::uint64_t seed);

}  // namespace qgc
