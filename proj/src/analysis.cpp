#include "qgc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "qgc/chaos.hpp"
#include "qgc/random.hpp"

namespace qgc {

namespace {

void require_same_shape(const ImageRGB& a, const ImageRGB& b) {
  if (a.height != b.height || a.width != b.width || a.data.size() != b.data.size()) {
    throw std::invalid_argument("images must have identical dimensions");
  }
  if (a.data.empty()) throw std::invalid_argument("images must not be empty");
}

double entropy_of_counts(std::span<const std::uint64_t> counts, std::uint64_t total) {
  double h = 0.0;
  const double n = static_cast<double>(total);
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

// Two-pass Pearson over paired samples produced by `at(i) -> (x, y)`.
template <typename PairAt>
double pearson(std::size_t n, PairAt at) {
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, y] = at(i);
    sx += x;
    sy += y;
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, y] = at(i);
    const double dx = x - mx;
    const double dy = y - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 && syy == 0.0) return 1.0;
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  const double c = sxy / std::sqrt(sxx * syy);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

ChannelHistogram histogram(std::span<const std::uint8_t> values) {
  ChannelHistogram h;
  for (std::uint8_t v : values) ++h.counts[v];
  h.total = values.size();
  return h;
}

std::vector<std::uint8_t> extract_channel(const ImageRGB& img, std::size_t c) {
  if (c > 2) throw std::out_of_range("channel index must be 0, 1 or 2");
  std::vector<std::uint8_t> out(img.pixel_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = img.data[i * 3 + c];
  return out;
}

double entropy(const ChannelHistogram& h) {
  if (h.total == 0) throw std::invalid_argument("entropy of an empty sample is undefined");
  return entropy_of_counts(h.counts, h.total);
}

double entropy(std::span<const std::uint8_t> values) { return entropy(histogram(values)); }

ChannelTriple channel_entropies(const ImageRGB& img) {
  ChannelTriple out{};
  for (std::size_t c = 0; c < 3; ++c) out[c] = entropy(extract_channel(img, c));
  return out;
}

double corr2d(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("corr2d: inputs differ in size");
  if (a.empty()) throw std::invalid_argument("corr2d: inputs are empty");
  return pearson(a.size(), [&](std::size_t i) {
    return std::pair{static_cast<double>(a[i]), static_cast<double>(b[i])};
  });
}

ChannelMatrix channel_correlations(const ImageRGB& a, const ImageRGB& b) {
  require_same_shape(a, b);
  ChannelMatrix m{};
  std::array<std::vector<std::uint8_t>, 3> ca, cb;
  for (std::size_t c = 0; c < 3; ++c) {
    ca[c] = extract_channel(a, c);
    cb[c] = extract_channel(b, c);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = corr2d(ca[i], cb[j]);
  }
  return m;
}

double adjacent_corr(std::span<const std::uint8_t> ch, std::size_t height, std::size_t width,
                     Direction dir) {
  if (ch.size() != height * width) throw std::invalid_argument("channel size does not match dimensions");
  if (dir == Direction::Horizontal) {
    if (width < 2) throw std::invalid_argument("horizontal pairs need width >= 2");
    const std::size_t per_row = width - 1;
    return pearson(per_row * height, [&](std::size_t k) {
      const std::size_t i = k / per_row, j = k % per_row;
      return std::pair{static_cast<double>(ch[i * width + j]), static_cast<double>(ch[i * width + j + 1])};
    });
  }
  if (height < 2) throw std::invalid_argument("vertical pairs need height >= 2");
  return pearson((height - 1) * width, [&](std::size_t k) {
    return std::pair{static_cast<double>(ch[k]), static_cast<double>(ch[k + width])};
  });
}

AdjacentCorrelation adjacent_correlations(const ImageRGB& img) {
  AdjacentCorrelation out;
  for (std::size_t c = 0; c < 3; ++c) {
    const auto ch = extract_channel(img, c);
    out.horizontal[c] = adjacent_corr(ch, img.height, img.width, Direction::Horizontal);
    out.vertical[c] = adjacent_corr(ch, img.height, img.width, Direction::Vertical);
  }
  return out;
}

ChannelTriple npcr(const ImageRGB& a, const ImageRGB& b) {
  require_same_shape(a, b);
  std::array<std::uint64_t, 3> diff{};
  for (std::size_t i = 0; i < a.data.size(); ++i) diff[i % 3] += a.data[i] != b.data[i];
  ChannelTriple out{};
  for (std::size_t c = 0; c < 3; ++c) {
    out[c] = static_cast<double>(diff[c]) / static_cast<double>(a.pixel_count()) * 100.0;
  }
  return out;
}

ChannelTriple uaci(const ImageRGB& a, const ImageRGB& b) {
  require_same_shape(a, b);
  std::array<std::uint64_t, 3> sum{};
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    sum[i % 3] += static_cast<std::uint64_t>(std::abs(int{a.data[i]} - int{b.data[i]}));
  }
  ChannelTriple out{};
  for (std::size_t c = 0; c < 3; ++c) {
    out[c] = static_cast<double>(sum[c]) / 255.0 / static_cast<double>(a.pixel_count()) * 100.0;
  }
  return out;
}

double expected_npcr(unsigned bits) { return (1.0 - std::ldexp(1.0, -static_cast<int>(bits))) * 100.0; }

double expected_uaci(unsigned bits) {
  const double levels = std::ldexp(1.0, static_cast<int>(bits));
  double sum = 0.0;
  for (double i = 1.0; i < levels; i += 1.0) sum += i * (i + 1.0);
  return sum / (levels - 1.0) / (levels * levels) * 100.0;
}

double mutual_information(const ImageRGB& a, const ImageRGB& b) {
  require_same_shape(a, b);
  std::vector<std::uint64_t> joint(256 * 256, 0);
  std::array<std::uint64_t, 256> ha{}, hb{};
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    ++ha[a.data[i]];
    ++hb[b.data[i]];
    ++joint[a.data[i] * 256u + b.data[i]];
  }
  const std::uint64_t n = a.data.size();
  const double mi = entropy_of_counts(ha, n) + entropy_of_counts(hb, n) - entropy_of_counts(joint, n);
  return std::max(mi, 0.0);
}

std::vector<KeyPerturbation> key_perturbations(const SecretKey& base) {
  const std::size_t n = base.quasigroup.order();
  auto swapped = [&](bool rows, std::size_t a, std::size_t b) {
    std::vector<Symbol> t(base.quasigroup.mul_table().begin(), base.quasigroup.mul_table().end());
    for (std::size_t k = 0; k < n; ++k) {
      if (rows) {
        std::swap(t[(a - 1) * n + k], t[(b - 1) * n + k]);
      } else {
        std::swap(t[k * n + (a - 1)], t[k * n + (b - 1)]);
      }
    }
    return SecretKey{base.params, Quasigroup::from_table(std::move(t), n)};
  };
  auto with = [&](auto&& change) {
    SecretKey k = base;
    change(k.params);
    return k;
  };
  auto nudge_phase = [](double v) {
    double w = v + 1e-14;
    return w < kTwoPi ? w : v - 1e-14;
  };

  std::vector<KeyPerturbation> out;
  auto interchange = [&](bool rows, std::size_t a, std::size_t b) {
    std::string label = std::string("quasigroup ") + (rows ? "rows " : "columns ") +
                        std::to_string(a) + " and " + std::to_string(b) + " interchanged";
    return KeyPerturbation{std::move(label), swapped(rows, a, b)};
  };
  out.push_back(interchange(true, 1, 2));
  out.push_back(interchange(true, n - 1, n));
  out.push_back(interchange(false, 1, 2));
  out.push_back(interchange(false, n - 1, n));
  out.push_back(interchange(true, n / 2, n / 2 + 1));
  out.push_back(interchange(false, n / 2, n / 2 + 1));
  out.push_back({"seed1 changed by one unit", with([](KeyParameters& p) {
                   p.seed1 = static_cast<std::uint8_t>(p.seed1 < 255 ? p.seed1 + 1 : p.seed1 - 1);
                 })});
  out.push_back({"seed2 changed by one unit", with([](KeyParameters& p) {
                   p.seed2 = static_cast<std::uint8_t>(p.seed2 < 255 ? p.seed2 + 1 : p.seed2 - 1);
                 })});
  out.push_back({"NR changed by one unit", with([](KeyParameters& p) {
                   p.rounds = static_cast<std::uint8_t>(p.rounds < 16 ? p.rounds + 1 : p.rounds - 1);
                 })});
  out.push_back({"NS changed by one unit", with([](KeyParameters& p) {
                   p.ns = p.ns < UINT32_MAX ? p.ns + 1 : p.ns - 1;
                 })});
  // Above K = 128 an increment of 1e-14 is below half an ulp and would round
  // back to K, so the nudge is at least one ulp.
  out.push_back({"K changed by 1e-14", with([](KeyParameters& p) {
                   const double k = p.k + 1e-14;
                   p.k = k != p.k ? k : std::nextafter(p.k, INFINITY);
                 })});
  out.push_back({"y0 changed by 1e-14", with([&](KeyParameters& p) { p.y0 = nudge_phase(p.y0); })});
  out.push_back({"x0 changed by 1e-14", with([&](KeyParameters& p) { p.x0 = nudge_phase(p.x0); })});
  return out;
}

KeySensitivityReport key_sensitivity_suite(const ImageRGB& img, const SecretKey& key) {
  const ImageRGB baseline = encrypt(img, key);
  KeySensitivityReport report;
  for (auto& [label, perturbed] : key_perturbations(key)) {
    const ImageRGB other = encrypt(img, perturbed);
    SensitivityRow row;
    row.label = label;
    row.cipher_correlation = channel_correlations(baseline, other);
    row.mutual_information = mutual_information(baseline, other);
    row.decrypt_correlation = channel_correlations(img, decrypt(baseline, perturbed));
    report.rows.push_back(std::move(row));
  }
  return report;
}

DifferentialReport differential_suite(const ImageRGB& img, const SecretKey& key, std::size_t trials,
                                      std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("differential suite needs at least one trial");
  const std::size_t pixels = img.pixel_count();
  SeededRng rng(seed);

  std::vector<std::size_t> chosen;
  std::unordered_set<std::size_t> used;
  chosen.push_back(0);
  used.insert(0);
  if (trials > 1) {
    chosen.push_back(pixels - 1);
    used.insert(pixels - 1);
  }
  while (chosen.size() < trials) {
    std::size_t p = static_cast<std::size_t>(rng.below(pixels));
    if (used.size() < pixels) {
      if (!used.insert(p).second) continue;
    }
    chosen.push_back(p);
  }

  const ImageRGB base_cipher = encrypt(img, key);
  DifferentialReport report;
  report.degenerate = pixels < kMinMeaningfulPixels;
  for (std::size_t t = 0; t < trials; ++t) {
    DifferentialSample s;
    s.trial = t;
    s.row = chosen[t] / img.width;
    s.col = chosen[t] % img.width;
    s.channel = static_cast<std::size_t>(rng.below(3));
    ImageRGB changed = img;
    std::uint8_t& byte = changed.at(s.row, s.col, s.channel);
    s.before = byte;
    byte = static_cast<std::uint8_t>(byte < 255 ? byte + 1 : byte - 1);
    s.after = byte;
    const ImageRGB other = encrypt(changed, key);
    s.npcr = npcr(base_cipher, other);
    s.uaci = uaci(base_cipher, other);
    for (std::size_t c = 0; c < 3; ++c) {
      report.mean_npcr[c] += s.npcr[c] / static_cast<double>(trials);
      report.mean_uaci[c] += s.uaci[c] / static_cast<double>(trials);
    }
    report.samples.push_back(s);
  }
  return report;
}

}  // namespace qgc
