#include "qgc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qgc/random.hpp"

namespace qgc {

namespace {

constexpr const char* kCh[3] = {"R", "G", "B"};

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void text_triple(std::ostringstream& os, const char* title, const ChannelTriple& t) {
  os << title;
  for (double v : t) os << "  " << fixed4(v);
  os << '\n';
}

void csv_triple(std::ostringstream& os, const char* metric, const ChannelTriple& t) {
  for (std::size_t c = 0; c < 3; ++c) os << metric << ',' << kCh[c] << ',' << sig10(t[c]) << '\n';
}

double max_abs(const ChannelMatrix& m) {
  double out = 0.0;
  for (const auto& row : m) {
    for (double v : row) out = std::max(out, std::abs(v));
  }
  return out;
}

}  // namespace

std::string format_metric_text(const MetricReport& r) {
  std::ostringstream os;
  os << "                    R       G       B\n";
  if (r.entropy) text_triple(os, "entropy (bits)  ", *r.entropy);
  if (r.correlation) {
    os << "plain/cipher correlation (rows: plain channel, columns: cipher channel)\n";
    for (std::size_t i = 0; i < 3; ++i) text_triple(os, i == 0 ? "  R             " : i == 1 ? "  G             " : "  B             ", (*r.correlation)[i]);
  }
  if (r.adjacent) {
    text_triple(os, "adjacent horiz. ", r.adjacent->horizontal);
    text_triple(os, "adjacent vert.  ", r.adjacent->vertical);
  }
  if (r.npcr) text_triple(os, "NPCR (%)        ", *r.npcr);
  if (r.uaci) text_triple(os, "UACI (%)        ", *r.uaci);
  if (r.mutual_information) os << "mutual information (bits)  " << fixed4(*r.mutual_information) << '\n';
  return os.str();
}

std::string format_metric_csv(const MetricReport& r) {
  std::ostringstream os;
  os << "metric,label,value\n";
  if (r.entropy) csv_triple(os, "entropy", *r.entropy);
  if (r.correlation) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        os << "correlation," << kCh[i] << '-' << kCh[j] << ',' << sig10((*r.correlation)[i][j]) << '\n';
      }
    }
  }
  if (r.adjacent) {
    csv_triple(os, "adjacent_horizontal", r.adjacent->horizontal);
    csv_triple(os, "adjacent_vertical", r.adjacent->vertical);
  }
  if (r.npcr) csv_triple(os, "npcr", *r.npcr);
  if (r.uaci) csv_triple(os, "uaci", *r.uaci);
  if (r.mutual_information) os << "mutual_information,all," << sig10(*r.mutual_information) << '\n';
  return os.str();
}

std::string format_sensitivity_text(const KeySensitivityReport& r) {
  std::ostringstream os;
  os << " #  perturbation                                  corr R   corr G   corr B   MI (bits)  "
        "max|decrypt corr|\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    char line[256];
    std::snprintf(line, sizeof line, "%2zu  %-44s %7s  %7s  %7s  %9s  %s\n", i + 1, row.label.c_str(),
                  fixed4(row.cipher_correlation[0][0]).c_str(), fixed4(row.cipher_correlation[1][1]).c_str(),
                  fixed4(row.cipher_correlation[2][2]).c_str(), fixed4(row.mutual_information).c_str(),
                  fixed4(max_abs(row.decrypt_correlation)).c_str());
    os << line;
  }
  return os.str();
}

std::string format_sensitivity_csv(const KeySensitivityReport& r) {
  std::ostringstream os;
  os << "index,perturbation";
  for (const char* a : kCh) {
    for (const char* b : kCh) os << ",corr_" << a << b;
  }
  os << ",mutual_information,decrypt_corr_max_abs\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    os << i + 1 << ",\"" << row.label << '"';
    for (const auto& line : row.cipher_correlation) {
      for (double v : line) os << ',' << sig10(v);
    }
    os << ',' << sig10(row.mutual_information) << ',' << sig10(max_abs(row.decrypt_correlation)) << '\n';
  }
  return os.str();
}

std::string format_differential_text(const DifferentialReport& r) {
  std::ostringstream os;
  os << "trials: " << r.samples.size() << '\n';
  if (r.degenerate) os << "warning: image too small for meaningful NPCR/UACI statistics\n";
  os << "                    R        G        B\n";
  text_triple(os, "mean NPCR (%)   ", r.mean_npcr);
  text_triple(os, "mean UACI (%)   ", r.mean_uaci);
  os << "expected NPCR " << fixed4(expected_npcr()) << "  UACI " << fixed4(expected_uaci()) << '\n';
  return os.str();
}

std::string format_differential_csv(const DifferentialReport& r) {
  std::ostringstream os;
  os << "trial,row,col,channel,before,after,npcr_R,npcr_G,npcr_B,uaci_R,uaci_G,uaci_B\n";
  for (const auto& s : r.samples) {
    os << s.trial << ',' << s.row << ',' << s.col << ',' << kCh[s.channel] << ',' << int{s.before} << ','
       << int{s.after};
    for (double v : s.npcr) os << ',' << sig10(v);
    for (double v : s.uaci) os << ',' << sig10(v);
    os << '\n';
  }
  return os.str();
}

std::string histogram_csv(const ImageRGB& img) {
  std::array<ChannelHistogram, 3> h;
  for (std::size_t c = 0; c < 3; ++c) h[c] = histogram(extract_channel(img, c));
  std::ostringstream os;
  os << "value,R,G,B\n";
  for (std::size_t v = 0; v < 256; ++v) {
    os << v << ',' << h[0].counts[v] << ',' << h[1].counts[v] << ',' << h[2].counts[v] << '\n';
  }
  return os.str();
}

std::string adjacent_pairs_csv(const ImageRGB& img, std::size_t max_pairs, std::uint64_t seed) {
  SeededRng rng(seed);
  std::ostringstream os;
  os << "channel,direction,first,second\n";
  for (std::size_t c = 0; c < 3; ++c) {
    for (int d = 0; d < 2; ++d) {
      const bool horizontal = d == 0;
      const std::size_t rows = horizontal ? img.height : img.height - 1;
      const std::size_t cols = horizontal ? img.width - 1 : img.width;
      const std::size_t total = rows * cols;
      if (total == 0) continue;
      const std::size_t n = std::min(max_pairs, total);
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = n == total ? k : static_cast<std::size_t>(rng.below(total));
        const std::size_t i = idx / cols, j = idx % cols;
        const std::size_t i2 = horizontal ? i : i + 1, j2 = horizontal ? j + 1 : j;
        os << kCh[c] << ',' << (horizontal ? "horizontal" : "vertical") << ',' << int{img.at(i, j, c)}
           << ',' << int{img.at(i2, j2, c)} << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace qgc
