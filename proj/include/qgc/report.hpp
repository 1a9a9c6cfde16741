#pragma once

#include <cstdint>
#include <string>

#include "qgc/analysis.hpp"

namespace qgc {

// Text reports print four decimals. CSV output prints ten significant digits.
//
// CSV layouts:
//   metric report      metric,label,value
//                      (metric in entropy, correlation, adjacent_horizontal,
//                       adjacent_vertical, npcr, uaci, mutual_information;
//                       label is R/G/B, a plain-cipher pair such as R-G, or "all")
//   key sensitivity    index,perturbation,corr_RR,corr_RG,corr_RB,corr_GR,corr_GG,
//                      corr_GB,corr_BR,corr_BG,corr_BB,mutual_information,
//                      decrypt_corr_max_abs
//   differential       trial,row,col,channel,before,after,npcr_R,npcr_G,npcr_B,
//                      uaci_R,uaci_G,uaci_B
//   histogram          value,R,G,B
//   adjacent pairs     channel,direction,first,second

std::string format_metric_text(const MetricReport& r);
std::string format_metric_csv(const MetricReport& r);

std::string format_sensitivity_text(const KeySensitivityReport& r);
std::string format_sensitivity_csv(const KeySensitivityReport& r);

std::string format_differential_text(const DifferentialReport& r);
std::string format_differential_csv(const DifferentialReport& r);

std::string histogram_csv(const ImageRGB& img);

/// Up to `max_pairs` randomly chosen neighbour pairs per channel and
/// direction, for scatter plots. Deterministic in `seed`.
std::string adjacent_pairs_csv(const ImageRGB& img, std::size_t max_pairs, std::uint64_t seed);

}  // namespace qgc
