#include <sstream>

#include "doctest.h"
#include "qgc/report.hpp"

using namespace qgc;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("metric report formats") {
  MetricReport r;
  r.entropy = ChannelTriple{7.99531, 7.9961, 8.0};
  r.mutual_information = 0.123456789012;
  const auto text = format_metric_text(r);
  CHECK(text.find("7.9953") != std::string::npos);
  CHECK(text.find("0.1235") != std::string::npos);
  const auto csv = format_metric_csv(r);
  CHECK(csv.rfind("metric,label,value\n", 0) == 0);
  CHECK(csv.find("entropy,G,7.9961\n") != std::string::npos);
  CHECK(csv.find("mutual_information,all,0.123456789\n") != std::string::npos);
  CHECK(count_lines(csv) == 5);
}

TEST_CASE("correlation csv labels plain-cipher pairs") {
  MetricReport r;
  ChannelMatrix m{};
  m[0][2] = -0.5;
  r.correlation = m;
  const auto csv = format_metric_csv(r);
  CHECK(csv.find("correlation,R-B,-0.5\n") != std::string::npos);
  CHECK(count_lines(csv) == 10);
}

TEST_CASE("histogram and pair csv") {
  ImageRGB img(2, 2, {0, 1, 2, 0, 1, 2, 0, 1, 2, 255, 255, 255});
  const auto h = histogram_csv(img);
  CHECK(count_lines(h) == 257);
  CHECK(h.find("\n0,3,0,0\n") != std::string::npos);
  CHECK(h.find("\n255,1,1,1\n") != std::string::npos);
  const auto pairs = adjacent_pairs_csv(img, 100, 1);
  // 2 pairs per channel and direction.
  CHECK(count_lines(pairs) == 1 + 3 * 2 * 2);
  CHECK(adjacent_pairs_csv(img, 1, 9) == adjacent_pairs_csv(img, 1, 9));
}

TEST_CASE("differential and sensitivity csv shape") {
  DifferentialReport d;
  d.samples.resize(3);
  d.degenerate = true;
  CHECK(count_lines(format_differential_csv(d)) == 4);
  CHECK(format_differential_text(d).find("warning") != std::string::npos);
  KeySensitivityReport k;
  k.rows.resize(13);
  const auto csv = format_sensitivity_csv(k);
  CHECK(count_lines(csv) == 14);
  CHECK(count_lines(format_sensitivity_text(k)) == 14);
}
