#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qgc/analysis.hpp"
#include "qgc/random.hpp"

using namespace qgc;

namespace {

ImageRGB random_image(SeededRng& rng, std::size_t h, std::size_t w) {
  ImageRGB img(h, w);
  for (auto& b : img.data) b = static_cast<std::uint8_t>(rng.below(256));
  return img;
}

// Textbook single-pass Pearson in long double.
double naive_corr(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  long double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
  const long double n = static_cast<long double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    saa += static_cast<long double>(a[i]) * a[i];
    sbb += static_cast<long double>(b[i]) * b[i];
    sab += static_cast<long double>(a[i]) * b[i];
  }
  const long double cov = sab - sa * sb / n;
  return static_cast<double>(cov / std::sqrt((saa - sa * sa / n) * (sbb - sb * sb / n)));
}

}  // namespace

TEST_CASE("entropy") {
  std::vector<std::uint8_t> all(256);
  for (int i = 0; i < 256; ++i) all[i] = static_cast<std::uint8_t>(i);
  CHECK(entropy(all) == doctest::Approx(8.0));
  CHECK(entropy(std::vector<std::uint8_t>(10, 7)) == 0.0);
  CHECK(entropy(std::vector<std::uint8_t>{1, 2, 1, 2}) == doctest::Approx(1.0));
  CHECK(entropy(std::vector<std::uint8_t>{0, 0, 0, 1}) ==
        doctest::Approx(-(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25))));
  CHECK_THROWS_AS(entropy(std::vector<std::uint8_t>{}), std::invalid_argument);
  const auto h = histogram(all);
  CHECK(h.total == 256);
  CHECK(h.counts[17] == 1);
}

TEST_CASE("correlation against a textbook formula") {
  SeededRng rng(19);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng.below(500);
    std::vector<std::uint8_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::uint8_t>(rng.below(256));
      b[i] = static_cast<std::uint8_t>((a[i] * (t % 3) + rng.below(256)) & 0xff);
    }
    if (std::set<int>(a.begin(), a.end()).size() < 2 || std::set<int>(b.begin(), b.end()).size() < 2) continue;
    CHECK(corr2d(a, b) == doctest::Approx(naive_corr(a, b)).epsilon(1e-9));
    CHECK(corr2d(a, b) == doctest::Approx(corr2d(b, a)));
  }
  const std::vector<std::uint8_t> x{1, 2, 3, 4}, y{8, 6, 4, 2};
  CHECK(corr2d(x, x) == doctest::Approx(1.0));
  CHECK(corr2d(x, y) == doctest::Approx(-1.0));
}

TEST_CASE("zero-variance correlation convention") {
  const std::vector<std::uint8_t> c1(5, 3), c2(5, 200), v{1, 2, 3, 4, 5};
  CHECK(corr2d(c1, c2) == 1.0);
  CHECK(corr2d(c1, v) == 0.0);
  CHECK(corr2d(v, c1) == 0.0);
  CHECK_THROWS_AS(corr2d(c1, std::span<const std::uint8_t>(v).subspan(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(corr2d({}, {}), std::invalid_argument);
  const auto adj = adjacent_correlations(ImageRGB(4, 4));
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(adj.horizontal[c] == 1.0);
    CHECK(adj.vertical[c] == 1.0);
  }
}

TEST_CASE("adjacent correlation pairs") {
  // Channel rows 0 1 / 2 3: horizontal pairs (0,1),(2,3); vertical (0,2),(1,3).
  const std::vector<std::uint8_t> ch{0, 10, 20, 30};
  CHECK(adjacent_corr(ch, 2, 2, Direction::Horizontal) == doctest::Approx(1.0));
  CHECK(adjacent_corr(ch, 2, 2, Direction::Vertical) == doctest::Approx(1.0));
  const std::vector<std::uint8_t> zig{0, 9, 9, 0, 0, 9};
  CHECK(adjacent_corr(zig, 1, 6, Direction::Horizontal) ==
        doctest::Approx(naive_corr({0, 9, 9, 0, 0}, {9, 9, 0, 0, 9})));
  CHECK_THROWS_AS(adjacent_corr(ch, 1, 4, Direction::Vertical), std::invalid_argument);
  CHECK_THROWS_AS(adjacent_corr(ch, 4, 1, Direction::Horizontal), std::invalid_argument);
  CHECK_THROWS_AS(adjacent_corr(ch, 3, 3, Direction::Horizontal), std::invalid_argument);
}

TEST_CASE("channel correlation matrix layout") {
  SeededRng rng(4);
  const ImageRGB a = random_image(rng, 30, 30);
  ImageRGB b(30, 30);
  for (std::size_t p = 0; p < 900; ++p) {
    b.data[p * 3 + 0] = a.data[p * 3 + 2];  // cipher R is plain B
    b.data[p * 3 + 1] = static_cast<std::uint8_t>(rng.below(256));
    b.data[p * 3 + 2] = static_cast<std::uint8_t>(255 - a.data[p * 3 + 0]);
  }
  const auto m = channel_correlations(a, b);
  CHECK(m[2][0] == doctest::Approx(1.0));
  CHECK(m[0][2] == doctest::Approx(-1.0));
  CHECK(std::abs(m[1][1]) < 0.2);
}

TEST_CASE("npcr and uaci") {
  ImageRGB a(2, 2), b(2, 2);
  for (std::size_t p = 0; p < 4; ++p) {
    b.data[p * 3 + 0] = 255;
    b.data[p * 3 + 1] = p < 1 ? 51 : 0;
  }
  const auto n = npcr(a, b);
  CHECK(n[0] == doctest::Approx(100.0));
  CHECK(n[1] == doctest::Approx(25.0));
  CHECK(n[2] == 0.0);
  const auto u = uaci(a, b);
  CHECK(u[0] == doctest::Approx(100.0));
  CHECK(u[1] == doctest::Approx(5.0));
  CHECK(u[2] == 0.0);
  CHECK(uaci(b, a) == uaci(a, b));
  CHECK_THROWS_AS(npcr(a, ImageRGB(2, 3)), std::invalid_argument);
}

TEST_CASE("ideal npcr and uaci") {
  CHECK(expected_npcr() == doctest::Approx(99.609375).epsilon(1e-12));
  // Mean |X - Y| over independent uniform bytes, by direct double sum.
  long double s = 0;
  for (int x = 0; x < 256; ++x) {
    for (int y = 0; y < 256; ++y) s += std::abs(x - y);
  }
  const double direct = static_cast<double>(s / 65536.0L / 255.0L * 100.0L);
  CHECK(expected_uaci() == doctest::Approx(direct).epsilon(1e-12));
  CHECK(expected_uaci() == doctest::Approx(33.4635).epsilon(1e-5));
  CHECK(expected_npcr(1) == doctest::Approx(50.0));
}

TEST_CASE("mutual information") {
  SeededRng rng(6);
  const ImageRGB a = random_image(rng, 100, 100);
  std::vector<std::uint8_t> pooled(a.data.begin(), a.data.end());
  CHECK(mutual_information(a, a) == doctest::Approx(entropy(pooled)));
  const ImageRGB b = random_image(rng, 100, 100);
  const double mi = mutual_information(a, b);
  // Plug-in estimator bias is about (255^2) / (2 n ln 2) bits.
  CHECK(mi > 0.0);
  CHECK(mi == doctest::Approx(65025.0 / (2.0 * 30000.0 * std::log(2.0))).epsilon(0.1));
  CHECK(mutual_information(ImageRGB(3, 3), ImageRGB(3, 3)) == 0.0);
}

TEST_CASE("key perturbations") {
  const SecretKey base = generate_key(55, 2);
  const auto list = key_perturbations(base);
  REQUIRE(list.size() == 13);
  CHECK(list[0].label == "quasigroup rows 1 and 2 interchanged");
  CHECK(list[1].label == "quasigroup rows 255 and 256 interchanged");
  CHECK(list[3].label == "quasigroup columns 255 and 256 interchanged");
  CHECK(list[5].label == "quasigroup columns 128 and 129 interchanged");
  std::set<std::vector<std::uint8_t>> distinct;
  for (const auto& p : list) {
    CHECK(validate_key(p.key).ok());
    CHECK(p.key != base);
    distinct.insert(serialize_key(p.key));
  }
  CHECK(distinct.size() == 13);
  CHECK(list[0].key.quasigroup.mul(1, 7) == base.quasigroup.mul(2, 7));
  CHECK(list[2].key.quasigroup.mul(7, 1) == base.quasigroup.mul(7, 2));
  CHECK(list[10].key.params.k > base.params.k);
  CHECK(list[10].key.params.k - base.params.k < 3e-14);
  CHECK(list[12].key.params.x0 != base.params.x0);
  CHECK(std::abs(list[12].key.params.x0 - base.params.x0) < 2e-14);

  SecretKey edge = base;
  edge.params.seed1 = 255;
  edge.params.rounds = 16;
  edge.params.x0 = std::nextafter(kTwoPi, 0.0);
  edge.params.k = 150.0;
  const auto e = key_perturbations(edge);
  CHECK(e[6].key.params.seed1 == 254);
  CHECK(e[8].key.params.rounds == 15);
  CHECK(e[12].key.params.x0 < kTwoPi);
  CHECK(e[10].key.params.k == std::nextafter(150.0, 200.0));
  CHECK(validate_key(e[12].key).ok());
}

TEST_CASE("sensitivity suite on a small image") {
  SeededRng rng(8);
  const ImageRGB img = random_image(rng, 40, 40);
  const auto report = key_sensitivity_suite(img, generate_key(12, 2));
  REQUIRE(report.rows.size() == 13);
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(row.cipher_correlation[c][c]) < 0.15);
  }
}

TEST_CASE("differential suite bookkeeping") {
  SeededRng rng(2);
  const ImageRGB img = random_image(rng, 20, 20);
  const SecretKey key = generate_key(5, 2);
  const auto r = differential_suite(img, key, 10, 77);
  REQUIRE(r.samples.size() == 10);
  CHECK_FALSE(r.degenerate);
  CHECK(r.samples[0].row == 0);
  CHECK(r.samples[0].col == 0);
  CHECK(r.samples[1].row == 19);
  CHECK(r.samples[1].col == 19);
  std::set<std::pair<std::size_t, std::size_t>> where;
  double sum = 0;
  for (const auto& s : r.samples) {
    where.emplace(s.row, s.col);
    CHECK(std::abs(int{s.after} - int{s.before}) == 1);
    CHECK(s.before == img.at(s.row, s.col, s.channel));
    sum += s.npcr[0];
  }
  CHECK(where.size() == 10);
  CHECK(r.mean_npcr[0] == doctest::Approx(sum / 10));
  const auto again = differential_suite(img, key, 10, 77);
  CHECK(again.mean_uaci == r.mean_uaci);

  const auto tiny = differential_suite(ImageRGB(1, 1), key, 3, 1);
  CHECK(tiny.degenerate);
  CHECK(tiny.samples.size() == 3);
  CHECK_THROWS_AS(differential_suite(img, key, 0, 1), std::invalid_argument);
}
