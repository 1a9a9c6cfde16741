#include <cmath>
#include <cstring>
#include <stdexcept>

#include "doctest.h"
#include "qgc/chaos.hpp"
#include "qgc/random.hpp"
#include "support/map_oracle.hpp"

using namespace qgc;

namespace {

constexpr MapState kReferenceMap{2.86295319532475, 4.56538639123458, 108.43745557666125};

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("portable_sin matches a correctly rounded reference") {
  SeededRng rng(2024);
  int mismatches = 0;
  for (int i = 0; i < 20000; ++i) {
    const double y = rng.unit() * kTwoPi;
    if (!same_bits(portable_sin(y), oracle::rn_sin(y))) ++mismatches;
  }
  // Quadrant boundaries and extreme arguments.
  const double special[] = {0.0, 0x1p-1074, 0x1p-30, 1e-8, 0x1.921fb54442d18p-1, 0x1.921fb54442d18p+0,
                            0x1.921fb54442d18p+1, 0x1.2d97c7f3321d2p+2, kTwoPi, std::nextafter(kTwoPi, 0.0)};
  for (double y : special) {
    if (!same_bits(portable_sin(y), oracle::rn_sin(y))) ++mismatches;
  }
  CHECK(mismatches == 0);
  CHECK(portable_sin(0.0) == 0.0);
  CHECK_THROWS_AS(portable_sin(-1e-300), std::domain_error);
  CHECK_THROWS_AS(portable_sin(7.0), std::domain_error);
  CHECK_THROWS_AS(portable_sin(NAN), std::domain_error);
}

TEST_CASE("wrap_two_pi stays in range") {
  CHECK(wrap_two_pi(0.0) == 0.0);
  CHECK(wrap_two_pi(kTwoPi) == 0.0);
  CHECK(wrap_two_pi(-1.0) == doctest::Approx(kTwoPi - 1.0));
  CHECK(wrap_two_pi(3 * kTwoPi + 0.5) == doctest::Approx(0.5));
  const double awkward[] = {-0x1p-60, std::nextafter(kTwoPi, 0.0), std::nextafter(2 * kTwoPi, 0.0), -kTwoPi,
                            -1e-300, 1e6, -1e6};
  for (double a : awkward) {
    const double r = wrap_two_pi(a);
    CHECK(r >= 0.0);
    CHECK(r < kTwoPi);
    CHECK(same_bits(r, oracle::oracle_wrap(a)));
  }
}

TEST_CASE("map step examples") {
  SUBCASE("origin is a fixed point") {
    MapState s{0.0, 0.0, 50.0};
    CHECK(skip(s, 1000) == s);
  }
  SUBCASE("hand-computed step") {
    // x1 = 1 + 20 sin 1, y1 = 1 + x1, both reduced mod 2pi.
    const MapState s = step({1.0, 1.0, 20.0});
    const double x1 = std::fmod(1.0 + 20.0 * std::sin(1.0), 2 * M_PI);
    CHECK(s.x == doctest::Approx(x1).epsilon(1e-12));
    CHECK(s.y == doctest::Approx(std::fmod(1.0 + x1, 2 * M_PI)).epsilon(1e-12));
  }
  SUBCASE("y uses the updated x") {
    const MapState s = step({1.0, kTwoPi / 4, 30.0});
    CHECK(s.y == doctest::Approx(wrap_two_pi(kTwoPi / 4 + s.x)));
  }
  SUBCASE("non-finite input is rejected") {
    CHECK_THROWS_AS(step({NAN, 1.0, 20.0}), std::invalid_argument);
    CHECK_THROWS_AS(step({1.0, INFINITY, 20.0}), std::invalid_argument);
    CHECK_THROWS_AS(step({1.0, 1.0, NAN}), std::invalid_argument);
  }
}

TEST_CASE("skip composes") {
  SeededRng rng(8);
  for (int i = 0; i < 50; ++i) {
    MapState s{rng.unit() * kTwoPi, rng.unit() * kTwoPi, 18.0 + rng.unit() * 100.0};
    const auto a = rng.below(200), b = rng.below(200);
    CHECK(skip(skip(s, a), b) == skip(s, a + b));
  }
}

TEST_CASE("trajectory stays inside the phase space") {
  MapState s = kReferenceMap;
  for (int i = 0; i < 1000000; ++i) {
    s = step(s);
    if (!(s.x >= 0.0 && s.x < kTwoPi && s.y >= 0.0 && s.y < kTwoPi)) {
      FAIL("left [0, 2pi) at step " << i);
    }
  }
}

TEST_CASE("reference trajectory matches the multiprecision oracle") {
  const MapState s = skip(kReferenceMap, 108);
  // Frozen from the 100-digit per-operation oracle.
  CHECK(same_bits(s.x, 0x1.1a286d0452cfcp+2));
  CHECK(same_bits(s.y, 0x1.2488343a41c4p+2));
  oracle::OracleState o{kReferenceMap.x, kReferenceMap.y, kReferenceMap.k};
  for (int i = 1; i <= 108; ++i) {
    o = oracle::oracle_step(o);
  }
  CHECK(same_bits(s.x, o.x));
  CHECK(same_bits(s.y, o.y));
}

TEST_CASE("box indices") {
  CHECK(box_index(0.0, 10) == 1);
  CHECK(box_index(kTwoPi / 2, 10) == 6);
  CHECK(box_index(std::nextafter(kTwoPi, 0.0), 10) == 10);
  CHECK(box_index(kTwoPi, 10) == 10);
  CHECK(box_index(3.0, 1) == 1);
  SeededRng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.unit() * kTwoPi;
    const auto n = static_cast<std::size_t>(1 + rng.below(1000));
    const auto b = box_index(v, n);
    REQUIRE(b >= 1);
    REQUIRE(b <= n);
    REQUIRE(b == oracle::oracle_box(v, n));
  }
}

TEST_CASE("permutation boxes for a 200x200 image") {
  const auto [boxes, end] = gen_perm_boxes(skip(kReferenceMap, 108), 320, 375);
  REQUIRE(boxes.pr1.size() == 375);
  REQUIRE(boxes.pc2.size() == 375);
  CHECK(boxes.pr1[0] == 198);
  CHECK(boxes.pr1[1] == 81);
  CHECK(boxes.pr1[374] == 54);
  CHECK(boxes.pc1[0] == 129);
  CHECK(boxes.pc1[1] == 218);
  CHECK(boxes.pr2[0] == 315);
  CHECK(boxes.pc2[0] == 123);
  CHECK(boxes.pc2[374] == 182);
  CHECK(end == skip(kReferenceMap, 108 + 2 * 375));
  oracle::OracleState o = oracle::oracle_skip({kReferenceMap.x, kReferenceMap.y, kReferenceMap.k}, 108);
  for (std::size_t j = 0; j < 375; ++j) {
    o = oracle::oracle_step(o);
    REQUIRE(boxes.pr1[j] == oracle::oracle_box(o.x, 320));
    REQUIRE(boxes.pc1[j] == oracle::oracle_box(o.y, 375));
    o = oracle::oracle_step(o);
    REQUIRE(boxes.pr2[j] == oracle::oracle_box(o.x, 320));
    REQUIRE(boxes.pc2[j] == oracle::oracle_box(o.y, 375));
  }
  for (std::size_t j = 0; j < 375; ++j) {
    REQUIRE(boxes.pr1[j] <= 320);
    REQUIRE(boxes.pr2[j] <= 320);
    REQUIRE(boxes.pc1[j] <= 375);
    REQUIRE(boxes.pc2[j] <= 375);
  }
  CHECK_THROWS_AS(gen_perm_boxes(kReferenceMap, 0, 5), std::invalid_argument);
}
