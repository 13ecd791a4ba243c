#include <catch2/catch_amalgamated.hpp>

#include "tangle3/freegroup.hpp"
#include "tangle3/refs.hpp"
#include "test_support.hpp"

using namespace tangle3;
using namespace tangle3::testing;

TEST_CASE("meridian words of the reference disks are trivial") {
  for (int i = 1; i <= 3; ++i)
    REQUIRE(curve_to_word(boundary_curve(i)).trivial());
}

TEST_CASE("meridian word of the curve around punctures 2,3") {
  // encloses one endpoint of strand 2 and one of strand 3
  const auto w = curve_to_word(pair_curve(6, 1));
  REQUIRE_FALSE(w.trivial());
  REQUIRE(w.size() == 2);
  REQUIRE(w.exponent_sum(1) == 0);
  REQUIRE(std::abs(w.exponent_sum(2)) == 1);
  REQUIRE(std::abs(w.exponent_sum(3)) == 1);
}

TEST_CASE("curve around punctures 2..5 telescopes to the trivial word") {
  const auto c = run_curve(6, 1, 4);  // complement pair {6,1} = strand 1
  REQUIRE(curve_to_word(c).trivial());
  REQUIRE(bounds_disk_oracle(c));
}

TEST_CASE("curves enclosing one puncture of a strand have odd exponent sum") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto img = apply_word(boundary_curve(uniform(1, 3)),
                                random_sigma_word(uniform(0, 7)));
    const auto pair = enclosed_pair(img);
    REQUIRE(pair.size() == 2);
    const auto w = curve_to_word(img);
    for (int strand = 1; strand <= 3; ++strand) {
      const auto [a, b] = strand_punctures(strand);
      const bool has_a = std::find(pair.begin(), pair.end(), a) != pair.end();
      const bool has_b = std::find(pair.begin(), pair.end(), b) != pair.end();
      if (has_a != has_b)
        REQUIRE(std::abs(w.exponent_sum(strand)) % 2 == 1);
    }
  }
}

TEST_CASE("oracle on the basic disk-bounding examples") {
  REQUIRE(bounds_disk_oracle(boundary_curve(1)));
  REQUIRE(bounds_disk_oracle(boundary_curve(2)));
  REQUIRE(bounds_disk_oracle(boundary_curve(3)));
  REQUIRE_FALSE(bounds_disk_oracle(pair_curve(6, 1)));
  const auto s1e1 = apply_half_twist(boundary_curve(1), sigma(1));
  REQUIRE_FALSE(bounds_disk_oracle(s1e1));  // encloses {2,6}
}

TEST_CASE("oracle is invariant under inserting cancelling twists") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = random_sigma_word(uniform(0, 6));
    auto padded = w;
    const int at = w.empty() ? 0 : uniform(0, static_cast<int>(w.size()));
    const auto g = sigma(uniform(1, 3), uniform(0, 1) ? 1 : -1);
    padded.insert(padded.begin() + at, {g, g.inverse()});
    for (int i = 1; i <= 3; ++i) {
      const auto a = apply_word(boundary_curve(i), w);
      const auto b = apply_word(boundary_curve(i), padded);
      REQUIRE(a.canonical_bytes() == b.canonical_bytes());
      REQUIRE(curve_to_word(a).trivial() == curve_to_word(b).trivial());
    }
  }
}

TEST_CASE("tangle oracle basics") {
  REQUIRE(tangles_isotopic_oracle({sigma(1), sigma(2, -1)},
                                  {sigma(1), sigma(2, -1)}));
  REQUIRE(tangles_isotopic_oracle({sigma(3)}, {}));
  REQUIRE_FALSE(tangles_isotopic_oracle({sigma(1)}, {}));
  REQUIRE_FALSE(tangles_isotopic_oracle({sigma(2)}, {}));
}

TEST_CASE("tau words preserve the trivial tangle") {
  for (int i = 1; i <= 3; ++i) {
    for (int s : {+1, -1}) {
      const auto img1 = apply_word(boundary_curve(1), tau_word(i, s));
      const auto img2 = apply_word(boundary_curve(2), tau_word(i, s));
      REQUIRE(bounds_disk_oracle(img1));
      REQUIRE(bounds_disk_oracle(img2));
    }
  }
}

TEST_CASE("tangle oracle is symmetric and reflexive on random words") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_sigma_word(uniform(0, 5));
    const auto g = random_sigma_word(uniform(0, 5));
    REQUIRE(tangles_isotopic_oracle(f, f));
    REQUIRE(tangles_isotopic_oracle(f, g) == tangles_isotopic_oracle(g, f));
  }
}

TEST_CASE("oracle respects composition with a common suffix") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_sigma_word(uniform(0, 4));
    const auto g = random_sigma_word(uniform(0, 4));
    const auto u = random_sigma_word(uniform(0, 4));
    REQUIRE(tangles_isotopic_oracle(concat(f, u), concat(g, u)) ==
            tangles_isotopic_oracle(f, g));
  }
}
