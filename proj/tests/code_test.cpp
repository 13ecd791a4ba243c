#include <catch2/catch_amalgamated.hpp>

#include "tangle3/code.hpp"
#include "tangle3/freegroup.hpp"
#include "tangle3/refs.hpp"
#include "tangle3/twist.hpp"
#include "test_support.hpp"

using namespace tangle3;

TEST_CASE("boundary curves are valid reduced codes") {
  for (int i = 1; i <= 3; ++i) {
    const auto c = boundary_curve(i);
    c.check_valid();
    REQUIRE(c.is_reduced());
    REQUIRE(c.is_simple_closed_curve());
  }
  REQUIRE(boundary_curve(1).crossings() == 2);
  REQUIRE(boundary_curve(2).crossings() == 4);  // non-adjacent pair
  REQUIRE(boundary_curve(3).crossings() == 2);
  // dE_1' crosses the segments flanking the {6,1} arc
  const auto e1 = boundary_curve(1);
  REQUIRE(e1.segment(4).size() == 1);
  REQUIRE(e1.segment(0).size() == 1);
  REQUIRE(e1.segment(5).empty());
}

TEST_CASE("enclosed punctures match the strand pairing") {
  REQUIRE(enclosed_pair(boundary_curve(1)) == std::vector<int>{0, 5});
  REQUIRE(enclosed_pair(boundary_curve(2)) == std::vector<int>{1, 4});
  REQUIRE(enclosed_pair(boundary_curve(3)) == std::vector<int>{2, 3});
}

TEST_CASE("reduce removes an artificial bigon and is a fixpoint") {
  const auto e1 = boundary_curve(1);
  REQUIRE(e1.is_reduced());

  // add a same-segment return: the strand dips through the lower hemisphere
  // twice just before its crossing on segment 0
  EquatorialCode noisy = e1;
  auto& seg = noisy.raw_segments();
  auto& up = noisy.raw_upper();
  auto& lo = noisy.raw_lower();
  const int a = noisy.new_crossing();
  const int b = noisy.new_crossing();
  // old upper chord (0,1) with crossing 1 on segment 0;
  // new route: up (0,a), lo (a,b), up (b,1)
  up[0] = a;
  up[a] = 0;
  lo[a] = b;
  lo[b] = a;
  up[b] = 1;
  up[1] = b;
  seg[0].insert(seg[0].begin(), {a, b});
  noisy.check_valid();
  REQUIRE_FALSE(noisy.is_reduced());

  const int dropped = noisy.reduce();
  REQUIRE(dropped == 0);
  REQUIRE(noisy.is_reduced());
  REQUIRE(noisy.canonical_bytes() == e1.canonical_bytes());
}

TEST_CASE("trivial circles are discarded and counted") {
  EquatorialCode c(6);
  auto& seg = c.raw_segments();
  const int a = c.new_crossing();
  const int b = c.new_crossing();
  seg[2] = {a, b};
  c.raw_upper() = {b, a};
  c.raw_lower() = {b, a};
  c.check_valid();
  REQUIRE(c.reduce() == 1);
  REQUIRE(c.empty());
}

TEST_CASE("canonical form is stable under relabeling") {
  const auto ref = pair_curve(6, 2);
  EquatorialCode swapped =
      EquatorialCode::from_parts(6, {{}, {1}, {}, {0}, {}, {}}, {1, 0}, {1, 0});
  REQUIRE(swapped.canonical_bytes() == ref.canonical_bytes());
}

TEST_CASE("reduction is idempotent on random twist images") {
  using namespace tangle3::testing;
  for (int trial = 0; trial < 200; ++trial) {
    auto w = random_pair_word(6, uniform(0, 8));
    auto img = apply_word(boundary_curve(uniform(1, 3)), w);
    REQUIRE(img.is_reduced());
    EquatorialCode again = img;
    REQUIRE(again.reduce() == 0);
    REQUIRE(again.canonical_bytes() == img.canonical_bytes());
  }
}

TEST_CASE("rotation relabels punctures consistently") {
  REQUIRE(boundary_curve(1).rotated(2).canonical_bytes() ==
          pair_curve(6, 1).canonical_bytes());
  REQUIRE(boundary_curve(3).rotated(3).canonical_bytes() ==
          pair_curve(6, 5).canonical_bytes());
}
