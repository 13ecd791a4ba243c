#pragma once

// Shared helpers for the suite: deterministic RNG, random twist words, and
// word enumeration over the sigma generators.

#include <random>
#include <vector>

#include "tangle3/refs.hpp"
#include "tangle3/twist.hpp"

namespace tangle3::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20260810u);
  return gen;
}

inline int uniform(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

// Random word over sigma1..sigma3 with signs.
inline TwistWord random_sigma_word(int len) {
  TwistWord w;
  for (int i = 0; i < len; ++i)
    w.push_back(sigma(uniform(1, 3), uniform(0, 1) ? +1 : -1));
  return w;
}

// Random word over all six adjacent-pair twists (richer curve sample).
inline TwistWord random_pair_word(int n, int len) {
  TwistWord w;
  for (int i = 0; i < len; ++i)
    w.push_back(Twist{uniform(0, n - 1), uniform(0, 1) ? +1 : -1});
  return w;
}

// Depth-first enumeration of sigma words up to the given length; calls
// visit(code, word) for every node including the root.
template <typename Visit>
void enumerate_sigma_images(const EquatorialCode& seed, int max_len,
                            Visit&& visit) {
  TwistWord word;
  auto rec = [&](auto&& self, const EquatorialCode& cur, int depth) -> void {
    visit(cur, word);
    if (depth == max_len) return;
    for (int g = 1; g <= 3; ++g) {
      for (int s : {+1, -1}) {
        word.push_back(sigma(g, s));
        self(self, apply_half_twist(cur, sigma(g, s)), depth + 1);
        word.pop_back();
      }
    }
  };
  rec(rec, seed, 0);
}

}  // namespace tangle3::testing
