#pragma once

// The fixed 6-punctured model and its reference objects.
//
// Punctures are labeled 1..6 in cyclic order on the equator (0..5
// internally).  The trivial tangle pairs them in the nested pattern of the
// standard projection: strand 1 joins punctures 1 and 6, strand 2 joins 2
// and 5, strand 3 joins 3 and 4.  E_i' is a 2-punctured disk around strand
// i's endpoints: E_1' and E_3' around the adjacent pairs {6,1} and {3,4},
// E_2' around the non-adjacent pair {2,5}, realized as a neighborhood of
// the upper-hemisphere arc between them.
//
// Generators (counterclockwise half twists viewed from outside the ball):
//   sigma1 on A = {1,2},  sigma2 on B = {2,3},  sigma3 = tau1 on E_1'.
// sigma1 and sigma2 share puncture 2, sigma1 and sigma3 share puncture 1,
// sigma2 and sigma3 have disjoint supports: the three relations
//   s1 s2 s1 = s2 s1 s2,  s1 s3 s1 = s3 s1 s3,  s2 s3 = s3 s2
// hold for exactly this pattern.

#include <optional>

#include "tangle3/code.hpp"
#include "tangle3/intersect.hpp"
#include "tangle3/twist.hpp"

namespace tangle3 {

// Minimal curve around the adjacent puncture pair {k, k+1} (0-indexed):
// one crossing on each flanking segment, one chord per hemisphere.
inline EquatorialCode pair_curve(int n, int k) {
  EquatorialCode c(n);
  auto& seg = c.raw_segments();
  const int a = c.new_crossing();
  const int b = c.new_crossing();
  seg[((k - 1) % n + n) % n].push_back(a);
  seg[(k + 1) % n].push_back(b);
  c.raw_upper()[a] = b;
  c.raw_upper()[b] = a;
  c.raw_lower()[a] = b;
  c.raw_lower()[b] = a;
  return c;
}

// Minimal curve around the contiguous run {first, ..., first+len-1}.
inline EquatorialCode run_curve(int n, int first, int len) {
  if (len < 1 || len > n - 2) throw code_error("bad run length");
  EquatorialCode c(n);
  auto& seg = c.raw_segments();
  const int a = c.new_crossing();
  const int b = c.new_crossing();
  seg[((first - 1) % n + n) % n].push_back(a);
  seg[(first + len - 1) % n].push_back(b);
  c.raw_upper()[a] = b;
  c.raw_upper()[b] = a;
  c.raw_lower()[a] = b;
  c.raw_lower()[b] = a;
  return c;
}

// Simple arc between two punctures laid inside one hemisphere.
struct HemisphereArc {
  int n = 6;
  int a = 0, b = 0;  // anchored punctures (0-indexed)
  int hemi = 0;      // 0 upper, 1 lower
};

// Boundary of a neighborhood of a hemisphere arc.
inline EquatorialCode doubled_arc(const HemisphereArc& arc) {
  const int n = arc.n;
  if (arc.a == arc.b) throw code_error("arc endpoints coincide");
  EquatorialCode c(n);
  auto& seg = c.raw_segments();
  const int pw = c.new_crossing();  // just west of a
  const int pe = c.new_crossing();  // just east of a
  const int qw = c.new_crossing();  // just west of b
  const int qe = c.new_crossing();  // just east of b
  seg[((arc.a - 1) % n + n) % n].push_back(pw);
  seg[arc.a % n].insert(seg[arc.a % n].begin(), pe);
  seg[((arc.b - 1) % n + n) % n].push_back(qw);
  seg[arc.b % n].insert(seg[arc.b % n].begin(), qe);
  auto& side = arc.hemi == 0 ? c.raw_upper() : c.raw_lower();  // parallels
  auto& caps = arc.hemi == 0 ? c.raw_lower() : c.raw_upper();  // endpoint caps
  side[pw] = qe;
  side[qe] = pw;
  side[pe] = qw;
  side[qw] = pe;
  caps[pw] = pe;
  caps[pe] = pw;
  caps[qw] = qe;
  caps[qe] = qw;
  EquatorialCode out = c;
  out.reduce();
  return out;
}

// Endpoint punctures of strand i (1-indexed strand, 0-indexed punctures).
inline std::pair<int, int> strand_punctures(int i) {
  switch (i) {
    case 1: return {0, 5};  // punctures 1, 6
    case 2: return {1, 4};  // punctures 2, 5
    case 3: return {2, 3};  // punctures 3, 4
    default: throw code_error("strand index must be 1..3");
  }
}

// dE_i': boundary of the strand-i disk.
inline EquatorialCode boundary_curve(int i) {
  switch (i) {
    case 1: return pair_curve(6, 5);
    case 2: return doubled_arc(HemisphereArc{6, 1, 4, 0});
    case 3: return pair_curve(6, 2);
    default: throw code_error("boundary curve index must be 1..3");
  }
}

// Zone for the adjacent-pair disks; E_2' has no contiguous zone.
inline std::optional<ZoneSpec> boundary_zone(int i) {
  if (i == 1) return ZoneSpec{5, 2};
  if (i == 3) return ZoneSpec{2, 2};
  if (i == 2) return std::nullopt;
  throw code_error("boundary zone index must be 1..3");
}

// The generator family.
inline Twist sigma(int i, int sign = +1) {
  switch (i) {
    case 1: return Twist{0, sign};  // A = punctures {1,2}
    case 2: return Twist{1, sign};  // B = {2,3}
    case 3: return Twist{5, sign};  // E_1' = {6,1}
    default: throw code_error("sigma index must be 1..3");
  }
}

// Conjugator carrying E_2' onto the adjacent pair {2,3} (0-indexed {1,2}):
// found by search over short twist words and pinned by the startup checks.
inline TwistWord e2_conjugator() {
  return {Twist{3, +1}, Twist{2, +1}};
}

// Half twist tau_i supported on E_i', as a word.
inline TwistWord tau_word(int i, int sign = +1) {
  switch (i) {
    case 1: return {Twist{5, sign}};
    case 3: return {Twist{2, sign}};
    case 2: {
      const TwistWord w = e2_conjugator();
      return concat(concat(w, {Twist{1, sign}}), inverse(w));
    }
    default: throw code_error("tau index must be 1..3");
  }
}

// Full Dehn twist about dE_i'.
inline TwistWord full_twist(int i, int power = 1) {
  TwistWord once = concat(tau_word(i), tau_word(i));
  return pow(once, power);
}

// The arc l between punctures 2 and 5: the middle strand's shadow.
inline HemisphereArc arc_l25() { return HemisphereArc{6, 1, 4, 0}; }

}  // namespace tangle3
