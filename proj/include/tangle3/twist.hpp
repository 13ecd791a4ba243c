#pragma once

// Half Dehn twist actions on equatorial codes.
//
// The twist on the adjacent puncture pair {k, k+1} is supported on a thin
// disk around equator segment k.  A reduced code meets that disk in one
// transversal strand per crossing on segment k.  A counterclockwise half
// twist (viewed from outside the ball, positive sign) replaces each
// transversal by an S-shaped arc crossing the equator three times: once on
// the tail of segment k-1 (just before puncture k), once on segment k, and
// once on the head of segment k+1 (just after puncture k+1).
//
// For crossing c with upper partner U and lower partner L, the rewrite
// introduces crossings a (segment k-1), b (segment k), d (segment k+1):
//   sign +1:  upper (U,a) (b,d)   lower (a,b) (d,L)
//   sign -1:  upper (U,d) (b,a)   lower (d,b) (a,L)
// Strand order: a-block appended after the existing k-1 crossings in strand
// order, d-block prepended before the existing k+1 crossings in strand
// order, and the b-list reverses the strand order (a half twist reverses the
// strands between the punctures).

#include <string>
#include <vector>

#include "tangle3/code.hpp"

namespace tangle3 {

struct Twist {
  int pair = 0;   // adjacent pair {pair, pair+1 mod n}
  int sign = +1;  // +1 counterclockwise, -1 clockwise

  Twist inverse() const { return {pair, -sign}; }
};

using TwistWord = std::vector<Twist>;

inline TwistWord inverse(const TwistWord& w) {
  TwistWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

inline TwistWord concat(const TwistWord& a, const TwistWord& b) {
  TwistWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline TwistWord pow(const TwistWord& w, int e) {
  TwistWord base = e >= 0 ? w : inverse(w);
  TwistWord out;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) out = concat(out, base);
  return out;
}

// Applies one half twist; input must be reduced, output is reduced.
inline EquatorialCode apply_half_twist(const EquatorialCode& code, Twist t) {
  const int n = code.punctures();
  if (t.pair < 0 || t.pair >= n) throw code_error("twist pair out of range");
  if (t.sign != 1 && t.sign != -1) throw code_error("twist sign must be +-1");

  EquatorialCode out = code;
  auto& seg = out.raw_segments();
  auto& up = out.raw_upper();
  auto& lo = out.raw_lower();

  const int k = t.pair;
  const int prev = (k + n - 1) % n;
  const int next = (k + 1) % n;
  const std::vector<int> strands = seg[k];
  const int m = static_cast<int>(strands.size());
  if (m == 0) return out;

  std::vector<int> a(m), b(m), d(m);
  for (int i = 0; i < m; ++i) {
    a[i] = out.new_crossing();
    b[i] = out.new_crossing();
    d[i] = out.new_crossing();
  }

  for (int i = 0; i < m; ++i) {
    const int c = strands[i];
    const int U = out.upper(c);
    const int L = out.lower(c);
    if (t.sign > 0) {
      up[U] = a[i];
      up[a[i]] = U;
      up[b[i]] = d[i];
      up[d[i]] = b[i];
      lo[a[i]] = b[i];
      lo[b[i]] = a[i];
      lo[d[i]] = L;
      lo[L] = d[i];
    } else {
      up[U] = d[i];
      up[d[i]] = U;
      up[b[i]] = a[i];
      up[a[i]] = b[i];
      lo[d[i]] = b[i];
      lo[b[i]] = d[i];
      lo[a[i]] = L;
      lo[L] = a[i];
    }
    up[c] = -1;
    lo[c] = -1;
  }

  seg[prev].insert(seg[prev].end(), a.begin(), a.end());
  seg[k].assign(b.rbegin(), b.rend());
  seg[next].insert(seg[next].begin(), d.begin(), d.end());

  out.reduce();
  return out;
}

// Leftmost letter acts first.
inline EquatorialCode apply_word(const EquatorialCode& code, const TwistWord& w) {
  EquatorialCode out = code;
  for (const Twist& t : w) out = apply_half_twist(out, t);
  return out;
}

// Bijection of punctures 0..n-1.
class PuncturePermutation {
public:
  explicit PuncturePermutation(int n = 6) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }

  static PuncturePermutation transposition(int n, int i, int j) {
    PuncturePermutation p(n);
    std::swap(p.img_[i], p.img_[j]);
    return p;
  }

  // this after other: (a.then(b))[x] = b[a[x]].
  PuncturePermutation then(const PuncturePermutation& later) const {
    PuncturePermutation p(size());
    for (int i = 0; i < size(); ++i) p.img_[i] = later.img_[img_[i]];
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const PuncturePermutation& a,
                         const PuncturePermutation& b) {
    return a.img_ == b.img_;
  }

private:
  std::vector<int> img_;
};

// Word permutation in the leftmost-first application order.
inline PuncturePermutation puncture_permutation(int n, const TwistWord& w) {
  PuncturePermutation p(n);
  for (const Twist& t : w) {
    p = p.then(PuncturePermutation::transposition(n, t.pair, (t.pair + 1) % n));
  }
  return p;
}

}  // namespace tangle3
