#pragma once

// Ground-truth disk-bounding oracle.
//
// The complement of the trivial tangle is a genus-3 handlebody with free
// fundamental group on the strand meridians x1, x2, x3.  With the basepoint
// at the upper pole and the nested strand pairing {1,6}, {2,5}, {3,4}, the
// loop around puncture k maps to x_k for k = 1,2,3 and to the inverse of
// the partner's meridian for k = 4,5,6: the two endpoints of a strand carry
// opposite meridians, and the product l_1 ... l_6 telescopes to 1, which
// makes the word of a lower-hemisphere passage independent of the side it
// is read from.
//
// A simple closed curve on the boundary of a handlebody bounds a disk in the
// handlebody iff it is nullhomotopic (Dehn's lemma / the loop theorem), and
// in a free group that reduces to free triviality of the word.

#include <string>
#include <vector>

#include "tangle3/code.hpp"
#include "tangle3/refs.hpp"
#include "tangle3/twist.hpp"

namespace tangle3 {

// Freely reduced word over x1, x2, x3; letters +-1, +-2, +-3.
class FreeWord {
public:
  FreeWord() = default;

  void push(int letter) {
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }

  void append(const FreeWord& other) {
    for (int l : other.letters_) push(l);
  }

  bool trivial() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const std::vector<int>& letters() const { return letters_; }

  // exponent sum of generator g (1..3)
  int exponent_sum(int g) const {
    int s = 0;
    for (int l : letters_) {
      if (l == g) ++s;
      if (l == -g) --s;
    }
    return s;
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (int l : letters_) {
      if (!out.empty()) out += ' ';
      out += 'x';
      out += static_cast<char>('0' + (l > 0 ? l : -l));
      if (l < 0) out += "^-1";
    }
    return out;
  }

private:
  std::vector<int> letters_;
};

// Meridian letter of 0-indexed puncture k under the nested pairing:
// punctures 0,1,2 carry x1,x2,x3 and punctures 3,4,5 their inverses.
inline int meridian_letter(int k) {
  return k <= 2 ? k + 1 : -(6 - k);
}

// Free-homotopy word of a single closed component.  Each lower-hemisphere
// chord from a crossing on segment a to one on segment b contributes the
// puncture loops a+1, ..., b read eastward; the global relation makes the
// east and west readings agree.
inline FreeWord curve_to_word(const EquatorialCode& code) {
  if (!code.is_simple_closed_curve())
    throw code_error("curve_to_word needs a single closed component");
  const int n = code.punctures();
  std::vector<int> seg_of(code.crossings(), -1);
  for (int k = 0; k < n; ++k)
    for (int c : code.segment(k)) seg_of[c] = k;

  FreeWord w;
  int start = 0;
  int cur = start;
  bool via_up = true;
  do {
    const int nxt = via_up ? code.upper(cur) : code.lower(cur);
    if (!via_up) {
      // passage under punctures seg_of(cur)+1 .. seg_of(nxt), eastward
      for (int k = (seg_of[cur] + 1) % n; k != (seg_of[nxt] + 1) % n;
           k = (k + 1) % n)
        w.push(meridian_letter(k));
    }
    cur = nxt;
    via_up = !via_up;
  } while (!(cur == start && via_up));
  return w;
}

// Essential on the 6-punctured sphere: a single reduced nonempty curve whose
// two sides each hold at least two punctures.
inline bool is_essential(const EquatorialCode& code) {
  if (code.empty() || !code.is_simple_closed_curve()) return false;
  const auto side = code.puncture_sides();
  int ones = 0;
  for (int s : side) ones += s;
  return ones >= 2 && static_cast<int>(side.size()) - ones >= 2;
}

// The punctures on the smaller side of a 2-or-4 separation (0-indexed).
inline std::vector<int> enclosed_pair(const EquatorialCode& code) {
  const auto side = code.puncture_sides();
  std::vector<int> zero, one;
  for (int k = 0; k < static_cast<int>(side.size()); ++k)
    (side[k] ? one : zero).push_back(k);
  return zero.size() <= one.size() ? zero : one;
}

enum class OracleVerdict { Bounds, DoesNotBound, Inessential };

// True iff the curve bounds an essential disk in the trivial-tangle
// complement: essential in the surface and nullhomotopic in the handlebody.
inline OracleVerdict bounds_disk_oracle_v(const EquatorialCode& code) {
  if (!is_essential(code)) return OracleVerdict::Inessential;
  return curve_to_word(code).trivial() ? OracleVerdict::Bounds
                                       : OracleVerdict::DoesNotBound;
}

inline bool bounds_disk_oracle(const EquatorialCode& code) {
  const auto v = bounds_disk_oracle_v(code);
  if (v == OracleVerdict::Inessential)
    throw code_error("oracle needs an essential curve");
  return v == OracleVerdict::Bounds;
}

// Tangle equivalence for words over sigma1..sigma3: T_F ~ T_G iff
// G^-1 F maps both dE_1' and dE_2' to disk-bounding curves.
inline bool tangles_isotopic_oracle(const TwistWord& wf, const TwistWord& wg) {
  const TwistWord u = concat(wf, inverse(wg));
  const auto img1 = apply_word(boundary_curve(1), u);
  if (bounds_disk_oracle_v(img1) != OracleVerdict::Bounds) return false;
  const auto img2 = apply_word(boundary_curve(2), u);
  return bounds_disk_oracle_v(img2) == OracleVerdict::Bounds;
}

}  // namespace tangle3
