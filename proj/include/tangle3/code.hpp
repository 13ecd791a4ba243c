#pragma once

// Exact combinatorial curves on the n-punctured sphere (n = 6 for the tangle
// engine, n = 4 after filling a puncture pair).
//
// Model: the n punctures sit on a fixed equator circle, labeled 0..n-1 in
// cyclic order (user-facing labels are 1..n).  Segment k is the open equator
// arc between puncture k and puncture k+1 (mod n).  Both open hemispheres are
// puncture-free disks.  A multicurve in general position is recorded by
//   - the ordered list of its equator crossings along each segment, and
//   - two perfect matchings of the crossings: chords in the upper hemisphere
//     and chords in the lower hemisphere.
// Each crossing carries exactly one upper chord end and one lower chord end.
// Both matchings are planar with respect to the cyclic order of crossings
// (the lower hemisphere sees the reversed cyclic order; the planarity
// predicate is the same either way).
//
// Reduced form: no chord joins two crossings on the same segment.  Such a
// chord always cuts off a puncture-free bigon with the equator, so reduced
// codes are exactly the curves in minimal position with respect to the
// equator.  Closed components that become chordless are trivial circles and
// are discarded (counted by reduce()).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangle3 {

class code_error : public std::runtime_error {
public:
  explicit code_error(const std::string& what) : std::runtime_error(what) {}
};

// Signals a broken engine invariant rather than bad user input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

class EquatorialCode {
public:
  EquatorialCode() : EquatorialCode(6) {}
  explicit EquatorialCode(int punctures) : seg_(punctures) {
    if (punctures < 3) throw code_error("need at least 3 punctures");
  }

  int punctures() const { return static_cast<int>(seg_.size()); }
  int crossings() const { return static_cast<int>(up_.size()); }
  bool empty() const { return up_.empty(); }

  const std::vector<int>& segment(int k) const { return seg_.at(k); }
  int upper(int c) const { return up_[c]; }
  int lower(int c) const { return lo_[c]; }

  // Builds a code from explicit data; ids must be 0..m-1.
  static EquatorialCode from_parts(int punctures,
                                   std::vector<std::vector<int>> seg,
                                   std::vector<int> up, std::vector<int> lo) {
    EquatorialCode c(punctures);
    c.seg_ = std::move(seg);
    c.up_ = std::move(up);
    c.lo_ = std::move(lo);
    c.check_valid();
    return c;
  }

  // Structural validation: dense ids, involutive pairings, planarity.
  void check_valid() const {
    const int m = crossings();
    if (static_cast<int>(lo_.size()) != m)
      throw code_error("pairing size mismatch");
    std::vector<int> seen(m, 0);
    for (const auto& s : seg_)
      for (int c : s) {
        if (c < 0 || c >= m) throw code_error("crossing id out of range");
        if (seen[c]++) throw code_error("crossing id repeated");
      }
    for (int c = 0; c < m; ++c)
      if (!seen[c]) throw code_error("crossing id missing from segments");
    check_involution(up_, "upper");
    check_involution(lo_, "lower");
    check_planar(up_, "upper");
    check_planar(lo_, "lower");
  }

  // Removes all equator bigons and trivial circles.  Returns the number of
  // trivial components discarded.  The result is independent of removal
  // order (verified by the property suite).
  int reduce() {
    int dropped = 0;
    bool again = true;
    while (again) {
      again = false;
      for (auto& s : seg_) {
        for (size_t i = 0; i + 1 < s.size();) {
          const int c1 = s[i], c2 = s[i + 1];
          const bool in_up = up_[c1] == c2;
          const bool in_lo = lo_[c1] == c2;
          if (!in_up && !in_lo) {
            ++i;
            continue;
          }
          if (in_up && in_lo) {
            // Chordless circle crossing the equator twice on one segment.
            s.erase(s.begin() + i, s.begin() + i + 2);
            mark_dead(c1);
            mark_dead(c2);
            ++dropped;
          } else if (in_up) {
            const int a = lo_[c1], b = lo_[c2];
            s.erase(s.begin() + i, s.begin() + i + 2);
            lo_[a] = b;
            lo_[b] = a;
            mark_dead(c1);
            mark_dead(c2);
          } else {
            const int a = up_[c1], b = up_[c2];
            s.erase(s.begin() + i, s.begin() + i + 2);
            up_[a] = b;
            up_[b] = a;
            mark_dead(c1);
            mark_dead(c2);
          }
          again = true;
          if (i > 0) --i;  // a new adjacency may appear one slot back
        }
      }
    }
    compact();
    return dropped;
  }

  bool is_reduced() const {
    for (const auto& s : seg_)
      for (size_t i = 0; i + 1 < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
          if (up_[s[i]] == s[j] || lo_[s[i]] == s[j]) return false;
    return true;
  }

  // Connected components, each as the cyclic list of crossings visited
  // (alternating upper and lower chords).
  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> done(crossings(), 0);
    for (int c0 = 0; c0 < crossings(); ++c0) {
      if (done[c0]) continue;
      std::vector<int> comp;
      int c = c0;
      bool via_up = true;
      do {
        comp.push_back(c);
        done[c] = 1;
        c = via_up ? up_[c] : lo_[c];
        via_up = !via_up;
      } while (c != c0 || !via_up);
      out.push_back(std::move(comp));
    }
    return out;
  }

  int component_count() const { return static_cast<int>(components().size()); }
  bool is_simple_closed_curve() const { return component_count() == 1; }

  // The separation of punctures induced by the multicurve: side[k] is 0 or 1,
  // flipping across every segment with an odd crossing count.
  std::vector<int> puncture_sides() const {
    const int n = punctures();
    std::vector<int> side(n, 0);
    for (int k = 0; k + 1 < n; ++k)
      side[k + 1] = side[k] ^ (static_cast<int>(seg_[k].size()) & 1);
    if ((side[n - 1] ^ (static_cast<int>(seg_[n - 1].size()) & 1)) != side[0])
      throw internal_error("odd total crossing parity");
    return side;
  }

  // Rotates puncture labels by r: old puncture k becomes k+r (mod n).
  EquatorialCode rotated(int r) const {
    const int n = punctures();
    r = ((r % n) + n) % n;
    EquatorialCode out(n);
    out.up_ = up_;
    out.lo_ = lo_;
    for (int k = 0; k < n; ++k) out.seg_[(k + r) % n] = seg_[k];
    return out;
  }

  // Reflects through the equator plane: swaps the two hemispheres and
  // reverses the orientation of the sphere.
  EquatorialCode mirrored() const {
    EquatorialCode out = *this;
    std::swap(out.up_, out.lo_);
    return out;
  }

  // Canonical relabeling: crossings renumbered in segment-then-position
  // order.  Isotopic reduced codes produce identical canonical forms.
  EquatorialCode canonicalized() const {
    std::vector<int> newid(crossings(), -1);
    int next = 0;
    for (const auto& s : seg_)
      for (int c : s) newid[c] = next++;
    EquatorialCode out(punctures());
    out.up_.resize(crossings());
    out.lo_.resize(crossings());
    out.seg_.assign(punctures(), {});
    for (int k = 0; k < punctures(); ++k) {
      out.seg_[k].reserve(seg_[k].size());
      for (int c : seg_[k]) out.seg_[k].push_back(newid[c]);
    }
    for (int c = 0; c < crossings(); ++c) {
      out.up_[newid[c]] = newid[up_[c]];
      out.lo_[newid[c]] = newid[lo_[c]];
    }
    return out;
  }

  // Canonical byte string; equal for equal reduced codes up to relabeling.
  std::string canonical_bytes() const {
    const EquatorialCode c = canonicalized();
    std::string out = "eqcode/1;n=" + std::to_string(c.punctures()) + ";s=";
    for (int k = 0; k < c.punctures(); ++k) {
      if (k) out += '|';
      for (size_t i = 0; i < c.seg_[k].size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.seg_[k][i]);
      }
    }
    out += ";u=";
    for (int i = 0; i < c.crossings(); ++i) {
      if (i) out += ',';
      out += std::to_string(c.up_[i]);
    }
    out += ";l=";
    for (int i = 0; i < c.crossings(); ++i) {
      if (i) out += ',';
      out += std::to_string(c.lo_[i]);
    }
    return out;
  }

  friend bool operator==(const EquatorialCode& a, const EquatorialCode& b) {
    return a.canonical_bytes() == b.canonical_bytes();
  }

  // Mutation hooks for the twist and surgery layers.  Callers are expected
  // to leave the code structurally valid.
  std::vector<std::vector<int>>& raw_segments() { return seg_; }
  std::vector<int>& raw_upper() { return up_; }
  std::vector<int>& raw_lower() { return lo_; }

  // Appends a fresh crossing id (unplaced, unpaired).
  int new_crossing() {
    up_.push_back(-1);
    lo_.push_back(-1);
    return static_cast<int>(up_.size()) - 1;
  }

  // Drops dead ids (pairing slots set to -1) and renumbers densely.
  void compact() {
    std::vector<int> newid(up_.size(), -1);
    int next = 0;
    for (size_t c = 0; c < up_.size(); ++c)
      if (up_[c] >= 0 || lo_[c] >= 0) newid[c] = next++;
    for (auto& s : seg_) {
      size_t w = 0;
      for (int c : s)
        if (newid[c] >= 0) s[w++] = newid[c];
      s.resize(w);
    }
    std::vector<int> nup(next), nlo(next);
    for (size_t c = 0; c < up_.size(); ++c) {
      if (newid[c] < 0) continue;
      nup[newid[c]] = up_[c] >= 0 ? newid[up_[c]] : -1;
      nlo[newid[c]] = lo_[c] >= 0 ? newid[lo_[c]] : -1;
    }
    up_ = std::move(nup);
    lo_ = std::move(nlo);
  }

  // Linear order of all crossings around the equator, cut at puncture 0.
  std::vector<int> circle_order() const {
    std::vector<int> order;
    order.reserve(crossings());
    for (const auto& s : seg_) order.insert(order.end(), s.begin(), s.end());
    return order;
  }

private:
  void mark_dead(int c) {
    up_[c] = -1;
    lo_[c] = -1;
  }

  void check_involution(const std::vector<int>& p, const char* side) const {
    for (int c = 0; c < crossings(); ++c) {
      if (p[c] < 0 || p[c] >= crossings() || p[c] == c || p[p[c]] != c)
        throw code_error(std::string(side) + " pairing is not a matching");
    }
  }

  void check_planar(const std::vector<int>& p, const char* side) const {
    std::vector<int> pos(crossings());
    const auto order = circle_order();
    for (int i = 0; i < crossings(); ++i) pos[order[i]] = i;
    std::vector<int> stack;
    for (int c : order) {
      if (pos[p[c]] > pos[c]) {
        stack.push_back(c);
      } else {
        if (stack.empty() || stack.back() != p[c])
          throw code_error(std::string(side) + " pairing is not planar");
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<int>> seg_;
  std::vector<int> up_, lo_;
};

}  // namespace tangle3
