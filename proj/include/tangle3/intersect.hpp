#pragma once

// Geometric intersection numbers.
//
// Two independent routes:
//   1. zone counts: i(X, R) for a reference curve R bounding a neighborhood
//      of a contiguous equator arc.  Closed form: minimise, over placements
//      of the two cut points, the number of chords with exactly one endpoint
//      inside the zone.
//   2. overlay: i(X, Y) for arbitrary reduced codes, by interleaving the two
//      codes along the equator and removing empty bigons until none remain.
// The property suite cross-checks the two on reference curves.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tangle3/code.hpp"

namespace tangle3 {

// ---------------------------------------------------------------------------
// Zone counts.

// Zone around the contiguous puncture run {first, ..., first+len-1} (mod n):
// the full segments strictly inside the run plus a cut tail of the incoming
// segment and a cut head of the outgoing one.
struct ZoneSpec {
  int first = 0;
  int len = 2;
};

namespace detail {

struct ZoneCut {
  int straddling = -1;
  std::vector<char> inside;  // per crossing id
};

// Minimal straddle count over the two cut positions.  Ties prefer the
// smaller zone, then the smaller tail cut, so the result is deterministic.
inline ZoneCut zone_min_cut(const EquatorialCode& x, ZoneSpec z) {
  const int n = x.punctures();
  if (z.len < 1 || z.len > n - 2) throw code_error("bad zone length");
  const int tail_seg = ((z.first - 1) % n + n) % n;
  const int head_seg = (z.first + z.len - 1) % n;

  const auto& tail = x.segment(tail_seg);
  const auto& head = x.segment(head_seg);
  const int nt = static_cast<int>(tail.size());
  const int nh = static_cast<int>(head.size());

  std::vector<char> base(x.crossings(), 0);
  for (int s = z.first % n; s != head_seg; s = (s + 1) % n)
    for (int c : x.segment(s)) base[c] = 1;

  ZoneCut best;
  int best_size = -1;
  for (int a = 0; a <= nt; ++a) {
    for (int b = 0; b <= nh; ++b) {
      std::vector<char> inside = base;
      for (int i = nt - a; i < nt; ++i) inside[tail[i]] = 1;  // near the run
      for (int i = 0; i < b; ++i) inside[head[i]] = 1;
      int cnt = 0;
      for (int c = 0; c < x.crossings(); ++c) {
        if (c < x.upper(c) && inside[c] != inside[x.upper(c)]) ++cnt;
        if (c < x.lower(c) && inside[c] != inside[x.lower(c)]) ++cnt;
      }
      const int size =
          static_cast<int>(std::count(inside.begin(), inside.end(), 1));
      if (best.straddling < 0 || cnt < best.straddling ||
          (cnt == best.straddling && size < best_size)) {
        best.straddling = cnt;
        best.inside = std::move(inside);
        best_size = size;
      }
    }
  }
  return best;
}

}  // namespace detail

// i(X, boundary of the zone) for reduced X.
inline int zone_intersection(const EquatorialCode& x, ZoneSpec z) {
  return detail::zone_min_cut(x, z).straddling;
}

// i(X, equator arc from puncture a eastward to puncture b): the arc owns its
// full segments, so reduced X admits no further slides.
inline int equator_arc_intersection(const EquatorialCode& x, int a, int b) {
  const int n = x.punctures();
  int total = 0;
  for (int s = a % n; s != b % n; s = (s + 1) % n)
    total += static_cast<int>(x.segment(s).size());
  return total;
}

// ---------------------------------------------------------------------------
// Overlay machine.

class OverlayIntersection {
public:
  OverlayIntersection(const EquatorialCode& x, const EquatorialCode& y) {
    code_[0] = x;
    code_[1] = y;
    const int n = x.punctures();
    if (y.punctures() != n) throw code_error("puncture count mismatch");
    seg_.resize(n);
    for (int k = 0; k < n; ++k) {
      for (int c : x.segment(k)) seg_[k].push_back({0, c});
      for (int c : y.segment(k)) seg_[k].push_back({1, c});
    }
  }

  int run() {
    build();
    while (remove_one_bigon()) {
      const int before = static_cast<int>(inter_.size());
      build();
      if (static_cast<int>(inter_.size()) != before - 2)
        throw internal_error("bigon removal did not drop exactly two");
    }
    return static_cast<int>(inter_.size());
  }

  // After run() == 0: the two codes merged into one multicurve, drawn with
  // the final (disjoint) port order.  X keeps its ids, Y ids shift by
  // X.crossings().
  EquatorialCode merged_disjoint() const {
    if (!inter_.empty())
      throw code_error("curves intersect; no disjoint drawing");
    const int off = code_[0].crossings();
    EquatorialCode out(code_[0].punctures());
    auto& seg = out.raw_segments();
    auto& up = out.raw_upper();
    auto& lo = out.raw_lower();
    up.resize(off + code_[1].crossings());
    lo.resize(off + code_[1].crossings());
    for (int k = 0; k < code_[0].punctures(); ++k)
      for (const Port& q : seg_[k])
        seg[k].push_back(q.owner == 0 ? q.id : q.id + off);
    for (int c = 0; c < code_[0].crossings(); ++c) {
      up[c] = code_[0].upper(c);
      lo[c] = code_[0].lower(c);
    }
    for (int c = 0; c < code_[1].crossings(); ++c) {
      up[c + off] = code_[1].upper(c) + off;
      lo[c + off] = code_[1].lower(c) + off;
    }
    out.check_valid();
    return out;
  }

private:
  struct Port {
    int owner;  // 0 = X, 1 = Y
    int id;
  };

  struct Inter {
    int hemi;               // 0 upper, 1 lower
    std::array<int, 2> xc;  // X chord endpoints (crossing ids)
    std::array<int, 2> yc;  // Y chord endpoints
  };

  struct WalkItem {
    bool is_port;
    int id;  // port crossing id, or intersection index
  };

  void build() {
    pos_[0].assign(code_[0].crossings(), -1);
    pos_[1].assign(code_[1].crossings(), -1);
    total_ = 0;
    for (const auto& s : seg_)
      for (const Port& q : s) pos_[q.owner][q.id] = total_++;

    inter_.clear();
    for (int hemi = 0; hemi < 2; ++hemi) {
      const auto xch = chords(0, hemi);
      const auto ych = chords(1, hemi);
      for (const auto& xc : xch)
        for (const auto& yc : ych)
          if (interleaved(pos_[0][xc[0]], pos_[0][xc[1]], pos_[1][yc[0]],
                          pos_[1][yc[1]]))
            inter_.push_back({hemi, xc, yc});
    }
  }

  std::vector<std::array<int, 2>> chords(int owner, int hemi) const {
    const auto& c = code_[owner];
    std::vector<std::array<int, 2>> out;
    for (int i = 0; i < c.crossings(); ++i) {
      const int j = hemi == 0 ? c.upper(i) : c.lower(i);
      if (i < j) out.push_back({i, j});
    }
    return out;
  }

  bool ccw_between(int from, int to, int p) const {
    auto norm = [&](int v) { return ((v - from) % total_ + total_) % total_; };
    return norm(p) > 0 && norm(p) < norm(to);
  }

  bool interleaved(int a, int b, int c, int d) const {
    return ccw_between(a, b, c) != ccw_between(a, b, d);
  }

  // Orders intersection indices along the chord (from -> to) of `owner`.
  // The crossing chords belong to the other curve, are pairwise disjoint,
  // and each separates `from` from `to`, so nesting orders them totally.
  void sort_along(int owner, int from, int to, std::vector<int>& order) const {
    const int other = 1 - owner;
    const int pf = pos_[owner][from];
    const int pt = pos_[owner][to];
    auto near_far = [&](int idx) {
      const auto ids = other == 0 ? inter_[idx].xc : inter_[idx].yc;
      int c = pos_[other][ids[0]], d = pos_[other][ids[1]];
      if (!ccw_between(pf, pt, c)) std::swap(c, d);
      return std::make_pair(c, d);
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      if (i == j) return false;
      auto [ci, di] = near_far(i);
      auto [cj, dj] = near_far(j);
      (void)dj;
      // i first along from->to iff chord j lies beyond chord i, i.e. j's
      // near endpoint falls in the arc (ci -> di) that contains `to`.
      return ccw_between(ci, di, cj);
    });
  }

  // Walk of the component of `owner` containing crossing `start`: ports and
  // intersections in traversal order.
  std::vector<WalkItem> walk_component(int owner, int start) const {
    const auto& c = code_[owner];
    std::map<std::pair<std::pair<int, int>, int>, std::vector<int>> on_chord;
    for (size_t i = 0; i < inter_.size(); ++i) {
      const auto ids = owner == 0 ? inter_[i].xc : inter_[i].yc;
      on_chord[{std::minmax(ids[0], ids[1]), inter_[i].hemi}].push_back(
          static_cast<int>(i));
    }
    std::vector<WalkItem> items;
    int cur = start;
    int hemi = 0;
    do {
      items.push_back({true, cur});
      const int nxt = hemi == 0 ? c.upper(cur) : c.lower(cur);
      auto it = on_chord.find({std::minmax(cur, nxt), hemi});
      if (it != on_chord.end()) {
        auto order = it->second;
        sort_along(owner, cur, nxt, order);
        for (int v : order) items.push_back({false, v});
      }
      cur = nxt;
      hemi ^= 1;
    } while (!(cur == start && hemi == 0));
    return items;
  }

  // Ports strictly between intersections v and w along one walk; up to two
  // candidate arcs (one per direction).
  std::vector<std::vector<int>> arcs_between(const std::vector<WalkItem>& items,
                                             int v, int w) const {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(items.size());
    int at = -1;
    for (int i = 0; i < n; ++i)
      if (!items[i].is_port && items[i].id == v) at = i;
    if (at < 0) return out;
    for (int dir : {+1, -1}) {
      std::vector<int> ports;
      for (int s = 1; s < n; ++s) {
        const auto& it = items[((at + dir * s) % n + n) % n];
        if (it.is_port) {
          ports.push_back(it.id);
          continue;
        }
        if (it.id == w) out.push_back(std::move(ports));
        break;
      }
    }
    return out;
  }

  bool remove_one_bigon() {
    if (inter_.empty()) return false;
    for (size_t v = 0; v < inter_.size(); ++v) {
      const auto xitems = walk_component(0, inter_[v].xc[0]);
      const auto yitems = walk_component(1, inter_[v].yc[0]);
      for (size_t w = 0; w < inter_.size(); ++w) {
        if (v == w) continue;
        const auto xarcs =
            arcs_between(xitems, static_cast<int>(v), static_cast<int>(w));
        if (xarcs.empty()) continue;
        const auto yarcs =
            arcs_between(yitems, static_cast<int>(v), static_cast<int>(w));
        for (const auto& xarc : xarcs) {
          for (const auto& yarc : yarcs) {
            if (xarc.size() != yarc.size()) continue;
            if (!punctures_one_sided(xarc, yarc)) continue;
            reorder_ports(xarc, yarc);
            return true;
          }
        }
      }
    }
    return false;
  }

  // True when the loop through the two arcs leaves every puncture on one
  // side, i.e. the other side is a puncture-free bigon.
  bool punctures_one_sided(const std::vector<int>& xarc,
                           const std::vector<int>& yarc) const {
    std::vector<char> in_x(code_[0].crossings(), 0), in_y(code_[1].crossings(), 0);
    for (int p : xarc) in_x[p] = 1;
    for (int p : yarc) in_y[p] = 1;
    int par = 0;
    int side0 = -1;
    for (const auto& s : seg_) {
      if (side0 < 0)
        side0 = par;  // puncture 0
      else if (par != side0)
        return false;  // this puncture differs from puncture 0
      for (const Port& q : s)
        if ((q.owner == 0 && in_x[q.id]) || (q.owner == 1 && in_y[q.id]))
          par ^= 1;
    }
    return true;
  }

  // Slides each X port of the bigon strip across its partnered Y port.
  // The strip's equator pieces join the i-th port along each arc (both arcs
  // read from the shared corner), so partners are paired by index.
  void reorder_ports(const std::vector<int>& xarc, const std::vector<int>& yarc) {
    for (size_t i = 0; i < xarc.size(); ++i) {
      const int p = xarc[i];
      const int q = yarc[i];
      bool moved = false;
      for (auto& s : seg_) {
        for (size_t j = 0; j < s.size(); ++j) {
          if (s[j].owner != 0 || s[j].id != p) continue;
          if (j + 1 < s.size() && s[j + 1].owner == 1 && s[j + 1].id == q) {
            std::swap(s[j], s[j + 1]);
          } else if (j > 0 && s[j - 1].owner == 1 && s[j - 1].id == q) {
            std::swap(s[j], s[j - 1]);
          } else {
            throw internal_error("bigon strip ports are not adjacent");
          }
          moved = true;
          break;
        }
        if (moved) break;
      }
      if (!moved) throw internal_error("bigon port missing from segments");
    }
  }

  std::array<EquatorialCode, 2> code_;
  std::vector<std::vector<Port>> seg_;
  std::array<std::vector<int>, 2> pos_;
  int total_ = 0;
  std::vector<Inter> inter_;
};

// Minimal geometric intersection number of two reduced codes.
inline int geometric_intersection(const EquatorialCode& x,
                                  const EquatorialCode& y) {
  return OverlayIntersection(x, y).run();
}

}  // namespace tangle3
