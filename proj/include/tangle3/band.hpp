#pragma once

// Band sums of disjoint simple closed curves.
//
// The band runs in one hemisphere as a corridor hugging the equator between
// a crossing of each curve.  The corridor is admissible when no other
// crossing lies between the two attachment crossings in the cyclic order
// (punctures in between are fine: the corridor passes beside them).  The
// surgery cuts the two hemisphere chords at the attachment crossings and
// reconnects them along the corridor.

#include <optional>
#include <utility>

#include "tangle3/code.hpp"
#include "tangle3/freegroup.hpp"
#include "tangle3/intersect.hpp"

namespace tangle3 {

struct BandSpec {
  int hemi = 0;    // 0 upper, 1 lower
  int x_site = 0;  // crossing id within the first curve
  int y_site = 0;  // crossing id within the second curve
};

namespace detail {

// All admissible band sites for the given disjoint drawing.
inline std::vector<BandSpec> band_sites(const EquatorialCode& merged,
                                        int x_count) {
  std::vector<BandSpec> out;
  const auto order = merged.circle_order();
  const int m = static_cast<int>(order.size());
  for (int i = 0; i < m; ++i) {
    const int a = order[i];
    const int b = order[(i + 1) % m];
    const bool a_is_x = a < x_count;
    const bool b_is_x = b < x_count;
    if (a_is_x == b_is_x) continue;
    const int xs = a_is_x ? a : b;
    const int ys = a_is_x ? b - x_count : a - x_count;
    out.push_back({0, xs, ys});
    out.push_back({1, xs, ys});
  }
  return out;
}

}  // namespace detail

// gamma1 +_R gamma2 along the given band; nullopt spec picks the first
// admissible site.
inline EquatorialCode band_sum(const EquatorialCode& x, const EquatorialCode& y,
                               std::optional<BandSpec> spec = std::nullopt) {
  if (!x.is_simple_closed_curve() || !y.is_simple_closed_curve())
    throw code_error("band sum needs two single curves");

  OverlayIntersection ov(x, y);
  if (ov.run() != 0) throw code_error("band sum inputs intersect");
  EquatorialCode merged = ov.merged_disjoint();
  const int off = x.crossings();

  {
    const auto pa = enclosed_pair(x);
    const auto pb = enclosed_pair(y);
    if (pa.size() != 2 || pb.size() != 2)
      throw code_error("band sum inputs must enclose puncture pairs");
    for (int v : pa)
      for (int w : pb)
        if (v == w) throw code_error("band sum inputs are parallel or nested");
  }

  const auto sites = detail::band_sites(merged, off);
  if (sites.empty()) throw internal_error("no admissible band site");
  BandSpec s = spec.value_or(sites.front());
  {
    bool ok = false;
    for (const auto& cand : sites)
      ok = ok || (cand.hemi == s.hemi && cand.x_site == s.x_site &&
                  cand.y_site == s.y_site);
    if (!ok) throw code_error("band site is not admissible");
  }

  auto& up = merged.raw_upper();
  auto& lo = merged.raw_lower();
  auto& pairing = s.hemi == 0 ? up : lo;
  const int pa = s.x_site;
  const int pb = s.y_site + off;
  const int a2 = pairing[pa];
  const int b2 = pairing[pb];
  pairing[pa] = pb;
  pairing[pb] = pa;
  pairing[a2] = b2;
  pairing[b2] = a2;

  merged.check_valid();
  merged.reduce();
  return merged;
}

}  // namespace tangle3
