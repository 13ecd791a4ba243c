#pragma once

// Dehn coordinates (p_i, q_i, t_i) and the classifying six-tuple
// phi = (p_1, p_2, p_3, q_1', q_2', q_3') with q_i' = p_i t_i + q_i.
//
// p_i is half the minimal intersection count with dE_i'.  The twist
// coordinate about dE_i' is read off a probe curve: probe_i crosses dE_i'
// exactly twice and misses the other two disks, so
//     A_i(k) = i(delta, T_i^k(probe_i))
// is a convex piecewise-linear function of the full-twist power k with far
// slopes -4p_i and +4p_i.  The intercepts b_L, b_R of the two far lines give
// the doubled twist coordinate
//     Q_i' = (b_L - b_R) / 4,
// an isotopy invariant that grows by p_i per counterclockwise half twist
// about dE_i' (so by 2 p_i per full twist) and is blind to twisting
// supported away from E_i'.  The reported q_i' = floor(Q_i'/2) then obeys
// the exact full-twist law, and (q_i, t_i) split it by q_i' = p_i t_i + q_i
// with 0 <= q_i < p_i.  The arc counts (m_i, n_i) are synthesized from
// (p, q, t) through the two branch formulas
//   n - m = p      : q = m mod p,  t = (m - q) / p
//   -p <= n-m < p  : q = -m mod p, t = (-m - q) / p
// so that the round trip through qt_from_counts is the identity.

#include <array>
#include <optional>
#include <vector>

#include "tangle3/code.hpp"
#include "tangle3/freegroup.hpp"
#include "tangle3/intersect.hpp"
#include "tangle3/refs.hpp"
#include "tangle3/twist.hpp"

namespace tangle3 {

struct WindowCounts {
  std::array<int, 3> I{0, 0, 0};
};

inline WindowCounts window_counts(const EquatorialCode& code) {
  WindowCounts w;
  for (int i = 1; i <= 3; ++i)
    w.I[i - 1] = geometric_intersection(code, boundary_curve(i));
  return w;
}

struct PantsWeights {
  // x[i][j] = weight of the pants arc joining dE_i' and dE_j' (0-indexed);
  // diagonal entries are the returning arcs.
  std::array<std::array<int, 3>, 3> x{};

  int diag(int i) const { return x[i][i]; }
  int off(int i, int j) const { return x[i][j]; }
};

// Weights of the standard arcs in the outer pair of pants from the window
// counts.  Dominant case: some I_i >= I_j + I_k gives a positive diagonal;
// otherwise the triangle case applies with zero diagonal.
inline PantsWeights pants_weights(const WindowCounts& w) {
  for (int i = 0; i < 3; ++i)
    if (w.I[i] % 2) throw code_error("window counts must be even");
  PantsWeights out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    if (w.I[i] >= w.I[j] + w.I[k]) {
      out.x[i][i] = (w.I[i] - w.I[j] - w.I[k]) / 2;
      out.x[i][j] = out.x[j][i] = w.I[j];
      out.x[i][k] = out.x[k][i] = w.I[k];
      return out;
    }
  }
  // triangle case
  for (int u = 0; u < 3; ++u) {
    const int v = (u + 1) % 3, t = (u + 2) % 3;
    const int val = (w.I[u] + w.I[v] - w.I[t]) / 2;
    if (val < 0) throw code_error("window counts are not realizable");
    out.x[u][v] = out.x[v][u] = val;
  }
  return out;
}

// (q, t) from measured counts; exactly the two quoted branches.
struct BranchQT {
  int q = 0;
  int t = 0;
};

inline BranchQT qt_from_counts(int p, int m, int n) {
  if (p <= 0) throw code_error("qt_from_counts needs p > 0");
  auto mod = [&](int v) { return ((v % p) + p) % p; };
  const int d = n - m;
  if (d == p) {
    const int q = mod(m);
    return {q, (m - q) / p};
  }
  if (d >= -p && d < p) {
    const int q = mod(-m);
    return {q, (-m - q) / p};
  }
  throw internal_error("|n - m| exceeds p");
}

// Arc counts consistent with (p, q, t): branch 1 carries t >= 0, branch 2
// the negative twisting.
inline std::pair<int, int> counts_from_qt(int p, int q, int t) {
  if (t >= 0) return {q + p * t, q + p * t + p};
  return {-q - p * t, q - p * (t + 1)};
}

// Semi-disk counts recovered from (p, m, n): u+v = p, m = u + w, n = v + w.
struct SemiDiskCounts {
  int u_plus = 0, v_plus = 0, w_plus = 0;
  int u_minus = 0, v_minus = 0, w_minus = 0;
};

inline SemiDiskCounts semi_disk_counts(int p, int m, int n) {
  if ((p + m - n) % 2) throw internal_error("m - n parity mismatch");
  SemiDiskCounts s;
  s.u_plus = (p + m - n) / 2;
  s.v_plus = p - s.u_plus;
  s.w_plus = m - s.u_plus;
  s.u_minus = s.v_plus;
  s.v_minus = s.u_plus;
  s.w_minus = n - s.v_minus;
  if (s.u_plus < 0 || s.v_plus < 0 || s.w_plus < 0 || s.w_minus < 0)
    throw internal_error("negative semi-disk count");
  return s;
}

struct DehnCoord {
  std::array<int, 3> p{0, 0, 0};
  std::array<int, 3> q{0, 0, 0};
  std::array<int, 3> t{0, 0, 0};
  std::array<int, 3> m{0, 0, 0};
  std::array<int, 3> n{0, 0, 0};
  std::array<int, 3> half{0, 0, 0};  // parity of the doubled coordinate
  std::optional<int> parallel;       // 1..3 when isotopic to dE_i'

  long long qprime(int i) const {
    return static_cast<long long>(p[i]) * t[i] + q[i];
  }

  std::array<long long, 6> phi() const {
    std::array<long long, 6> v{};
    for (int i = 0; i < 3; ++i) {
      v[i] = p[i];
      v[3 + i] = parallel ? (*parallel == i + 1 ? 1 : 0) : qprime(i);
    }
    return v;
  }

  // The doubled coordinates separate the two half-twist phases that share a
  // floor; curve equality is decided on these.
  std::array<long long, 6> phi_doubled() const {
    auto v = phi();
    if (!parallel)
      for (int i = 0; i < 3; ++i) v[3 + i] = 2 * v[3 + i] + half[i];
    return v;
  }
};

// The probe for dE_i': crosses it twice, misses the other two disks.
inline EquatorialCode probe_curve(int i) {
  EquatorialCode c(6);
  auto& seg = c.raw_segments();
  auto& up = c.raw_upper();
  auto& lo = c.raw_lower();
  switch (i) {
    case 2:
      return run_curve(6, 1, 3);  // encloses {2,3,4}
    case 1: {
      // encloses punctures {1,2,5}
      const int a = c.new_crossing(), b = c.new_crossing();
      const int d = c.new_crossing(), e = c.new_crossing();
      seg[5] = {a};
      seg[1] = {b};
      seg[3] = {d};
      seg[4] = {e};
      up[a] = e;
      up[e] = a;
      up[b] = d;
      up[d] = b;
      lo[a] = b;
      lo[b] = a;
      lo[d] = e;
      lo[e] = d;
      return c;
    }
    case 3: {
      // encloses punctures {2,4,5}
      const int a = c.new_crossing(), b = c.new_crossing();
      const int d = c.new_crossing(), e = c.new_crossing();
      seg[2] = {a};
      seg[0] = {b};
      seg[1] = {d};
      seg[4] = {e};
      up[a] = d;
      up[d] = a;
      up[b] = e;
      up[e] = b;
      lo[b] = d;
      lo[d] = b;
      lo[a] = e;
      lo[e] = a;
      return c;
    }
    default:
      throw code_error("probe index must be 1..3");
  }
}

namespace detail {

// Doubled twist coordinate about dE_i' for a curve with p_i > 0.
inline long long doubled_twist_coord(const EquatorialCode& code, int i, int p) {
  const EquatorialCode probe = probe_curve(i);
  const TwistWord fwd = full_twist(i, 1);
  const TwistWord bwd = full_twist(i, -1);
  const int slope = 4 * p;

  auto eval_at = [&](int k) {
    return geometric_intersection(code, apply_word(probe, full_twist(i, k)));
  };

  // walk right until the far slope +4p appears, tracking the twisted probe
  // incrementally
  long long b_right = 0;
  {
    EquatorialCode pk = probe;
    int k = 0;
    int a_prev = geometric_intersection(code, pk);
    const int guard = code.crossings() + 8;
    while (true) {
      EquatorialCode nxt = apply_word(pk, fwd);
      const int a_next = geometric_intersection(code, nxt);
      if (a_next - a_prev == slope) {
        b_right = static_cast<long long>(a_next) - static_cast<long long>(slope) * (k + 1);
        break;
      }
      if (a_next - a_prev > slope) throw internal_error("twist profile is not convex");
      pk = std::move(nxt);
      a_prev = a_next;
      if (++k > guard) throw internal_error("twist probe walk diverged");
    }
  }
  long long b_left = 0;
  {
    EquatorialCode pk = probe;
    int k = 0;  // current probe position; decreases leftward
    int a_prev = geometric_intersection(code, pk);
    const int guard = code.crossings() + 8;
    int iter = 0;
    while (true) {
      EquatorialCode nxt = apply_word(pk, bwd);
      const int a_next = geometric_intersection(code, nxt);  // A(k-1)
      if (a_next - a_prev == slope) {
        b_left = static_cast<long long>(a_next) +
                 static_cast<long long>(slope) * (k - 1);
        break;
      }
      if (a_next - a_prev > slope) throw internal_error("twist profile is not convex");
      pk = std::move(nxt);
      a_prev = a_next;
      --k;
      if (++iter > guard) throw internal_error("twist probe walk diverged");
    }
  }
  (void)eval_at;
  const long long num = b_left - b_right;
  if (num % 4) throw internal_error("twist intercepts are not aligned");
  return num / 4;
}

}  // namespace detail

// Extracts the nine parameters of a reduced single essential curve.
inline DehnCoord extract_nine_params(const EquatorialCode& code) {
  if (!code.is_simple_closed_curve())
    throw code_error("extraction needs a single curve");
  DehnCoord out;
  const auto w = window_counts(code);
  for (int i = 0; i < 3; ++i) {
    if (w.I[i] % 2) throw internal_error("odd window count");
    out.p[i] = w.I[i] / 2;
  }

  if (out.p[0] == 0 && out.p[1] == 0 && out.p[2] == 0) {
    const auto pair = enclosed_pair(code);
    for (int i = 1; i <= 3; ++i) {
      const auto [a, b] = strand_punctures(i);
      if (pair == std::vector<int>{std::min(a, b), std::max(a, b)}) {
        out.parallel = i;
        return out;
      }
    }
    throw code_error("curve disjoint from dE but not parallel to any dE_i'");
  }

  for (int i = 0; i < 3; ++i) {
    if (out.p[i] == 0) continue;
    const long long doubled =
        detail::doubled_twist_coord(code, i + 1, out.p[i]);
    // floor(doubled / 2) with sign-safe rounding
    const long long qp = doubled >= 0 ? doubled / 2 : -((-doubled + 1) / 2);
    out.half[i] = static_cast<int>(((doubled % 2) + 2) % 2);
    const long long p = out.p[i];
    long long q = ((qp % p) + p) % p;
    out.q[i] = static_cast<int>(q);
    out.t[i] = static_cast<int>((qp - q) / p);
    const auto mn = counts_from_qt(out.p[i], out.q[i], out.t[i]);
    out.m[i] = mn.first;
    out.n[i] = mn.second;
  }
  return out;
}

inline std::array<long long, 6> phi(const EquatorialCode& code) {
  return extract_nine_params(code).phi();
}

inline bool curves_isotopic(const EquatorialCode& a, const EquatorialCode& b) {
  const auto ca = extract_nine_params(a);
  const auto cb = extract_nine_params(b);
  return ca.phi_doubled() == cb.phi_doubled() && ca.parallel == cb.parallel;
}

}  // namespace tangle3
