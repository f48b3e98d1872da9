#pragma once

// The g_0 = sp(1) + RZ + sl(n,H) action on g_{-1} = H^n and on g_0 itself, a
// split torus acting diagonally on every monomial basis used here, and a
// small Lie generating set.

#include "aqsym/lie/sl_h.hpp"

#include <vector>

namespace aqsym {

/// ad(x) restricted to a block [lo, hi) of the algebra, for x in g_0.
inline SparseMat restricted_ad(const GradedSlh& g, const Vec& x, Index lo, Index hi) {
  SparseMat m(hi - lo, hi - lo);
  for (Index b = lo; b < hi; ++b) {
    Vec img = g.alg.bracket(x, Vec::unit(b));
    for (const auto& [a, v] : img.entries) {
      if (a < lo || a >= hi) throw std::logic_error("restricted_ad: block is not invariant");
      m.cols[b - lo].entries.emplace_back(a - lo, v);
    }
  }
  return m;
}

inline SparseMat action_on_gm1(const GradedSlh& g, const Vec& x) { return restricted_ad(g, x, 0, g.g0_begin()); }
inline SparseMat action_on_g0(const GradedSlh& g, const Vec& x) {
  return restricted_ad(g, x, g.g0_begin(), g.g1_begin());
}

/// Block-diagonal real matrix of right multiplication by q on H^n.
inline SparseMat right_mult_hn(std::size_t n, const Quat& q) {
  Mat<Rat> r = right_mult(q);
  SparseMat m(4 * n, 4 * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t a = 0; a < 4; ++a)
        if (!is_zero(r(a, b))) m.cols[4 * s + b].entries.emplace_back(static_cast<Index>(4 * s + a), r(a, b));
  return m;
}

/// Z and the real diagonal differences 1_{r,r} - 1_{r+1,r+1}.
inline std::vector<Vec> split_torus(const GradedSlh& g) {
  std::vector<Vec> t{Vec::unit(g.z())};
  for (std::size_t r = 1; r < g.n; ++r) t.push_back(g.q_rs(r, r, 0) - g.q_rs(r + 1, r + 1, 0));
  return t;
}

/// Z, two sp(1) generators and the quaternionic entries next to the diagonal.
inline std::vector<Vec> g0_generators(const GradedSlh& g) {
  std::vector<Vec> gens{Vec::unit(g.z()), Vec::unit(g.sp1(1)), Vec::unit(g.sp1(2))};
  for (std::size_t r = 1; r < g.n; ++r)
    for (int q = 0; q < 4; ++q) {
      gens.push_back(g.q_rs(r, r + 1, q));
      gens.push_back(g.q_rs(r + 1, r, q));
    }
  return gens;
}

/// Labels of the g_{-1} basis: 1_s, i_s, j_s, k_s.
inline std::vector<std::string> gm1_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t s = 1; s <= n; ++s)
    for (int q = 0; q < 4; ++q) v.push_back(std::string(unit_name(q)) + "_" + std::to_string(s));
  return v;
}

}  // namespace aqsym
