#pragma once

// Structure of the annihilator a0 of an extremal vector, matched against
//   corr1 : sp(1) + (so(2) + R + gl(n-2,H)) |x h_+          (curvature)
//   corr2 : so(2) + (R + gl(n-2,H) + sp(1)_right) |x h_+    (torsion)

#include "aqsym/hmod/g0.hpp"
#include "aqsym/hmod/module.hpp"

#include <string>
#include <vector>

namespace aqsym {

enum class Corollary { Curvature, Torsion };

struct StructuralMatch {
  bool ok = true;
  std::string failure;  // first failing component
  std::size_t dim = 0, dim_theta0 = 0, dim_hplus = 0;
  std::vector<Vec> so2;  // the so(2) piece

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

/// e_left = i_{1,1}, e_right = -i_{n,n}; these generate the two sp(1) blocks
/// of sl(n,H) commuting with the middle block.
inline Vec e_left(const GradedSlh& g) { return g.q_rs(1, 1, 1); }
inline Vec e_right(const GradedSlh& g) { return g.q_rs(g.n, g.n, 1, Rat(-1)); }

inline StructuralMatch structural_match(const GradedSlh& g, const std::vector<Vec>& a0, Corollary target) {
  const std::size_t n = g.n, D = g.alg.dim();
  const ParabolicH p = build_parabolic_h(g);
  StructuralMatch r;
  r.dim = a0.size();
  Echelon e = span_of(a0, D);
  r.require(e.rank() == a0.size(), "basis is independent");
  r.require(is_subalgebra(g.alg, a0), "a0 is a subalgebra");
  r.require(r.dim == 4 * n * n - 8 * n + 9, "dim a0 = 4n^2 - 8n + 9");
  // Graded with respect to Z': [Z', a0] lies in a0.
  std::vector<Vec> zs;
  for (const auto& x : a0) zs.push_back(g.alg.bracket(p.zprime, x));
  r.require(contains_all(e, zs), "a0 is Z'-graded");
  r.require(contains_all(e, p.hplus), "h_+ in a0");
  r.dim_hplus = p.hplus.size();
  r.require(r.dim_hplus == 8 * n - 12 || (n == 2 && r.dim_hplus == 4), "dim h_+ = 8n - 12");
  r.require(intersect(a0, p.tilde_minus, D).empty(), "a0 meets (g~_0)_- trivially");
  std::vector<Vec> theta0 = p.h0;
  for (int q = 1; q < 4; ++q) theta0.push_back(Vec::unit(g.sp1(q)));
  theta0.push_back(Vec::unit(g.z()));
  r.dim_theta0 = intersect(a0, theta0, D).size();
  r.require(r.dim_theta0 == 5 + 4 * (n - 2) * (n - 2), "dim of the Z'-degree 0 part = 5 + 4(n-2)^2");
  r.require(contains_all(e, p.sl_middle), "sl(n-2,H) in a0");
  std::vector<Vec> sp1;
  for (int q = 1; q < 4; ++q) sp1.push_back(Vec::unit(g.sp1(q)));
  if (target == Corollary::Curvature) {
    r.require(contains_all(e, sp1), "sp(1) in a0");
    std::vector<Vec> pair = p.sp1_left;
    pair.insert(pair.end(), p.sp1_right.begin(), p.sp1_right.end());
    r.so2 = intersect(a0, pair, D);
    Echelon gen = span_of({Rat(3) * e_left(g) - e_right(g)}, D);
    r.require(r.so2.size() == 1 && contains_all(gen, r.so2), "so(2) spanned by 3 e_left - e_right");
  } else {
    r.require(contains_all(e, p.sp1_right), "sp(1)_right in a0");
    std::vector<Vec> pair = sp1;
    pair.insert(pair.end(), p.sp1_left.begin(), p.sp1_left.end());
    r.so2 = intersect(a0, pair, D);
    r.require(r.so2.size() == 1, "so(2) inside sp(1) + sp(1)_left");
  }
  return r;
}

/// Whether each x acts on the subspace spanned by `basis` (rows of module
/// vectors) as a multiple of a complex structure: rho(x)^2 = -c Id with c > 0.
inline bool acts_as_complex_structure(const ModuleRep& m, const std::vector<SparseVec>& basis, const Vec& x) {
  Echelon e = span_of(basis, m.dim());
  e.reduce_fully();
  std::optional<Rat> c;
  for (const auto& v : e.rows()) {
    SparseVec y = m.apply(x, m.apply(x, v));
    if (v.empty()) continue;
    const Index piv = v.entries.front().first;
    Rat ratio = -y.at(piv) / v.entries.front().second;
    if (!(y == Rat(-ratio) * v) || ratio <= 0) return false;
    if (c && *c != ratio) return false;
    c = ratio;
  }
  return c.has_value();
}

}  // namespace aqsym
