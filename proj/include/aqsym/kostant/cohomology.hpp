#pragma once

// Cochains Alt^k(g_{-1})* (x) g for the graded sl(n+1,H), the
// Chevalley-Eilenberg differential of the g_{-1}-action, and H^2 split by
// homogeneity with the induced g_0-action.

#include "aqsym/hmod/g0.hpp"
#include "aqsym/hmod/module.hpp"
#include "aqsym/hmod/tensor_space.hpp"

#include <string>
#include <vector>

namespace aqsym {

/// C^k = Alt^k(g_{-1})* (x) g with basis (sorted k-subset S, basis index c).
struct CochainSpace {
  std::size_t k = 0;
  FormSpace space;
  const GradedSlh* g = nullptr;

  CochainSpace(const GradedSlh& alg, std::size_t degree)
      : k(degree), space(FormKind::Alt, degree, alg.dim_gm1(), alg.alg.dim()), g(&alg) {}

  [[nodiscard]] std::size_t dim() const { return space.dim(); }
  /// Z-eigenvalue of a basis cochain: k plus the degree of its value.
  [[nodiscard]] int homogeneity(Index i) const {
    return static_cast<int>(k) + g->grading.degree[space.value_of(i)];
  }
  [[nodiscard]] std::vector<Index> block(int h) const {
    std::vector<Index> out;
    for (Index i = 0; i < dim(); ++i)
      if (homogeneity(i) == h) out.push_back(i);
    return out;
  }
};

/// d phi(x_0..x_k) = sum_i (-1)^i [x_i, phi(.. x_i omitted ..)] on one basis cochain.
inline SparseVec ce_apply(const CochainSpace& from, const CochainSpace& to, Index i) {
  const GradedSlh& g = *from.g;
  const auto& s = from.space.tuple(from.space.tuple_of(i));
  const Index c = static_cast<Index>(from.space.value_of(i));
  std::vector<std::pair<Index, Rat>> out;
  for (std::size_t t = 0; t < g.dim_gm1(); ++t) {
    FormSpace::Tuple u{};
    std::size_t pos = 0;
    bool clash = false;
    for (std::size_t a = 0; a < from.k; ++a) {
      if (s[a] == t) clash = true;
      if (s[a] < t) ++pos;
    }
    if (clash) continue;
    for (std::size_t a = 0, b = 0; a <= from.k; ++a) u[a] = (a == pos) ? t : s[b++];
    long r = to.space.rank_sorted(u);
    const Vec& br = g.alg.structure(static_cast<Index>(t), c);
    const Rat sign = (pos % 2 == 0) ? Rat(1) : Rat(-1);
    for (const auto& [e, v] : br.entries)
      out.emplace_back(to.space.index(static_cast<std::size_t>(r), e), sign * v);
  }
  return SparseVec(std::move(out));
}

/// The differential C^k -> C^{k+1} as a column-stored matrix.
inline SparseMat ce_differential(const GradedSlh& g, std::size_t k) {
  CochainSpace from(g, k), to(g, k + 1);
  SparseMat d(to.dim(), from.dim());
  for (Index i = 0; i < from.dim(); ++i) d.cols[i] = ce_apply(from, to, i);
  return d;
}

/// Action of x in g_0 on a cochain.
inline SparseVec cochain_act(const CochainSpace& cs, const Vec& x, const SparseVec& phi) {
  const GradedSlh& g = *cs.g;
  return cs.space.act(action_on_gm1(g, x), restricted_ad(g, x, 0, static_cast<Index>(g.alg.dim())), phi);
}

/// One homogeneous summand of H^2(g_{-1}, g).
struct HarmonicSummand {
  int homogeneity = 0;
  std::size_t cocycle_dim = 0, coboundary_dim = 0;
  std::vector<SparseVec> representatives;  // cocycles in C^2 coordinates
  ModuleRep rep;                           // induced g_0-action on the quotient

  [[nodiscard]] std::size_t dim() const { return representatives.size(); }
};

struct H2Options {
  /// Optional relabelling of C^2 unknowns, used to check basis independence.
  std::vector<Index> permutation;
};

/// H^2 in homogeneity h: cocycles of Alt^2 (x) g_{h-2} modulo the image of
/// Alt^1 (x) g_{h-1} (the differential preserves homogeneity), with
/// representatives spanning an exact complement.
inline HarmonicSummand h2_summand(const GradedSlh& g, int h, const H2Options& opt = {}) {
  CochainSpace c1(g, 1), c2(g, 2), c3(g, 3);
  HarmonicSummand out;
  out.homogeneity = h;
  const std::size_t d2 = c2.dim();
  auto perm = [&](Index i) { return opt.permutation.empty() ? i : opt.permutation[i]; };
  std::vector<Index> inv(d2);
  for (Index i = 0; i < d2; ++i) inv[perm(i)] = i;
  auto permute = [&](const SparseVec& v) {
    std::vector<std::pair<Index, Rat>> e;
    for (const auto& [i, a] : v.entries) e.emplace_back(perm(i), a);
    return SparseVec(std::move(e));
  };
  auto unpermute = [&](const SparseVec& v) {
    std::vector<std::pair<Index, Rat>> e;
    for (const auto& [i, a] : v.entries) e.emplace_back(inv[i], a);
    return SparseVec(std::move(e));
  };

  Echelon b(d2);
  for (Index i : c1.block(h)) b.insert(permute(ce_apply(c1, c2, i)));
  b.reduce_fully();
  out.coboundary_dim = b.rank();

  const auto blk = c2.block(h);
  std::vector<std::vector<std::pair<Index, Rat>>> rows(c3.dim());
  for (std::size_t local = 0; local < blk.size(); ++local)
    for (const auto& [r, a] : ce_apply(c2, c3, blk[local]).entries)
      rows[r].emplace_back(static_cast<Index>(local), a);
  std::vector<SparseVec> eq;
  for (auto& r : rows)
    if (!r.empty()) eq.emplace_back(std::move(r));
  Echelon comp(d2);
  auto ker = kernel_of_rows(eq, blk.size());
  out.cocycle_dim = ker.size();
  for (const auto& kv : ker) {
    std::vector<std::pair<Index, Rat>> e;
    for (const auto& [l, a] : kv.entries) e.emplace_back(perm(blk[l]), a);
    comp.insert(b.reduce(SparseVec(std::move(e))));
  }
  comp.reduce_fully();
  if (comp.rank() + b.rank() != out.cocycle_dim) throw std::logic_error("h2_summand: coboundaries are not cocycles");

  for (const auto& r : comp.rows()) out.representatives.push_back(unpermute(r));
  out.rep.name = "H2_" + std::to_string(h) + "(n=" + std::to_string(g.n) + ")";
  auto names = gm1_names(g.n);
  for (Index p : comp.pivots()) {
    Index i = inv[p];
    const auto& t = c2.space.tuple(c2.space.tuple_of(i));
    out.rep.labels.push_back(names[t[0]] + "*^" + names[t[1]] + "*(x)" + g.alg.label(c2.space.value_of(i)));
  }
  out.rep.offset = g.g0_begin();
  const std::size_t d = comp.rank();
  for (const auto& x : g.g0()) {
    SparseMat m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      SparseVec y = b.reduce(permute(cochain_act(c2, x, out.representatives[j])));
      auto c = comp.coordinates(y);
      if (!c) throw std::logic_error("h2_summand: cocycles are not g_0-invariant");
      m.cols[j] = SparseVec::from_dense(*c);
    }
    out.rep.action.push_back(std::move(m));
  }
  return out;
}

/// Nonzero homogeneous summands of H^2, in increasing homogeneity (1, 2, 3
/// are the only possible values).
inline std::vector<HarmonicSummand> h2_decompose(const GradedSlh& g, std::vector<std::size_t>* dims = nullptr) {
  std::vector<HarmonicSummand> out;
  for (int h = 1; h <= 3; ++h) {
    HarmonicSummand s = h2_summand(g, h);
    if (dims) dims->push_back(s.dim());
    if (s.dim() > 0) out.push_back(std::move(s));
  }
  return out;
}

/// An invertible g_0-equivariant map from a tensor model, generated by the
/// weight vector w, onto a cohomology summand.
inline EquivariantIso match_module(const HarmonicSummand& s, const ModuleRep& v, const SparseVec& w,
                                   const GradedSlh& g) {
  return match_modules(v, s.rep, w, g0_generators(g), split_torus(g), g.g0());
}

}  // namespace aqsym
