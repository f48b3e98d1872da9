#pragma once

// The curvature module V^II inside Sym^3(H^n)* (x) H^n and the torsion module
// V^I inside Alt^2(H^n)* (x) H^n, with their extremal vectors.

#include "aqsym/hmod/g0.hpp"
#include "aqsym/hmod/module.hpp"
#include "aqsym/hmod/tensor_space.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace aqsym {

/// A g_0-module realized as an invariant subspace of a tensor space.
struct TensorModule {
  ModuleRep rep;
  FormSpace space;
  Echelon basis;  // reduced row-echelon basis in ambient coordinates
  std::vector<SparseMat> ambient_action;

  /// Module coordinates of an ambient vector, or nullopt outside the module.
  [[nodiscard]] std::optional<SparseVec> coordinates(const SparseVec& amb) const {
    auto c = basis.coordinates(amb);
    if (!c) return std::nullopt;
    return SparseVec::from_dense(*c);
  }
  [[nodiscard]] SparseVec ambient(const SparseVec& coords) const {
    SparseVec out;
    for (const auto& [k, a] : coords.entries) out = axpy(out, a, basis.rows()[k]);
    return out;
  }
};

namespace detail {

using Tuple = FormSpace::Tuple;

// Row of a linear condition given as (tuple, value index, coefficient) terms
// on tensor components.
struct ComponentRow {
  const FormSpace* s;
  std::vector<std::pair<Index, Rat>> terms;
  void add(const Tuple& t, std::size_t w, const Rat& c) {
    auto [r, sign] = s->canonical(t);
    if (r < 0 || is_zero(c)) return;
    terms.emplace_back(s->index(static_cast<std::size_t>(r), w), sign < 0 ? Rat(-c) : c);
  }
  SparseVec take() { return SparseVec(std::move(terms)); }
};

// Rows of the four quaternionic contractions of the last dual slot with the
// vector slot, sum_{e,f} (R_x)_{ef} T_{..e}^f = 0 for x in {1,i,j,k}.
inline void contraction_rows(const FormSpace& s, std::size_t n, std::vector<SparseVec>& rows) {
  const std::size_t p = s.degree();
  for (int q = 0; q < 4; ++q) {
    SparseMat r = right_mult_hn(n, Quat::unit(q));
    std::vector<Tuple> heads;
    {
      Tuple h{};
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t start) {
        if (k + 1 == p) {
          heads.push_back(h);
          return;
        }
        for (std::size_t a = start; a < s.base_dim(); ++a) {
          h[k] = a;
          rec(k + 1, s.kind() == FormKind::Sym ? a : a + 1);
        }
      };
      rec(0, 0);
    }
    for (const auto& h : heads) {
      ComponentRow row{&s, {}};
      for (Index f = 0; f < r.ncols(); ++f)
        for (const auto& [e, a] : r.cols[f].entries) {
          Tuple t = h;
          t[p - 1] = e;
          row.add(t, f, a);
        }
      SparseVec v = row.take();
      if (!v.empty()) rows.push_back(std::move(v));
    }
  }
}

inline std::vector<std::string> module_labels(const FormSpace& s, const Echelon& e, std::size_t n) {
  auto names = gm1_names(n);
  std::vector<std::string> out;
  for (Index p : e.pivots()) out.push_back(s.label(p, names, names));
  return out;
}

inline Echelon rref_of(const std::vector<SparseVec>& vecs, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vecs) e.insert(v);
  e.reduce_fully();
  return e;
}

}  // namespace detail

/// V^II: complex-linear (for right multiplication by i), self-conjugate (for
/// right multiplication by j) and contraction-free tensors in
/// Sym^3(H^n)* (x) H^n. sp(1) acts trivially, Z as 2, sl(n,H) tensorially.
inline TensorModule build_curvature_module(const GradedSlh& g) {
  const std::size_t n = g.n, N = 4 * n;
  TensorModule m;
  m.space = FormSpace(FormKind::Sym, 3, N, N);
  const FormSpace& s = m.space;
  const SparseMat ri = right_mult_hn(n, Quat::unit(1));
  const SparseMat rit = ri.transpose();
  const SparseMat rj = right_mult_hn(n, Quat::unit(2));
  const SparseMat rjt = rj.transpose();
  std::vector<SparseVec> rows;
  // J_1 T = J_4 T with J = R_i^T on the first dual slot and R_i on the vector
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = b; c < N; ++c)
        for (std::size_t d = 0; d < N; ++d) {
          detail::ComponentRow row{&s, {}};
          for (const auto& [e, x] : ri.cols[a].entries) row.add({e, b, c}, d, x);
          for (const auto& [e, x] : rit.cols[d].entries) row.add({a, b, c}, e, -x);
          SparseVec v = row.take();
          if (!v.empty()) rows.push_back(std::move(v));
        }
  // sigma T = T, sigma = -R_j^T on duals and R_j on the vector
  for (std::size_t r = 0; r < s.num_tuples(); ++r) {
    const auto& t = s.tuple(r);
    for (std::size_t d = 0; d < N; ++d) {
      detail::ComponentRow row{&s, {}};
      row.add(t, d, Rat(1));
      for (const auto& [a2, xa] : rj.cols[t[0]].entries)
        for (const auto& [b2, xb] : rj.cols[t[1]].entries)
          for (const auto& [c2, xc] : rj.cols[t[2]].entries)
            for (const auto& [d2, xd] : rjt.cols[d].entries) row.add({a2, b2, c2}, d2, xa * xb * xc * xd);
      SparseVec v = row.take();
      if (!v.empty()) rows.push_back(std::move(v));
    }
  }
  detail::contraction_rows(s, n, rows);
  m.basis = detail::rref_of(kernel_of_rows(rows, s.dim()), s.dim());

  const auto g0 = g.g0();
  for (const auto& x : g0) {
    const Index k = x.entries.front().first;
    if (k == g.z()) {
      m.ambient_action.push_back(Rat(2) * SparseMat::identity(s.dim()));
    } else if (k < g.sl_begin()) {
      m.ambient_action.emplace_back(s.dim(), s.dim());
    } else {
      SparseMat a = action_on_gm1(g, x);
      m.ambient_action.push_back(s.action_matrix(a, a));
    }
  }
  m.rep = restrict_module("V^II(n=" + std::to_string(n) + ")", m.basis, m.ambient_action, g.g0_begin(),
                          detail::module_labels(s, m.basis, n));
  return m;
}

/// sp(1) Casimir sum_q rho(q)^2 on an ambient space, from the actions of the
/// three sp(1) generators.
inline SparseMat sp1_casimir(const std::array<SparseMat, 3>& sp) {
  SparseMat c = sp[0] * sp[0];
  c = c + sp[1] * sp[1];
  c = c + sp[2] * sp[2];
  return c;
}

/// V^I: the spin-3/2 part (Casimir -15) for the sp(1) summand of g_0 of the
/// contraction-free tensors in Alt^2(H^n)* (x) H^n, with the action induced
/// from g_0 on g_{-1}.
inline TensorModule build_torsion_module(const GradedSlh& g) {
  const std::size_t n = g.n, N = 4 * n;
  TensorModule m;
  m.space = FormSpace(FormKind::Alt, 2, N, N);
  const FormSpace& s = m.space;
  for (const auto& x : g.g0()) {
    SparseMat a = action_on_gm1(g, x);
    m.ambient_action.push_back(s.action_matrix(a, a));
  }
  const Index off = g.g0_begin();
  SparseMat cas = sp1_casimir({m.ambient_action[g.sp1(1) - off], m.ambient_action[g.sp1(2) - off],
                               m.ambient_action[g.sp1(3) - off]});
  SparseMat eq = (cas + Rat(15) * SparseMat::identity(s.dim())).transpose();
  std::vector<SparseVec> rows;
  for (auto& r : eq.cols)
    if (!r.empty()) rows.push_back(std::move(r));
  detail::contraction_rows(s, n, rows);
  m.basis = detail::rref_of(kernel_of_rows(rows, s.dim()), s.dim());
  m.rep = restrict_module("V^I(n=" + std::to_string(n) + ")", m.basis, m.ambient_action, off,
                          detail::module_labels(s, m.basis, n));
  return m;
}

/// proj_sc(proj_i(1_n^{*3} (x) 1_1)) in ambient coordinates of Sym^3(H^n)* (x) H^n.
inline SparseVec curvature_extremal_ambient(const FormSpace& s, std::size_t n) {
  // Dense 4^4 tensor on the slots H_n^*, H_n^*, H_n^*, H_1.
  using T4 = std::array<Rat, 256>;
  auto at = [](std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return ((a * 4 + b) * 4 + c) * 4 + d; };
  const Mat<Rat> ri = right_mult(Quat::unit(1));
  const Mat<Rat> rj = right_mult(Quat::unit(2));
  // Apply m to slot k: component transform T_{..x..} -> sum_y m(x,y) T_{..y..}.
  auto apply_slot = [&](const T4& t, const Mat<Rat>& m, std::size_t k) {
    T4 out{};
    for (std::size_t i = 0; i < 256; ++i) {
      if (is_zero(t[i])) continue;
      std::array<std::size_t, 4> idx{i >> 6, (i >> 4) & 3, (i >> 2) & 3, i & 3};
      const std::size_t y = idx[k];
      for (std::size_t x = 0; x < 4; ++x) {
        if (is_zero(m(x, y))) continue;
        auto o = idx;
        o[k] = x;
        out[at(o[0], o[1], o[2], o[3])] += m(x, y) * t[i];
      }
    }
    return out;
  };
  const Mat<Rat> j_dual = ri.transpose();
  const Mat<Rat> sigma_dual = Rat(-1) * rj.transpose();
  T4 t{};
  t[at(0, 0, 0, 0)] = 1;
  for (std::size_t b = 1; b < 4; ++b) {
    T4 u = apply_slot(t, j_dual, 0);
    u = apply_slot(u, b == 3 ? ri : j_dual, b);
    for (std::size_t i = 0; i < 256; ++i) t[i] = (t[i] - u[i]) / 2;
  }
  T4 sg = t;
  for (std::size_t k = 0; k < 3; ++k) sg = apply_slot(sg, sigma_dual, k);
  sg = apply_slot(sg, rj, 3);
  std::vector<std::pair<Index, Rat>> out;
  const std::size_t dn = 4 * (n - 1);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b)
      for (std::size_t c = b; c < 4; ++c)
        for (std::size_t d = 0; d < 4; ++d) {
          Rat v = (t[at(a, b, c, d)] + sg[at(a, b, c, d)]) / 2;
          if (is_zero(v)) continue;
          long r = s.rank_sorted({dn + a, dn + b, dn + c});
          out.emplace_back(s.index(static_cast<std::size_t>(r), d), v);
        }
  return SparseVec(std::move(out));
}

/// The spin-3/2 projection (C + 3)/(-12) of 1_n^* ^ j_n^* (x) 1_1.
inline SparseVec torsion_extremal_ambient(const TensorModule& m, const GradedSlh& g) {
  const std::size_t dn = 4 * (g.n - 1);
  const FormSpace& s = m.space;
  SparseVec v = SparseVec::unit(s.index(static_cast<std::size_t>(s.rank_sorted({dn + 0, dn + 2, 0})), 0));
  const Index off = g.g0_begin();
  SparseMat cas = sp1_casimir({m.ambient_action[g.sp1(1) - off], m.ambient_action[g.sp1(2) - off],
                               m.ambient_action[g.sp1(3) - off]});
  return make_rat(-1, 12) * (cas.apply(v) + Rat(3) * v);
}

inline ModuleElement extremal_vector(const TensorModule& m, const SparseVec& ambient) {
  auto c = m.coordinates(ambient);
  if (!c) throw std::logic_error(m.rep.name + ": extremal vector is not in the module");
  return {&m.rep, *c};
}

inline ModuleElement curvature_extremal(const TensorModule& m, const GradedSlh& g) {
  return extremal_vector(m, curvature_extremal_ambient(m.space, g.n));
}
inline ModuleElement torsion_extremal(const TensorModule& m, const GradedSlh& g) {
  return extremal_vector(m, torsion_extremal_ambient(m, g));
}

}  // namespace aqsym
