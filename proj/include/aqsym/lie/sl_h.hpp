#pragma once

// sl(m,H) and the |1|-graded sl(n+1,H) with its distinguished subalgebras.

#include "aqsym/lie/lie_algebra.hpp"
#include "aqsym/lie/quaternion.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqsym {

namespace detail {

// Basis of sl(m,H) on the index block [off, off+m) of an M x M quaternionic
// matrix: off-diagonal q_{r,s}, imaginary diagonal q_{r,r}, then real
// diagonal differences d_r = 1_{r,r} - 1_{r+1,r+1}.
inline void append_sl_basis(std::size_t M, std::size_t off, std::size_t m, std::vector<QMat>& basis,
                            std::vector<std::string>& labels, const std::string& prefix) {
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (int q = (r == s ? 1 : 0); q < 4; ++q) {
        basis.push_back(QMat::elementary(M, off + r, off + s, Quat::unit(q)));
        labels.push_back(prefix + unit_name(q) + "_{" + std::to_string(r + 1) + "," + std::to_string(s + 1) + "}");
      }
  for (std::size_t r = 0; r + 1 < m; ++r) {
    QMat d(M);
    d(off + r, off + r) = Quat(Rat(1));
    d(off + r + 1, off + r + 1) = Quat(Rat(-1));
    basis.push_back(d);
    labels.push_back(prefix + "d_" + std::to_string(r + 1));
  }
}

// Coordinates of the sl(m,H)-part of X on block [off, off+m), with the real
// diagonal entries y_r (summing to zero) supplied separately.
inline void sl_coords(const QMat& x, std::size_t off, std::size_t m, const std::vector<Rat>& y, Index start,
                      Vec& out) {
  Index k = start;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (int q = (r == s ? 1 : 0); q < 4; ++q, ++k)
        if (!is_zero(x(off + r, off + s).c[q])) out.entries.emplace_back(k, x(off + r, off + s).c[q]);
  Rat acc = 0;
  for (std::size_t r = 0; r + 1 < m; ++r, ++k) {
    acc += y[r];
    if (!is_zero(acc)) out.entries.emplace_back(k, acc);
  }
}

inline LieAlgebra algebra_from_matrices(const std::vector<QMat>& basis, std::vector<std::string> labels,
                                        const std::function<Vec(const QMat&)>& coords) {
  const std::size_t d = basis.size();
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec c = coords(commutator(basis[i], basis[j]));
      table[j][i] = Rat(-1) * c;
      table[i][j] = std::move(c);
    }
  return LieAlgebra(std::move(labels), std::move(table));
}

}  // namespace detail

/// sl(m,H) as a real Lie algebra of quaternionic matrices.
struct SlH {
  std::size_t m = 0;
  LieAlgebra alg;
  std::vector<QMat> basis;

  [[nodiscard]] Vec coords(const QMat& x) const {
    if (!is_zero(x.real_trace())) throw std::domain_error("sl(m,H): real trace is not zero");
    std::vector<Rat> y(m);
    for (std::size_t r = 0; r < m; ++r) y[r] = x(r, r).c[0];
    Vec v;
    detail::sl_coords(x, 0, m, y, 0, v);
    return v;
  }
  [[nodiscard]] QMat matrix(const Vec& v) const {
    QMat x(m);
    for (const auto& [i, a] : v.entries) x = x + a * basis[i];
    return x;
  }
  /// Real 4m x 4m matrix of a basis element.
  [[nodiscard]] Mat<Rat> real_embedding(std::size_t i) const { return basis.at(i).real(); }
};

inline SlH build_sl_h(std::size_t m) {
  if (m < 2) throw std::invalid_argument("build_sl_h: m must be at least 2");
  SlH s;
  s.m = m;
  std::vector<std::string> labels;
  detail::append_sl_basis(m, 0, m, s.basis, labels, "");
  s.alg = detail::algebra_from_matrices(s.basis, std::move(labels), [&](const QMat& x) { return s.coords(x); });
  return s;
}

/// sl(n+1,H) with the grading g_{-1} + g_0 + g_1 given by the (1,n) block
/// decomposition. Basis order: g_{-1} (entries (s,0)), then g_0 = sp(1) at
/// (0,0), Z, sl(n,H) on rows/columns 1..n, then g_1 (entries (0,s)).
struct GradedSlh {
  std::size_t n = 0;
  LieAlgebra alg;
  Grading grading;
  std::vector<QMat> basis;

  [[nodiscard]] std::size_t dim_gm1() const { return 4 * n; }
  [[nodiscard]] std::size_t dim_g0() const { return 4 * n * n + 3; }
  [[nodiscard]] Index g0_begin() const { return static_cast<Index>(4 * n); }
  [[nodiscard]] Index g1_begin() const { return static_cast<Index>(4 * n + dim_g0()); }
  [[nodiscard]] Index sl_begin() const { return g0_begin() + 4; }

  /// g_{-1} basis vector q_s (s = 1..n, q = 0..3).
  [[nodiscard]] Index gm1(std::size_t s, int q) const { return static_cast<Index>(4 * (s - 1) + q); }
  [[nodiscard]] Index gp1(std::size_t s, int q) const { return g1_begin() + static_cast<Index>(4 * (s - 1) + q); }
  /// sp(1) summand of g_0, q = 1..3.
  [[nodiscard]] Index sp1(int q) const { return g0_begin() + static_cast<Index>(q - 1); }
  [[nodiscard]] Index z() const { return g0_begin() + 3; }

  [[nodiscard]] std::vector<Vec> range(Index a, Index b) const {
    std::vector<Vec> out;
    for (Index i = a; i < b; ++i) out.push_back(Vec::unit(i));
    return out;
  }
  [[nodiscard]] std::vector<Vec> g_minus() const { return range(0, g0_begin()); }
  [[nodiscard]] std::vector<Vec> g0() const { return range(g0_begin(), g1_begin()); }
  [[nodiscard]] std::vector<Vec> g_plus() const { return range(g1_begin(), static_cast<Index>(alg.dim())); }
  /// sl(n,H) summand of g_0.
  [[nodiscard]] std::vector<Vec> sl_n() const { return range(sl_begin(), g1_begin()); }

  [[nodiscard]] Vec coords(const QMat& x) const {
    if (!is_zero(x.real_trace())) throw std::domain_error("sl(n+1,H): real trace is not zero");
    Vec v;
    for (std::size_t s = 1; s <= n; ++s)
      for (int q = 0; q < 4; ++q)
        if (!is_zero(x(s, 0).c[q])) v.entries.emplace_back(gm1(s, q), x(s, 0).c[q]);
    for (int q = 1; q < 4; ++q)
      if (!is_zero(x(0, 0).c[q])) v.entries.emplace_back(sp1(q), x(0, 0).c[q]);
    const Rat np1 = Rat(static_cast<long>(n + 1));
    const Rat c = x(0, 0).c[0] * np1 / Rat(static_cast<long>(n));
    if (!is_zero(c)) v.entries.emplace_back(z(), c);
    std::vector<Rat> y(n);
    for (std::size_t r = 0; r < n; ++r) y[r] = x(r + 1, r + 1).c[0] + c / np1;
    detail::sl_coords(x, 1, n, y, sl_begin(), v);
    for (std::size_t s = 1; s <= n; ++s)
      for (int q = 0; q < 4; ++q)
        if (!is_zero(x(0, s).c[q])) v.entries.emplace_back(gp1(s, q), x(0, s).c[q]);
    v.normalize();
    return v;
  }

  [[nodiscard]] QMat matrix(const Vec& v) const {
    QMat x(n + 1);
    for (const auto& [i, a] : v.entries) x = x + a * basis[i];
    return x;
  }

  /// Element of g_0 acting on H^n = g_{-1} as the n x n quaternionic matrix a
  /// (block diag(-Re tr a, a)). Covers gl(n,H) = RZ + sl(n,H).
  [[nodiscard]] Vec gl(const QMat& a) const {
    QMat x(n + 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) x(r + 1, s + 1) = a(r, s);
    x(0, 0) = Quat(-a.real_trace());
    return coords(x);
  }
  /// The paper-style element q_{r,s} of gl(n,H), 1-based indices.
  [[nodiscard]] Vec q_rs(std::size_t r, std::size_t s, int q, const Rat& scale = 1) const {
    return gl(QMat::elementary(n, r - 1, s - 1, Quat::unit(q, scale)));
  }
};

inline GradedSlh build_graded_slh(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_graded_slh: n must be at least 2");
  GradedSlh g;
  g.n = n;
  const std::size_t M = n + 1;
  std::vector<std::string> labels;
  for (std::size_t s = 1; s <= n; ++s)
    for (int q = 0; q < 4; ++q) {
      g.basis.push_back(QMat::elementary(M, s, 0, Quat::unit(q)));
      labels.push_back(std::string("v:") + unit_name(q) + "_" + std::to_string(s));
    }
  for (int q = 1; q < 4; ++q) {
    g.basis.push_back(QMat::elementary(M, 0, 0, Quat::unit(q)));
    labels.push_back(std::string("sp1:") + unit_name(q));
  }
  QMat zm(M);
  zm(0, 0) = Quat(make_rat(static_cast<long>(n), static_cast<long>(n + 1)));
  for (std::size_t r = 1; r <= n; ++r) zm(r, r) = Quat(make_rat(-1, static_cast<long>(n + 1)));
  g.basis.push_back(zm);
  labels.push_back("Z");
  detail::append_sl_basis(M, 1, n, g.basis, labels, "sl:");
  for (std::size_t s = 1; s <= n; ++s)
    for (int q = 0; q < 4; ++q) {
      g.basis.push_back(QMat::elementary(M, 0, s, Quat::unit(q)));
      labels.push_back(std::string("p:") + unit_name(q) + "_" + std::to_string(s));
    }
  g.alg = detail::algebra_from_matrices(g.basis, std::move(labels), [&](const QMat& x) { return g.coords(x); });
  g.grading.degree.assign(g.alg.dim(), 0);
  for (Index i = 0; i < g.g0_begin(); ++i) g.grading.degree[i] = -1;
  for (Index i = g.g1_begin(); i < g.alg.dim(); ++i) g.grading.degree[i] = 1;
  g.grading.element = Vec::unit(g.z());
  return g;
}

struct G0Decomposition {
  std::vector<Vec> sp1, center, sln;
};

inline G0Decomposition decompose_g0(const GradedSlh& g) {
  G0Decomposition d;
  for (int q = 1; q < 4; ++q) d.sp1.push_back(Vec::unit(g.sp1(q)));
  d.center.push_back(Vec::unit(g.z()));
  d.sln = g.sl_n();
  return d;
}

/// The parabolic h = h_0 + h_1 + h_2 of sl(n,H) determined by Z'.
struct ParabolicH {
  Vec zprime;
  std::vector<Vec> h0, h1, h2, hplus, tilde_minus;
  std::vector<Vec> sp1_left, sp1_right, sl_middle;
  /// Z'-eigenvalue of each sl(n,H) basis vector, keyed by algebra index.
  std::vector<int> theta;
};

inline ParabolicH build_parabolic_h(const GradedSlh& g) {
  const std::size_t n = g.n;
  ParabolicH p;
  QMat zp(n);
  if (n == 2) {
    zp(0, 0) = Quat(make_rat(1, 2));
    zp(1, 1) = Quat(make_rat(-1, 2));
  } else {
    zp(0, 0) = Quat(Rat(1));
    zp(n - 1, n - 1) = Quat(Rat(-1));
  }
  p.zprime = g.gl(zp);
  p.theta.assign(g.alg.dim(), 0);
  for (const auto& x : g.sl_n()) {
    Index i = x.entries.front().first;
    Vec img = g.alg.bracket(p.zprime, x);
    Rat ev = img.empty() ? Rat(0) : img.at(i);
    if (!(img == ev * x)) throw std::logic_error("Z' is not diagonal on the sl(n,H) basis");
    if (ev.get_den() != 1) throw std::logic_error("Z' eigenvalue is not an integer");
    int t = static_cast<int>(ev.get_num().get_si());
    p.theta[i] = t;
    if (t == 0) p.h0.push_back(x);
    if (t == 1) p.h1.push_back(x);
    if (t == 2) p.h2.push_back(x);
    if (t > 0) p.hplus.push_back(x);
    if (t < 0) p.tilde_minus.push_back(x);
  }
  for (int q = 1; q < 4; ++q) {
    p.sp1_left.push_back(g.q_rs(1, 1, q));
    p.sp1_right.push_back(g.q_rs(n, n, q));
  }
  if (n > 2) {
    for (std::size_t r = 2; r < n; ++r)
      for (std::size_t s = 2; s < n; ++s)
        for (int q = (r == s ? 1 : 0); q < 4; ++q) p.sl_middle.push_back(g.q_rs(r, s, q));
    for (std::size_t r = 2; r + 1 < n; ++r) p.sl_middle.push_back(g.q_rs(r, r, 0) - g.q_rs(r + 1, r + 1, 0));
  }
  return p;
}

/// {X in g_1 : [X, g_{-1}] in a0}.
inline std::vector<Vec> first_prolongation(const GradedSlh& g, const std::vector<Vec>& a0) {
  Echelon e = span_of(a0, g.alg.dim());
  e.reduce_fully();
  const auto gp = g.g_plus();
  std::vector<Vec> rows_by_coord;
  std::vector<std::vector<std::pair<Index, Rat>>> rows(g.alg.dim() * g.dim_gm1());
  for (std::size_t k = 0; k < gp.size(); ++k)
    for (std::size_t v = 0; v < g.dim_gm1(); ++v) {
      Vec r = e.reduce(g.alg.bracket(gp[k], Vec::unit(static_cast<Index>(v))));
      for (const auto& [c, x] : r.entries) rows[v * g.alg.dim() + c].emplace_back(static_cast<Index>(k), x);
    }
  for (auto& r : rows)
    if (!r.empty()) rows_by_coord.emplace_back(std::move(r));
  std::vector<Vec> out;
  for (const auto& kv : kernel_of_rows(rows_by_coord, gp.size())) {
    Vec x;
    for (const auto& [k, a] : kv.entries) x = axpy(x, a, gp[k]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace aqsym
