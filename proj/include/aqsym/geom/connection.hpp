#pragma once

// Linear connections in chart coordinates. Gamma^i_{jk} is stored at (i, j, k)
// with nabla_{d_j} d_k = Gamma^i_{jk} d_i. The natural operations are written
// once over the scalar type, so they run on rational functions and on
// truncated jets at a base point alike.
//
// Invariant connections of a transitive symmetry algebra are determined by
// their value at one point p0: Gamma(p0) must be equivariant under the
// isotropy algebra, and every such value extends uniquely. Invariant tensors
// built from an invariant connection vanish identically iff they vanish at
// p0, which is where torsion, curvature and their derivatives are evaluated.

#include "aqsym/exact/sparse.hpp"
#include "aqsym/geom/symmetry.hpp"
#include "aqsym/geom/tensors.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace aqsym {

/// T^i_{jk} = Gamma^i_{jk} - Gamma^i_{kj}.
template <class S>
Tensor<S> torsion(const Tensor<S>& g) {
  const std::size_t N = g.N;
  Tensor<S> t(N, 1, 2);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) t(i, j, k) = g(i, j, k) - g(i, k, j);
  return t;
}

/// R^i_{mkl} = d_k G^i_{lm} - d_l G^i_{km} + G^i_{kp} G^p_{lm} - G^i_{lp} G^p_{km},
/// stored at (i, m, k, l), so that R(d_k, d_l) d_m = R^i_{mkl} d_i.
template <class S>
Tensor<S> curvature(const Tensor<S>& g) {
  const std::size_t N = g.N;
  Tensor<S> r(N, 1, 3);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = k + 1; l < N; ++l) {
          S s = g(i, l, m).diff(k) - g(i, k, m).diff(l);
          for (std::size_t p = 0; p < N; ++p) {
            if (!is_zero(g(i, k, p)) && !is_zero(g(p, l, m))) s = s + g(i, k, p) * g(p, l, m);
            if (!is_zero(g(i, l, p)) && !is_zero(g(p, k, m))) s = s - g(i, l, p) * g(p, k, m);
          }
          r(i, m, k, l) = s;
          r(i, m, l, k) = -s;
        }
  return r;
}

/// Ric_{ml} = R^i_{mil}.
template <class S>
Tensor<S> ricci(const Tensor<S>& r) {
  const std::size_t N = r.N;
  Tensor<S> out(N, 0, 2);
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t l = 0; l < N; ++l) {
      S s(0);
      for (std::size_t i = 0; i < N; ++i) s = s + r(i, m, i, l);
      out(m, l) = s;
    }
  return out;
}

/// nabla T with the differentiating index appended last.
template <class S>
Tensor<S> cov_deriv(const Tensor<S>& g, const Tensor<S>& t) {
  const std::size_t N = t.N, rk = t.rank();
  Tensor<S> out(N, t.up, t.down + 1);
  for (std::size_t f = 0; f < t.size(); ++f) {
    const auto idx = t.multi_index(f);
    for (std::size_t d = 0; d < N; ++d) {
      S s = t.c[f].diff(d);
      for (std::size_t a = 0; a < rk; ++a) {
        auto j = idx;
        for (std::size_t p = 0; p < N; ++p) {
          j[a] = p;
          const S& tv = t.c[t.flat_index(j)];
          if (is_zero(tv)) continue;
          if (a < t.up) {
            if (!is_zero(g(idx[a], d, p))) s = s + g(idx[a], d, p) * tv;
          } else if (!is_zero(g(p, d, idx[a]))) {
            s = s - g(p, d, idx[a]) * tv;
          }
        }
      }
      out.c[f * N + d] = s;
    }
  }
  return out;
}

/// The matrix (Gamma^i_{jk})_{ik} of nabla_{d_j}.
inline FieldMat gamma_slice(const TensorField& g, std::size_t j) {
  FieldMat m(g.N, g.N);
  for (std::size_t i = 0; i < g.N; ++i)
    for (std::size_t k = 0; k < g.N; ++k) m(i, k) = g(i, j, k);
  return m;
}

/// (nabla_j A) = d_j A + [Gamma_j, A].
inline FieldMat nabla_endo(const TensorField& g, const FieldMat& A, std::size_t j) {
  const FieldMat gj = gamma_slice(g, j);
  FieldMat d(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) d(i, k) = A(i, k).diff(j);
  return d + gj * A - A * gj;
}

/// Whether nabla A lies in span{I, J, K} for A = I, J, K.
inline bool is_quaternionic(const AQStructure& q, const TensorField& g) {
  for (const auto& A : q.ops)
    for (std::size_t j = 0; j < q.dim(); ++j)
      if (!span_coefficients(q, nabla_endo(g, A, j))) return false;
  return true;
}

/// Whether nabla I = nabla J = nabla K = 0.
inline bool preserves_each(const AQStructure& q, const TensorField& g) {
  for (const auto& A : q.ops)
    for (std::size_t j = 0; j < q.dim(); ++j)
      if (!nabla_endo(g, A, j).is_zero()) return false;
  return true;
}

/// 1/4 (nabla - I nabla I - J nabla J - K nabla K), where (A nabla A)_X Y =
/// A nabla_X (A Y). The result preserves each of I, J, K when nabla is
/// quaternionic, and in general preserves Q.
inline TensorField quaternionic_average(const TensorField& g, const std::array<FieldMat, 3>& ops) {
  const std::size_t N = g.N;
  const RatFunc quarter(Rat(1, 4));
  TensorField out(N, 1, 2);
  for (std::size_t j = 0; j < N; ++j) {
    const FieldMat gj = gamma_slice(g, j);
    FieldMat s = gj;
    for (const auto& A : ops) {
      FieldMat dA(N, N);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) dA(i, k) = A(i, k).diff(j);
      s = s - A * dA - A * gj * A;
    }
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) out(i, j, k) = quarter * s(i, k);
  }
  return out;
}

inline TensorField quaternionic_average(const TensorField& g, const AQStructure& q) {
  return quaternionic_average(g, q.ops);
}

/// nabla' with nabla - nabla' = sum_{A in Id, I, J, K} A^2 (A (x) (U o A) + (U o A) (x) A).
/// The difference is symmetric, so the torsion is unchanged.
inline TensorField gauge_change(const TensorField& g, const AQStructure& q, const std::vector<RatFunc>& upsilon) {
  const std::size_t N = g.N;
  std::vector<FieldMat> ops{FieldMat::identity(N), q.I(), q.J(), q.K()};
  const int eps[4] = {1, -1, -1, -1};
  TensorField out = g;
  for (int a = 0; a < 4; ++a) {
    const FieldMat& A = ops[a];
    std::vector<RatFunc> ua(N);  // (U o A)_k = U_l A^l_k
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t l = 0; l < N; ++l)
        if (!upsilon[l].is_zero() && !A(l, k).is_zero()) ua[k] += upsilon[l] * A(l, k);
    const RatFunc e(eps[a]);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) {
          RatFunc d;
          if (!A(i, j).is_zero() && !ua[k].is_zero()) d += A(i, j) * ua[k];
          if (!ua[j].is_zero() && !A(i, k).is_zero()) d += ua[j] * A(i, k);
          if (!d.is_zero()) out(i, j, k) -= e * d;
        }
  }
  return out;
}

/// (L_X nabla)^i_{jk} = X^l d_l G^i_{jk} - G^l_{jk} d_l X^i + G^i_{lk} d_j X^l
///                     + G^i_{jl} d_k X^l + d_j d_k X^i.
inline TensorField lie_derivative(const VectorField& x, const TensorField& g) {
  const std::size_t N = g.N;
  std::vector<std::vector<RatFunc>> dx(N, std::vector<RatFunc>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) dx[i][k] = x.c[i].diff(k);
  TensorField out(N, 1, 2);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        RatFunc s = dx[i][j].diff(k);
        for (std::size_t l = 0; l < N; ++l) {
          if (!x.c[l].is_zero() && !g(i, j, k).is_zero()) s += x.c[l] * g(i, j, k).diff(l);
          if (!g(l, j, k).is_zero() && !dx[i][l].is_zero()) s -= g(l, j, k) * dx[i][l];
          if (!g(i, l, k).is_zero() && !dx[l][j].is_zero()) s += g(i, l, k) * dx[l][j];
          if (!g(i, j, l).is_zero() && !dx[l][k].is_zero()) s += g(i, j, l) * dx[l][k];
        }
        out(i, j, k) = s;
      }
  return out;
}

// ---------------------------------------------------------------------------
// Jets at a base point.

/// p(p0 + y) as a polynomial in y.
inline Poly shift(const Poly& p, const std::vector<Rat>& p0) {
  std::vector<std::vector<Poly>> pw(p0.size());
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly t(c);
    for (std::size_t v = 0; v < p0.size(); ++v) {
      if (m.e[v] == 0) continue;
      auto& cache = pw[v];
      if (cache.empty()) cache.push_back(Poly(1));
      while (cache.size() <= m.e[v]) cache.push_back(cache.back() * (Poly::var(v) + Poly(p0[v])));
      t = t * cache[m.e[v]];
    }
    out += t;
  }
  return out;
}

/// Taylor expansion of f at p0, known through degree `order`.
inline Jet taylor(const RatFunc& f, const std::vector<Rat>& p0, int order) {
  const Poly num = shift(f.num(), p0);
  if (f.is_polynomial()) return Jet(num * (1 / f.den().constant_value()), Jet::kExact);
  const Poly den = shift(f.den(), p0);
  Rat d0 = 0;
  for (const auto& [m, c] : den.terms())
    if (m.deg == 0) d0 = c;
  if (is_zero(d0)) throw ZeroDenominator();
  // 1/den = (1/d0) sum_k (-u)^k with u = den/d0 - 1.
  const Jet u(den * (1 / d0) - Poly(1), order);
  Jet inv(1), term(1);
  for (int k = 1; k <= order; ++k) {
    term = term * (-u);
    inv = inv + term;
  }
  return Jet(num * (1 / d0), order) * inv;
}

/// Coefficient of the monomial y^e in a jet.
inline Rat jet_coeff(const Jet& j, const Mono& e) {
  if (j.order() < e.deg) throw std::logic_error("jet_coeff: beyond known order");
  for (const auto& [m, c] : j.poly().terms())
    if (m == e) return c;
  return Rat(0);
}

inline Tensor<Rat> at_origin(const Tensor<Jet>& t) {
  Tensor<Rat> out(t.N, t.up, t.down);
  for (std::size_t k = 0; k < t.size(); ++k) out.c[k] = t.c[k].at_origin();
  return out;
}

/// Values, first and second derivatives of a family of vector fields at p0.
struct FieldJets {
  std::vector<Rat> p0;
  std::vector<std::vector<Jet>> x;  // x[a][i]: Taylor jet of X_a^i
  std::size_t dim() const { return p0.size(); }

  Rat value(std::size_t a, std::size_t i) const { return x[a][i].at_origin(); }
  Rat d1(std::size_t a, std::size_t i, std::size_t j) const { return jet_coeff(x[a][i], Mono::var(j)); }
  Rat d2(std::size_t a, std::size_t i, std::size_t j, std::size_t k) const {
    if (j == k) return 2 * jet_coeff(x[a][i], Mono::var(j, 2));
    return jet_coeff(x[a][i], Mono::var(j) * Mono::var(k));
  }
};

inline FieldJets field_jets(const std::vector<VectorField>& fields, const std::vector<Rat>& p0, int order) {
  FieldJets fj;
  fj.p0 = p0;
  for (const auto& f : fields) {
    std::vector<Jet> v;
    for (const auto& c : f.c) v.push_back(taylor(c, p0, order));
    fj.x.push_back(std::move(v));
  }
  return fj;
}

/// Combinations of the fields that vanish at p0.
inline std::vector<std::vector<Rat>> isotropy(const FieldJets& fj) {
  const std::size_t N = fj.dim(), m = fj.x.size();
  Mat<Rat> V(N, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < N; ++i) V(i, a) = fj.value(a, i);
  return kernel(V);
}

/// Linear isotropy D^i_j = d_j X^i (p0) of the combination c.
inline Mat<Rat> isotropy_matrix(const FieldJets& fj, const std::vector<Rat>& c) {
  const std::size_t N = fj.dim();
  Mat<Rat> D(N, N);
  for (std::size_t a = 0; a < c.size(); ++a)
    if (!is_zero(c[a]))
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) D(i, j) += c[a] * fj.d1(a, i, j);
  return D;
}

/// Affine space particular + span(directions) of connection values at p0.
struct ConnectionFamily {
  bool consistent = false;
  Tensor<Rat> particular;
  std::vector<Tensor<Rat>> directions;
  [[nodiscard]] long affine_dim() const { return consistent ? static_cast<long>(directions.size()) : -1; }
  [[nodiscard]] bool unique() const { return consistent && directions.empty(); }
};

namespace detail {

// Unknown Gamma^i_{jk}(p0) is column (i N + j) N + k; column N^3 holds the
// constant term.
inline Index gcol(std::size_t N, std::size_t i, std::size_t j, std::size_t k) {
  return static_cast<Index>((i * N + j) * N + k);
}

inline ConnectionFamily solve_family(const std::vector<SparseVec>& rows, std::size_t N) {
  const std::size_t U = N * N * N;
  ConnectionFamily fam;
  for (const auto& v : kernel_of_rows(rows, U + 1)) {
    Tensor<Rat> t(N, 1, 2);
    for (const auto& [c, x] : v.entries)
      if (c < U) t.c[c] = x;
    if (is_zero(v.at(static_cast<Index>(U)))) {
      fam.directions.push_back(std::move(t));
    } else {
      fam.consistent = true;
      fam.particular = Rat(1 / v.at(static_cast<Index>(U))) * std::move(t);
    }
  }
  if (!fam.consistent) fam.directions.clear();
  return fam;
}

}  // namespace detail

/// Values Gamma(p0) of the connections invariant under the transitive
/// algebra spanned by `fields`; with `quaternionic`, also nabla Q in Q.
inline ConnectionFamily invariant_connections(const AQStructure& q, const std::vector<VectorField>& fields,
                                              const std::vector<Rat>& p0, bool quaternionic) {
  const std::size_t N = q.dim(), U = N * N * N;
  const FieldJets fj = field_jets(fields, p0, 2);
  std::vector<SparseVec> rows;
  using detail::gcol;
  for (const auto& c : isotropy(fj)) {
    const Mat<Rat> D = isotropy_matrix(fj, c);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) {
          std::vector<std::pair<Index, Rat>> e;
          Rat h = 0;
          for (std::size_t a = 0; a < c.size(); ++a)
            if (!is_zero(c[a])) h += c[a] * fj.d2(a, i, j, k);
          if (!is_zero(h)) e.emplace_back(static_cast<Index>(U), h);
          for (std::size_t l = 0; l < N; ++l) {
            if (!is_zero(D(i, l))) e.emplace_back(gcol(N, l, j, k), -D(i, l));
            if (!is_zero(D(l, j))) e.emplace_back(gcol(N, i, l, k), D(l, j));
            if (!is_zero(D(l, k))) e.emplace_back(gcol(N, i, j, l), D(l, k));
          }
          SparseVec r(std::move(e));
          if (!r.empty()) rows.push_back(std::move(r));
        }
  }
  if (quaternionic) {
    // (nabla_j A)(p0) = d_j A + Gamma_j A - A Gamma_j, minus its projection
    // onto span{I, J, K} for the trace pairing, must vanish.
    std::array<Mat<Rat>, 3> A0;
    for (int a = 0; a < 3; ++a) A0[a] = eval_at(q.ops[a], p0);
    const Rat minus_n = -Rat(static_cast<long>(N));
    for (int a = 0; a < 3; ++a)
      for (std::size_t j = 0; j < N; ++j) {
        std::vector<SparseVec> M(N * N);
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t k = 0; k < N; ++k) {
            std::vector<std::pair<Index, Rat>> e;
            const Rat d = q.ops[a](i, k).diff(j).eval(p0);
            if (!is_zero(d)) e.emplace_back(static_cast<Index>(U), d);
            for (std::size_t l = 0; l < N; ++l) {
              if (!is_zero(A0[a](l, k))) e.emplace_back(gcol(N, i, j, l), A0[a](l, k));
              if (!is_zero(A0[a](i, l))) e.emplace_back(gcol(N, l, j, k), -A0[a](i, l));
            }
            M[i * N + k] = SparseVec(std::move(e));
          }
        std::array<SparseVec, 3> coef;
        for (int b = 0; b < 3; ++b) {
          SparseVec tr;
          for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k)
              if (!is_zero(A0[b](k, i))) tr = axpy(tr, A0[b](k, i), M[i * N + k]);
          coef[b] = (1 / minus_n) * tr;
        }
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t k = 0; k < N; ++k) {
            SparseVec r = M[i * N + k];
            for (int b = 0; b < 3; ++b)
              if (!is_zero(A0[b](i, k))) r = axpy(r, -A0[b](i, k), coef[b]);
            if (!r.empty()) rows.push_back(std::move(r));
          }
      }
  }
  return detail::solve_family(rows, N);
}

/// Taylor jet at p0, through degree `order`, of the invariant connection
/// with value g0 at p0. Derivatives come from L_X nabla = 0 along fields X_m
/// with X_m(p0) = e_m; the result is checked to be a consistent jet.
inline Tensor<Jet> invariant_connection_jet(const std::vector<VectorField>& fields, const std::vector<Rat>& p0,
                                            const Tensor<Rat>& g0, int order) {
  const std::size_t N = p0.size();
  const FieldJets fj = field_jets(fields, p0, order + 2);
  const std::size_t nf = fields.size();
  Mat<Rat> V(N, nf);
  for (std::size_t a = 0; a < nf; ++a)
    for (std::size_t i = 0; i < N; ++i) V(i, a) = fj.value(a, i);
  // X[m][i]: the m-th adapted field.
  std::vector<std::vector<Jet>> X(N, std::vector<Jet>(N, Jet(Poly(), order + 2)));
  for (std::size_t m = 0; m < N; ++m) {
    std::vector<Rat> e(N, Rat(0));
    e[m] = 1;
    auto c = solve(V, e);
    if (!c) throw std::invalid_argument("invariant_connection_jet: fields are not transitive at p0");
    for (std::size_t a = 0; a < nf; ++a)
      if (!is_zero((*c)[a]))
        for (std::size_t i = 0; i < N; ++i) X[m][i] = X[m][i] + Jet((*c)[a]) * fj.x[a][i];
  }
  std::vector<std::vector<std::vector<Jet>>> dX(N), ddX(N * N);
  for (std::size_t m = 0; m < N; ++m) {
    dX[m].assign(N, std::vector<Jet>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) dX[m][i][j] = X[m][i].diff(j);
  }
  // W = (M^T)^{-1} with (M^T)_{ml} = X_m^l, by a truncated Neumann series.
  std::vector<std::vector<Jet>> Y(N, std::vector<Jet>(N)), W(N, std::vector<Jet>(N)), P(N, std::vector<Jet>(N));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t l = 0; l < N; ++l) {
      Y[m][l] = m == l ? X[m][l] - Jet(1) : X[m][l];
      W[m][l] = P[m][l] = Jet(m == l ? 1 : 0);
    }
  for (int k = 1; k <= order + 1; ++k) {
    std::vector<std::vector<Jet>> Q(N, std::vector<Jet>(N));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        Jet s;
        for (std::size_t t = 0; t < N; ++t) s = s - P[a][t] * Y[t][b];
        Q[a][b] = s;
      }
    P = std::move(Q);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) W[a][b] = W[a][b] + P[a][b];
  }
  // Gradient d_l Gamma from the current jet of Gamma.
  auto gradient = [&](const Tensor<Jet>& g) {
    std::vector<Tensor<Jet>> E(N, Tensor<Jet>(N, 1, 2));
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          for (std::size_t k = 0; k < N; ++k) {
            Jet s = dX[m][i][j].diff(k);
            for (std::size_t l = 0; l < N; ++l) {
              s = s - g(l, j, k) * dX[m][i][l];
              s = s + g(i, l, k) * dX[m][l][j];
              s = s + g(i, j, l) * dX[m][l][k];
            }
            E[m](i, j, k) = s;
          }
    std::vector<Tensor<Jet>> G(N, Tensor<Jet>(N, 1, 2));
    for (std::size_t l = 0; l < N; ++l)
      for (std::size_t f = 0; f < G[l].size(); ++f) {
        Jet s;
        for (std::size_t m = 0; m < N; ++m) s = s - W[l][m] * E[m].c[f];
        G[l].c[f] = s;
      }
    return G;
  };
  Tensor<Jet> g(N, 1, 2);
  for (std::size_t f = 0; f < g.size(); ++f) g.c[f] = Jet(Poly(g0.c[f]), 0);
  auto min_order = [](const Tensor<Jet>& t) {
    int o = Jet::kExact;
    for (const auto& x : t.c) o = std::min(o, x.order());
    return o;
  };
  while (min_order(g) < order) {
    const auto G = gradient(g);
    Tensor<Jet> next(N, 1, 2);
    for (std::size_t f = 0; f < g.size(); ++f) {
      // Radial integration: degree-d part of d_l Gamma contributes y_l (.)_d / (d + 1).
      std::vector<Poly::Term> t;
      int o = Jet::kExact;
      for (std::size_t l = 0; l < N; ++l) {
        o = std::min(o, G[l].c[f].order());
        for (const auto& [mo, c] : G[l].c[f].poly().terms())
          t.emplace_back(mo * Mono::var(l), c / Rat(mo.deg + 1));
      }
      next.c[f] = Jet(Poly(g0.c[f]) + Poly::from_terms(std::move(t)), std::min(o + 1, order));
    }
    g = std::move(next);
  }
  // Consistency: the jet's own derivatives agree with the invariance equation.
  const auto G = gradient(g);
  for (std::size_t l = 0; l < N; ++l)
    for (std::size_t f = 0; f < g.size(); ++f)
      if (!(g.c[f].diff(l) - G[l].c[f]).poly().is_zero())
        throw std::logic_error("invariant_connection_jet: value at p0 is not isotropy-equivariant");
  return g;
}

/// Exact pointwise invariants of an invariant connection at p0.
struct ConnectionInvariants {
  std::size_t torsion_nonzero = 0;
  std::size_t curvature_nonzero = 0;
  std::size_t ricci_nonzero = 0;
  std::size_t nabla_curvature_nonzero = 0;
  bool first_bianchi = false;  // cyclic sum of R vanishes
};

inline ConnectionInvariants connection_invariants(const Tensor<Jet>& g) {
  const std::size_t N = g.N;
  ConnectionInvariants out;
  out.torsion_nonzero = at_origin(torsion(g)).nonzero_count();
  const Tensor<Jet> R = curvature(g);
  const Tensor<Rat> R0 = at_origin(R);
  out.curvature_nonzero = R0.nonzero_count();
  out.ricci_nonzero = at_origin(ricci(R)).nonzero_count();
  out.nabla_curvature_nonzero = at_origin(cov_deriv(g, R)).nonzero_count();
  out.first_bianchi = true;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l)
          if (!is_zero(R0(i, m, k, l) + R0(i, k, l, m) + R0(i, l, m, k))) out.first_bianchi = false;
  return out;
}

/// Isotropy-invariant symmetric bilinear forms at p0.
struct MetricVerdict {
  std::size_t invariant_forms = 0;  // dimension of the solution space
  bool nondegenerate = false;
};

/// Symmetric g with D^T g + g D = 0 for every linear isotropy D; decides
/// whether the solution space contains a nondegenerate form.
inline MetricVerdict invariant_metric_check(const std::vector<VectorField>& fields, const std::vector<Rat>& p0,
                                            std::uint64_t seed = 11) {
  const std::size_t N = p0.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::vector<long>> slot_of(N, std::vector<long>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      slot_of[i][j] = slot_of[j][i] = static_cast<long>(slots.size());
      slots.emplace_back(i, j);
    }
  const std::size_t U = slots.size();
  std::vector<SparseVec> rows;
  if (!fields.empty()) {
    const FieldJets fj = field_jets(fields, p0, 1);
    for (const auto& c : isotropy(fj)) {
      const Mat<Rat> D = isotropy_matrix(fj, c);
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = j; k < N; ++k) {
          // (D^T g + g D)_{jk} = D^l_j g_{lk} + g_{jl} D^l_k
          std::vector<std::pair<Index, Rat>> e;
          for (std::size_t l = 0; l < N; ++l) {
            if (!is_zero(D(l, j))) e.emplace_back(static_cast<Index>(slot_of[l][k]), D(l, j));
            if (!is_zero(D(l, k))) e.emplace_back(static_cast<Index>(slot_of[j][l]), D(l, k));
          }
          SparseVec r(std::move(e));
          if (!r.empty()) rows.push_back(std::move(r));
        }
    }
  }
  const auto basis = kernel_of_rows(rows, U);
  MetricVerdict v;
  v.invariant_forms = basis.size();
  if (basis.empty()) return v;
  auto form = [&](const std::vector<RatFunc>& t) {
    FieldMat g(N, N);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (const auto& [s, x] : basis[b].entries) {
        const auto [i, j] = slots[s];
        g(i, j) += t[b] * RatFunc(x);
        if (i != j) g(j, i) += t[b] * RatFunc(x);
      }
    return g;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int tries = 0; tries < 8; ++tries) {
    std::vector<RatFunc> t;
    for (std::size_t b = 0; b < basis.size(); ++b) t.emplace_back(dist(rng));
    if (rank_generic(form(t)) == N) {
      v.nondegenerate = true;
      return v;
    }
  }
  // No witness: decide with the generic element over Q(t_1, ..., t_d).
  if (basis.size() > kMaxVars) throw std::length_error("invariant_metric_check: too many invariant forms");
  std::vector<RatFunc> t;
  for (std::size_t b = 0; b < basis.size(); ++b) t.emplace_back(Poly::var(b));
  v.nondegenerate = rank_generic(form(t)) == N;
  return v;
}

}  // namespace aqsym
