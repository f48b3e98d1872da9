#pragma once

// Almost quaternionic structures on a chart of H^n = R^{4n}(h_1, ..., h_{4n})
// given by endomorphism fields I, J and K = IJ with rational-function entries.

#include "aqsym/exact/matrix.hpp"
#include "aqsym/exact/ratfunc.hpp"

#include <array>
#include <string>
#include <vector>

namespace aqsym {

using FieldMat = Mat<RatFunc>;

struct AQStructure {
  std::string name;
  std::size_t n = 0;
  std::array<FieldMat, 3> ops;  // I, J, K
  std::vector<Poly> guard;      // polynomials required to be nonzero

  [[nodiscard]] std::size_t dim() const { return 4 * n; }
  [[nodiscard]] const FieldMat& I() const { return ops[0]; }
  [[nodiscard]] const FieldMat& J() const { return ops[1]; }
  [[nodiscard]] const FieldMat& K() const { return ops[2]; }
  /// Product of the guard polynomials (1 when empty).
  [[nodiscard]] Poly guard_product() const {
    Poly g(1);
    for (const auto& p : guard) g = g * p;
    return g;
  }
};

/// The coordinate h_i, 1-based.
inline Poly hvar(std::size_t i) { return Poly::var(i - 1); }

namespace detail {

inline FieldMat const_block(const std::array<std::array<int, 4>, 4>& a) {
  FieldMat m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = RatFunc(a[i][j]);
  return m;
}

inline FieldMat poly_block(const std::array<std::array<Poly, 4>, 4>& a, const Poly& den) {
  FieldMat m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = RatFunc(a[i][j], den);
  return m;
}

inline void put_block(FieldMat& m, std::size_t r, std::size_t c, const FieldMat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r + i, c + j) = b(i, j);
}

}  // namespace detail

inline FieldMat block_AI() {
  return detail::const_block({{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}});
}
inline FieldMat block_AJ() {
  return detail::const_block({{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}});
}

/// alpha^2 = h2^2 + h3^2 + h4^2 and beta^2 = h2^2 - h3^2 - h4^2.
inline Poly alpha2() { return hvar(2) * hvar(2) + hvar(3) * hvar(3) + hvar(4) * hvar(4); }
inline Poly beta2() { return hvar(2) * hvar(2) - hvar(3) * hvar(3) - hvar(4) * hvar(4); }

/// The printed 4x4 blocks of the curvature model for n = 2.
struct CurvatureBlocks {
  FieldMat AI, BI, CIt, AJ, BJ, CJt;
};

inline CurvatureBlocks curvature_blocks() {
  IrreducibleRegistry::instance().add(alpha2());
  const Poly h2 = hvar(2), h3 = hvar(3), h4 = hvar(4), h5 = hvar(5), h6 = hvar(6), h7 = hvar(7), h8 = hvar(8);
  const Poly a2 = alpha2(), b2 = beta2(), z(0);
  const Poly h22 = h2 * h2, h33 = h3 * h3, h44 = h4 * h4;
  CurvatureBlocks b;
  b.AI = block_AI();
  b.AJ = block_AJ();
  b.BI = detail::poly_block({{{z, 2 * h22 - a2, -2 * h2 * h4, 2 * h2 * h3},
                              {a2 - 2 * h22, z, 2 * h2 * h3, 2 * h2 * h4},
                              {2 * h2 * h4, -2 * h2 * h3, z, 2 * h22 - a2},
                              {-2 * h2 * h3, -2 * h2 * h4, a2 - 2 * h22, z}}},
                            a2);
  FieldMat ci1 = detail::poly_block({{{z, h2 * (2 * a2 - 3 * h22), h3 * (a2 - 3 * h22), h4 * (a2 - 3 * h22)},
                                      {h2 * (4 * a2 - 3 * h22), z, -h4 * (h22 + a2), h3 * (h22 + a2)},
                                      {h4 * (3 * h22 - a2), h3 * (3 * h22 + a2), h2 * (3 * h33 + h44), 2 * h2 * h3 * h4},
                                      {h3 * (a2 - 3 * h22), h4 * (3 * h22 + a2), 2 * h2 * h3 * h4, h2 * (h33 + 3 * h44)}}},
                                    2 * a2);
  FieldMat ci2 = detail::poly_block({{{h2 * h5 + h3 * h7 + h4 * h8, -h2 * h6 - h3 * h8 + h4 * h7, z, z},
                                      {h2 * h6 - h3 * h8 + h4 * h7, h2 * h5 - h3 * h7 - h4 * h8, z, z},
                                      {h2 * h7 - h3 * h5 - h4 * h6, -h2 * h8 + h3 * h6 - h4 * h5, z, z},
                                      {h2 * h8 + h3 * h6 - h4 * h5, h2 * h7 + h3 * h5 + h4 * h6, z, z}}},
                                    a2);
  b.CIt = ci1 + ci2;
  b.BJ = detail::poly_block({{{z, -2 * h2 * h3, 2 * h3 * h4, a2 - 2 * h33},
                              {2 * h2 * h3, z, a2 - 2 * h33, -2 * h3 * h4},
                              {-2 * h3 * h4, 2 * h33 - a2, z, -2 * h2 * h3},
                              {2 * h33 - a2, 2 * h3 * h4, 2 * h2 * h3, z}}},
                            a2);
  FieldMat cj1 = detail::poly_block({{{3 * h4 * a2, h3 * (6 * h22 - a2), h2 * (6 * h33 - a2), 6 * h2 * h3 * h4},
                                      {h3 * (6 * h22 - 5 * a2), -3 * h4 * a2, 2 * h2 * h3 * h4, h2 * (3 * a2 - 2 * h33)},
                                      {-6 * h2 * h3 * h4, 3 * h2 * (a2 - 2 * h33), h3 * (b2 - 4 * h33), h4 * (3 * a2 - 4 * h33)},
                                      {h2 * (6 * h33 - a2), -6 * h2 * h3 * h4, -h4 * (3 * a2 + 4 * h33), h3 * (b2 - 4 * h44)}}},
                                    4 * a2);
  FieldMat cj2 = detail::poly_block({{{h2 * h7 - h3 * h5 + h4 * h6, z, h2 * h6 + h3 * h8 - h4 * h7, z},
                                      {-h2 * h8 - h3 * h6 - h4 * h5, z, -h2 * h5 + h3 * h7 + h4 * h8, z},
                                      {-h2 * h5 - h3 * h7 + h4 * h8, z, h2 * h8 - h3 * h6 + h4 * h5, z},
                                      {h2 * h6 - h3 * h8 - h4 * h7, z, -h2 * h7 - h3 * h5 - h4 * h6, z}}},
                                    a2);
  b.CJt = cj1 + cj2;
  return b;
}

/// [[A, C], [0, B]] on the top 8x8 block, then `a` on the remaining diagonal
/// 4x4 blocks.
inline FieldMat assemble(std::size_t n, const FieldMat& top, const FieldMat& a) {
  FieldMat m(4 * n, 4 * n);
  detail::put_block(m, 0, 0, top);
  for (std::size_t s = 2; s < n; ++s) detail::put_block(m, 4 * s, 4 * s, a);
  return m;
}

inline FieldMat printed_top(const FieldMat& a, const FieldMat& ct, const FieldMat& b) {
  FieldMat m(8, 8);
  detail::put_block(m, 0, 0, a);
  detail::put_block(m, 0, 4, ct.transpose());
  detail::put_block(m, 4, 4, b);
  return m;
}

/// The printed matrices, read as acting on row vectors: the tangent
/// endomorphism is the transpose of the printed block matrix.
inline AQStructure build_QII(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_QII: n >= 2 required");
  const CurvatureBlocks b = curvature_blocks();
  AQStructure q;
  q.name = "Q_II";
  q.n = n;
  q.ops[0] = assemble(n, printed_top(b.AI, b.CIt, b.BI), b.AI).transpose();
  q.ops[1] = assemble(n, printed_top(b.AJ, b.CJt, b.BJ), b.AJ).transpose();
  q.ops[2] = q.ops[0] * q.ops[1];
  q.guard = {alpha2()};
  return q;
}

/// The printed torsion-model matrices, column convention.
inline AQStructure build_QI(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_QI: n >= 2 required");
  const FieldMat ai = block_AI(), aj = block_AJ();
  FieldMat i8(8, 8), j8(8, 8);
  detail::put_block(i8, 0, 0, ai);
  detail::put_block(i8, 4, 4, ai);
  detail::put_block(j8, 0, 0, aj);
  detail::put_block(j8, 4, 4, aj);
  const RatFunc h7 = hvar(7);
  i8(0, 5) = h7;
  i8(1, 4) = h7;
  j8(0, 6) = -h7;
  j8(2, 4) = -h7;
  AQStructure q;
  q.name = "Q_I";
  q.n = n;
  q.ops[0] = assemble(n, i8, ai);
  q.ops[1] = assemble(n, j8, aj);
  q.ops[2] = q.ops[0] * q.ops[1];
  return q;
}

/// Constant structure with A_I, A_J on every diagonal block.
inline AQStructure build_flat(std::size_t n) {
  AQStructure q;
  q.name = "flat";
  q.n = n;
  FieldMat i(4 * n, 4 * n), j(4 * n, 4 * n);
  for (std::size_t s = 0; s < n; ++s) {
    detail::put_block(i, 4 * s, 4 * s, block_AI());
    detail::put_block(j, 4 * s, 4 * s, block_AJ());
  }
  q.ops = {i, j, i * j};
  return q;
}

struct QuaternionRelations {
  bool i_squared = false, j_squared = false, k_squared = false, ij_is_k = false, anticommute = false;
  [[nodiscard]] bool all() const { return i_squared && j_squared && k_squared && ij_is_k && anticommute; }
};

inline QuaternionRelations quaternion_relations(const AQStructure& q) {
  const FieldMat id = FieldMat::identity(q.dim());
  QuaternionRelations r;
  r.i_squared = (q.I() * q.I() + id).is_zero();
  r.j_squared = (q.J() * q.J() + id).is_zero();
  r.k_squared = (q.K() * q.K() + id).is_zero();
  r.ij_is_k = (q.I() * q.J() - q.K()).is_zero();
  r.anticommute = (q.I() * q.J() + q.J() * q.I()).is_zero();
  return r;
}

/// Values at a rational point; throws ZeroDenominator on the guard locus.
inline Mat<Rat> eval_at(const FieldMat& m, const std::vector<Rat>& x) {
  Mat<Rat> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(x);
  return out;
}

}  // namespace aqsym
