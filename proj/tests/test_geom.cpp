#include "aqsym/geom/connection.hpp"

#include <gtest/gtest.h>

using namespace aqsym;

namespace {

std::vector<Rat> base_point(std::size_t n) {
  std::vector<Rat> p(4 * n, Rat(0));
  p[1] = 1;
  return p;
}

std::vector<VectorField> translations(std::size_t N) {
  std::vector<VectorField> out;
  for (std::size_t i = 0; i < N; ++i) out.push_back(coordinate_field(N, i));
  return out;
}

TensorField random_connection(std::size_t N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> v(-2, 2), pick(0, 3);
  TensorField g(N, 1, 2);
  for (auto& c : g.c) {
    switch (pick(rng)) {
      case 0: break;
      case 1: c = RatFunc(v(rng)); break;
      case 2: c = RatFunc(Poly(v(rng)) * Poly::var(rng() % N)); break;
      default: c = RatFunc(Poly::var(rng() % N) * Poly::var(rng() % N) + Poly(1)); break;
    }
  }
  return g;
}

// (L_X nabla)^i_{jk} on jets, written out independently of the library.
Tensor<Jet> lie_derivative_jet(const std::vector<Jet>& x, const Tensor<Jet>& g) {
  const std::size_t N = g.N;
  Tensor<Jet> out(N, 1, 2);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        Jet s = x[i].diff(j).diff(k);
        for (std::size_t l = 0; l < N; ++l) {
          s = s + x[l] * g(i, j, k).diff(l);
          s = s - g(l, j, k) * x[i].diff(l);
          s = s + g(i, l, k) * x[l].diff(j);
          s = s + g(i, j, l) * x[l].diff(k);
        }
        out(i, j, k) = s;
      }
  return out;
}

}  // namespace

TEST(Structures, QuaternionRelationsN3) {
  for (const auto& q : {build_QI(3), build_QII(3), build_flat(3)}) {
    auto r = quaternion_relations(q);
    EXPECT_TRUE(r.i_squared && r.j_squared && r.k_squared && r.ij_is_k && r.anticommute) << q.name;
  }
}

TEST(Structures, StructureTensor) {
  EXPECT_TRUE(structure_tensor(build_flat(2)).is_zero());
  EXPECT_TRUE(structure_tensor(build_QII(2)).is_zero());
  EXPECT_FALSE(structure_tensor(build_QI(2)).is_zero());
}

TEST(Structures, NijenhuisAntisymmetric) {
  const auto q = build_QI(2);
  for (const auto& A : q.ops) {
    const auto N = nijenhuis(A);
    for (std::size_t i = 0; i < N.N; ++i)
      for (std::size_t j = 0; j < N.N; ++j)
        for (std::size_t k = 0; k < N.N; ++k) ASSERT_TRUE((N(i, j, k) + N(i, k, j)).is_zero());
  }
  EXPECT_TRUE(nijenhuis(build_flat(2).I()).is_zero());
}

TEST(Structures, FlatFactorTranslationsN3) {
  for (const auto& q : {build_QI(3), build_QII(3)})
    for (std::size_t i = 8; i < 12; ++i) EXPECT_TRUE(is_symmetry(q, coordinate_field(12, i), SymmetryKind::Hypercomplex));
  // The curvature model depends on h_2.
  EXPECT_FALSE(is_symmetry(build_QII(2), coordinate_field(8, 1), SymmetryKind::Quaternionic));
}

TEST(Symmetries, FlatModel) {
  // Flat H^2: sl(3,H) and the affine group of H^2 preserving I, J, K.
  const auto q = build_flat(2);
  const auto s = symmetry_solve(q, default_bounds(q), SymmetryKind::Quaternionic);
  EXPECT_EQ(s.fields.size(), 35u);
  EXPECT_EQ(bracket_close(s.fields).dim(), 35u);
  EXPECT_EQ(fingerprint(bracket_close(s.fields)).levi, 35u);
  const auto h = symmetry_solve(q, default_bounds(q), SymmetryKind::Hypercomplex);
  EXPECT_EQ(h.fields.size(), 24u);
  for (const auto& x : h.fields) EXPECT_TRUE(is_symmetry(q, x, SymmetryKind::Hypercomplex));
}

TEST(Symmetries, LieBracketOfCoordinateFields) {
  VectorField x{{RatFunc(Poly::var(1)), RatFunc(0)}};  // h_2 d_1
  VectorField y{{RatFunc(0), RatFunc(Poly::var(0))}};  // h_1 d_2
  VectorField e{{RatFunc(Poly(-1) * Poly::var(0)), RatFunc(Poly::var(1))}};
  EXPECT_EQ(lie_bracket(x, y), e);
}

TEST(Connection, ZeroConnectionIsFlat) {
  TensorField g(4, 1, 2);
  EXPECT_TRUE(torsion(g).is_zero());
  EXPECT_TRUE(curvature(g).is_zero());
  EXPECT_TRUE(ricci(curvature(g)).is_zero());
}

TEST(Connection, HandComputedCurvature) {
  // On R^2 with Gamma^0_{11} = h_1: R^0_{1 0 1} = 1 = -R^0_{1 1 0}, Ric_{11} = 1.
  TensorField g(2, 1, 2);
  g(0, 1, 1) = RatFunc(Poly::var(0));
  EXPECT_TRUE(torsion(g).is_zero());
  const auto R = curvature(g);
  EXPECT_EQ(R.nonzero_count(), 2u);
  EXPECT_EQ(R(0, 1, 0, 1), RatFunc(1));
  EXPECT_EQ(R(0, 1, 1, 0), RatFunc(-1));
  const auto ric = ricci(R);
  EXPECT_EQ(ric.nonzero_count(), 1u);
  EXPECT_EQ(ric(1, 1), RatFunc(1));
  // Torsion sees only the antisymmetric part.
  g(0, 0, 1) = RatFunc(3);
  const auto T = torsion(g);
  EXPECT_EQ(T.nonzero_count(), 2u);
  EXPECT_EQ(T(0, 0, 1) + T(0, 1, 0), RatFunc(0));
}

TEST(Connection, LieDerivativeOfTrivialConnectionIsHessian) {
  const std::size_t N = 3;
  TensorField g(N, 1, 2);
  VectorField x{{RatFunc(Poly::var(0) * Poly::var(1)), RatFunc(Poly::var(2) * Poly::var(2)), RatFunc(Poly::var(0))}};
  const auto L = lie_derivative(x, g);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) EXPECT_EQ(L(i, j, k), x.c[i].diff(j).diff(k));
}

TEST(Connection, TranslationInvarianceMeansConstant) {
  const std::size_t N = 3;
  auto g = random_connection(N, 5);
  for (std::size_t v = 0; v < N; ++v) {
    TensorField d(N, 1, 2);
    for (std::size_t f = 0; f < g.size(); ++f) d.c[f] = g.c[f].diff(v);
    EXPECT_TRUE((lie_derivative(coordinate_field(N, v), g) - d).is_zero());
  }
}

TEST(Connection, GaugeChange) {
  const auto q = build_QI(2);
  const std::size_t N = q.dim();
  const auto g = random_connection(N, 9);
  std::vector<RatFunc> zero(N), u1(N), u2(N), sum(N);
  for (std::size_t i = 0; i < N; ++i) {
    u1[i] = RatFunc(static_cast<long>(i % 3) - 1);
    u2[i] = RatFunc(Poly::var(i));
    sum[i] = u1[i] + u2[i];
  }
  EXPECT_TRUE((gauge_change(g, q, zero) - g).is_zero());
  EXPECT_TRUE((torsion(gauge_change(g, q, u1)) - torsion(g)).is_zero());
  EXPECT_TRUE((gauge_change(gauge_change(g, q, u1), q, u2) - gauge_change(g, q, sum)).is_zero());
  EXPECT_FALSE((gauge_change(g, q, u1) - g).is_zero());
}

TEST(Connection, GaugeChangePreservesQuaternionic) {
  const auto q = build_flat(2);
  TensorField g(8, 1, 2);
  std::vector<RatFunc> u(8);
  u[0] = RatFunc(1);
  u[5] = RatFunc(Poly::var(2));
  ASSERT_TRUE(is_quaternionic(q, g));
  const auto h = gauge_change(g, q, u);
  EXPECT_TRUE(is_quaternionic(q, h));
  EXPECT_FALSE(preserves_each(q, h));
}

TEST(Connection, QuaternionicAverage) {
  const auto q = build_QI(2);
  const std::size_t N = q.dim();
  const auto g = random_connection(N, 13);
  const auto a = quaternionic_average(g, q);
  EXPECT_TRUE(is_quaternionic(q, a));
  EXPECT_TRUE(preserves_each(q, a));
  EXPECT_TRUE((quaternionic_average(a, q) - a).is_zero());
  // Any admissible basis gives the same average: rotate (I, J, K) to (J, K, I).
  EXPECT_TRUE((quaternionic_average(g, {q.J(), q.K(), q.I()}) - a).is_zero());
  // A connection preserving each of I, J, K is fixed.
  TensorField flat(N, 1, 2);
  EXPECT_TRUE(quaternionic_average(flat, build_flat(2)).is_zero());
}

TEST(Connection, TranslationInvariantFamilies) {
  // Constant Christoffel symbols: N^3 of them, and N (4n^2 + 3) with values
  // in the normalizer gl(n,H) + sp(1) of Q.
  const auto q = build_flat(2);
  const auto tr = translations(8);
  const auto p0 = base_point(2);
  EXPECT_EQ(invariant_connections(q, tr, p0, false).affine_dim(), 512);
  EXPECT_EQ(invariant_connections(q, tr, p0, true).affine_dim(), 8 * 19);
  const auto m = invariant_metric_check(tr, p0);
  EXPECT_EQ(m.invariant_forms, 36u);
  EXPECT_TRUE(m.nondegenerate);
}

TEST(Connection, FlatModelFamilies) {
  const auto q = build_flat(2);
  const auto p0 = base_point(2);
  // The affine group preserves only the flat connection; sl(3,H) none at all.
  const auto aff = symmetry_solve(q, default_bounds(q), SymmetryKind::Hypercomplex);
  const auto fa = invariant_connections(q, aff.fields, p0, false);
  ASSERT_TRUE(fa.unique());
  EXPECT_TRUE(fa.particular.is_zero());
  const auto full = symmetry_solve(q, default_bounds(q), SymmetryKind::Quaternionic);
  EXPECT_FALSE(invariant_connections(q, full.fields, p0, true).consistent);
  EXPECT_EQ(invariant_connections(q, full.fields, p0, true).affine_dim(), -1);
}

TEST(Connection, QIJetIsInvariant) {
  const auto q = build_QI(2);
  const auto p0 = base_point(2);
  const auto sym = symmetry_solve(q, default_bounds(q), SymmetryKind::Quaternionic);
  ASSERT_EQ(sym.fields.size(), 17u);
  const auto fam = invariant_connections(q, sym.fields, p0, true);
  ASSERT_EQ(fam.affine_dim(), 2);
  const auto members = {fam.particular, fam.particular + fam.directions[0],
                        fam.particular + Rat(-2) * fam.directions[1]};
  for (const auto& g0 : members) {
    const auto g = invariant_connection_jet(sym.fields, p0, g0, 2);
    EXPECT_TRUE((at_origin(g) - g0).is_zero());
    for (const auto& x : sym.fields) {
      std::vector<Jet> xj;
      for (const auto& c : x.c) xj.push_back(taylor(c, p0, 3));
      const auto L = lie_derivative_jet(xj, g);
      for (const auto& c : L.c) ASSERT_TRUE(c.poly().is_zero());
    }
  }
}

TEST(Connection, JetInvariantsOfZero) {
  Tensor<Jet> g(4, 1, 2);
  const auto inv = connection_invariants(g);
  EXPECT_EQ(inv.torsion_nonzero + inv.curvature_nonzero + inv.ricci_nonzero + inv.nabla_curvature_nonzero, 0u);
  EXPECT_TRUE(inv.first_bianchi);
}

TEST(Jets, TaylorOfRationalFunction) {
  // 1 / (1 - h_1) at the origin: 1 + h_1 + h_1^2 + ...
  const RatFunc f(Poly(1), Poly(1) - Poly::var(0));
  const auto j = taylor(f, {Rat(0), Rat(0)}, 4);
  for (unsigned d = 0; d <= 4; ++d) EXPECT_EQ(jet_coeff(j, Mono::var(0, d)), Rat(1));
  EXPECT_THROW(jet_coeff(j, Mono::var(0, 5)), std::logic_error);
  // Around (1/2, 0) the value is 2 and the first derivative 4.
  const auto k = taylor(f, {Rat(1, 2), Rat(0)}, 2);
  EXPECT_EQ(k.at_origin(), Rat(2));
  EXPECT_EQ(jet_coeff(k, Mono::var(0)), Rat(4));
}
