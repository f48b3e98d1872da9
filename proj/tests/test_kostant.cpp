#include "aqsym/hmod/models.hpp"
#include "aqsym/kostant/cohomology.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace aqsym;

namespace {

const GradedSlh& g2() {
  static const GradedSlh g = build_graded_slh(2);
  return g;
}

const std::vector<HarmonicSummand>& h2() {
  static const std::vector<HarmonicSummand> s = h2_decompose(g2());
  return s;
}

}  // namespace

TEST(Cochains, Dimensions) {
  const auto& g = g2();
  EXPECT_EQ(CochainSpace(g, 0).dim(), 35u);
  EXPECT_EQ(CochainSpace(g, 1).dim(), 8u * 35u);
  EXPECT_EQ(CochainSpace(g, 2).dim(), 28u * 35u);
  EXPECT_EQ(CochainSpace(g, 3).dim(), 56u * 35u);
}

TEST(Cochains, DifferentialSquaresToZero) {
  const auto& g = g2();
  for (std::size_t k = 0; k < 2; ++k) EXPECT_TRUE((ce_differential(g, k + 1) * ce_differential(g, k)).is_zero()) << k;
}

TEST(Cochains, H0IsGMinusOne) {
  // The centralizer of g_{-1} in g is g_{-1} itself.
  const auto& g = g2();
  EXPECT_EQ(kernel(ce_differential(g, 0)).size(), g.dim_gm1());
}

TEST(Cochains, DifferentialIsEquivariant) {
  const auto& g = g2();
  CochainSpace c1(g, 1), c2(g, 2);
  const SparseMat d = ce_differential(g, 1);
  std::mt19937_64 rng(2);
  for (const auto& x : g.g0())
    for (int t = 0; t < 3; ++t) {
      const SparseVec phi = random_element(c1.dim(), rng, 2);
      ASSERT_EQ(d.apply(cochain_act(c1, x, phi)), cochain_act(c2, x, d.apply(phi)));
    }
}

TEST(H2, TotalDimensionWithoutHomogeneitySplit) {
  const auto& g = g2();
  const SparseMat d1 = ce_differential(g, 1), d2 = ce_differential(g, 2);
  const std::size_t total = kernel(d2).size() - rank(d1);
  std::size_t sum = 0;
  for (const auto& s : h2()) sum += s.dim();
  EXPECT_EQ(total, sum);
  EXPECT_EQ(total, 150u);
}

TEST(H2, HomogeneitiesAndDimensions) {
  std::vector<std::size_t> dims;
  h2_decompose(g2(), &dims);
  EXPECT_EQ(dims, (std::vector<std::size_t>{80, 70, 0}));
  ASSERT_EQ(h2().size(), 2u);
  EXPECT_EQ(h2()[0].homogeneity, 1);
  EXPECT_EQ(h2()[1].homogeneity, 2);
  for (const auto& s : h2()) {
    EXPECT_EQ(s.cocycle_dim - s.coboundary_dim, s.dim());
    EXPECT_FALSE(homomorphism_failure(g2().alg, s.rep).has_value());
  }
}

TEST(H2, BasisIndependence) {
  const auto& g = g2();
  std::vector<Index> perm(CochainSpace(g, 2).dim());
  std::iota(perm.begin(), perm.end(), Index(0));
  std::mt19937_64 rng(8);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int h = 1; h <= 3; ++h) EXPECT_EQ(h2_summand(g, h, {perm}).dim(), h2_summand(g, h).dim());
}

TEST(H2, MatchesTensorModels) {
  const auto& g = g2();
  const auto v1 = build_torsion_module(g);
  const auto v2 = build_curvature_module(g);
  const auto m1 = match_module(h2()[0], v1.rep, torsion_extremal(v1, g).coords, g);
  const auto m2 = match_module(h2()[1], v2.rep, curvature_extremal(v2, g).coords, g);
  EXPECT_EQ(m1.solution_dim, 1u);
  EXPECT_EQ(m2.solution_dim, 1u);
  EXPECT_EQ(rank(m2.map), v2.rep.dim());
  for (const auto& x : g.g0()) {
    ASSERT_EQ(m1.map * v1.rep.rho(x), h2()[0].rep.rho(x) * m1.map);
    ASSERT_EQ(m2.map * v2.rep.rho(x), h2()[1].rep.rho(x) * m2.map);
  }
  // Swapped targets have different dimensions, so no isomorphism exists.
  EXPECT_THROW(match_module(h2()[1], v1.rep, torsion_extremal(v1, g).coords, g), NoEquivariantIso);
}
