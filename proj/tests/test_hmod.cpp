#include "aqsym/hmod/models.hpp"
#include "aqsym/hmod/structure.hpp"

#include <gtest/gtest.h>

using namespace aqsym;

namespace {

LieAlgebra sl2() {
  // h, e, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3));
  t[0][1] = Rat(2) * Vec::unit(1);
  t[1][0] = Rat(-2) * Vec::unit(1);
  t[0][2] = Rat(-2) * Vec::unit(2);
  t[2][0] = Rat(2) * Vec::unit(2);
  t[1][2] = Vec::unit(0);
  t[2][1] = Rat(-1) * Vec::unit(0);
  return LieAlgebra({"h", "e", "f"}, t);
}

SparseMat mat2(int a, int b, int c, int d) {
  SparseMat m(2, 2);
  m.cols[0] = SparseVec::from_dense({Rat(a), Rat(c)});
  m.cols[1] = SparseVec::from_dense({Rat(b), Rat(d)});
  return m;
}

ModuleRep standard_sl2() {
  ModuleRep m;
  m.name = "C^2";
  m.labels = {"e1", "e2"};
  m.action = {mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
  return m;
}

struct N2 {
  GradedSlh g = build_graded_slh(2);
  ParabolicH par = build_parabolic_h(g);
  TensorModule v2 = build_curvature_module(g);
  TensorModule v1 = build_torsion_module(g);
  ModuleElement w2 = curvature_extremal(v2, g);
  ModuleElement w1 = torsion_extremal(v1, g);
};

const N2& n2() {
  static const N2 x;
  return x;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(FormSpace, Dimensions) {
  for (std::size_t N : {3u, 5u, 8u})
    for (std::size_t p = 0; p <= 3; ++p) {
      EXPECT_EQ(FormSpace(FormKind::Sym, p, N, 2).dim(), binom(N + p - 1, p) * 2);
      EXPECT_EQ(FormSpace(FormKind::Alt, p, N, 3).dim(), binom(N, p) * 3);
    }
}

TEST(FormSpace, AltCanonicalSign) {
  FormSpace s(FormKind::Alt, 3, 5, 1);
  auto [r1, s1] = s.canonical({0, 1, 2});
  auto [r2, s2] = s.canonical({1, 0, 2});
  auto [r3, s3] = s.canonical({2, 0, 1});
  EXPECT_EQ(r1, r2);
  EXPECT_EQ(r1, r3);
  EXPECT_EQ(s1, -s2);
  EXPECT_EQ(s1, s3);
  EXPECT_EQ(s.canonical({1, 1, 2}).first, -1);
}

TEST(ToyModule, StandardSl2) {
  const auto g = sl2();
  const auto m = standard_sl2();
  EXPECT_FALSE(homomorphism_failure(g, m).has_value());
  // The line of e1 is fixed by the Borel h, e; its annihilator is e alone.
  const auto ann = annihilator(m, SparseVec::unit(0));
  ASSERT_EQ(ann.size(), 1u);
  EXPECT_EQ(ann[0], Vec::unit(1));
  EXPECT_EQ(orbit_dimension(m, SparseVec::unit(0)), 1u);
  std::mt19937_64 rng(4);
  EXPECT_EQ(orbit_dimension(m, random_element(2, rng)), 1u);
  auto t = theta_grading(m, Vec::unit(0));
  EXPECT_EQ(t.eigenvalues, (std::vector<Rat>{Rat(-1), Rat(1)}));
  EXPECT_TRUE(raises_theta(m, t, Vec::unit(1), Rat(2)));
}

TEST(ToyModule, BrokenActionDetected) {
  auto m = standard_sl2();
  m.action[2] = mat2(0, 0, 2, 0);
  EXPECT_TRUE(homomorphism_failure(sl2(), m).has_value());
}

TEST(ToyModule, EquivariantMapsBetweenCopies) {
  // Hom_sl2(C^2, C^2) is the scalars.
  const auto m = standard_sl2();
  const std::vector<Vec> basis{Vec::unit(0), Vec::unit(1), Vec::unit(2)};
  auto maps = equivariant_maps(m, m, SparseVec::unit(0), {Vec::unit(1), Vec::unit(2)}, {Vec::unit(0)}, basis);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(rank(maps[0]), 2u);
}

TEST(Modules, DimensionsAndActionN2) {
  const auto& x = n2();
  EXPECT_EQ(x.v2.rep.dim(), 70u);
  EXPECT_EQ(x.v1.rep.dim(), 80u);
  EXPECT_EQ(x.v2.rep.acting_dim(), x.g.dim_g0());
  EXPECT_FALSE(homomorphism_failure(x.g.alg, x.v2.rep).has_value());
  EXPECT_FALSE(homomorphism_failure(x.g.alg, x.v1.rep).has_value());
}

TEST(Modules, ExtremalVectorsAreHighest) {
  // h_+ kills both extremal vectors and Z' scales them.
  const auto& x = n2();
  for (const auto& [m, w] : {std::make_pair(&x.v2, &x.w2), std::make_pair(&x.v1, &x.w1)}) {
    ASSERT_FALSE(w->coords.empty());
    for (const auto& h : x.par.hplus) EXPECT_TRUE(m->rep.apply(h, w->coords).empty());
    const auto z = m->rep.apply(x.par.zprime, w->coords);
    EXPECT_FALSE(z.empty());
    EXPECT_EQ(rank_of({z, w->coords}, m->rep.dim()), 1u);
  }
}

TEST(Annihilators, N2) {
  const auto& x = n2();
  const auto a2 = annihilator(x.v2.rep, x.w2.coords);
  const auto a1 = annihilator(x.v1.rep, x.w1.coords);
  EXPECT_EQ(a2.size(), 9u);
  EXPECT_EQ(a1.size(), 9u);
  EXPECT_TRUE(is_subalgebra(x.g.alg, a2));
  EXPECT_TRUE(is_subalgebra(x.g.alg, a1));
  EXPECT_TRUE(structural_match(x.g, a2, Corollary::Curvature).ok);
  EXPECT_TRUE(structural_match(x.g, a1, Corollary::Torsion).ok);
  // The curvature and torsion annihilators are not the same subalgebra.
  EXPECT_FALSE(structural_match(x.g, a1, Corollary::Curvature).ok);
  EXPECT_EQ(first_prolongation(x.g, a2).size(), 0u);
  EXPECT_EQ(first_prolongation(x.g, a1).size(), 0u);
}

TEST(Annihilators, ProlongationOfFullG0IsG1) {
  for (std::size_t n : {2u, 3u}) {
    const auto g = build_graded_slh(n);
    EXPECT_EQ(first_prolongation(g, g.g0()).size(), 4 * n);
    EXPECT_EQ(first_prolongation(g, {}).size(), 0u);
  }
}

TEST(Orbits, N2) {
  const auto& x = n2();
  // dim g_0 - dim a_0 - 1 = 19 - 9 - 1
  EXPECT_EQ(orbit_dimension(x.v2.rep, x.w2.coords), 9u);
  EXPECT_EQ(orbit_dimension(x.v1.rep, x.w1.coords), 9u);
  std::vector<Vec> pair = x.par.sp1_left;
  pair.insert(pair.end(), x.par.sp1_right.begin(), x.par.sp1_right.end());
  EXPECT_EQ(orbit_dimension(x.v2.rep, x.w2.coords, pair), 5u);
}

TEST(Theta, TopEigenspaces) {
  const auto& x = n2();
  const auto t2 = theta_grading(x.v2.rep, x.par.zprime);
  const auto t1 = theta_grading(x.v1.rep, x.par.zprime);
  EXPECT_EQ(t2.dim_max(), 8u);
  // Z' commutes with sp(1) (left), which acts on the top space of V^I with
  // spin 3/2; a real module of that type has dimension divisible by 8.
  EXPECT_EQ(t1.dim_max(), 8u);
  std::vector<SparseVec> top;
  for (Index i : t1.spaces.back()) top.push_back(SparseVec::unit(i));
  Echelon span = span_of(top, x.v1.rep.dim());
  for (const auto& s : x.par.sp1_left)
    for (const auto& v : top) EXPECT_TRUE(span.contains(x.v1.rep.apply(s, v)));
  for (const auto& s : x.par.sp1_left) EXPECT_TRUE(acts_as_complex_structure(x.v1.rep, top, s));
  // h_+ raises theta, so the top space is its kernel.
  const auto ker = common_kernel(x.v1.rep, x.par.hplus);
  EXPECT_EQ(rank_of(ker, x.v1.rep.dim()), t1.dim_max());
}

TEST(Annihilators, N3) {
  const auto g = build_graded_slh(3);
  const auto v2 = build_curvature_module(g);
  const auto a2 = annihilator(v2.rep, curvature_extremal(v2, g).coords);
  EXPECT_EQ(a2.size(), 21u);
  EXPECT_TRUE(structural_match(g, a2, Corollary::Curvature).ok);
  EXPECT_EQ(first_prolongation(g, a2).size(), 0u);
  EXPECT_EQ(orbit_dimension(v2.rep, curvature_extremal(v2, g).coords), 17u);
}
