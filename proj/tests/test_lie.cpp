#include "aqsym/lie/json_io.hpp"
#include "aqsym/lie/sl_h.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace aqsym;

namespace {

LieAlgebra affine_line() {
  // [x, y] = y
  std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2));
  t[0][1] = Vec::unit(1);
  t[1][0] = Rat(-1) * Vec::unit(1);
  return LieAlgebra({"x", "y"}, t);
}

LieAlgebra heisenberg3() {
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3));
  t[0][1] = Vec::unit(2);
  t[1][0] = Rat(-1) * Vec::unit(2);
  return LieAlgebra({"p", "q", "c"}, t);
}

}  // namespace

TEST(SlH, Dimensions) {
  EXPECT_EQ(build_sl_h(3).alg.dim(), 35u);
  EXPECT_EQ(build_sl_h(2).alg.dim(), 15u);
}

TEST(SlH, JacobiM3) {
  auto s = build_sl_h(3);
  EXPECT_TRUE(s.alg.antisymmetric());
  EXPECT_FALSE(s.alg.jacobi_failure().has_value());
}

TEST(SlH, BracketIsRealMatrixCommutator) {
  auto s = build_sl_h(2);
  for (std::size_t i = 0; i < s.alg.dim(); ++i)
    for (std::size_t j = 0; j < s.alg.dim(); ++j) {
      Mat<Rat> lhs = commutator(s.real_embedding(i), s.real_embedding(j));
      Mat<Rat> rhs = s.matrix(s.alg.structure(i, j)).real();
      ASSERT_EQ(lhs, rhs);
    }
}

TEST(Quaternion, Relations) {
  Quat i = Quat::unit(1), j = Quat::unit(2), k = Quat::unit(3), one = Quat::unit(0);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(i * i, -one);
  EXPECT_EQ(left_mult(i) * left_mult(j), left_mult(k));
  EXPECT_EQ(right_mult(i) * right_mult(j), right_mult(j * i));
}

TEST(GradedSlh, DimensionsN2) {
  auto g = build_graded_slh(2);
  EXPECT_EQ(g.alg.dim(), 35u);
  EXPECT_EQ(g.grading.piece(-1).size(), 8u);
  EXPECT_EQ(g.grading.piece(0).size(), 19u);
  EXPECT_EQ(g.grading.piece(1).size(), 8u);
  // dimension bookkeeping oracle: 4(n+1)^2 - 1 - 8n
  EXPECT_EQ(g.grading.piece(0).size(), 4u * 9 - 1 - 16);
}

TEST(GradedSlh, GradingElement) {
  for (std::size_t n : {2u, 3u}) {
    auto g = build_graded_slh(n);
    EXPECT_TRUE(grading_compatible(g.alg, g.grading));
    EXPECT_TRUE(grading_element_ok(g.alg, g.grading));
    std::set<int> ev(g.grading.degree.begin(), g.grading.degree.end());
    EXPECT_EQ(ev, (std::set<int>{-1, 0, 1}));
  }
}

TEST(GradedSlh, ZMatrixN2) {
  auto g = build_graded_slh(2);
  Mat<Rat> z = g.basis[g.z()].real();
  Mat<Rat> expect(12, 12);
  for (std::size_t a = 0; a < 12; ++a) expect(a, a) = a < 4 ? make_rat(2, 3) : make_rat(-1, 3);
  EXPECT_EQ(z, expect);
}

TEST(GradedSlh, JacobiAndCoordinatesRoundTrip) {
  for (std::size_t n : {2u, 3u}) {
    auto g = build_graded_slh(n);
    EXPECT_FALSE(g.alg.jacobi_failure().has_value());
    for (std::size_t i = 0; i < g.alg.dim(); ++i) EXPECT_EQ(g.coords(g.basis[i]), Vec::unit(static_cast<Index>(i)));
  }
}

TEST(GradedSlh, KillingPairsGminusWithGplus) {
  auto g = build_graded_slh(2);
  Mat<Rat> k = g.alg.killing();
  EXPECT_EQ(rank(k), g.alg.dim());
  Mat<Rat> block(8, 8);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) block(a, b) = k(a, g.g1_begin() + b);
  EXPECT_EQ(rank(block), 8u);
}

TEST(DecomposeG0, DimsAndCommutation) {
  auto g = build_graded_slh(2);
  auto d = decompose_g0(g);
  EXPECT_EQ(d.sp1.size(), 3u);
  EXPECT_EQ(d.center.size(), 1u);
  EXPECT_EQ(d.sln.size(), 15u);
  EXPECT_TRUE(bracket_span(g.alg, d.sp1, d.sln).empty());
  EXPECT_TRUE(bracket_span(g.alg, d.center, g.g0()).empty());
  EXPECT_TRUE(is_subalgebra(g.alg, d.sp1));
  EXPECT_TRUE(is_subalgebra(g.alg, d.sln));
  std::vector<Vec> all = d.sp1;
  all.insert(all.end(), d.center.begin(), d.center.end());
  all.insert(all.end(), d.sln.begin(), d.sln.end());
  EXPECT_EQ(span_of(all, g.alg.dim()).rank(), 19u);
}

TEST(Parabolic, HeisenbergN3) {
  auto g = build_graded_slh(3);
  auto p = build_parabolic_h(g);
  EXPECT_EQ(p.hplus.size(), 12u);
  EXPECT_EQ(p.h2.size(), 4u);
  auto sub = restrict_to(g.alg, p.hplus);
  EXPECT_EQ(center(sub).size(), 4u);
  Echelon h2 = span_of(p.h2, g.alg.dim());
  EXPECT_TRUE(contains_all(h2, bracket_span(g.alg, p.h1, p.h1)));
  EXPECT_TRUE(bracket_span(g.alg, p.hplus, p.h2).empty());
}

TEST(Parabolic, AbelianN2) {
  auto g = build_graded_slh(2);
  auto p = build_parabolic_h(g);
  EXPECT_EQ(p.hplus.size(), 4u);
  EXPECT_TRUE(bracket_span(g.alg, p.hplus, p.hplus).empty());
}

TEST(Parabolic, LeviPieceN3) {
  auto g = build_graded_slh(3);
  auto p = build_parabolic_h(g);
  // sp(1) + gl(1,H) + sp(1) + RZ' inside sl(3,H): 3 + 4 + 3 + 1
  EXPECT_EQ(p.h0.size(), 11u);
  EXPECT_EQ(p.tilde_minus.size(), 12u);
}

TEST(Prolongation, FullG0GivesAllOfG1) {
  auto g = build_graded_slh(2);
  EXPECT_EQ(first_prolongation(g, g.g0()).size(), 8u);
  EXPECT_TRUE(first_prolongation(g, {}).empty());
}

TEST(Structure, RadicalAndNilradical) {
  auto a = affine_line();
  EXPECT_EQ(radical(a).size(), 2u);
  EXPECT_EQ(nilradical(a).size(), 1u);
  auto h = heisenberg3();
  EXPECT_EQ(nilradical(h).size(), 3u);
  EXPECT_EQ(center(h).size(), 1u);
  EXPECT_EQ(lower_central_dims(h), (std::vector<std::size_t>{3, 1, 0}));
  auto s = build_sl_h(2);
  EXPECT_TRUE(radical(s.alg).empty());
  EXPECT_EQ(fingerprint(s.alg).levi, 15u);
}

TEST(Json, RoundTrip) {
  auto g = build_graded_slh(2);
  auto j = to_json(g.alg);
  auto back = lie_from_json(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(back.dim(), g.alg.dim());
  for (std::size_t a = 0; a < g.alg.dim(); ++a)
    for (std::size_t b = 0; b < g.alg.dim(); ++b) EXPECT_EQ(back.structure(a, b), g.alg.structure(a, b));
}
