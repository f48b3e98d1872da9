#include "aqsym/deform/bmap.hpp"
#include "aqsym/deform/deformed.hpp"

#include <gtest/gtest.h>

using namespace aqsym;

namespace {

const GradedSlh& g2() {
  static const GradedSlh g = build_graded_slh(2);
  return g;
}

const EquivariantB& b2() {
  static const EquivariantB b = equivariant_b(g2());
  return b;
}

const DeformedAlgebra& f2() {
  static const DeformedAlgebra f = deform_curvature(g2(), b2());
  return f;
}

const DeformedAlgebra& f1() {
  static const DeformedAlgebra f = deform_torsion(g2());
  return f;
}

// The graded model embedded in sl(n+1,H): brackets agree with the ambient ones.
bool embedding_is_homomorphism(const GradedModel& m, const LieAlgebra& ambient) {
  for (std::size_t i = 0; i < m.alg.dim(); ++i)
    for (std::size_t j = 0; j < m.alg.dim(); ++j) {
      Vec image;
      for (const auto& [k, a] : m.alg.structure(i, j).entries) image = axpy(image, a, m.embedding[k]);
      if (!(image == ambient.bracket(m.embedding[i], m.embedding[j]))) return false;
    }
  return true;
}

}  // namespace

TEST(BMap, UniqueAndEquivariant) {
  const auto& b = b2();
  EXPECT_EQ(b.solution_dim, 1u);
  for (const auto& x : g2().g0()) ASSERT_EQ(b.map * b.curvature.rep.rho(x), b.b_space.rho(x) * b.map);
  EXPECT_EQ(b.map.apply(b.w), b.bw);
}

TEST(BMap, ClosedFormula) {
  const auto& b = b2();
  const auto bw = to_right_convention(g2(), b.space, b.bw);
  EXPECT_EQ(difference_count(bw, printed_b(2, true)), 0u);
  EXPECT_GT(difference_count(bw, printed_b(2, false)), 0u);
  EXPECT_FALSE(proportionality(bw, printed_b(2, false)).has_value());
}

TEST(BMap, PrintedFactorIsNotAnAction) {
  // The first g_0-factor of the formula as a map H_n -> H_1, written after
  // quaternion conjugation; undo it before asking for an element of g_0.
  const Index dn = 4;
  auto raw = [](std::map<std::pair<Index, Index>, Rat> m) {
    for (auto& [k, v] : m) v *= detail::conj_sign(k.first) * detail::conj_sign(k.second);
    return m;
  };
  std::map<std::pair<Index, Index>, Rat> corrected{{{dn + 1, 0}, 1}, {{dn + 0, 1}, -1}, {{dn + 2, 3}, 1}, {{dn + 3, 2}, -1}};
  auto printed = corrected;
  printed.erase({dn + 0, 1});
  printed[{dn + 0, 2}] = -1;
  EXPECT_TRUE(is_g0_action(g2(), raw(corrected)));
  EXPECT_FALSE(is_g0_action(g2(), raw(printed)));
}

TEST(Models, GradedModelsEmbed) {
  EXPECT_TRUE(embedding_is_homomorphism(f2().model, g2().alg));
  EXPECT_TRUE(embedding_is_homomorphism(f1().model, g2().alg));
  EXPECT_EQ(f2().model.alg.dim(), 17u);
  EXPECT_EQ(f2().model.hplus.size(), 4u);
}

TEST(Deformed, JacobiAndDimension) {
  for (const auto* f : {&f1(), &f2()}) {
    EXPECT_EQ(f->alg.dim(), 17u);
    EXPECT_FALSE(f->alg.jacobi_failure().has_value());
    // Only brackets of g_{-1} with itself change.
    const auto ch = changed_brackets(*f);
    EXPECT_FALSE(ch.empty());
    for (const auto& [i, j] : ch) {
      EXPECT_LT(i, 8u);
      EXPECT_LT(j, 8u);
    }
  }
}

TEST(Deformed, Properties) {
  EXPECT_TRUE(symmetric_pair_check(f2()));
  EXPECT_FALSE(symmetric_pair_check(f1()));
  EXPECT_TRUE(gm1_nilpotent_ideal(f1()));
  EXPECT_FALSE(gm1_nilpotent_ideal(f2()));
  const auto& f = f1();
  const auto hn = bracket_image(f.alg, f.model.h_last, f.model.h_last);
  EXPECT_EQ(hn.size(), 3u);
  EXPECT_TRUE(contains_all(span_of(f.model.h_first, f.alg.dim()), hn));
  EXPECT_TRUE(bracket_image(f.alg, f.model.h_first, f.model.h_first).empty());
}

TEST(Deformed, Fingerprints) {
  const auto a = fingerprint(f2().alg), b = fingerprint(f1().alg);
  EXPECT_EQ(a.derived, (std::vector<std::size_t>{17, 15, 13}));
  EXPECT_EQ(b.derived, (std::vector<std::size_t>{17, 15}));
  for (const auto& x : {a, b}) {
    EXPECT_EQ(x.levi, 3u);
    EXPECT_EQ(x.nilradical, 12u);
    EXPECT_EQ(x.center, 0u);
  }
  EXPECT_EQ(levi_dim(f2().alg), 3u);
}

TEST(Deformed, ScaledCocycleStillLie) {
  // Jacobi is linear in the cocycle, so any multiple of b(w) works.
  const auto& b = b2();
  EquivariantB scaled = b;
  scaled.bw = Rat(-3) * b.bw;
  const auto f = deform_curvature(g2(), scaled);
  EXPECT_EQ(f.alg.dim(), 17u);
  EXPECT_EQ(fingerprint(f.alg).derived, fingerprint(f2().alg).derived);
}

TEST(Deformed, NonEquivariantTermRejected) {
  auto model = f2().model;
  const Index x = g2().g0_begin();
  EXPECT_ANY_THROW(deform_model(model, "bad", [&](std::size_t i, std::size_t j) {
    if (i == 0 && j == 5) return Vec::unit(x);
    if (i == 5 && j == 0) return Rat(-1) * Vec::unit(x);
    return Vec();
  }));
}
