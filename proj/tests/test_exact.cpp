#include "aqsym/exact/matrix.hpp"
#include "aqsym/exact/modular.hpp"
#include "aqsym/exact/poly.hpp"
#include "aqsym/exact/ratfunc.hpp"
#include "aqsym/exact/sparse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace aqsym;

namespace {

Poly h(int i) { return Poly::var(static_cast<std::size_t>(i - 1)); }
Poly alpha2() { return h(2) * h(2) + h(3) * h(3) + h(4) * h(4); }

Mat<Rat> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> val(-3, 3), den(1, 3), sparsity(0, 2);
  Mat<Rat> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (sparsity(rng) != 0) m(i, j) = make_rat(val(rng), den(rng));
  return m;
}

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), var(1, 4), terms(1, 4), deg(0, 2);
  Poly p;
  for (int t = terms(rng); t > 0; --t) {
    Poly m(coef(rng));
    for (int d = deg(rng); d > 0; --d) m *= h(var(rng));
    p += m;
  }
  return p;
}

}  // namespace

TEST(Rank, Identity) { EXPECT_EQ(rank(Mat<Rat>::identity(5)), 5u); }

TEST(Rank, Zero) { EXPECT_EQ(rank(Mat<Rat>(3, 4)), 0u); }

TEST(Rank, ProportionalRows) {
  Mat<Rat> m{{1, 2}, {2, 4}};
  EXPECT_EQ(rank(m), 1u);
}

TEST(Kernel, IdentityHasNone) { EXPECT_TRUE(kernel(Mat<Rat>::identity(4)).empty()); }

TEST(Kernel, ZeroMatrixIsEverything) { EXPECT_EQ(kernel(Mat<Rat>(2, 3)).size(), 3u); }

TEST(Kernel, SingleRowAnnihilated) {
  Mat<Rat> m{{1, 1, 0}};
  auto k = kernel(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    auto mv = m.apply(v);
    EXPECT_TRUE(is_zero(mv[0]));
  }
}

TEST(Kernel, RankNullityRandom) {
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 7);
    auto m = random_matrix(rng, dim(rng), dim(rng));
    auto k = kernel(m);
    EXPECT_EQ(rank(m) + k.size(), m.cols());
    EXPECT_EQ(rank_generic(m), rank(m));
    for (const auto& v : k)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(is_zero(x));
  }
}

TEST(Sparse, KernelMatchesDense) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, 5, 8);
    auto s = to_sparse(m);
    auto ks = aqsym::kernel(s);
    EXPECT_EQ(ks.size(), aqsym::kernel(m).size());
    EXPECT_EQ(rank(s), rank(m));
    for (const auto& v : ks) EXPECT_TRUE(s.apply(v).empty());
  }
}

TEST(Sparse, EchelonCoordinates) {
  Echelon e(4);
  SparseVec a({{0, 1}, {1, 2}});
  SparseVec b({{1, 1}, {3, -1}});
  EXPECT_TRUE(e.insert(a));
  EXPECT_TRUE(e.insert(b));
  EXPECT_FALSE(e.insert(a + b));
  e.reduce_fully();
  auto c = e.coordinates(make_rat(3) * a - b);
  ASSERT_TRUE(c.has_value());
  SparseVec back;
  for (std::size_t k = 0; k < e.rank(); ++k) back = axpy(back, (*c)[k], e.rows()[k]);
  EXPECT_EQ(back, make_rat(3) * a - b);
  EXPECT_FALSE(e.coordinates(SparseVec::unit(2)).has_value());
}

TEST(Modular, RankAgreesWithExact) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 6, 6);
    std::vector<std::vector<modp::u32>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<modp::u32> r;
      for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(modp::reduce(m(i, j), modp::kPrimes[0]));
      rows.push_back(r);
    }
    EXPECT_EQ(modp::rank(rows, 6, modp::kPrimes[0]), rank(m));
  }
}

TEST(Modular, KernelLiftsByReconstruction) {
  Mat<Rat> m{{1, 2, make_rat(1, 3), 0}, {0, 1, 5, make_rat(-7, 2)}};
  std::vector<modp::u32> primes{modp::kPrimes[0], modp::kPrimes[1]};
  std::vector<std::vector<std::vector<modp::u32>>> ks;
  for (auto p : primes) {
    modp::Echelon e(4, p);
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<modp::u32> r;
      for (std::size_t j = 0; j < 4; ++j) r.push_back(modp::reduce(m(i, j), p));
      e.insert(r);
    }
    ks.push_back(e.kernel());
  }
  auto exact = aqsym::kernel(m);
  ASSERT_EQ(ks[0].size(), exact.size());
  Int modulus = Int(primes[0]) * Int(primes[1]);
  for (std::size_t v = 0; v < exact.size(); ++v)
    for (std::size_t j = 0; j < 4; ++j) {
      auto x = modp::crt({ks[0][v][j], ks[1][v][j]}, primes);
      auto q = modp::reconstruct(x, modulus);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, exact[v][j]);
    }
}

TEST(Modular, ReconstructNegativeFraction) {
  Int m = Int(modp::kPrimes[0]);
  auto a = modp::reduce(make_rat(-5, 7), modp::kPrimes[0]);
  EXPECT_EQ(*modp::reconstruct(Int(a), m), make_rat(-5, 7));
}

TEST(PolyRing, AxiomsOnRandomValues) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyRing, ExactDivisionAndGcd) {
  Poly a = alpha2();
  Poly p = h(2) * a * (h(1) + 1);
  EXPECT_EQ(*divide_exact(p, a), h(2) * (h(1) + 1));
  EXPECT_FALSE(divide_exact(p, h(3)).has_value());
  EXPECT_EQ(gcd(p, a * (h(1) + 1) * h(5)), (a * (h(1) + 1)).monic());
  EXPECT_EQ(gcd(h(1) * h(1) - 1, h(1) - 1), h(1) - 1);
  EXPECT_EQ(gcd(h(1) + h(2), h(1) - h(2)), Poly(1));
}

TEST(PolyRing, Derivative) {
  Poly p = h(1) * h(1) * h(2) + make_rat(3) * h(2);
  EXPECT_EQ(p.diff(0), make_rat(2) * h(1) * h(2));
  EXPECT_EQ(p.diff(1), h(1) * h(1) + 3);
  EXPECT_TRUE(p.diff(4).is_zero());
}

TEST(RationalFunction, AlphaOverAlphaIsOne) {
  EXPECT_EQ(ratfunc_normalize(alpha2(), alpha2()), RatFunc(1));
}

TEST(RationalFunction, IrreducibleEntryStays) {
  Poly num = make_rat(2) * h(2) * h(2) - alpha2();
  RatFunc f = ratfunc_normalize(num, alpha2());
  EXPECT_EQ(f.num(), num);
  EXPECT_EQ(f.den(), alpha2());
}

TEST(RationalFunction, CommonFactorCancels) {
  EXPECT_EQ(ratfunc_normalize(h(2) * alpha2(), alpha2()), RatFunc(h(2)));
}

TEST(RationalFunction, ZeroDenominatorThrows) {
  EXPECT_THROW(ratfunc_normalize(h(1), Poly()), ZeroDenominator);
}

TEST(RationalFunction, CanonicalFormIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (b.is_zero() || c.is_zero()) continue;
    RatFunc f(a * c, b * c);
    EXPECT_EQ(f.normalized(), f);
    EXPECT_EQ(f, RatFunc(a, b));
  }
}

TEST(RationalFunction, FieldAxiomsWithRegisteredGuard) {
  IrreducibleRegistry::instance().add(alpha2());
  RatFunc x(h(2), alpha2()), y(h(3) * h(3), alpha2() * alpha2()), z(h(1) + 2);
  EXPECT_EQ((x + y) * z, x * z + y * z);
  EXPECT_EQ(x * y, y * x);
  EXPECT_EQ((x / y) * y, x);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(RatFunc(alpha2(), alpha2() * alpha2()), RatFunc(Poly(1), alpha2()));
}

TEST(RationalFunction, QuotientRule) {
  RatFunc f(h(2), alpha2());
  RatFunc expect(alpha2() - make_rat(2) * h(2) * h(2), alpha2() * alpha2());
  EXPECT_EQ(f.diff(1), expect);
}
