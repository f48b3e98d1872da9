#pragma once

// Infinitesimal symmetries of an almost quaternionic structure: vector fields
// X with L_X A in span{I, J, K} for A = I, J, K (or L_X A = 0 for the
// hypercomplex variant), searched in the ansatz X^i = P^i / g^K with
// deg P^i <= D and g the product of the guard polynomials.
//
// The linear system on the ansatz coefficients is sampled at chart points
// over F_p: at each point the conditions are linear in the 1-jet (X, dX), so
// a point contributes at most N + N^2 rows. The kernel is reconstructed over
// Q and every returned field is verified symbolically, so the sampled system
// only needs to be large enough for the kernel to stabilize.

#include "aqsym/exact/modular.hpp"
#include "aqsym/geom/structure.hpp"
#include "aqsym/lie/lie_algebra.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqsym {

class AnsatzInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VectorField {
  std::vector<RatFunc> c;

  [[nodiscard]] std::size_t dim() const { return c.size(); }
  [[nodiscard]] bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  [[nodiscard]] std::vector<Rat> eval(const std::vector<Rat>& p) const {
    std::vector<Rat> v;
    for (const auto& x : c) v.push_back(x.eval(p));
    return v;
  }
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

inline VectorField coordinate_field(std::size_t N, std::size_t i) {
  VectorField x{std::vector<RatFunc>(N)};
  x.c[i] = RatFunc(1);
  return x;
}

/// [X, Y]^i = X^k d_k Y^i - Y^k d_k X^i.
inline VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  const std::size_t N = x.dim();
  VectorField out{std::vector<RatFunc>(N)};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (!x.c[k].is_zero() && !y.c[i].is_zero()) out.c[i] += x.c[k] * y.c[i].diff(k);
      if (!y.c[k].is_zero() && !x.c[i].is_zero()) out.c[i] -= y.c[k] * x.c[i].diff(k);
    }
  return out;
}

/// (L_X A)^i_j = X^k d_k A^i_j - A^k_j d_k X^i + A^i_k d_j X^k.
inline FieldMat lie_derivative(const VectorField& x, const FieldMat& A) {
  const std::size_t N = A.rows();
  std::vector<std::vector<RatFunc>> dx(N, std::vector<RatFunc>(N));  // dx[i][k] = d_k X^i
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) dx[i][k] = x.c[i].diff(k);
  FieldMat out(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      RatFunc s;
      for (std::size_t k = 0; k < N; ++k) {
        if (!x.c[k].is_zero() && !A(i, j).is_zero()) s += x.c[k] * A(i, j).diff(k);
        if (!A(k, j).is_zero() && !dx[i][k].is_zero()) s -= A(k, j) * dx[i][k];
        if (!A(i, k).is_zero() && !dx[k][j].is_zero()) s += A(i, k) * dx[k][j];
      }
      out(i, j) = s;
    }
  return out;
}

/// Coefficients (a, b, c) with E = aI + bJ + cK, if any. I, J, K are
/// orthogonal for tr(XY) with tr(A^2) = -N, which fixes the candidates.
inline std::optional<std::array<RatFunc, 3>> span_coefficients(const AQStructure& q, const FieldMat& E) {
  const RatFunc minus_n(Rat(-static_cast<long>(q.dim())));
  std::array<RatFunc, 3> coef;
  FieldMat rest = E;
  for (int a = 0; a < 3; ++a) {
    coef[a] = (E * q.ops[a]).trace() / minus_n;
    if (!coef[a].is_zero()) rest = rest - coef[a] * q.ops[a];
  }
  if (!rest.is_zero()) return std::nullopt;
  return coef;
}

enum class SymmetryKind { Quaternionic, Hypercomplex };

struct SolverBounds {
  unsigned degree = 4;          // D
  unsigned denom_pow = 1;       // K
  std::size_t samples = 40;     // initial sample points
  std::size_t increment = 20;   // points added per round
  std::size_t max_samples = 600;
  std::uint64_t seed = 1;
  long coord_range = 7;         // sample coordinates are integers in [-r, r]
};

/// Bounds under which the known symmetry algebras are found.
inline SolverBounds default_bounds(const AQStructure& q) {
  SolverBounds b;
  if (q.guard.empty()) {
    b.degree = 3;
    b.denom_pow = 0;
  }
  return b;
}

struct SymmetryResult {
  std::vector<VectorField> fields;
  std::size_t unknowns = 0;
  std::size_t kernel_dim = 0;  // sampled kernel dimension at stabilization
  std::size_t samples = 0;
  std::size_t primes = 0;
  std::size_t rounds = 0;
};

namespace detail {

/// Exponent vectors of all monomials of degree <= D in N variables.
inline std::vector<std::vector<unsigned>> monomials_upto(std::size_t N, unsigned D) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(N, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v == N) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, D);
  return out;
}

inline Poly monomial_poly(const std::vector<unsigned>& e) {
  Mono m;
  for (std::size_t v = 0; v < e.size(); ++v) {
    m.e[v] = static_cast<std::uint8_t>(e[v]);
    m.deg = static_cast<std::uint16_t>(m.deg + e[v]);
  }
  return Poly::monomial(m, Rat(1));
}

inline modp::u32 to_mod(long x, modp::u32 p) {
  long r = x % static_cast<long>(p);
  return static_cast<modp::u32>(r < 0 ? r + static_cast<long>(p) : r);
}

/// Precomputed symbolic data of a structure for point sampling.
struct SampledStructure {
  const AQStructure* q = nullptr;
  std::vector<std::vector<FieldMat>> dA;  // dA[a][l] = d_l A_a
  Poly guard;
  std::vector<Poly> dguard;
};

inline SampledStructure prepare(const AQStructure& q) {
  SampledStructure s;
  s.q = &q;
  const std::size_t N = q.dim();
  for (const auto& A : q.ops) {
    std::vector<FieldMat> d;
    for (std::size_t l = 0; l < N; ++l) {
      FieldMat m(N, N);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = A(i, j).diff(l);
      d.push_back(std::move(m));
    }
    s.dA.push_back(std::move(d));
  }
  s.guard = q.guard_product();
  for (std::size_t l = 0; l < N; ++l) s.dguard.push_back(s.guard.diff(l));
  return s;
}

/// Conditions on the 1-jet (X^k, d_j X^i) at a point, over F_p. Jet index k
/// is X^k and N + i N + j is d_j X^i. Returns independent rows, or nothing
/// when the point is degenerate mod p.
inline std::optional<std::vector<std::vector<modp::u32>>> jet_conditions(const SampledStructure& s,
                                                                         const std::vector<modp::u32>& x,
                                                                         modp::u32 p, SymmetryKind kind) {
  const std::size_t N = s.q->dim(), J = N + N * N;
  using modp::u32;
  std::vector<std::vector<u32>> A(3, std::vector<u32>(N * N));
  std::vector<std::vector<std::vector<u32>>> dA(3, std::vector<std::vector<u32>>(N, std::vector<u32>(N * N)));
  try {
    for (int a = 0; a < 3; ++a)
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          A[a][i * N + j] = s.q->ops[a](i, j).eval_mod(x, p);
          for (std::size_t l = 0; l < N; ++l) dA[a][l][i * N + j] = s.dA[a][l](i, j).eval_mod(x, p);
        }
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  std::vector<std::vector<u32>> ginv;
  if (kind == SymmetryKind::Quaternionic) {
    // Gram matrix of the Frobenius pairing, inverted by Gauss-Jordan mod p.
    std::vector<std::vector<u32>> m(3, std::vector<u32>(6, 0));
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        modp::u64 t = 0;
        for (std::size_t k = 0; k < N * N; ++k) t = (t + static_cast<modp::u64>(A[b][k]) * A[c][k]) % p;
        m[b][c] = static_cast<u32>(t);
      }
      m[b][3 + b] = 1;
    }
    for (int c = 0; c < 3; ++c) {
      int r = c;
      while (r < 3 && m[r][c] == 0) ++r;
      if (r == 3) return std::nullopt;
      std::swap(m[r], m[c]);
      const u32 iv = modp::inv(m[c][c], p);
      for (auto& v : m[c]) v = modp::mul(v, iv, p);
      for (int o = 0; o < 3; ++o)
        if (o != c && m[o][c]) {
          const u32 f = m[o][c];
          for (int k = 0; k < 6; ++k) m[o][k] = modp::sub(m[o][k], modp::mul(f, m[c][k], p), p);
        }
    }
    ginv.assign(3, std::vector<u32>(3));
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) ginv[b][c] = m[b][3 + c];
  }
  modp::Echelon local(J, p);
  std::vector<std::vector<u32>> rows;
  for (int a = 0; a < 3; ++a) {
    // L[(i, j)] as a linear functional on jets.
    std::vector<std::vector<u32>> L(N * N, std::vector<u32>(J, 0));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        auto& r = L[i * N + j];
        for (std::size_t k = 0; k < N; ++k) {
          r[k] = modp::add(r[k], dA[a][k][i * N + j], p);
          r[N + i * N + k] = modp::sub(r[N + i * N + k], A[a][k * N + j], p);
          r[N + k * N + j] = modp::add(r[N + k * N + j], A[a][i * N + k], p);
        }
      }
    if (kind == SymmetryKind::Quaternionic) {
      // Subtract the orthogonal projection onto span{A_b}.
      std::vector<std::vector<u32>> sproj(3, std::vector<u32>(J, 0));
      for (int c = 0; c < 3; ++c)
        for (std::size_t k = 0; k < N * N; ++k)
          if (A[c][k])
            for (std::size_t t = 0; t < J; ++t)
              if (L[k][t]) sproj[c][t] = modp::add(sproj[c][t], modp::mul(A[c][k], L[k][t], p), p);
      std::vector<std::vector<u32>> coef(3, std::vector<u32>(J, 0));
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          if (ginv[b][c])
            for (std::size_t t = 0; t < J; ++t)
              coef[b][t] = modp::add(coef[b][t], modp::mul(ginv[b][c], sproj[c][t], p), p);
      for (std::size_t k = 0; k < N * N; ++k)
        for (int b = 0; b < 3; ++b)
          if (A[b][k])
            for (std::size_t t = 0; t < J; ++t)
              if (coef[b][t]) L[k][t] = modp::sub(L[k][t], modp::mul(A[b][k], coef[b][t], p), p);
    }
    for (auto& r : L)
      if (local.insert(r)) rows.push_back(std::move(r));
  }
  return rows;
}

struct SamplePoint {
  std::vector<long> x;
};

inline std::vector<SamplePoint> draw_points(const SampledStructure& s, std::size_t count, std::mt19937_64& rng,
                                            long range) {
  const std::size_t N = s.q->dim();
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<SamplePoint> out;
  while (out.size() < count) {
    SamplePoint pt;
    std::vector<Rat> xr;
    for (std::size_t i = 0; i < N; ++i) {
      pt.x.push_back(dist(rng));
      xr.emplace_back(pt.x.back());
    }
    if (is_zero(s.guard.eval(xr))) continue;
    out.push_back(std::move(pt));
  }
  return out;
}

/// Inserts the rows contributed by pts[begin, end) into `e`; false if some
/// point is degenerate mod p.
inline bool add_points(modp::Echelon& e, const SampledStructure& s, const std::vector<SamplePoint>& pts,
                       std::size_t begin, std::size_t end, const std::vector<std::vector<unsigned>>& monos,
                       unsigned K, SymmetryKind kind) {
  using modp::u32;
  using modp::u64;
  const u32 p = e.prime();
  const std::size_t N = s.q->dim(), nb = monos.size(), U = N * nb;
  std::vector<u32> row(U);
  for (std::size_t k = begin; k < end; ++k) {
    std::vector<u32> x;
    for (long v : pts[k].x) x.push_back(to_mod(v, p));
    const u32 g = s.guard.eval_mod(x, p);
    if (g == 0) return false;
    auto cond = jet_conditions(s, x, p, kind);
    if (!cond) return false;
    // phi_b = m_b g^{-K}, d_j phi_b = (d_j m_b - K m_b d_j g / g) g^{-K}.
    const u32 ginv = modp::inv(g, p), gk = modp::pow(ginv, K, p);
    std::vector<u32> dg(N);
    for (std::size_t j = 0; j < N; ++j) dg[j] = modp::mul(s.dguard[j].eval_mod(x, p), ginv, p);
    std::vector<std::vector<u32>> pw(N, std::vector<u32>(16, 1));
    for (std::size_t v = 0; v < N; ++v)
      for (std::size_t t = 1; t < 16; ++t) pw[v][t] = modp::mul(pw[v][t - 1], x[v], p);
    std::vector<u32> phi(nb);
    std::vector<std::vector<u32>> dphi(nb, std::vector<u32>(N));
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& ex = monos[b];
      u64 m = 1;
      for (std::size_t v = 0; v < N; ++v) m = m * pw[v][ex[v]] % p;
      phi[b] = modp::mul(static_cast<u32>(m), gk, p);
      for (std::size_t j = 0; j < N; ++j) {
        u64 dm = 0;
        if (ex[j] > 0) {
          dm = ex[j];
          for (std::size_t v = 0; v < N; ++v) dm = dm * pw[v][v == j ? ex[v] - 1 : ex[v]] % p;
        }
        u32 t = static_cast<u32>(dm);
        if (K) t = modp::sub(t, modp::mul(modp::mul(K % p, static_cast<u32>(m), p), dg[j], p), p);
        dphi[b][j] = modp::mul(t, gk, p);
      }
    }
    for (const auto& r : *cond) {
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t b = 0; b < nb; ++b) {
          u64 v = static_cast<u64>(r[i]) * phi[b] % p;
          for (std::size_t j = 0; j < N; ++j) {
            const u32 rij = r[N + i * N + j];
            if (rij) v = (v + static_cast<u64>(rij) * dphi[b][j]) % p;
          }
          row[i * nb + b] = static_cast<u32>(v);
        }
      e.insert(row);
    }
  }
  return true;
}

}  // namespace detail

/// Whether X is a symmetry of q of the given kind, checked symbolically.
inline bool is_symmetry(const AQStructure& q, const VectorField& x, SymmetryKind kind) {
  for (const auto& A : q.ops) {
    FieldMat l = lie_derivative(x, A);
    if (kind == SymmetryKind::Hypercomplex ? !l.is_zero() : !span_coefficients(q, l)) return false;
  }
  return true;
}

inline SymmetryResult symmetry_solve(const AQStructure& q, const SolverBounds& bounds,
                                     SymmetryKind kind = SymmetryKind::Quaternionic) {
  const std::size_t N = q.dim();
  const auto monos = detail::monomials_upto(N, bounds.degree);
  const std::size_t nb = monos.size(), U = N * nb;
  const detail::SampledStructure s = detail::prepare(q);
  std::mt19937_64 rng(bounds.seed);
  SymmetryResult res;
  res.unknowns = U;
  std::vector<detail::SamplePoint> pts = detail::draw_points(s, bounds.samples, rng, bounds.coord_range);
  modp::Echelon e(U, modp::kPrimes[0]);
  std::size_t done = 0;
  std::optional<std::size_t> previous;
  auto extend = [&](const std::string& why) {
    if (pts.size() + bounds.increment > bounds.max_samples)
      throw AnsatzInsufficient("symmetry_solve: " + why + " within " + std::to_string(bounds.max_samples) +
                               " samples");
    auto more = detail::draw_points(s, bounds.increment, rng, bounds.coord_range);
    pts.insert(pts.end(), more.begin(), more.end());
  };
  for (;;) {
    ++res.rounds;
    if (!detail::add_points(e, s, pts, done, pts.size(), monos, bounds.denom_pow, kind))
      throw std::runtime_error("symmetry_solve: degenerate sample point mod p");
    done = pts.size();
    const std::size_t kdim = U - e.rank();
    // Stabilized: a whole batch of new points left the kernel unchanged.
    if (previous != kdim) {
      previous = kdim;
      extend("kernel did not stabilize");
      continue;
    }
    res.kernel_dim = kdim;
    res.samples = pts.size();
    // Reconstruct over Q, adding primes until every entry lifts.
    std::vector<modp::u32> primes{modp::kPrimes[0]};
    std::vector<std::vector<std::vector<modp::u32>>> residues{e.kernel()};
    const auto free_cols = e.free_columns();
    std::vector<std::vector<Rat>> lifted;
    while (true) {
      lifted.clear();
      bool ok = true;
      Int m = 1;
      for (auto p : primes) m *= Int(p);
      for (std::size_t v = 0; v < kdim && ok; ++v) {
        std::vector<Rat> vec(U);
        for (std::size_t t = 0; t < U && ok; ++t) {
          std::vector<modp::u32> r;
          for (std::size_t k = 0; k < primes.size(); ++k) r.push_back(residues[k][v][t]);
          auto q2 = modp::reconstruct(modp::crt(r, primes), m);
          if (!q2) ok = false;
          else vec[t] = *q2;
        }
        lifted.push_back(std::move(vec));
      }
      if (ok) break;
      if (primes.size() == modp::kPrimes.size())
        throw AnsatzInsufficient("symmetry_solve: rational reconstruction failed");
      modp::Echelon e2(U, modp::kPrimes[primes.size()]);
      if (!detail::add_points(e2, s, pts, 0, pts.size(), monos, bounds.denom_pow, kind) ||
          e2.free_columns() != free_cols)
        throw std::runtime_error("symmetry_solve: unlucky prime");
      primes.push_back(e2.prime());
      residues.push_back(e2.kernel());
    }
    res.primes = primes.size();
    // Assemble and verify.
    Poly gk(1);
    for (unsigned k = 0; k < bounds.denom_pow; ++k) gk = gk * s.guard;
    std::vector<Poly> basis;
    for (const auto& ex : monos) basis.push_back(detail::monomial_poly(ex));
    std::vector<VectorField> fields;
    bool all_ok = true;
    for (const auto& vec : lifted) {
      VectorField x{std::vector<RatFunc>(N)};
      for (std::size_t i = 0; i < N; ++i) {
        std::vector<Poly::Term> t;
        for (std::size_t b = 0; b < nb; ++b)
          if (!is_zero(vec[i * nb + b])) t.emplace_back(basis[b].terms()[0].first, vec[i * nb + b]);
        x.c[i] = RatFunc(Poly::from_terms(std::move(t)), gk);
      }
      if (!is_symmetry(q, x, kind)) {
        all_ok = false;
        break;
      }
      fields.push_back(std::move(x));
    }
    if (all_ok) {
      res.fields = std::move(fields);
      return res;
    }
    extend("sampled kernel does not verify");
  }
}

/// Structure constants of the span of `fields` under the Lie bracket, checked
/// symbolically; throws NotClosed when some bracket leaves the span.
inline LieAlgebra bracket_close(const std::vector<VectorField>& fields, const std::vector<Poly>& guard = {},
                                std::uint64_t seed = 7) {
  const std::size_t m = fields.size();
  if (m == 0) return LieAlgebra({}, {});
  const std::size_t N = fields[0].dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  Poly g(1);
  for (const auto& p : guard) g = g * p;
  // Evaluation matrix at enough points for full column rank.
  std::vector<std::vector<Rat>> pts;
  Mat<Rat> M(0, m);
  for (int tries = 0; tries < 64; ++tries) {
    std::vector<Rat> x;
    for (std::size_t i = 0; i < N; ++i) x.emplace_back(dist(rng));
    if (is_zero(g.eval(x))) continue;
    pts.push_back(x);
    Mat<Rat> M2(N * pts.size(), m);
    for (std::size_t k = 0; k < pts.size(); ++k)
      for (std::size_t a = 0; a < m; ++a) {
        auto v = fields[a].eval(pts[k]);
        for (std::size_t i = 0; i < N; ++i) M2(k * N + i, a) = v[i];
      }
    M = std::move(M2);
    if (rank(M) == m) break;
  }
  if (rank(M) != m) throw std::invalid_argument("bracket_close: fields are linearly dependent");
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("X" + std::to_string(a + 1));
  std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      VectorField br = lie_bracket(fields[a], fields[b]);
      std::vector<Rat> rhs;
      for (const auto& x : pts) {
        auto v = br.eval(x);
        rhs.insert(rhs.end(), v.begin(), v.end());
      }
      auto c = solve(M, rhs);
      if (!c) throw NotClosed("bracket_close: [" + labels[a] + ", " + labels[b] + "] leaves the span");
      VectorField rest = br;
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero((*c)[k]))
          for (std::size_t i = 0; i < N; ++i) rest.c[i] -= RatFunc((*c)[k]) * fields[k].c[i];
      if (!rest.is_zero()) throw NotClosed("bracket_close: [" + labels[a] + ", " + labels[b] + "] leaves the span");
      Vec v = Vec::from_dense(*c);
      table[a][b] = v;
      table[b][a] = Rat(-1) * v;
    }
  return LieAlgebra(std::move(labels), std::move(table));
}

}  // namespace aqsym
