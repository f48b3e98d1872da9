#pragma once

// Dense elimination over F_p for primes below 2^30, plus rational
// reconstruction. Used for large sampled systems whose kernel is then
// certified by exact verification over Q.

#include "aqsym/exact/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace aqsym::modp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline constexpr std::array<u32, 8> kPrimes = {1073741789u, 1073741783u, 1073741741u, 1073741723u,
                                               1073741719u, 1073741717u, 1073741689u, 1073741671u};

inline u32 mul(u32 a, u32 b, u32 p) { return static_cast<u32>(static_cast<u64>(a) * b % p); }
inline u32 add(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}
inline u32 sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }

inline u32 pow(u32 a, u64 e, u32 p) {
  u64 r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

inline u32 inv(u32 a, u32 p) {
  if (a % p == 0) throw std::domain_error("modp: inverse of zero");
  return pow(a, p - 2, p);
}

inline u32 reduce(const Int& z, u32 p) {
  return static_cast<u32>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

/// Image of a rational in F_p; throws when the denominator vanishes mod p.
inline u32 reduce(const Rat& q, u32 p) {
  u32 d = reduce(q.get_den(), p);
  if (d == 0) throw std::domain_error("modp: denominator divisible by p");
  return mul(reduce(q.get_num(), p), inv(d, p), p);
}

/// Row-echelon basis over F_p with dense rows, built incrementally.
class Echelon {
 public:
  Echelon(std::size_t cols, u32 p) : cols_(cols), p_(p), acc_(cols) {}

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] u32 prime() const { return p_; }

  /// Reduces and stores the row; returns true if it raised the rank.
  bool insert(const std::vector<u32>& row) {
    for (std::size_t j = 0; j < cols_; ++j) acc_[j] = row[j];
    int pending = 0;
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const std::size_t r = order_[k];
      const std::size_t c = pivot_[r];
      u64 v = acc_[c] % p_;
      acc_[c] = v;
      if (v == 0) continue;
      const u64 f = p_ - v;
      const u32* src = rows_[r].data();
      u64* dst = acc_.data();
      for (std::size_t j = c; j < cols_; ++j) dst[j] += f * src[j];
      if (++pending == 15) {
        for (std::size_t j = c; j < cols_; ++j) dst[j] %= p_;
        pending = 0;
      }
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc_[j] %= p_;
      if (lead == cols_ && acc_[j] != 0) lead = j;
    }
    if (lead == cols_) return false;
    const u64 s = inv(static_cast<u32>(acc_[lead]), p_);
    std::vector<u32> stored(cols_, 0);
    for (std::size_t j = lead; j < cols_; ++j) stored[j] = static_cast<u32>(acc_[j] * s % p_);
    rows_.push_back(std::move(stored));
    pivot_.push_back(lead);
    auto pos = std::lower_bound(order_.begin(), order_.end(), lead,
                                [&](std::size_t r, std::size_t c) { return pivot_[r] < c; });
    order_.insert(pos, rows_.size() - 1);
    return true;
  }

  /// Kernel basis: one vector per free column f with x_f = 1 and zeros on the
  /// other free columns, found by back-substitution.
  [[nodiscard]] std::vector<std::vector<u32>> kernel() const {
    std::vector<char> is_piv(cols_, 0);
    for (auto c : pivot_) is_piv[c] = 1;
    std::vector<std::vector<u32>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<u32> x(cols_, 0);
      x[f] = 1;
      for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        const auto& row = rows_[*it];
        const std::size_t c = pivot_[*it];
        u64 s = 0;
        for (std::size_t j = c + 1; j < cols_; ++j)
          if (x[j]) s = (s + static_cast<u64>(row[j]) * x[j]) % p_;
        x[c] = static_cast<u32>((p_ - s) % p_);
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

  [[nodiscard]] std::vector<std::size_t> free_columns() const {
    std::vector<char> is_piv(cols_, 0);
    for (auto c : pivot_) is_piv[c] = 1;
    std::vector<std::size_t> f;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_piv[j]) f.push_back(j);
    return f;
  }

 private:
  std::size_t cols_;
  u32 p_;
  std::vector<std::vector<u32>> rows_;
  std::vector<std::size_t> pivot_;
  std::vector<std::size_t> order_;  // row indices sorted by pivot column
  std::vector<u64> acc_;
};

/// Rank over F_p of a matrix given by rows.
inline std::size_t rank(const std::vector<std::vector<u32>>& rows, std::size_t cols, u32 p) {
  Echelon e(cols, p);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Chinese remaindering of residues modulo distinct primes.
inline Int crt(const std::vector<u32>& residues, const std::vector<u32>& primes) {
  Int x = 0, m = 1;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    Int p = primes[k];
    // x' = x + m * ((r - x) * m^{-1} mod p)
    u32 xm = reduce(x, primes[k]);
    u32 mm = reduce(m, primes[k]);
    u32 t = mul(sub(residues[k], xm, primes[k]), inv(mm, primes[k]), primes[k]);
    x += m * Int(t);
    m *= p;
  }
  return x;
}

/// Rational r/s with |r|, s <= sqrt(m/2) congruent to a mod m, if any.
inline std::optional<Rat> reconstruct(const Int& a, const Int& m) {
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
  Int r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Int s0 = 0, s1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat q(r1, s1);
  q.canonicalize();
  return q;
}

}  // namespace aqsym::modp
