#pragma once

// Multivariate polynomials over Q in the chart coordinates h1..h16.
// Terms are kept sorted in decreasing graded-lexicographic order with
// h1 > h2 > ... , and no zero coefficient is ever stored.

#include "aqsym/exact/modular.hpp"
#include "aqsym/exact/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aqsym {

inline constexpr std::size_t kMaxVars = 16;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Mono var(std::size_t i, unsigned power = 1) {
    if (i >= kMaxVars) throw std::out_of_range("Mono: variable index");
    Mono m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  [[nodiscard]] bool divides(const Mono& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e[i]) + b.e[i];
      if (s > 255) throw std::overflow_error("Mono: exponent overflow");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return m;
  }
  /// Requires b | a.
  friend Mono operator/(const Mono& a, const Mono& b) {
    Mono m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    m.deg = static_cast<std::uint16_t>(a.deg - b.deg);
    return m;
  }

  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  /// grlex: higher total degree first, then lexicographic with h1 largest.
  friend bool grlex_greater(const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.e > b.e;
  }
};

class Poly {
 public:
  using Term = std::pair<Mono, Rat>;

  Poly() = default;
  Poly(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (!aqsym::is_zero(c)) terms_.emplace_back(Mono{}, c);
  }
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rat(c)) {}   // NOLINT(google-explicit-constructor)

  /// The coordinate h_{i+1}.
  static Poly var(std::size_t i) { return monomial(Mono::var(i), Rat(1)); }
  static Poly monomial(const Mono& m, const Rat& c) {
    Poly p;
    if (!aqsym::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  static Poly from_terms(std::vector<Term> t) {
    Poly p;
    p.terms_ = std::move(t);
    p.canonicalize();
    return p;
  }

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0); }
  [[nodiscard]] Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("Poly: not a constant");
    return terms_[0].second;
  }
  [[nodiscard]] int degree() const { return terms_.empty() ? -1 : terms_[0].first.deg; }
  [[nodiscard]] const Term& leading() const { return terms_.front(); }
  [[nodiscard]] const Rat& leading_coeff() const { return terms_.front().second; }

  /// Largest variable index occurring, or -1 for constants.
  [[nodiscard]] int max_var() const {
    int v = -1;
    for (const auto& [m, c] : terms_)
      for (int i = kMaxVars - 1; i > v; --i)
        if (m.e[i]) {
          v = i;
          break;
        }
    return v;
  }
  [[nodiscard]] unsigned degree_in(std::size_t v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.e[v]);
    return d;
  }

  Poly& operator+=(const Poly& o) { return *this = merge(*this, o, Rat(1)); }
  Poly& operator-=(const Poly& o) { return *this = merge(*this, o, Rat(-1)); }
  Poly& operator*=(const Rat& s) {
    if (aqsym::is_zero(s)) terms_.clear();
    for (auto& t : terms_) t.second *= s;
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, Rat(1)); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, Rat(-1)); }
  friend Poly operator-(Poly a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(int s, Poly a) { return a *= Rat(s); }
  friend Poly operator*(Poly a, int s) { return a *= Rat(s); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (b.terms_.size() == 1) return mul_term(a, b.terms_[0]);
    if (a.terms_.size() == 1) return mul_term(b, a.terms_[0]);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] Poly pow(unsigned k) const {
    Poly r(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  /// Partial derivative with respect to h_{v+1}.
  [[nodiscard]] Poly diff(std::size_t v) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      if (m.e[v] == 0) continue;
      Mono d = m;
      d.e[v] -= 1;
      d.deg -= 1;
      out.emplace_back(d, c * m.e[v]);
    }
    // Differentiation preserves the relative grlex order of surviving terms.
    Poly p;
    p.terms_ = std::move(out);
    return p;
  }

  [[nodiscard]] Rat eval(const std::vector<Rat>& x) const {
    Rat s = 0;
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (std::size_t i = 0; i < kMaxVars; ++i)
        for (unsigned k = 0; k < m.e[i]; ++k) t *= x.at(i);
      s += t;
    }
    return s;
  }

  [[nodiscard]] modp::u32 eval_mod(const std::vector<modp::u32>& x, modp::u32 p) const {
    modp::u64 s = 0;
    for (const auto& [m, c] : terms_) {
      modp::u64 t = modp::reduce(c, p);
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (m.e[i]) t = t * modp::pow(x.at(i), m.e[i], p) % p;
      s = (s + t) % p;
    }
    return static_cast<modp::u32>(s);
  }

  /// Substitutes h_{v+1} = value.
  [[nodiscard]] Poly substitute(std::size_t v, const Rat& value) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      Mono r = m;
      unsigned k = r.e[v];
      r.e[v] = 0;
      r.deg = static_cast<std::uint16_t>(r.deg - k);
      Rat f = c;
      for (unsigned i = 0; i < k; ++i) f *= value;
      out.emplace_back(r, f);
    }
    return from_terms(std::move(out));
  }

  /// Coefficients as a polynomial in h_{v+1}: result[k] multiplies h_{v+1}^k.
  [[nodiscard]] std::vector<Poly> coeffs_in(std::size_t v) const {
    std::vector<std::vector<Term>> parts(degree_in(v) + 1);
    for (const auto& [m, c] : terms_) {
      Mono r = m;
      unsigned k = r.e[v];
      r.e[v] = 0;
      r.deg = static_cast<std::uint16_t>(r.deg - k);
      parts[k].emplace_back(r, c);
    }
    std::vector<Poly> out;
    for (auto& p : parts) out.push_back(from_terms(std::move(p)));
    return out;
  }

  /// Rescaled so the leading coefficient is one (zero stays zero).
  [[nodiscard]] Poly monic() const {
    if (terms_.empty()) return *this;
    Rat inv = 1 / leading_coeff();
    return *this * inv;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  static Poly mul_term(const Poly& a, const Term& t) {
    Poly p;
    p.terms_.reserve(a.terms_.size());
    for (const auto& [m, c] : a.terms_) p.terms_.emplace_back(m * t.first, c * t.second);
    return p;  // multiplying by a monomial preserves grlex order
  }

  static Poly merge(const Poly& a, const Poly& b, const Rat& sb) {
    Poly p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && grlex_greater(ia->first, ib->first))) {
        p.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || grlex_greater(ib->first, ia->first)) {
        p.terms_.emplace_back(ib->first, sb * ib->second);
        ++ib;
      } else {
        Rat c = ia->second + sb * ib->second;
        if (!aqsym::is_zero(c)) p.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return p;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return aqsym::is_zero(t.second); });
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

inline std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (!first) {
      s += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "h" + std::to_string(i + 1);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty())
      s += aqsym::to_string(a);
    else if (a == 1)
      s += mono;
    else if (a == -1)
      s += "-" + mono;
    else
      s += aqsym::to_string(a) + "*" + mono;
    first = false;
  }
  return s;
}

/// Exact quotient a / b when b divides a, nullopt otherwise.
inline std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a * (1 / b.constant_value());
  if (a.degree() < b.degree()) return std::nullopt;
  const auto& [lm, lc] = b.leading();
  Rat inv_lc = 1 / lc;
  std::vector<Poly::Term> q;
  Poly r = a;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!lm.divides(rm)) return std::nullopt;
    Mono qm = rm / lm;
    Rat qc = rc * inv_lc;
    q.emplace_back(qm, qc);
    r -= Poly::monomial(qm, qc) * b;
  }
  return Poly::from_terms(std::move(q));
}

namespace detail {

inline Poly content_in(const Poly& p, std::size_t v);
inline Poly gcd_impl(const Poly& a, const Poly& b);

inline Poly from_coeffs(const std::vector<Poly>& c, std::size_t v) {
  Poly r;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) r += c[k] * Poly::monomial(Mono::var(v, static_cast<unsigned>(k)), Rat(1));
  return r;
}

/// Pseudo-remainder of a by b with respect to h_{v+1}.
inline Poly prem(const Poly& a, const Poly& b, std::size_t v) {
  auto bc = b.coeffs_in(v);
  const std::size_t db = bc.size() - 1;
  const Poly& lb = bc.back();
  Poly r = a;
  while (!r.is_zero()) {
    auto rc = r.coeffs_in(v);
    const std::size_t dr = rc.size() - 1;
    if (dr < db) break;
    Poly shift = rc.back() * Poly::monomial(Mono::var(v, static_cast<unsigned>(dr - db)), Rat(1));
    r = lb * r - shift * b;
  }
  return r;
}

inline Poly content_in(const Poly& p, std::size_t v) {
  Poly g;
  for (const auto& c : p.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

inline Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (auto q = divide_exact(a, b)) return b.monic();
  if (auto q = divide_exact(b, a)) return a.monic();
  const int va = a.max_var(), vb = b.max_var();
  const std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  if (a.degree_in(v) == 0) return gcd_impl(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_impl(content_in(a, v), b);
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly c = gcd_impl(ca, cb);
  Poly r0 = *divide_exact(a, ca), r1 = *divide_exact(b, cb);
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  Poly g;
  for (;;) {
    Poly r = prem(r0, r1, v);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Poly(1);
      break;
    }
    r0 = std::move(r1);
    r1 = *divide_exact(r, content_in(r, v));
  }
  g = *divide_exact(g, content_in(g, v));
  return (c * g).monic();
}

}  // namespace detail

/// Monic greatest common divisor (gcd(0,0) = 0).
inline Poly gcd(const Poly& a, const Poly& b) { return detail::gcd_impl(a, b); }

}  // namespace aqsym
