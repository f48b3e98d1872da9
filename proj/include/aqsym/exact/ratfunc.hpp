#pragma once

// Rational functions in the chart coordinates, kept in canonical form:
// gcd(num, den) = 1 and den monic under grlex.

#include "aqsym/exact/poly.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aqsym {

struct ZeroDenominator : std::domain_error {
  ZeroDenominator() : std::domain_error("rational function with zero denominator") {}
};

/// Known irreducible polynomials. Denominators that factor completely over
/// this list are normalized by trial division instead of a general gcd.
class IrreducibleRegistry {
 public:
  static IrreducibleRegistry& instance() {
    static IrreducibleRegistry r;
    return r;
  }
  /// p must be irreducible over Q; it is stored monic.
  void add(const Poly& p) {
    std::lock_guard<std::mutex> lock(mu_);
    Poly m = p.monic();
    for (const auto& q : *list_)
      if (q == m) return;
    auto next = std::make_shared<std::vector<Poly>>(*list_);
    next->push_back(std::move(m));
    list_ = std::move(next);
  }
  [[nodiscard]] std::shared_ptr<const std::vector<Poly>> snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return list_;
  }

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const std::vector<Poly>> list_ = std::make_shared<std::vector<Poly>>();
};

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1) {}         // NOLINT(google-explicit-constructor)
  RatFunc(int c) : num_(c), den_(1) {}          // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return raw(-a.num_, a.den_); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial()) return raw(a.num_ * b.num_, Poly(1));
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominator();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Quotient rule.
  [[nodiscard]] RatFunc diff(std::size_t v) const {
    if (is_polynomial()) return raw(num_.diff(v), den_);
    return RatFunc(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
  }

  [[nodiscard]] Rat eval(const std::vector<Rat>& x) const {
    Rat d = den_.eval(x);
    if (aqsym::is_zero(d)) throw ZeroDenominator();
    return num_.eval(x) / d;
  }

  [[nodiscard]] modp::u32 eval_mod(const std::vector<modp::u32>& x, modp::u32 p) const {
    modp::u32 d = den_.eval_mod(x, p);
    return modp::mul(num_.eval_mod(x, p), modp::inv(d, p), p);
  }

  [[nodiscard]] std::string to_string() const {
    if (den_ == Poly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  /// Re-runs canonicalization; a no-op on canonical input.
  [[nodiscard]] RatFunc normalized() const { return RatFunc(num_, den_); }

 private:
  static RatFunc raw(Poly n, Poly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (den_.is_constant()) {
      num_ *= 1 / den_.constant_value();
      den_ = Poly(1);
      return;
    }
    if (auto q = divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = Poly(1);
      return;
    }
    if (!cancel_known_factors()) {
      Poly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
      }
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
      Rat inv = 1 / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }

  // Factors den over the registry; if that succeeds, cancels shared factors
  // and returns true.
  bool cancel_known_factors() {
    auto snap = IrreducibleRegistry::instance().snapshot();
    const auto& known = *snap;
    if (known.empty()) return false;
    Poly rest = den_;
    std::vector<std::pair<const Poly*, unsigned>> fac;
    for (const auto& g : known) {
      unsigned e = 0;
      while (rest.degree() >= g.degree()) {
        auto q = divide_exact(rest, g);
        if (!q) break;
        rest = std::move(*q);
        ++e;
      }
      if (e) fac.emplace_back(&g, e);
      if (rest.is_constant()) break;
    }
    if (!rest.is_constant()) return false;
    for (auto& [g, e] : fac) {
      while (e > 0) {
        auto q = divide_exact(num_, *g);
        if (!q) break;
        num_ = std::move(*q);
        den_ = *divide_exact(den_, *g);
        --e;
      }
    }
    return true;
  }

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Canonical form of num/den; throws ZeroDenominator when den = 0.
inline RatFunc ratfunc_normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

}  // namespace aqsym
