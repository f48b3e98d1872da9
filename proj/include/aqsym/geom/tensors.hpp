#pragma once

// Tensor fields in chart coordinates and the structure tensor of an almost
// quaternionic structure. Components are stored row-major with the upper
// indices first: T^i_{jk} lives at (i, j, k).

#include "aqsym/geom/structure.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace aqsym {

template <class S>
struct Tensor {
  std::size_t N = 0, up = 0, down = 0;
  std::vector<S> c;

  Tensor() = default;
  Tensor(std::size_t n, std::size_t u, std::size_t d) : N(n), up(u), down(d) {
    std::size_t len = 1;
    for (std::size_t k = 0; k < u + d; ++k) len *= n;
    c.assign(len, S(0));
  }

  [[nodiscard]] std::size_t rank() const { return up + down; }
  [[nodiscard]] std::size_t size() const { return c.size(); }

  S& operator()(std::size_t i, std::size_t j) { return c[i * N + j]; }
  S& operator()(std::size_t i, std::size_t j, std::size_t k) { return c[(i * N + j) * N + k]; }
  S& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return c[((i * N + j) * N + k) * N + l];
  }
  const S& operator()(std::size_t i, std::size_t j) const { return c[i * N + j]; }
  const S& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * N + j) * N + k]; }
  const S& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return c[((i * N + j) * N + k) * N + l];
  }

  [[nodiscard]] std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(rank());
    for (std::size_t k = rank(); k-- > 0;) {
      idx[k] = flat % N;
      flat /= N;
    }
    return idx;
  }
  [[nodiscard]] std::size_t flat_index(const std::vector<std::size_t>& idx) const {
    std::size_t f = 0;
    for (auto i : idx) f = f * N + i;
    return f;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : c)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }
  [[nodiscard]] std::size_t nonzero_count() const {
    std::size_t k = 0;
    for (const auto& x : c)
      if (!detail::scalar_is_zero(x)) ++k;
    return k;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) {
    for (std::size_t k = 0; k < a.c.size(); ++k) a.c[k] = a.c[k] + b.c[k];
    return a;
  }
  friend Tensor operator-(Tensor a, const Tensor& b) {
    for (std::size_t k = 0; k < a.c.size(); ++k) a.c[k] = a.c[k] - b.c[k];
    return a;
  }
  friend Tensor operator*(const S& s, Tensor a) {
    for (auto& x : a.c) x = s * x;
    return a;
  }
};

using TensorField = Tensor<RatFunc>;

/// Truncated Taylor polynomial around the origin of a shifted chart. `order`
/// is the degree up to which the coefficients are known; products and
/// derivatives track it, so results never report unknown coefficients.
class Jet {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 2;

  Jet() = default;
  Jet(const Rat& c) : p_(c) {}  // NOLINT(google-explicit-constructor)
  Jet(int c) : p_(c) {}         // NOLINT(google-explicit-constructor)
  Jet(const Poly& p, int order) : p_(truncate(p, order)), order_(order) {}

  [[nodiscard]] const Poly& poly() const { return p_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] bool is_zero() const { return p_.is_zero() && order_ == kExact; }
  [[nodiscard]] Rat at_origin() const {
    if (order_ < 0) throw std::logic_error("Jet: value unknown");
    for (const auto& [m, c] : p_.terms())
      if (m.deg == 0) return c;
    return Rat(0);
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    const int o = std::min(a.order_, b.order_);
    return Jet(a.p_ + b.p_, o);
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    const int o = std::min(a.order_, b.order_);
    return Jet(a.p_ - b.p_, o);
  }
  friend Jet operator-(const Jet& a) {
    Jet r = a;
    r.p_ = -a.p_;
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    // Terms of degree <= o of a product only need terms of degree <= o of
    // each factor; a factor known exactly as 0 makes the product exact.
    if ((a.p_.is_zero() && a.order_ == kExact) || (b.p_.is_zero() && b.order_ == kExact)) return Jet();
    const int o = std::min(a.order_, b.order_);
    if (a.p_.is_zero() || b.p_.is_zero()) {
      Jet r;
      r.order_ = o;
      return r;
    }
    std::vector<Poly::Term> t;
    for (const auto& [ma, ca] : a.p_.terms()) {
      if (ma.deg > o) continue;
      for (const auto& [mb, cb] : b.p_.terms())
        if (ma.deg + mb.deg <= o) t.emplace_back(ma * mb, ca * cb);
    }
    Jet r;
    r.p_ = Poly::from_terms(std::move(t));
    r.order_ = o;
    return r;
  }
  [[nodiscard]] Jet diff(std::size_t v) const {
    if (order_ == kExact) return Jet(p_.diff(v), kExact);
    if (order_ <= 0) throw std::logic_error("Jet: derivative beyond known order");
    return Jet(p_.diff(v), order_ - 1);
  }

 private:
  static Poly truncate(const Poly& p, int order) {
    if (order == kExact) return p;
    std::vector<Poly::Term> t;
    for (const auto& term : p.terms())
      if (term.first.deg <= order) t.push_back(term);
    return Poly::from_terms(std::move(t));
  }

  Poly p_;
  int order_ = kExact;
};

/// Only exact zeros count; a truncated jet is never reported as zero.
inline bool is_zero(const Jet& j) { return j.is_zero(); }

/// N^i_{jk} = A^l_j d_l A^i_k - A^l_k d_l A^i_j + A^i_l d_k A^l_j - A^i_l d_j A^l_k.
inline TensorField nijenhuis(const FieldMat& A) {
  const std::size_t N = A.rows();
  std::vector<FieldMat> dA;
  for (std::size_t v = 0; v < N; ++v) {
    FieldMat d(N, N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) d(i, j) = A(i, j).diff(v);
    dA.push_back(std::move(d));
  }
  TensorField out(N, 1, 2);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        RatFunc s;
        for (std::size_t l = 0; l < N; ++l) {
          if (!A(l, j).is_zero()) s += A(l, j) * dA[l](i, k);
          if (!A(l, k).is_zero()) s -= A(l, k) * dA[l](i, j);
          if (!A(i, l).is_zero()) s += A(i, l) * (dA[k](l, j) - dA[j](l, k));
        }
        out(i, j, k) = s;
      }
  return out;
}

/// The structure tensor T_Q, independent of the admissible basis:
///   B = (N_I + N_J + N_K) / 6,  tau_A(e_j) = tr(A o B(e_j, .)) / (4n - 2),
///   T = B + sum_A (tau_A ^ A).
/// T_Q = 0 exactly when Q admits a torsion-free quaternionic connection.
inline TensorField structure_tensor(const AQStructure& q) {
  const std::size_t N = q.dim();
  TensorField B(N, 1, 2);
  for (const auto& A : q.ops) B = B + nijenhuis(A);
  B = RatFunc(Rat(1, 6)) * B;
  TensorField T = B;
  const RatFunc denom(Rat(static_cast<long>(4 * q.n - 2)));
  for (const auto& A : q.ops) {
    std::vector<RatFunc> tau(N);
    for (std::size_t j = 0; j < N; ++j) {
      RatFunc s;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t i = 0; i < N; ++i)
          if (!A(a, i).is_zero() && !B(i, j, a).is_zero()) s += A(a, i) * B(i, j, a);
      tau[j] = s / denom;
    }
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) {
          if (!tau[j].is_zero() && !A(i, k).is_zero()) T(i, j, k) += tau[j] * A(i, k);
          if (!tau[k].is_zero() && !A(i, j).is_zero()) T(i, j, k) -= tau[k] * A(i, j);
        }
  }
  return T;
}

}  // namespace aqsym
