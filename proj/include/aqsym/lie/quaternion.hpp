#pragma once

// Quaternions over Q with ij = k, quaternionic matrices, and their real
// embedding through the left regular representation on R^4 = span(1,i,j,k).

#include "aqsym/exact/matrix.hpp"
#include "aqsym/exact/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace aqsym {

struct Quat {
  std::array<Rat, 4> c{};  // c[0] + c[1] i + c[2] j + c[3] k

  Quat() = default;
  Quat(Rat a, Rat b, Rat cc, Rat d) : c{std::move(a), std::move(b), std::move(cc), std::move(d)} {}
  explicit Quat(const Rat& a) : c{a, Rat(0), Rat(0), Rat(0)} {}

  /// Basis unit: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
  static Quat unit(int q, const Rat& scale = 1) {
    Quat x;
    x.c.at(static_cast<std::size_t>(q)) = scale;
    return x;
  }

  [[nodiscard]] bool is_zero() const {
    return aqsym::is_zero(c[0]) && aqsym::is_zero(c[1]) && aqsym::is_zero(c[2]) && aqsym::is_zero(c[3]);
  }
  [[nodiscard]] Quat conj() const { return {c[0], -c[1], -c[2], -c[3]}; }

  friend Quat operator+(const Quat& x, const Quat& y) {
    return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
  }
  friend Quat operator-(const Quat& x, const Quat& y) {
    return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
  }
  friend Quat operator-(const Quat& x) { return {-x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }
  friend Quat operator*(const Rat& s, const Quat& x) { return {s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]}; }
  friend Quat operator*(const Quat& x, const Quat& y) {
    const auto& [a1, b1, c1, d1] = x.c;
    const auto& [a2, b2, c2, d2] = y.c;
    return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
  }
  Quat& operator+=(const Quat& y) { return *this = *this + y; }
  Quat& operator-=(const Quat& y) { return *this = *this - y; }
  friend bool operator==(const Quat& x, const Quat& y) { return x.c == y.c; }
};

inline const char* unit_name(int q) {
  static const char* names[] = {"1", "i", "j", "k"};
  return names[q];
}

/// 4x4 real matrix of x -> q x.
inline Mat<Rat> left_mult(const Quat& q) {
  Mat<Rat> m(4, 4);
  for (int b = 0; b < 4; ++b) {
    Quat img = q * Quat::unit(b);
    for (int a = 0; a < 4; ++a) m(a, b) = img.c[a];
  }
  return m;
}

/// 4x4 real matrix of x -> x q.
inline Mat<Rat> right_mult(const Quat& q) {
  Mat<Rat> m(4, 4);
  for (int b = 0; b < 4; ++b) {
    Quat img = Quat::unit(b) * q;
    for (int a = 0; a < 4; ++a) m(a, b) = img.c[a];
  }
  return m;
}

/// Square quaternionic matrix.
class QMat {
 public:
  QMat() = default;
  explicit QMat(std::size_t m) : m_(m), a_(m * m) {}

  /// Matrix with q in row r, column s and zeros elsewhere.
  static QMat elementary(std::size_t m, std::size_t r, std::size_t s, const Quat& q) {
    QMat x(m);
    x(r, s) = q;
    return x;
  }

  [[nodiscard]] std::size_t size() const { return m_; }
  Quat& operator()(std::size_t r, std::size_t s) { return a_[r * m_ + s]; }
  const Quat& operator()(std::size_t r, std::size_t s) const { return a_[r * m_ + s]; }

  [[nodiscard]] Rat real_trace() const {
    Rat t = 0;
    for (std::size_t r = 0; r < m_; ++r) t += (*this)(r, r).c[0];
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& q : a_)
      if (!q.is_zero()) return false;
    return true;
  }

  friend QMat operator+(QMat x, const QMat& y) {
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }
  friend QMat operator-(QMat x, const QMat& y) {
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }
  friend QMat operator*(const Rat& s, QMat x) {
    for (auto& q : x.a_) q = s * q;
    return x;
  }
  friend QMat operator*(const QMat& x, const QMat& y) {
    QMat z(x.m_);
    for (std::size_t r = 0; r < x.m_; ++r)
      for (std::size_t k = 0; k < x.m_; ++k) {
        if (x(r, k).is_zero()) continue;
        for (std::size_t s = 0; s < x.m_; ++s)
          if (!y(k, s).is_zero()) z(r, s) += x(r, k) * y(k, s);
      }
    return z;
  }
  friend bool operator==(const QMat& x, const QMat& y) { return x.m_ == y.m_ && x.a_ == y.a_; }

  /// Real 4m x 4m matrix acting on R^{4m} = H^m by left multiplication.
  [[nodiscard]] Mat<Rat> real() const {
    Mat<Rat> out(4 * m_, 4 * m_);
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t s = 0; s < m_; ++s) {
        if ((*this)(r, s).is_zero()) continue;
        Mat<Rat> b = left_mult((*this)(r, s));
        for (int a = 0; a < 4; ++a)
          for (int c = 0; c < 4; ++c) out(4 * r + a, 4 * s + c) = b(a, c);
      }
    return out;
  }

 private:
  std::size_t m_ = 0;
  std::vector<Quat> a_;
};

inline QMat commutator(const QMat& x, const QMat& y) { return x * y - y * x; }

}  // namespace aqsym
