#pragma once

// Dense matrices over an exact field, with Bareiss rank for Q and
// Gauss-Jordan kernels for any field scalar.

#include "aqsym/exact/rational.hpp"
#include "aqsym/exact/sparse.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aqsym {

namespace detail {
// Unqualified so that is_zero overloads declared after this header are found.
template <class S>
bool scalar_is_zero(const S& x) {
  return is_zero(x);
}
}  // namespace detail

template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, S(0)) {}
  Mat(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : a_)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }

  [[nodiscard]] S trace() const {
    S t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  [[nodiscard]] std::vector<S> apply(const std::vector<S>& v) const {
    assert(v.size() == cols_);
    std::vector<S> out(rows_, S(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!detail::scalar_is_zero((*this)(i, j)) && !detail::scalar_is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.a_) x = -x;
    return a;
  }
  friend Mat operator*(const S& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (detail::scalar_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!detail::scalar_is_zero(b(k, j))) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_same(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
  return a * b - b * a;
}

/// In-place Gauss-Jordan to reduced row-echelon form; returns pivot columns.
template <class S>
std::vector<std::size_t> rref_inplace(Mat<S>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    S inv = S(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

/// Exact rank over Q by fraction-free (Bareiss) elimination on the integer
/// matrix obtained by clearing row denominators.
inline std::size_t rank(const Mat<Rat>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        Int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Rank over any exact field by Gauss-Jordan.
template <class S>
std::size_t rank_generic(Mat<S> m) {
  return rref_inplace(m).size();
}

/// Basis of the right null space; each vector has a one in a distinct free
/// column and zeros in the other free columns.
template <class S>
std::vector<std::vector<S>> kernel(Mat<S> m) {
  auto piv = rref_inplace(m);
  std::vector<char> is_piv(m.cols(), 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::vector<S>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<S> v(m.cols(), S(0));
    v[f] = S(1);
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b; returns one solution or nullopt when inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Mat<S>& m, const std::vector<S>& b) {
  assert(b.size() == m.rows());
  Mat<S> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<S> x(m.cols(), S(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, m.cols());
  return x;
}

/// Inverse of a square matrix, or nullopt if singular.
template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: non-square");
  Mat<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S(1);
  }
  auto piv = rref_inplace(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline SparseMat to_sparse(const Mat<Rat>& m) {
  SparseMat s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) s.cols[j].entries.emplace_back(static_cast<Index>(i), m(i, j));
  return s;
}

inline Mat<Rat> to_dense(const SparseMat& s) {
  Mat<Rat> m(s.rows, s.ncols());
  for (std::size_t j = 0; j < s.ncols(); ++j)
    for (const auto& [i, x] : s.cols[j].entries) m(i, j) = x;
  return m;
}

}  // namespace aqsym
