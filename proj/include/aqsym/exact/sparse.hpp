#pragma once

// Sparse exact linear algebra over Q: sparse vectors, an incrementally built
// row-echelon basis, and kernels of sparse matrices.

#include "aqsym/exact/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace aqsym {

using Index = std::uint32_t;

/// Sorted (index, value) pairs with no stored zeros.
struct SparseVec {
  std::vector<std::pair<Index, Rat>> entries;

  SparseVec() = default;
  explicit SparseVec(std::vector<std::pair<Index, Rat>> e) : entries(std::move(e)) { normalize(); }

  static SparseVec unit(Index i, Rat v = 1) {
    SparseVec s;
    if (!is_zero(v)) s.entries.emplace_back(i, std::move(v));
    return s;
  }
  static SparseVec from_dense(const std::vector<Rat>& d) {
    SparseVec s;
    for (Index i = 0; i < d.size(); ++i)
      if (!is_zero(d[i])) s.entries.emplace_back(i, d[i]);
    return s;
  }

  [[nodiscard]] bool empty() const { return entries.empty(); }
  [[nodiscard]] std::size_t nnz() const { return entries.size(); }

  [[nodiscard]] Rat at(Index i) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), i,
                               [](const auto& e, Index k) { return e.first < k; });
    if (it != entries.end() && it->first == i) return it->second;
    return Rat(0);
  }

  [[nodiscard]] std::vector<Rat> to_dense(std::size_t n) const {
    std::vector<Rat> d(n);
    for (const auto& [i, v] : entries) d.at(i) = v;
    return d;
  }

  /// Sort, merge duplicates, drop zeros.
  void normalize() {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Index, Rat>> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
      if (!out.empty() && out.back().first == e.first)
        out.back().second += e.second;
      else
        out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
    entries = std::move(out);
  }

  SparseVec& operator*=(const Rat& a) {
    if (is_zero(a)) {
      entries.clear();
      return *this;
    }
    for (auto& e : entries) e.second *= a;
    return *this;
  }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries == b.entries; }
};

/// y + a*x
inline SparseVec axpy(const SparseVec& y, const Rat& a, const SparseVec& x) {
  if (is_zero(a) || x.empty()) return y;
  SparseVec out;
  out.entries.reserve(y.nnz() + x.nnz());
  auto iy = y.entries.begin();
  auto ix = x.entries.begin();
  while (iy != y.entries.end() || ix != x.entries.end()) {
    if (ix == x.entries.end() || (iy != y.entries.end() && iy->first < ix->first)) {
      out.entries.push_back(*iy++);
    } else if (iy == y.entries.end() || ix->first < iy->first) {
      out.entries.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rat v = iy->second + a * ix->second;
      if (!is_zero(v)) out.entries.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  return out;
}

inline SparseVec operator+(const SparseVec& a, const SparseVec& b) { return axpy(a, Rat(1), b); }
inline SparseVec operator-(const SparseVec& a, const SparseVec& b) { return axpy(a, Rat(-1), b); }
inline SparseVec operator*(const Rat& a, SparseVec v) { return v *= a; }

inline Rat dot(const SparseVec& a, const SparseVec& b) {
  Rat s = 0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      s += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

/// Sparse matrix stored by columns; the column view is what every linear
/// operator in the engine produces naturally (image of each basis vector).
struct SparseMat {
  std::size_t rows = 0;
  std::vector<SparseVec> cols;

  SparseMat() = default;
  SparseMat(std::size_t r, std::size_t c) : rows(r), cols(c) {}

  [[nodiscard]] std::size_t ncols() const { return cols.size(); }

  static SparseMat identity(std::size_t n) {
    SparseMat m(n, n);
    for (Index i = 0; i < n; ++i) m.cols[i] = SparseVec::unit(i);
    return m;
  }

  [[nodiscard]] SparseVec apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, x] : v.entries) out = axpy(out, x, cols.at(j));
    return out;
  }

  [[nodiscard]] SparseMat transpose() const {
    SparseMat t(cols.size(), rows);
    for (Index j = 0; j < cols.size(); ++j)
      for (const auto& [i, x] : cols[j].entries) t.cols[i].entries.emplace_back(j, x);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(cols.begin(), cols.end(), [](const SparseVec& c) { return c.empty(); });
  }

  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows == b.rows && a.cols == b.cols;
  }
};

inline SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  assert(a.ncols() == b.rows);
  SparseMat c(a.rows, b.ncols());
  for (Index j = 0; j < b.ncols(); ++j) c.cols[j] = a.apply(b.cols[j]);
  return c;
}
inline SparseMat operator+(const SparseMat& a, const SparseMat& b) {
  SparseMat c(a.rows, a.ncols());
  for (Index j = 0; j < a.ncols(); ++j) c.cols[j] = a.cols[j] + b.cols[j];
  return c;
}
inline SparseMat operator-(const SparseMat& a, const SparseMat& b) {
  SparseMat c(a.rows, a.ncols());
  for (Index j = 0; j < a.ncols(); ++j) c.cols[j] = a.cols[j] - b.cols[j];
  return c;
}
inline SparseMat operator*(const Rat& s, const SparseMat& a) {
  SparseMat c = a;
  for (auto& col : c.cols) col *= s;
  return c;
}
/// AB - BA
inline SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

/// Row-echelon basis of a subspace of Q^dim, built one vector at a time.
/// Each stored row has its pivot coefficient normalized to one. After
/// `reduce_fully()` the basis is in reduced row-echelon form and coordinates
/// of a member vector can be read off at the pivot positions.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0) : dim_(dim), row_of_(dim, -1) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::vector<SparseVec>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<Index>& pivots() const { return pivots_; }
  [[nodiscard]] bool is_pivot(Index c) const { return row_of_.at(c) >= 0; }
  [[nodiscard]] bool fully_reduced() const { return reduced_; }

  /// Remainder of v after elimination against the stored rows.
  [[nodiscard]] SparseVec reduce(const SparseVec& v) const { return reduce_impl(v, -1); }

  [[nodiscard]] bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Adds v; returns true when v was independent of the stored rows.
  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rat inv = 1 / r.entries.front().second;
    r *= inv;
    Index p = r.entries.front().first;
    row_of_[p] = static_cast<long>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(r));
    reduced_ = rows_.size() <= 1;
    return true;
  }

  /// Back-substitution to reduced row-echelon form.
  void reduce_fully() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t k : order) rows_[k] = reduce_impl(rows_[k], static_cast<long>(k));
    reduced_ = true;
  }

  /// Coordinates of v with respect to the stored rows, or nullopt if v is not
  /// in the span. Requires reduced form.
  [[nodiscard]] std::optional<std::vector<Rat>> coordinates(const SparseVec& v) const {
    assert(reduced_);
    if (!contains(v)) return std::nullopt;
    std::vector<Rat> c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v.at(pivots_[k]);
    return c;
  }

 private:
  // Eliminates every pivot column of v except the pivot of row `self`.
  [[nodiscard]] SparseVec reduce_impl(const SparseVec& v, long self) const {
    if (rows_.empty() || v.empty()) return v;
    // Hashed scratch keyed by column, ordered processing through a min-heap.
    std::priority_queue<Index, std::vector<Index>, std::greater<>> heap;
    IndexMap map;
    for (const auto& [i, x] : v.entries) {
      map.set(i, x);
      heap.push(i);
    }
    SparseVec out;
    Index last = static_cast<Index>(-1);
    bool first = true;
    while (!heap.empty()) {
      Index c = heap.top();
      heap.pop();
      if (!first && c == last) continue;
      first = false;
      last = c;
      Rat* val = map.find(c);
      if (val == nullptr || is_zero(*val)) continue;
      long r = row_of_[c];
      if (r >= 0 && r != self) {
        Rat f = *val;
        for (const auto& [j, x] : rows_[r].entries) {
          Rat* slot = map.find(j);
          if (slot == nullptr) {
            map.set(j, -f * x);
            heap.push(j);
          } else {
            bool was_zero = is_zero(*slot);
            *slot -= f * x;
            if (was_zero) heap.push(j);
          }
        }
      } else {
        out.entries.emplace_back(c, *val);
      }
    }
    return out;
  }

  // Minimal open-addressing map Index -> Rat used as elimination scratch.
  struct IndexMap {
    std::vector<Index> keys;
    std::vector<Rat> vals;
    std::vector<char> used;
    std::size_t count = 0;
    IndexMap() : keys(64), vals(64), used(64, 0) {}
    std::size_t slot(Index k) const {
      std::size_t mask = keys.size() - 1;
      std::size_t h = (static_cast<std::size_t>(k) * 0x9E3779B97F4A7C15ULL) >> 17;
      h &= mask;
      while (used[h] && keys[h] != k) h = (h + 1) & mask;
      return h;
    }
    Rat* find(Index k) {
      std::size_t h = slot(k);
      return used[h] ? &vals[h] : nullptr;
    }
    void set(Index k, Rat v) {
      if (2 * (count + 1) > keys.size()) grow();
      std::size_t h = slot(k);
      if (!used[h]) {
        used[h] = 1;
        keys[h] = k;
        ++count;
      }
      vals[h] = std::move(v);
    }
    void grow() {
      std::vector<Index> ok = std::move(keys);
      std::vector<Rat> ov = std::move(vals);
      std::vector<char> ou = std::move(used);
      std::size_t n = ok.size() * 2;
      keys.assign(n, 0);
      vals.assign(n, Rat(0));
      used.assign(n, 0);
      count = 0;
      for (std::size_t i = 0; i < ok.size(); ++i)
        if (ou[i]) set(ok[i], std::move(ov[i]));
    }
  };

  std::size_t dim_;
  std::vector<long> row_of_;
  std::vector<Index> pivots_;
  std::vector<SparseVec> rows_;
  bool reduced_ = true;
};

/// Rank of the span of the given vectors.
inline std::size_t rank_of(const std::vector<SparseVec>& vecs, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

/// Right null space of the matrix whose rows are given, over Q^ncols.
inline std::vector<SparseVec> kernel_of_rows(const std::vector<SparseVec>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  e.reduce_fully();
  std::vector<long> free_slot(ncols, -1);
  std::vector<SparseVec> basis;
  for (Index c = 0; c < ncols; ++c) {
    if (!e.is_pivot(c)) {
      free_slot[c] = static_cast<long>(basis.size());
      basis.push_back(SparseVec::unit(c));
    }
  }
  const auto& piv = e.pivots();
  for (std::size_t k = 0; k < e.rows().size(); ++k) {
    for (const auto& [c, x] : e.rows()[k].entries) {
      if (c == piv[k]) continue;
      long f = free_slot[c];
      if (f >= 0) basis[f].entries.emplace_back(piv[k], -x);
    }
  }
  for (auto& b : basis) b.normalize();
  return basis;
}

/// Right null space of a column-stored sparse matrix.
inline std::vector<SparseVec> kernel(const SparseMat& m) {
  SparseMat t = m.transpose();
  return kernel_of_rows(t.cols, m.ncols());
}

inline std::size_t rank(const SparseMat& m) { return rank_of(m.cols, m.rows); }

}  // namespace aqsym
