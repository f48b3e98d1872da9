#pragma once

// Real tensor spaces Sym^p(V*) (x) W and Alt^p(V*) (x) W with V = R^N.
//
// A basis element is a sorted index tuple S (a multiset for Sym, a strictly
// increasing set for Alt) together with a basis index w of W. The stored
// value is the component of the tensor at S: for Sym the tensor has that
// component at every permutation of S, for Alt e^{s1}^...^e^{sp} is the
// alternating sum over permutations.

#include "aqsym/exact/sparse.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqsym {

enum class FormKind { Sym, Alt };

class FormSpace {
 public:
  static constexpr std::size_t kMaxDegree = 3;
  using Tuple = std::array<std::size_t, kMaxDegree>;

  FormSpace() = default;
  FormSpace(FormKind kind, std::size_t p, std::size_t n, std::size_t w) : kind_(kind), p_(p), n_(n), w_(w) {
    if (p > kMaxDegree) throw std::invalid_argument("FormSpace: degree too large");
    std::size_t codes = 1;
    for (std::size_t k = 0; k < p; ++k) codes *= n;
    rank_.assign(codes, -1);
    Tuple t{};
    enumerate(0, 0, t);
  }

  [[nodiscard]] FormKind kind() const { return kind_; }
  [[nodiscard]] std::size_t degree() const { return p_; }
  [[nodiscard]] std::size_t base_dim() const { return n_; }
  [[nodiscard]] std::size_t value_dim() const { return w_; }
  [[nodiscard]] std::size_t num_tuples() const { return tuples_.size(); }
  [[nodiscard]] std::size_t dim() const { return tuples_.size() * w_; }
  [[nodiscard]] const Tuple& tuple(std::size_t r) const { return tuples_[r]; }

  [[nodiscard]] Index index(std::size_t tuple_rank, std::size_t w) const {
    return static_cast<Index>(tuple_rank * w_ + w);
  }
  [[nodiscard]] std::size_t tuple_of(Index i) const { return i / w_; }
  [[nodiscard]] std::size_t value_of(Index i) const { return i % w_; }

  /// Rank of a sorted tuple, or -1 when it is not a valid basis tuple.
  [[nodiscard]] long rank_sorted(const Tuple& t) const { return rank_[code(t)]; }

  /// Sorts an arbitrary tuple; returns the rank and the sign of the sorting
  /// permutation (Alt), or rank -1 for a repeated index in the Alt case.
  [[nodiscard]] std::pair<long, int> canonical(Tuple t) const {
    int sign = 1;
    for (std::size_t i = 1; i < p_; ++i)
      for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
        std::swap(t[j - 1], t[j]);
        sign = -sign;
      }
    if (kind_ == FormKind::Alt) {
      for (std::size_t i = 1; i < p_; ++i)
        if (t[i] == t[i - 1]) return {-1, 0};
      return {rank_sorted(t), sign};
    }
    return {rank_sorted(t), 1};
  }

  /// Component of x at an arbitrary (unsorted) tuple and value index.
  [[nodiscard]] Rat component(const SparseVec& x, const Tuple& t, std::size_t w) const {
    auto [r, s] = canonical(t);
    if (r < 0) return Rat(0);
    Rat v = x.at(index(static_cast<std::size_t>(r), w));
    return s < 0 ? Rat(-v) : v;
  }

  /// Action of an endomorphism whose matrix on V is m_v (columns m_v.cols[b]
  /// = image of e_b) and on W is m_w, extended as a derivation; duals carry
  /// minus the transpose.
  [[nodiscard]] SparseVec act(const SparseMat& m_v, const SparseMat& m_w, const SparseVec& x) const {
    SparseMat mt = m_v.transpose();
    return act_with_transpose(mt, m_w, x);
  }

  /// As `act`, with the transpose of m_v supplied (cols[a] = row a of m_v).
  [[nodiscard]] SparseVec act_with_transpose(const SparseMat& m_vt, const SparseMat& m_w,
                                             const SparseVec& x) const {
    std::vector<std::pair<Index, Rat>> out;
    for (const auto& [i, val] : x.entries) {
      const std::size_t r = tuple_of(i);
      const std::size_t w = value_of(i);
      for (const auto& [w2, a] : m_w.cols[w].entries) out.emplace_back(index(r, w2), val * a);
      const Tuple& t = tuples_[r];
      for (std::size_t slot = 0; slot < p_; ++slot) {
        if (kind_ == FormKind::Sym && slot > 0 && t[slot] == t[slot - 1]) continue;
        // x . e^u = - sum_f m[u][f] e^f
        for (const auto& [f, a] : m_vt.cols[t[slot]].entries) {
          Tuple o = t;
          o[slot] = f;
          auto [ro, sign] = canonical(o);
          if (ro < 0) continue;
          Rat c = -val * a;
          if (kind_ == FormKind::Sym) {
            std::size_t mult = 0;
            for (std::size_t k = 0; k < p_; ++k) mult += (o[k] == f);
            c *= Rat(static_cast<long>(mult));
          } else if (sign < 0) {
            c = -c;
          }
          out.emplace_back(index(static_cast<std::size_t>(ro), w), c);
        }
      }
    }
    return SparseVec(std::move(out));
  }

  /// Matrix of `act` on the whole space.
  [[nodiscard]] SparseMat action_matrix(const SparseMat& m_v, const SparseMat& m_w) const {
    SparseMat mt = m_v.transpose();
    SparseMat out(dim(), dim());
    for (Index i = 0; i < dim(); ++i) out.cols[i] = act_with_transpose(mt, m_w, SparseVec::unit(i));
    return out;
  }

  [[nodiscard]] std::string label(Index i, const std::vector<std::string>& vnames,
                                  const std::vector<std::string>& wnames) const {
    const Tuple& t = tuples_[tuple_of(i)];
    std::string s;
    for (std::size_t k = 0; k < p_; ++k) {
      if (k) s += (kind_ == FormKind::Alt ? "^" : ".");
      s += vnames.at(t[k]) + "*";
    }
    return s + "(x)" + wnames.at(value_of(i));
  }

 private:
  [[nodiscard]] std::size_t code(const Tuple& t) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < p_; ++k) c = c * n_ + t[k];
    return c;
  }
  void enumerate(std::size_t k, std::size_t start, Tuple& t) {
    if (k == p_) {
      rank_[code(t)] = static_cast<long>(tuples_.size());
      tuples_.push_back(t);
      return;
    }
    for (std::size_t a = start; a < n_; ++a) {
      t[k] = a;
      enumerate(k + 1, kind_ == FormKind::Sym ? a : a + 1, t);
    }
  }

  FormKind kind_ = FormKind::Sym;
  std::size_t p_ = 0, n_ = 0, w_ = 0;
  std::vector<Tuple> tuples_;
  std::vector<long> rank_;
};

}  // namespace aqsym
