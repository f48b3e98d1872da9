#pragma once

// Finite-dimensional real Lie algebras given by exact structure constants,
// together with subspace utilities (closure, series, radical, nilradical).

#include "aqsym/exact/matrix.hpp"
#include "aqsym/exact/sparse.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aqsym {

using Vec = SparseVec;

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// table[i][j] = coordinates of [e_i, e_j].
  LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    if (table_.size() != labels_.size()) throw std::invalid_argument("LieAlgebra: table size");
    for (const auto& row : table_)
      if (row.size() != labels_.size()) throw std::invalid_argument("LieAlgebra: table size");
  }

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const Vec& structure(std::size_t i, std::size_t j) const { return table_[i][j]; }

  [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const {
    Vec out;
    for (const auto& [i, a] : x.entries)
      for (const auto& [j, b] : y.entries)
        if (!table_[i][j].empty()) out = axpy(out, a * b, table_[i][j]);
    return out;
  }

  /// Matrix of ad_x, column j holding [x, e_j].
  [[nodiscard]] SparseMat ad(const Vec& x) const {
    SparseMat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec col;
      for (const auto& [i, a] : x.entries) col = axpy(col, a, table_[i][j]);
      m.cols[j] = std::move(col);
    }
    return m;
  }

  [[nodiscard]] bool antisymmetric() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i; j < dim(); ++j)
        if (!(table_[i][j] + table_[j][i]).empty()) return false;
    return true;
  }

  /// First basis triple violating the Jacobi identity, if any.
  [[nodiscard]] std::optional<std::array<std::size_t, 3>> jacobi_failure() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        for (std::size_t k = j + 1; k < dim(); ++k) {
          Vec s = bracket(Vec::unit(i), table_[j][k]);
          s = s + bracket(Vec::unit(j), table_[k][i]);
          s = s + bracket(Vec::unit(k), table_[i][j]);
          if (!s.empty()) return std::array<std::size_t, 3>{i, j, k};
        }
    return std::nullopt;
  }

  [[nodiscard]] Mat<Rat> killing() const {
    std::vector<Mat<Rat>> ads;
    ads.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) ads.push_back(to_dense(ad(Vec::unit(i))));
    Mat<Rat> k(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i; j < dim(); ++j) {
        Rat t = 0;
        for (std::size_t a = 0; a < dim(); ++a)
          for (std::size_t b = 0; b < dim(); ++b)
            if (!is_zero(ads[i](a, b)) && !is_zero(ads[j](b, a))) t += ads[i](a, b) * ads[j](b, a);
        k(i, j) = t;
        k(j, i) = t;
      }
    return k;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
};

/// Echelon basis of the span of vs.
inline Echelon span_of(const std::vector<Vec>& vs, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vs) e.insert(v);
  return e;
}

/// Independent basis (RREF rows) of the span.
inline std::vector<Vec> basis_of(const std::vector<Vec>& vs, std::size_t dim) {
  Echelon e = span_of(vs, dim);
  e.reduce_fully();
  return e.rows();
}

inline bool contains_all(const Echelon& e, const std::vector<Vec>& vs) {
  for (const auto& v : vs)
    if (!e.contains(v)) return false;
  return true;
}

/// Basis of [A, B].
inline std::vector<Vec> bracket_span(const LieAlgebra& g, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  Echelon e(g.dim());
  for (const auto& x : a)
    for (const auto& y : b) e.insert(g.bracket(x, y));
  e.reduce_fully();
  return e.rows();
}

inline bool is_subalgebra(const LieAlgebra& g, const std::vector<Vec>& basis) {
  Echelon e = span_of(basis, g.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!e.contains(g.bracket(basis[i], basis[j]))) return false;
  return true;
}

/// Intersection of two subspaces.
inline std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
  // Solve sum x_i a_i = sum y_j b_j; the kernel gives the intersection.
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Vec> rows(dim);
  for (std::size_t i = 0; i < na; ++i)
    for (const auto& [c, x] : a[i].entries) rows[c].entries.emplace_back(i, x);
  for (std::size_t j = 0; j < nb; ++j)
    for (const auto& [c, x] : b[j].entries) rows[c].entries.emplace_back(na + j, -x);
  for (auto& r : rows) r.normalize();
  std::vector<Vec> out;
  for (const auto& k : kernel_of_rows(rows, na + nb)) {
    Vec v;
    for (const auto& [i, x] : k.entries)
      if (i < na) v = axpy(v, x, a[i]);
    out.push_back(std::move(v));
  }
  return basis_of(out, dim);
}

/// Structure constants of a subalgebra in the RREF basis of its span.
inline LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vec>& basis,
                              std::vector<Vec>* used_basis = nullptr) {
  Echelon e = span_of(basis, g.dim());
  e.reduce_fully();
  const auto& b = e.rows();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.size(); ++i) labels.push_back("b" + std::to_string(i));
  std::vector<std::vector<Vec>> table(b.size(), std::vector<Vec>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto c = e.coordinates(g.bracket(b[i], b[j]));
      if (!c) throw std::domain_error("restrict_to: subspace is not a subalgebra");
      table[i][j] = Vec::from_dense(*c);
    }
  if (used_basis) *used_basis = b;
  return LieAlgebra(std::move(labels), std::move(table));
}

inline std::vector<Vec> full_basis(std::size_t dim) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < dim; ++i) b.push_back(Vec::unit(static_cast<Index>(i)));
  return b;
}

/// Dimensions g, [g,g], [[g,g],[g,g]], ... until stable.
inline std::vector<std::size_t> derived_series_dims(const LieAlgebra& g) {
  std::vector<std::size_t> dims{g.dim()};
  std::vector<Vec> cur = full_basis(g.dim());
  for (;;) {
    auto next = bracket_span(g, cur, cur);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return dims;
}

/// Dimensions g, [g,g], [g,[g,g]], ... until stable.
inline std::vector<std::size_t> lower_central_dims(const LieAlgebra& g) {
  std::vector<std::size_t> dims{g.dim()};
  const auto all = full_basis(g.dim());
  std::vector<Vec> cur = all;
  for (;;) {
    auto next = bracket_span(g, all, cur);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return dims;
}

inline std::vector<Vec> center(const LieAlgebra& g) {
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < g.dim(); ++j) {
    // Each coordinate of [x, e_j] = sum_i x_i c_ij gives one row per output index.
    std::vector<Vec> out(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (const auto& [c, v] : g.structure(i, j).entries) out[c].entries.emplace_back(i, v);
    for (auto& r : out)
      if (!r.empty()) rows.push_back(std::move(r));
  }
  return kernel_of_rows(rows, g.dim());
}

/// Solvable radical as the Killing-orthogonal complement of [g,g].
inline std::vector<Vec> radical(const LieAlgebra& g) {
  auto d = bracket_span(g, full_basis(g.dim()), full_basis(g.dim()));
  Mat<Rat> k = g.killing();
  std::vector<Vec> rows;
  for (const auto& y : d) {
    // row: x -> B(x, y)
    Vec r;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Rat s = 0;
      for (const auto& [j, v] : y.entries) s += k(i, j) * v;
      if (!is_zero(s)) r.entries.emplace_back(static_cast<Index>(i), s);
    }
    rows.push_back(std::move(r));
  }
  return kernel_of_rows(rows, g.dim());
}

namespace detail {
inline Vec flatten(const Mat<Rat>& m) {
  Vec v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) v.entries.emplace_back(static_cast<Index>(i * m.cols() + j), m(i, j));
  return v;
}
inline Mat<Rat> unflatten(const Vec& v, std::size_t n) {
  Mat<Rat> m(n, n);
  for (const auto& [k, x] : v.entries) m(k / n, k % n) = x;
  return m;
}
}  // namespace detail

/// Nilradical: elements x of the radical with ad_x in the Jacobson radical of
/// the associative algebra generated by ad(radical); the latter is the
/// radical of the trace form.
inline std::vector<Vec> nilradical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto rad = radical(g);
  if (rad.empty()) return {};
  std::vector<Mat<Rat>> gens;
  for (const auto& r : rad) gens.push_back(to_dense(g.ad(r)));
  Echelon e(n * n);
  std::vector<Mat<Rat>> basis;
  for (const auto& m : gens)
    if (e.insert(detail::flatten(m))) basis.push_back(m);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& gm : gens) {
      Mat<Rat> p = basis[k] * gm;
      if (e.insert(detail::flatten(p))) basis.push_back(p);
    }
  std::vector<Vec> rows;
  for (const auto& b : basis) {
    Vec r;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Rat t = (gens[i] * b).trace();
      if (!is_zero(t)) r.entries.emplace_back(static_cast<Index>(i), t);
    }
    rows.push_back(std::move(r));
  }
  std::vector<Vec> out;
  for (const auto& k : kernel_of_rows(rows, gens.size())) {
    Vec v;
    for (const auto& [i, x] : k.entries) v = axpy(v, x, rad[i]);
    out.push_back(std::move(v));
  }
  return basis_of(out, n);
}

/// Isomorphism invariants used to compare abstract algebras.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> derived;
  std::vector<std::size_t> lower_central;
  std::size_t levi = 0;
  std::size_t nilradical = 0;
  std::size_t center = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    auto list = [&](const std::vector<std::size_t>& v) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << "]";
    };
    os << "dim=" << dim << " derived=";
    list(derived);
    os << " lcs=";
    list(lower_central);
    os << " levi=" << levi << " nil=" << nilradical << " center=" << center;
    return os.str();
  }
};

inline Fingerprint fingerprint(const LieAlgebra& g) {
  Fingerprint f;
  f.dim = g.dim();
  f.derived = derived_series_dims(g);
  f.lower_central = lower_central_dims(g);
  f.levi = g.dim() - radical(g).size();
  f.nilradical = nilradical(g).size();
  f.center = center(g).size();
  return f;
}

/// Z-grading of a Lie algebra by basis-vector degrees.
struct Grading {
  std::vector<int> degree;
  Vec element;  // grading element Z

  [[nodiscard]] std::vector<Vec> piece(int d) const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < degree.size(); ++i)
      if (degree[i] == d) out.push_back(Vec::unit(static_cast<Index>(i)));
    return out;
  }
};

/// [g_i, g_j] lies in g_{i+j} for all basis pairs.
inline bool grading_compatible(const LieAlgebra& g, const Grading& gr) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& [k, v] : g.structure(i, j).entries)
        if (gr.degree[k] != gr.degree[i] + gr.degree[j]) return false;
  return true;
}

/// ad_Z acts on each basis vector by its degree.
inline bool grading_element_ok(const LieAlgebra& g, const Grading& gr) {
  for (std::size_t j = 0; j < g.dim(); ++j) {
    Vec img = g.bracket(gr.element, Vec::unit(static_cast<Index>(j)));
    if (!(img == Rat(gr.degree[j]) * Vec::unit(static_cast<Index>(j)))) return false;
  }
  return true;
}

}  // namespace aqsym
