#pragma once

// Graded models a^psi = g_{-1} + ann(psi) and their filtered deformations
//   f_II : [x, y] + b(w)(x, y),   f_I : [x, y] + w(x, y)   for x, y in g_{-1}.

#include "aqsym/deform/bmap.hpp"
#include "aqsym/lie/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aqsym {

class JacobiFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a^psi with basis g_{-1} (indices [0, 4n)) followed by a reduced basis of
/// the annihilator; `embedding[i]` is basis vector i in sl(n+1,H) coordinates.
struct GradedModel {
  std::size_t n = 0;
  LieAlgebra alg;
  std::vector<Vec> embedding;
  std::vector<int> degree;
  Echelon a0_span;  // the annihilator inside sl(n+1,H), reduced
  std::vector<Vec> h_first, h_last, hplus, heis_center;

  [[nodiscard]] std::size_t dim_gm1() const { return 4 * n; }
  [[nodiscard]] std::vector<Vec> gm1() const { return range(0, dim_gm1()); }
  [[nodiscard]] std::vector<Vec> a0() const { return range(dim_gm1(), alg.dim()); }
  [[nodiscard]] std::vector<Vec> range(std::size_t a, std::size_t b) const {
    std::vector<Vec> v;
    for (std::size_t i = a; i < b; ++i) v.push_back(Vec::unit(static_cast<Index>(i)));
    return v;
  }
  /// Model coordinates of an element of sl(n+1,H) in g_{-1} + a0.
  [[nodiscard]] std::optional<Vec> coords(const Vec& x) const {
    Vec lower, upper;
    for (const auto& [i, a] : x.entries) (i < dim_gm1() ? lower : upper).entries.emplace_back(i, a);
    auto c = a0_span.coordinates(upper);
    if (!c) return std::nullopt;
    Vec out = lower;
    for (std::size_t k = 0; k < c->size(); ++k)
      if (!is_zero((*c)[k])) out.entries.emplace_back(static_cast<Index>(dim_gm1() + k), (*c)[k]);
    return out;
  }
};

namespace detail {

inline std::string combination_label(const LieAlgebra& g, const Vec& v) {
  std::string s;
  for (const auto& [i, a] : v.entries) {
    if (!s.empty()) s += (a < 0 ? "-" : "+");
    else if (a < 0) s += "-";
    Rat m = abs(a);
    if (m != 1) s += m.get_str() + "*";
    s += g.label(i);
  }
  return s;
}

/// Model coordinates of sl(n+1,H) vectors inside H_s, for the given block.
inline std::vector<Vec> quaternion_line(std::size_t s) {
  std::vector<Vec> v;
  for (Index q = 0; q < 4; ++q) v.push_back(Vec::unit(static_cast<Index>(4 * (s - 1)) + q));
  return v;
}

}  // namespace detail

/// The graded model for an annihilator a0 in g_0 (coordinates of g).
inline GradedModel build_graded_model(const GradedSlh& g, const std::vector<Vec>& a0) {
  GradedModel m;
  m.n = g.n;
  m.a0_span = span_of(a0, g.alg.dim());
  m.a0_span.reduce_fully();
  for (const auto& r : m.a0_span.rows())
    for (const auto& [i, a] : r.entries)
      if (i < g.g0_begin() || i >= g.g1_begin()) throw std::invalid_argument("build_graded_model: a0 not in g_0");
  std::vector<std::string> labels;
  for (Index i = 0; i < g.g0_begin(); ++i) {
    m.embedding.push_back(Vec::unit(i));
    labels.push_back(g.alg.label(i));
    m.degree.push_back(-1);
  }
  for (const auto& r : m.a0_span.rows()) {
    m.embedding.push_back(r);
    labels.push_back(detail::combination_label(g.alg, r));
    m.degree.push_back(0);
  }
  const std::size_t d = m.embedding.size();
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = m.coords(g.alg.bracket(m.embedding[i], m.embedding[j]));
      if (!c) throw std::logic_error("build_graded_model: annihilator is not a subalgebra");
      table[i][j] = std::move(*c);
    }
  m.alg = LieAlgebra(std::move(labels), std::move(table));
  m.h_first = detail::quaternion_line(1);
  m.h_last = detail::quaternion_line(g.n);
  const ParabolicH p = build_parabolic_h(g);
  for (const auto& x : p.hplus) {
    auto c = m.coords(x);
    if (c) m.hplus.push_back(*c);
  }
  // heis = h_+ inside the model; its centre is computed there.
  if (!m.hplus.empty() && is_subalgebra(m.alg, m.hplus)) {
    std::vector<Vec> basis;
    LieAlgebra h = restrict_to(m.alg, m.hplus, &basis);
    for (const auto& z : center(h)) {
      Vec v;
      for (const auto& [k, a] : z.entries) v = axpy(v, a, basis[k]);
      m.heis_center.push_back(std::move(v));
    }
  }
  return m;
}

/// A filtered deformation of a graded model.
struct DeformedAlgebra {
  std::string provenance;
  GradedModel model;
  LieAlgebra alg;
};

/// Adds `cocycle(e_i, e_j)`, given in sl(n+1,H) coordinates, to the brackets
/// of g_{-1} basis pairs.
template <class F>
DeformedAlgebra deform_model(GradedModel model, std::string provenance, F&& cocycle) {
  const std::size_t d = model.alg.dim(), N = model.dim_gm1();
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i][j] = model.alg.structure(i, j);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) {
        auto c = model.coords(cocycle(i, j));
        if (!c) throw std::logic_error(provenance + ": deformation term leaves the graded model");
        table[i][j] = table[i][j] + *c;
      }
  DeformedAlgebra f;
  f.provenance = std::move(provenance);
  f.alg = LieAlgebra(model.alg.labels(), std::move(table));
  f.model = std::move(model);
  if (auto bad = f.alg.jacobi_failure()) {
    const auto& t = *bad;
    throw JacobiFailure(f.provenance + ": Jacobi fails on (" + f.alg.label(t[0]) + ", " + f.alg.label(t[1]) + ", " +
                        f.alg.label(t[2]) + ")");
  }
  return f;
}

/// f_II: the curvature-type model deformed by b(w).
inline DeformedAlgebra deform_curvature(const GradedSlh& g, const EquivariantB& b) {
  const TensorModule& v = b.curvature;
  GradedModel model = build_graded_model(g, annihilator(v.rep, b.w));
  const FormSpace& s = b.space;
  return deform_model(std::move(model), "b(w_II)", [&](std::size_t i, std::size_t j) {
    Vec val;
    for (std::size_t c = 0; c < s.value_dim(); ++c) {
      Rat x = s.component(b.bw, {i, j, 0}, c);
      if (!is_zero(x)) val.entries.emplace_back(g.g0_begin() + static_cast<Index>(c), x);
    }
    return val;
  });
}

/// Convenience overload computing b first.
inline DeformedAlgebra deform_curvature(const GradedSlh& g) { return deform_curvature(g, equivariant_b(g)); }

/// f_I: the torsion-type model deformed by w itself.
inline DeformedAlgebra deform_torsion(const GradedSlh& g) {
  TensorModule v = build_torsion_module(g);
  const SparseVec w = torsion_extremal(v, g).coords;
  const SparseVec amb = v.ambient(w);
  GradedModel model = build_graded_model(g, annihilator(v.rep, w));
  const FormSpace& s = v.space;
  return deform_model(std::move(model), "w_I", [&](std::size_t i, std::size_t j) {
    Vec val;
    for (std::size_t c = 0; c < s.value_dim(); ++c) {
      Rat x = s.component(amb, {i, j, 0}, c);
      if (!is_zero(x)) val.entries.emplace_back(static_cast<Index>(c), x);
    }
    return val;
  });
}

/// Span of all brackets [a_i, b_j] in f.
inline std::vector<Vec> bracket_image(const LieAlgebra& f, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  return bracket_span(f, a, b);
}

/// With m = g_{-1} and h = the degree-0 part: [m, m] in h.
inline bool symmetric_pair_check(const DeformedAlgebra& f) {
  const auto m = f.model.gm1();
  Echelon h = span_of(f.model.a0(), f.alg.dim());
  return contains_all(h, bracket_image(f.alg, m, m));
}

/// g_{-1} is an ideal of f on which the lower central series reaches 0.
inline bool gm1_nilpotent_ideal(const DeformedAlgebra& f) {
  const auto m = f.model.gm1();
  Echelon e = span_of(m, f.alg.dim());
  if (!contains_all(e, bracket_image(f.alg, full_basis(f.alg.dim()), m))) return false;
  std::vector<Vec> cur = m;
  while (!cur.empty()) {
    auto next = bracket_image(f.alg, m, cur);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

/// Brackets that differ from the graded model, as index pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> changed_brackets(const DeformedAlgebra& f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < f.alg.dim(); ++i)
    for (std::size_t j = 0; j < f.alg.dim(); ++j)
      if (!(f.alg.structure(i, j) == f.model.alg.structure(i, j))) out.emplace_back(i, j);
  return out;
}

/// dim g - dim rad g.
inline std::size_t levi_dim(const LieAlgebra& g) { return g.dim() - radical(g).size(); }

}  // namespace aqsym
