#pragma once

// Finite-dimensional real representations of g_0 given by action matrices,
// and the exact linear algebra built on them: annihilators, orbit dimensions,
// eigenspace gradings and equivariant maps.

#include "aqsym/lie/sl_h.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqsym {

/// Representation of the subalgebra spanned by the basis indices
/// [offset, offset + action.size()) of a parent Lie algebra.
struct ModuleRep {
  std::string name;
  std::vector<std::string> labels;
  Index offset = 0;
  std::vector<SparseMat> action;

  [[nodiscard]] std::size_t dim() const { return labels.size(); }
  [[nodiscard]] std::size_t acting_dim() const { return action.size(); }

  /// x . v for x in parent coordinates supported on the acting block.
  [[nodiscard]] SparseVec apply(const Vec& x, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, a] : x.entries) {
      if (i < offset || i >= offset + action.size())
        throw std::out_of_range(name + ": element outside the acting algebra");
      out = axpy(out, a, action[i - offset].apply(v));
    }
    return out;
  }
  [[nodiscard]] SparseMat rho(const Vec& x) const {
    SparseMat m(dim(), dim());
    for (const auto& [i, a] : x.entries) m = m + a * action.at(i - offset);
    return m;
  }
};

/// A vector of a module, in the module's coordinates.
struct ModuleElement {
  const ModuleRep* parent = nullptr;
  SparseVec coords;
};

/// First pair (i, j) with rho([x_i, x_j]) != [rho(x_i), rho(x_j)], if any.
inline std::optional<std::pair<std::size_t, std::size_t>> homomorphism_failure(const LieAlgebra& g,
                                                                                const ModuleRep& m) {
  const std::size_t d = m.acting_dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec& br = g.structure(m.offset + i, m.offset + j);
      for (const auto& [k, a] : br.entries)
        if (k < m.offset || k >= m.offset + d) return std::make_pair(i, j);
      if (!(m.rho(br) == commutator(m.action[i], m.action[j]))) return std::make_pair(i, j);
    }
  return std::nullopt;
}

/// Restriction of an ambient action to an invariant subspace. `basis` must be
/// in reduced row-echelon form; module coordinates are read at its pivots.
inline ModuleRep restrict_module(std::string name, const Echelon& basis, const std::vector<SparseMat>& ambient,
                                 Index offset, std::vector<std::string> labels) {
  if (!basis.fully_reduced()) throw std::logic_error("restrict_module: basis must be reduced");
  ModuleRep m;
  m.name = std::move(name);
  m.labels = std::move(labels);
  m.offset = offset;
  const std::size_t d = basis.rank();
  for (const auto& a : ambient) {
    SparseMat r(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto c = basis.coordinates(a.apply(basis.rows()[j]));
      if (!c) throw std::logic_error(m.name + ": subspace is not invariant");
      r.cols[j] = SparseVec::from_dense(*c);
    }
    m.action.push_back(std::move(r));
  }
  return m;
}

/// Annihilator {x in span(acting) : x . v = 0}, in parent coordinates.
inline std::vector<Vec> annihilator(const ModuleRep& m, const SparseVec& v) {
  const std::size_t d = m.acting_dim();
  std::vector<std::vector<std::pair<Index, Rat>>> rows(m.dim());
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& [c, a] : m.action[k].apply(v).entries) rows[c].emplace_back(static_cast<Index>(k), a);
  std::vector<SparseVec> eq;
  for (auto& r : rows)
    if (!r.empty()) eq.emplace_back(std::move(r));
  std::vector<Vec> out;
  for (auto& kv : kernel_of_rows(eq, d)) {
    Vec x;
    for (const auto& [k, a] : kv.entries) x.entries.emplace_back(m.offset + k, a);
    out.push_back(std::move(x));
  }
  return out;
}

/// Dimension of the orbit of [v] in the projectivization under the group of
/// the given subalgebra (defaults to the whole acting algebra).
inline std::size_t orbit_dimension(const ModuleRep& m, const SparseVec& v, const std::vector<Vec>& sub = {}) {
  if (v.empty()) throw std::invalid_argument("orbit_dimension: zero vector");
  Echelon e(m.dim());
  e.insert(v);
  if (sub.empty()) {
    for (const auto& a : m.action) e.insert(a.apply(v));
  } else {
    for (const auto& x : sub) e.insert(m.apply(x, v));
  }
  return e.rank() - 1;
}

/// Seeded pseudo-random module vector with small integer coordinates.
inline SparseVec random_element(std::size_t dim, std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<Rat> d(dim);
  for (auto& x : d) x = dist(rng);
  return SparseVec::from_dense(d);
}

/// Diagonal of a matrix that is required to be diagonal.
inline std::optional<std::vector<Rat>> diagonal_of(const SparseMat& m) {
  std::vector<Rat> d(m.ncols());
  for (Index j = 0; j < m.ncols(); ++j)
    for (const auto& [i, a] : m.cols[j].entries) {
      if (i != j) return std::nullopt;
      d[j] = a;
    }
  return d;
}

/// Eigenspace decomposition of the action of a diagonalizable element whose
/// matrix is diagonal in the module basis.
struct ThetaGrading {
  std::vector<Rat> eigenvalues;             // increasing
  std::vector<std::vector<Index>> spaces;   // module basis indices per eigenvalue
  std::vector<Rat> theta;                   // eigenvalue of each basis vector

  [[nodiscard]] const Rat& max() const { return eigenvalues.back(); }
  [[nodiscard]] std::size_t dim_max() const { return spaces.back().size(); }
  [[nodiscard]] std::size_t dim_of(const Rat& t) const {
    for (std::size_t k = 0; k < eigenvalues.size(); ++k)
      if (eigenvalues[k] == t) return spaces[k].size();
    return 0;
  }
};

inline ThetaGrading theta_grading(const ModuleRep& m, const Vec& zprime) {
  auto diag = diagonal_of(m.rho(zprime));
  if (!diag) throw std::logic_error(m.name + ": Z' is not diagonal in the module basis");
  ThetaGrading t;
  t.theta = *diag;
  std::map<Rat, std::vector<Index>> by;
  for (Index i = 0; i < diag->size(); ++i) by[(*diag)[i]].push_back(i);
  for (auto& [ev, idx] : by) {
    t.eigenvalues.push_back(ev);
    t.spaces.push_back(std::move(idx));
  }
  return t;
}

/// Whether x maps every theta-eigenspace into the eigenspace shifted by `step`.
inline bool raises_theta(const ModuleRep& m, const ThetaGrading& t, const Vec& x, const Rat& step) {
  SparseMat r = m.rho(x);
  for (Index j = 0; j < r.ncols(); ++j)
    for (const auto& [i, a] : r.cols[j].entries)
      if (t.theta[i] != t.theta[j] + step) return false;
  return true;
}

/// Common kernel of the given elements.
inline std::vector<SparseVec> common_kernel(const ModuleRep& m, const std::vector<Vec>& xs) {
  std::vector<SparseVec> rows;
  for (const auto& x : xs) {
    SparseMat t = m.rho(x).transpose();
    for (auto& r : t.cols)
      if (!r.empty()) rows.push_back(std::move(r));
  }
  return kernel_of_rows(rows, m.dim());
}

/// Weight of each basis vector under a family of commuting elements acting
/// diagonally in the module basis.
inline std::vector<std::vector<Rat>> weights(const ModuleRep& m, const std::vector<Vec>& torus) {
  std::vector<std::vector<Rat>> w(m.dim());
  for (const auto& t : torus) {
    auto d = diagonal_of(m.rho(t));
    if (!d) throw std::logic_error(m.name + ": torus element is not diagonal in the module basis");
    for (std::size_t i = 0; i < m.dim(); ++i) w[i].push_back((*d)[i]);
  }
  return w;
}

class NoEquivariantIso : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Space of g_0-equivariant maps F: V -> W for V generated by the weight
/// vector w. Every such F is fixed by u = F(w), which lies in the weight
/// space of w and is killed by the annihilator of w. The submodule of
/// V + W^m generated by (w, u_1, ..., u_m) is built by closure under `gens`
/// (a Lie generating set); its rows with vanishing V-part are the
/// consistency conditions on the coefficients of the u_i. Each solution is
/// returned as a column-stored dim W x dim V matrix, verified on `check`.
inline std::vector<SparseMat> equivariant_maps(const ModuleRep& v, const ModuleRep& w, const SparseVec& gen,
                                               const std::vector<Vec>& gens, const std::vector<Vec>& torus,
                                               const std::vector<Vec>& check) {
  const auto wv = weights(v, torus);
  const auto ww = weights(w, torus);
  if (gen.empty()) throw std::invalid_argument("equivariant_maps: zero generator");
  const auto& mu = wv[gen.entries.front().first];
  for (const auto& [i, a] : gen.entries)
    if (wv[i] != mu) throw std::invalid_argument("equivariant_maps: generator is not a weight vector");
  std::vector<Index> slot;
  for (Index j = 0; j < w.dim(); ++j)
    if (ww[j] == mu) slot.push_back(j);
  std::vector<std::vector<std::pair<Index, Rat>>> rows(w.dim());
  for (const auto& a : annihilator(v, gen))
    for (std::size_t l = 0; l < slot.size(); ++l)
      for (const auto& [r, x] : w.apply(a, SparseVec::unit(slot[l])).entries)
        rows[r].emplace_back(static_cast<Index>(l), x);
  std::vector<SparseVec> eq;
  for (auto& r : rows)
    if (!r.empty()) eq.emplace_back(std::move(r));
  std::vector<SparseVec> us;
  for (const auto& k : kernel_of_rows(eq, slot.size())) {
    SparseVec u;
    for (const auto& [l, x] : k.entries) u.entries.emplace_back(slot[l], x);
    us.push_back(std::move(u));
  }
  if (us.empty()) return {};

  const std::size_t dv = v.dim(), dw = w.dim(), m = us.size();
  auto block = [&](const SparseVec& x, std::size_t i) {
    SparseVec out;
    const Index lo = static_cast<Index>(dv + i * dw), hi = static_cast<Index>(lo + dw);
    for (const auto& [c, a] : x.entries)
      if (c >= lo && c < hi) out.entries.emplace_back(c - lo, a);
    return out;
  };
  auto act = [&](const Vec& x, const SparseVec& s) {
    std::vector<std::pair<Index, Rat>> out;
    SparseVec vp;
    for (const auto& [c, a] : s.entries)
      if (c < dv) vp.entries.emplace_back(c, a);
    for (const auto& e : v.apply(x, vp).entries) out.push_back(e);
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& [c, a] : w.apply(x, block(s, i)).entries)
        out.emplace_back(static_cast<Index>(dv + i * dw + c), a);
    return SparseVec(std::move(out));
  };
  Echelon e(dv + m * dw);
  SparseVec start = gen;
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [c, a] : us[i].entries) start.entries.emplace_back(static_cast<Index>(dv + i * dw + c), a);
  std::vector<SparseVec> queue{start};
  e.insert(start);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& x : gens) {
      SparseVec y = act(x, queue[q]);
      if (e.insert(y)) queue.push_back(std::move(y));
    }
  e.reduce_fully();
  std::size_t vrank = 0;
  std::vector<std::vector<std::pair<Index, Rat>>> cons;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    if (e.pivots()[k] < dv) {
      ++vrank;
      continue;
    }
    std::vector<std::vector<std::pair<Index, Rat>>> byc(dw);
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& [c, a] : block(e.rows()[k], i).entries) byc[c].emplace_back(static_cast<Index>(i), a);
    for (auto& r : byc)
      if (!r.empty()) cons.push_back(std::move(r));
  }
  if (vrank != dv) throw std::invalid_argument("equivariant_maps: generator does not generate " + v.name);
  std::vector<SparseVec> cons_rows;
  for (auto& r : cons) cons_rows.emplace_back(std::move(r));
  std::vector<SparseMat> out;
  for (const auto& c : kernel_of_rows(cons_rows, m)) {
    SparseMat f(dw, dv);
    for (std::size_t k = 0; k < e.rank(); ++k) {
      const Index p = e.pivots()[k];
      if (p >= dv) continue;
      SparseVec col;
      for (const auto& [i, a] : c.entries) col = axpy(col, a, block(e.rows()[k], i));
      f.cols[p] = std::move(col);
    }
    for (const auto& x : check)
      if (!(f * v.rho(x) == w.rho(x) * f)) throw std::logic_error("equivariant_maps: verification failed");
    out.push_back(std::move(f));
  }
  return out;
}

struct EquivariantIso {
  SparseMat map;
  std::size_t solution_dim = 0;
};

/// An invertible equivariant map V -> W, or NoEquivariantIso.
inline EquivariantIso match_modules(const ModuleRep& v, const ModuleRep& w, const SparseVec& gen,
                                    const std::vector<Vec>& gens, const std::vector<Vec>& torus,
                                    const std::vector<Vec>& check) {
  if (v.dim() != w.dim())
    throw NoEquivariantIso(v.name + " and " + w.name + " have different dimensions");
  auto sols = equivariant_maps(v, w, gen, gens, torus, check);
  if (sols.empty()) throw NoEquivariantIso("no equivariant map " + v.name + " -> " + w.name);
  for (const auto& f : sols)
    if (rank(f) == v.dim()) return {f, sols.size()};
  // A generic combination is invertible whenever any element is.
  SparseMat f(w.dim(), v.dim());
  for (std::size_t k = 0; k < sols.size(); ++k) f = f + Rat(static_cast<long>(k + 1)) * sols[k];
  if (rank(f) == v.dim()) return {f, sols.size()};
  throw NoEquivariantIso("no invertible equivariant map " + v.name + " -> " + w.name);
}

/// Whether the Lie subalgebra generated by `gens` is the span of `target`.
inline bool generates(const LieAlgebra& g, const std::vector<Vec>& gens, const std::vector<Vec>& target) {
  Echelon e(g.dim());
  std::vector<Vec> cur;
  for (const auto& x : gens)
    if (e.insert(x)) cur.push_back(x);
  std::vector<Vec> all = cur;
  while (!cur.empty()) {
    std::vector<Vec> next;
    for (const auto& x : cur)
      for (const auto& y : all) {
        Vec b = g.bracket(x, y);
        if (e.insert(b)) next.push_back(b);
      }
    all.insert(all.end(), next.begin(), next.end());
    cur = std::move(next);
  }
  Echelon t = span_of(target, g.dim());
  return e.rank() == t.rank() && contains_all(e, target);
}

}  // namespace aqsym
