#pragma once

// The g_0-equivariant map b : V^II -> Alt^2(g_{-1})* (x) g_0 and its value on
// the extremal curvature vector, compared with the closed formula
//   b(w) = (i_n^ ^ j_n^ - 1_n^ ^ k_n^) (x) X - (1_n^ ^ j_n^ + i_n^ ^ k_n^) (x) Y.
//
// The closed formula writes g_0-values as real maps H_n -> H_1 in the
// convention where quaternionic matrices act from the right; quaternion
// conjugation of every g_{-1} slot converts from the left-acting convention
// used here and fixes w.

#include "aqsym/hmod/models.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace aqsym {

class NonUniqueSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// B = Alt^2(g_{-1})* (x) g_0 with the g_0-action.
inline ModuleRep build_b_space(const GradedSlh& g, FormSpace* space_out = nullptr) {
  FormSpace s(FormKind::Alt, 2, g.dim_gm1(), g.dim_g0());
  ModuleRep w;
  w.name = "B(n=" + std::to_string(g.n) + ")";
  w.offset = g.g0_begin();
  const auto names = gm1_names(g.n);
  std::vector<std::string> g0n;
  for (Index i = g.g0_begin(); i < g.g1_begin(); ++i) g0n.push_back(g.alg.label(i));
  for (Index i = 0; i < s.dim(); ++i) w.labels.push_back(s.label(i, names, g0n));
  for (const auto& x : g.g0()) w.action.push_back(s.action_matrix(action_on_gm1(g, x), action_on_g0(g, x)));
  if (space_out) *space_out = s;
  return w;
}

/// Real 4-tensor on g_{-1}: key (a, b, c, d) with a < b is the coefficient of
/// e_a^ ^ e_b^ (x) e_c^ (x) e_d, a g_0-value being read as its action on g_{-1}.
using EndFormTensor = std::map<std::tuple<Index, Index, Index, Index>, Rat>;

struct EquivariantB {
  std::size_t solution_dim = 0;
  SparseMat map;           // V^II coordinates -> B coordinates, normalized
  FormSpace space;         // B = Alt^2(g_{-1})* (x) g_0
  ModuleRep b_space;
  TensorModule curvature;
  SparseVec w;             // extremal vector of V^II, module coordinates
  SparseVec bw;            // b(w) in B coordinates
  Rat scale;               // normalization applied to the raw solution
};

namespace detail {

inline void add_term(EndFormTensor& t, Index a, Index b, Index c, Index d, const Rat& v) {
  if (a == b || is_zero(v)) return;
  Rat s = v;
  if (a > b) {
    std::swap(a, b);
    s = -s;
  }
  Rat& slot = t[{a, b, c, d}];
  slot += s;
  if (is_zero(slot)) t.erase({a, b, c, d});
}

/// +1 on the real unit of each H-slot, -1 on i, j, k.
inline int conj_sign(Index i) { return i % 4 == 0 ? 1 : -1; }

}  // namespace detail

/// b(w) as an element of Alt^2(g_{-1})* (x) g_{-1}^* (x) g_{-1}, after
/// quaternion conjugation of all four slots.
inline EndFormTensor to_right_convention(const GradedSlh& g, const FormSpace& s, const SparseVec& b) {
  EndFormTensor out;
  std::vector<SparseMat> act(g.dim_g0());
  for (const auto& [i, v] : b.entries) {
    const auto& t = s.tuple(s.tuple_of(i));
    const std::size_t c = s.value_of(i);
    if (act[c].cols.empty()) act[c] = action_on_gm1(g, Vec::unit(g.g0_begin() + static_cast<Index>(c)));
    for (Index from = 0; from < act[c].cols.size(); ++from)
      for (const auto& [to, m] : act[c].cols[from].entries) {
        const Index a = static_cast<Index>(t[0]), bb = static_cast<Index>(t[1]);
        const int sign = detail::conj_sign(a) * detail::conj_sign(bb) * detail::conj_sign(from) * detail::conj_sign(to);
        detail::add_term(out, a, bb, from, to, Rat(sign) * v * m);
      }
  }
  return out;
}

/// The closed formula expanded in the basis e_a^ ^ e_b^ (x) e_c^ (x) e_d.
/// With `corrected`, the term 1_n^ (x) j_1 of the first g_0-factor is read as
/// 1_n^ (x) i_1; as printed that factor is not the action of any element of g_0.
inline EndFormTensor printed_b(std::size_t n, bool corrected) {
  const Index dn = static_cast<Index>(4 * (n - 1));
  auto hn = [&](int q) { return dn + q; };
  auto h1 = [](int q) { return static_cast<Index>(q); };
  struct Wedge { Rat c; int a, b; };
  struct Map { Rat c; int from, to; };
  const std::vector<Wedge> w1{{Rat(1), 1, 2}, {Rat(-1), 0, 3}};
  const std::vector<Map> x{{Rat(1), 1, 0}, {Rat(-1), 0, corrected ? 1 : 2}, {Rat(1), 2, 3}, {Rat(-1), 3, 2}};
  const std::vector<Wedge> w2{{Rat(1), 0, 2}, {Rat(1), 1, 3}};
  const std::vector<Map> y{{Rat(1), 0, 0}, {Rat(1), 1, 1}, {Rat(1), 2, 2}, {Rat(1), 3, 3}};
  EndFormTensor out;
  for (const auto& p : w1)
    for (const auto& m : x) detail::add_term(out, hn(p.a), hn(p.b), hn(m.from), h1(m.to), p.c * m.c);
  for (const auto& p : w2)
    for (const auto& m : y) detail::add_term(out, hn(p.a), hn(p.b), hn(m.from), h1(m.to), Rat(-1) * p.c * m.c);
  return out;
}

/// Scalar lambda with lambda * a == b, if one exists (both nonzero).
inline std::optional<Rat> proportionality(const EndFormTensor& a, const EndFormTensor& b) {
  if (a.empty() || b.empty() || a.size() != b.size()) return std::nullopt;
  const Rat lambda = b.begin()->second / a.begin()->second;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != lambda * v) return std::nullopt;
  }
  return lambda;
}

/// Keys where two tensors differ.
inline std::size_t difference_count(const EndFormTensor& a, const EndFormTensor& b) {
  std::size_t d = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) ++d;
  }
  for (const auto& [k, v] : b)
    if (!a.count(k)) ++d;
  return d;
}

/// Whether a map H_n -> H_1, given as (from, to) -> coefficient, is the action
/// on g_{-1} of some element of g_0.
inline bool is_g0_action(const GradedSlh& g, const std::map<std::pair<Index, Index>, Rat>& m) {
  const std::size_t N = g.dim_gm1();
  auto flat = [&](const SparseMat& a) {
    Vec v;
    for (Index c = 0; c < a.cols.size(); ++c)
      for (const auto& [r, x] : a.cols[c].entries) v.entries.emplace_back(static_cast<Index>(c * N + r), x);
    v.normalize();
    return v;
  };
  Echelon e(N * N);
  for (const auto& x : g.g0()) e.insert(flat(action_on_gm1(g, x)));
  Vec target;
  for (const auto& [k, x] : m) target.entries.emplace_back(static_cast<Index>(k.first * N + k.second), x);
  target.normalize();
  return e.reduce(target).empty();
}

/// Solves for the equivariant map b and normalizes it against the corrected
/// closed formula.
inline EquivariantB equivariant_b(const GradedSlh& g) {
  if (g.n < 2) throw std::invalid_argument("equivariant_b: n >= 2 required");
  EquivariantB out;
  out.curvature = build_curvature_module(g);
  out.w = curvature_extremal(out.curvature, g).coords;
  out.b_space = build_b_space(g, &out.space);
  auto sols = equivariant_maps(out.curvature.rep, out.b_space, out.w, g0_generators(g), split_torus(g),
                               g.g0());
  out.solution_dim = sols.size();
  if (sols.size() != 1)
    throw NonUniqueSolution("equivariant_b: solution space has dim " + std::to_string(sols.size()));
  SparseVec raw = sols[0].apply(out.w);
  auto lambda = proportionality(to_right_convention(g, out.space, raw), printed_b(g.n, true));
  out.scale = lambda ? *lambda : Rat(1);
  out.map = out.scale * sols[0];
  out.bw = out.scale * raw;
  return out;
}

}  // namespace aqsym
