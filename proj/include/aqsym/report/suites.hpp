#pragma once

// The verification suites. Each suite records its checks per n; artifacts
// shared between suites (the graded algebra, the modules, the deformed
// algebras, the symmetry algebras) are built once per n and on demand.

#include "aqsym/deform/deformed.hpp"
#include "aqsym/geom/connection.hpp"
#include "aqsym/hmod/structure.hpp"
#include "aqsym/kostant/cohomology.hpp"
#include "aqsym/report/report.hpp"

#include <memory>
#include <random>

namespace aqsym::report {

inline json to_json(const Fingerprint& f) {
  return json{{"dim", f.dim},       {"derived", f.derived},       {"lower_central", f.lower_central},
              {"levi", f.levi},     {"nilradical", f.nilradical}, {"center", f.center}};
}

/// Artifacts for one value of n.
struct Context {
  std::size_t n;
  SuiteConfig config;
  std::vector<Rat> p0;  // base point (0, 1, 0, ..., 0)

  Lazy<GradedSlh> g{"graded sl(n+1,H)", [this] { return build_graded_slh(n); }};
  Lazy<ParabolicH> par{"parabolic h", [this] { return build_parabolic_h(g.get()); }};
  Lazy<TensorModule> v2{"curvature module", [this] { return build_curvature_module(g.get()); }};
  Lazy<TensorModule> v1{"torsion module", [this] { return build_torsion_module(g.get()); }};
  Lazy<ModuleElement> w2{"curvature extremal vector", [this] { return curvature_extremal(v2.get(), g.get()); }};
  Lazy<ModuleElement> w1{"torsion extremal vector", [this] { return torsion_extremal(v1.get(), g.get()); }};
  Lazy<std::vector<Vec>> a2{"curvature annihilator", [this] { return annihilator(v2.get().rep, w2.get().coords); }};
  Lazy<std::vector<Vec>> a1{"torsion annihilator", [this] { return annihilator(v1.get().rep, w1.get().coords); }};
  Lazy<ThetaGrading> t2{"theta grading of the curvature module",
                        [this] { return theta_grading(v2.get().rep, par.get().zprime); }};
  Lazy<ThetaGrading> t1{"theta grading of the torsion module",
                        [this] { return theta_grading(v1.get().rep, par.get().zprime); }};
  std::vector<std::size_t> h2_dims;
  Lazy<std::vector<HarmonicSummand>> h2{"H^2 decomposition", [this] { return h2_decompose(g.get(), &h2_dims); }};
  Lazy<EquivariantB> b{"equivariant map b", [this] { return equivariant_b(g.get()); }};
  Lazy<DeformedAlgebra> f2{"f_II", [this] { return deform_curvature(g.get(), b.get()); }};
  Lazy<DeformedAlgebra> f1{"f_I", [this] { return deform_torsion(g.get()); }};
  Lazy<AQStructure> qI{"Q_I", [this] { return build_QI(n); }};
  Lazy<AQStructure> qII{"Q_II", [this] { return build_QII(n); }};
  Lazy<SymmetryResult> symI{"symmetries of Q_I", [this] { return solve(qI.get(), SymmetryKind::Quaternionic); }};
  Lazy<SymmetryResult> symII{"symmetries of Q_II", [this] { return solve(qII.get(), SymmetryKind::Quaternionic); }};
  Lazy<SymmetryResult> hypI{"hypercomplex symmetries of Q_I",
                            [this] { return solve(qI.get(), SymmetryKind::Hypercomplex); }};
  Lazy<SymmetryResult> hypII{"hypercomplex symmetries of Q_II",
                             [this] { return solve(qII.get(), SymmetryKind::Hypercomplex); }};
  Lazy<LieAlgebra> algI{"symmetry algebra of Q_I", [this] { return bracket_close(symI.get().fields, qI.get().guard); }};
  Lazy<LieAlgebra> algII{"symmetry algebra of Q_II",
                         [this] { return bracket_close(symII.get().fields, qII.get().guard); }};
  Lazy<ConnectionFamily> connII{"quaternionic invariant connections of Q_II",
                                [this] { return invariant_connections(qII.get(), symII.get().fields, p0, true); }};
  Lazy<ConnectionInvariants> connII_inv{"invariants of the Q_II connection", [this] {
    const auto& fam = connII.get();
    if (!fam.unique()) throw std::runtime_error("no unique quaternionic invariant connection");
    return connection_invariants(invariant_connection_jet(symII.get().fields, p0, fam.particular, 2));
  }};

  Context(std::size_t n_, SuiteConfig c) : n(n_), config(std::move(c)), p0(4 * n_, Rat(0)) { p0[1] = 1; }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  SymmetryResult solve(const AQStructure& q, SymmetryKind kind) const {
    SolverBounds bd = default_bounds(q);
    if (config.degree) bd.degree = *config.degree;
    if (config.denom_pow) bd.denom_pow = *config.denom_pow;
    if (config.samples) bd.samples = *config.samples;
    bd.seed = config.seed;
    return symmetry_solve(q, bd, kind);
  }
};

inline Report run(const SuiteConfig& config);

namespace detail {

inline long submax(std::size_t n) { return static_cast<long>(4 * n * n - 4 * n + 9); }
inline long ann_dim(std::size_t n) { return static_cast<long>(4 * n * n - 8 * n + 9); }

inline void lie_suite(Context& c, Recorder& r) {
  const std::size_t n = c.n;
  const long N = static_cast<long>(n);
  r.check({"lie.slh.dim", n, "dimension of sl(n+1,H)", "dim sl(n+1,H) = 4(n+1)^2 - 1"}, 4 * (N + 1) * (N + 1) - 1,
          [&] { return c.g.get().alg.dim(); });
  r.check({"lie.grading.dims", n, "dimensions of g_-1, g_0, g_1", "|1|-grading with g_0 of dim 4n^2 + 3"},
          json::array({4 * N, 4 * N * N + 3, 4 * N}), [&] {
            const auto& g = c.g.get();
            return json::array({g.g_minus().size(), g.g0().size(), g.g_plus().size()});
          });
  r.check({"lie.jacobi", n, "Jacobi identity on all basis triples", "sl(n+1,H) is a Lie algebra"}, true,
          [&] { return !c.g.get().alg.jacobi_failure().has_value(); });
  r.check({"lie.grading.element", n, "Z grades the algebra and acts by the degree", "grading element Z"}, true, [&] {
    const auto& g = c.g.get();
    return grading_compatible(g.alg, g.grading) && grading_element_ok(g.alg, g.grading);
  });
  r.check({"lie.g0.decomposition", n, "dims of sp(1), R Z and sl(n,H) in g_0", "g_0 = sp(1) + R + sl(n,H)"},
          json::array({3, 1, 4 * N * N - 1}), [&] {
            auto d = decompose_g0(c.g.get());
            return json::array({d.sp1.size(), d.center.size(), d.sln.size()});
          });
  r.check({"lie.parabolic.hplus", n, "dim h_+ and of its center", "h_+ = heis(8n-12,H) with quaternionic center"},
          n == 2 ? json::array({4, 4}) : json::array({8 * N - 12, 4}), [&] {
            const auto& p = c.par.get();
            return json::array({p.hplus.size(), center(restrict_to(c.g.get().alg, p.hplus)).size()});
          });
}

inline void kostant_suite(Context& c, Recorder& r) {
  const std::size_t n = c.n;
  r.check({"kostant.h2.homogeneities", n, "homogeneities of the nonzero summands of H^2(g_-1, g)",
           "H^2 has two irreducible components, of homogeneity 1 and 2"},
          json::array({1, 2}), [&] {
            json h = json::array();
            for (const auto& s : c.h2.get()) h.push_back(s.homogeneity);
            return h;
          });
  r.check({"kostant.h2.h3.dim", n, "homogeneity-3 part of H^2", "H^2 has no homogeneity-3 component"}, 0, [&] {
    c.h2.get();
    return c.h2_dims.at(2);
  });
  if (n == 2)
    r.check({"kostant.h2.h2.dim", n, "dim of the homogeneity-2 summand", "Weyl dimension 70 of the curvature module"},
            70, [&] { return c.h2.get().at(1).dim(); });
  r.check_pair({"kostant.h2.h1.iso", n, "equivariant isomorphism H^2_1 ~ V^I",
                "the homogeneity-1 summand is the torsion module"},
               [&] {
                 const auto& s = c.h2.get().at(0);
                 auto m = match_module(s, c.v1.get().rep, c.w1.get().coords, c.g.get());
                 return std::make_pair(json{{"dim", c.v1.get().rep.dim()}, {"solutions", 1}},
                                       json{{"dim", s.dim()}, {"solutions", m.solution_dim}});
               });
  r.check_pair({"kostant.h2.h2.iso", n, "equivariant isomorphism H^2_2 ~ V^II",
                "the homogeneity-2 summand is the curvature module"},
               [&] {
                 const auto& s = c.h2.get().at(1);
                 auto m = match_module(s, c.v2.get().rep, c.w2.get().coords, c.g.get());
                 return std::make_pair(json{{"dim", c.v2.get().rep.dim()}, {"solutions", 1}},
                                       json{{"dim", s.dim()}, {"solutions", m.solution_dim}});
               });
}

inline void hmod_suite(Context& c, Recorder& r) {
  const std::size_t n = c.n;
  r.check({"hmod.annihilator.curvature.dim", n, "dim of the annihilator of w_II in g_0", "dim a_0 = 4n^2 - 8n + 9"},
          ann_dim(n), [&] { return c.a2.get().size(); });
  r.check({"hmod.annihilator.torsion.dim", n, "dim of the annihilator of w_I in g_0", "dim a_0 = 4n^2 - 8n + 9"},
          ann_dim(n), [&] { return c.a1.get().size(); });
  r.check({"hmod.structure.curvature", n, "annihilator of w_II matches sp(1) + (so(2) + R + gl(n-2,H)) |x h_+",
           "maximal annihilator in the curvature case, so(2) generated by 3 e_left - e_right"},
          "ok", [&] {
            auto m = structural_match(c.g.get(), c.a2.get(), Corollary::Curvature);
            return m.ok ? std::string("ok") : m.failure;
          });
  r.check({"hmod.structure.torsion", n, "annihilator of w_I matches so(2) + (R + gl(n-2,H) + sp(1)) |x h_+",
           "maximal annihilator in the torsion case"},
          "ok", [&] {
            auto m = structural_match(c.g.get(), c.a1.get(), Corollary::Torsion);
            return m.ok ? std::string("ok") : m.failure;
          });
  r.check({"hmod.prolongation.curvature", n, "dim of the first prolongation of a_0(w_II)", "prolongation rigidity"},
          0, [&] { return first_prolongation(c.g.get(), c.a2.get()).size(); });
  r.check({"hmod.prolongation.torsion", n, "dim of the first prolongation of a_0(w_I)", "prolongation rigidity"}, 0,
          [&] { return first_prolongation(c.g.get(), c.a1.get()).size(); });
  r.check({"hmod.theta_max.curvature.dim", n, "real dim of the top theta-eigenspace of V^II",
           "V^II_theta_max has real dimension 8"},
          8, [&] { return c.t2.get().dim_max(); });
  r.check({"hmod.theta_max.torsion.dim", n, "real dim of the top theta-eigenspace of V^I",
           "V^I_theta_max has real dimension 4"},
          4, [&] { return c.t1.get().dim_max(); });
  r.check({"hmod.theta_max.torsion.extremal", n, "w_I lies in the top theta-eigenspace of V^I",
           "the extremal torsion vector is theta-maximal"},
          true, [&] {
            const auto& t = c.t1.get();
            for (const auto& [i, a] : c.w1.get().coords.entries)
              if (t.theta[i] != t.max()) return false;
            return true;
          });
  r.check({"hmod.theta_max.torsion.complex", n, "sp(1)_left generators act on V^I_theta_max as complex structures",
           "any element of sp(1) acts as a complex structure"},
          true, [&] {
            const auto& t = c.t1.get();
            std::vector<SparseVec> top;
            for (Index i : t.spaces.back()) top.push_back(SparseVec::unit(i));
            for (const auto& x : c.par.get().sp1_left)
              if (!acts_as_complex_structure(c.v1.get().rep, top, x)) return false;
            return true;
          });
  r.check({"hmod.orbit.curvature.sp1sq", n, "dim of the sp(1)^2-orbit of [w_II]",
           "orbit dimension 5 with annihilator so(2)"},
          5, [&] {
            const auto& p = c.par.get();
            std::vector<Vec> pair = p.sp1_left;
            pair.insert(pair.end(), p.sp1_right.begin(), p.sp1_right.end());
            return orbit_dimension(c.v2.get().rep, c.w2.get().coords, pair);
          });
  r.check_pair({"hmod.orbit.curvature.dim", n, "dim of the g_0-orbit of [w_II]",
                "dim g_0 minus the line stabilizer (annihilator + R Z)"},
               [&] {
                 return std::make_pair(c.g.get().dim_g0() - c.a2.get().size() - 1,
                                       orbit_dimension(c.v2.get().rep, c.w2.get().coords));
               });
  r.check_pair({"hmod.orbit.torsion.dim", n, "dim of the g_0-orbit of [w_I]",
                "dim g_0 minus the line stabilizer (annihilator + R Z)"},
               [&] {
                 return std::make_pair(c.g.get().dim_g0() - c.a1.get().size() - 1,
                                       orbit_dimension(c.v1.get().rep, c.w1.get().coords));
               });
}

inline void deform_suite(Context& c, Recorder& r) {
  const std::size_t n = c.n;
  r.check({"deform.b.solutions", n, "dim of the space of equivariant maps b", "b is unique up to scale"}, 1,
          [&] { return c.b.get().solution_dim; });
  r.check({"deform.b.formula", n, "terms where b(w) differs from the closed formula (corrected factor)",
           "closed formula for b(w)"},
          0, [&] {
            const auto& b = c.b.get();
            return difference_count(to_right_convention(c.g.get(), b.space, b.bw), printed_b(n, true));
          });
  r.check({"deform.f2.dim", n, "dim f_II", "submaximal dimension 4n^2 - 4n + 9"}, submax(n),
          [&] { return c.f2.get().alg.dim(); });
  r.check({"deform.f1.dim", n, "dim f_I", "submaximal dimension 4n^2 - 4n + 9"}, submax(n),
          [&] { return c.f1.get().alg.dim(); });
  r.check({"deform.f2.jacobi", n, "Jacobi identity for f_II", "f_II is a Lie algebra"}, true,
          [&] { return !c.f2.get().alg.jacobi_failure().has_value(); });
  r.check({"deform.f1.jacobi", n, "Jacobi identity for f_I", "f_I is a Lie algebra"}, true,
          [&] { return !c.f1.get().alg.jacobi_failure().has_value(); });
  r.check({"deform.f2.hn_in_heis_center", n, "[H_n, H_n] in f_II lies in the center of heis",
           "the deformation term takes values in z(heis)"},
          true, [&] {
            const auto& f = c.f2.get();
            return contains_all(span_of(f.model.heis_center, f.alg.dim()),
                                bracket_image(f.alg, f.model.h_last, f.model.h_last));
          });
  r.check({"deform.f1.nilpotent_ideal", n, "H^n is a nilpotent ideal of f_I", "H^n is a nilpotent ideal"}, true,
          [&] { return gm1_nilpotent_ideal(c.f1.get()); });
  r.check({"deform.f1.h1_in_hn", n, "[H_1, H_1] in f_I lies in H_n", "[H_1, H_1] in H_n"}, true, [&] {
    const auto& f = c.f1.get();
    return contains_all(span_of(f.model.h_last, f.alg.dim()), bracket_image(f.alg, f.model.h_first, f.model.h_first));
  });
  r.check({"deform.f1.hn_in_h1", n, "[H_n, H_n] in f_I: dim and inclusion in H_1",
           "the nonzero brackets of H^n in f_I"},
          json{{"dim", 3}, {"in_h1", true}}, [&] {
            const auto& f = c.f1.get();
            auto br = bracket_image(f.alg, f.model.h_last, f.model.h_last);
            return json{{"dim", br.size()}, {"in_h1", contains_all(span_of(f.model.h_first, f.alg.dim()), br)}};
          });
  r.check({"deform.f2.symmetric_pair", n, "[m, m] in h for f_II", "f_II is a symmetric pair"}, true,
          [&] { return symmetric_pair_check(c.f2.get()); });
  r.check({"deform.f1.symmetric_pair", n, "[m, m] in h for f_I", "f_I is not a symmetric pair"}, false,
          [&] { return symmetric_pair_check(c.f1.get()); });
}

inline void geom_suite(Context& c, Recorder& r) {
  const std::size_t n = c.n;
  const long N = static_cast<long>(n);
  auto rel = [](const AQStructure& q) {
    auto x = quaternion_relations(q);
    return json{{"I2", x.i_squared}, {"J2", x.j_squared}, {"K2", x.k_squared}, {"IJ=K", x.ij_is_k},
                {"IJ=-JI", x.anticommute}};
  };
  const json all_rel{{"I2", true}, {"J2", true}, {"K2", true}, {"IJ=K", true}, {"IJ=-JI", true}};
  r.check({"geom.QI.relations", n, "quaternion relations of Q_I", "Q_I is almost quaternionic"}, all_rel,
          [&] { return rel(c.qI.get()); });
  r.check({"geom.QII.relations", n, "quaternion relations of Q_II", "Q_II is almost quaternionic"}, all_rel,
          [&] { return rel(c.qII.get()); });
  r.check({"geom.QII.structure_tensor", n, "T_Q of Q_II vanishes identically", "the curvature model is torsion-free"},
          true, [&] { return structure_tensor(c.qII.get()).is_zero(); });
  r.check({"geom.QI.structure_tensor", n, "T_Q of Q_I is not identically zero",
           "the torsion model has nonvanishing torsion"},
          false, [&] { return structure_tensor(c.qI.get()).is_zero(); });
  r.check({"geom.flat.structure_tensor", n, "T_Q of the flat structure", "constant structures are torsion-free"},
          true, [&] { return structure_tensor(build_flat(n)).is_zero(); });
  if (n > 2)
    r.check({"geom.flat_translations", n, "translations along the flat factor preserve I, J, K of Q_I and Q_II",
             "direct product with flat H^(n-2)"},
            true, [&] {
              for (const AQStructure* q : {&c.qI.get(), &c.qII.get()})
                for (std::size_t i = 8; i < 4 * n; ++i)
                  if (!is_symmetry(*q, coordinate_field(4 * n, i), SymmetryKind::Hypercomplex)) return false;
              return true;
            });
  if (n > 2 && !c.config.geom_all_n) return;

  r.check({"geom.QI.symmetries.dim", n, "verified symmetries of Q_I", "submaximal dimension 4n^2 - 4n + 9"},
          submax(n), [&] { return c.symI.get().fields.size(); });
  r.check({"geom.QII.symmetries.dim", n, "verified symmetries of Q_II", "submaximal dimension 4n^2 - 4n + 9"},
          submax(n), [&] { return c.symII.get().fields.size(); });
  r.check({"geom.QI.symmetries.closed", n, "symmetries of Q_I close under the bracket", "symmetries form an algebra"},
          true, [&] { return c.algI.get().dim() == c.symI.get().fields.size(); });
  r.check({"geom.QII.symmetries.closed", n, "symmetries of Q_II close under the bracket",
           "symmetries form an algebra"},
          true, [&] { return c.algII.get().dim() == c.symII.get().fields.size(); });
  r.check_pair({"geom.QI.symmetries.fingerprint", n, "fingerprint of sym(Q_I) against f_I",
                "Q_I realizes the deformed torsion model"},
               [&] { return std::make_pair(to_json(fingerprint(c.f1.get().alg)), to_json(fingerprint(c.algI.get()))); });
  r.check_pair({"geom.QII.symmetries.fingerprint", n, "fingerprint of sym(Q_II) against f_II",
                "Q_II realizes the deformed curvature model"},
               [&] {
                 return std::make_pair(to_json(fingerprint(c.f2.get().alg)), to_json(fingerprint(c.algII.get())));
               });
  r.check({"geom.QI.hypercomplex.dim", n, "verified hypercomplex symmetries of Q_I",
           "hypercomplex symmetry dimension 4n^2 - 4n + 8"},
          4 * N * N - 4 * N + 8, [&] { return c.hypI.get().fields.size(); });
  r.check({"geom.QII.hypercomplex.dim", n, "verified hypercomplex symmetries of Q_II",
           "hypercomplex symmetry dimension 4n^2 - 4n + 6"},
          4 * N * N - 4 * N + 6, [&] { return c.hypII.get().fields.size(); });
  r.check({"geom.QII.hypercomplex.closed", n, "hypercomplex symmetries of Q_II form a subalgebra",
           "hypercomplex symmetries form an algebra"},
          true, [&] { return bracket_close(c.hypII.get().fields, c.qII.get().guard).dim() == c.hypII.get().fields.size(); });
  if (n != 2) return;
  r.check({"geom.QII.connection.unique", n, "quaternionic invariant connections of Q_II: affine dimension",
           "a unique quaternionic invariant connection"},
          0, [&] { return c.connII.get().affine_dim(); });
  r.check({"geom.QII.connection.torsion", n, "nonzero torsion components of the invariant connection at p0",
           "the connection has vanishing torsion"},
          0, [&] { return c.connII_inv.get().torsion_nonzero; });
  r.check({"geom.QII.connection.ricci", n, "nonzero Ricci components at p0", "the connection is Ricci-flat"}, 0,
          [&] { return c.connII_inv.get().ricci_nonzero; });
  r.check({"geom.QII.connection.parallel_curvature", n, "nonzero components of nabla R at p0",
           "the connection has parallel curvature"},
          0, [&] { return c.connII_inv.get().nabla_curvature_nonzero; });
  r.check({"geom.QII.connection.curvature", n, "R does not vanish at p0", "the model is not flat"}, true,
          [&] { return c.connII_inv.get().curvature_nonzero > 0; });
  r.check({"geom.QI.connection.all.dim", n, "invariant connections of Q_I: affine dimension",
           "a six-parameter family of invariant connections"},
          6, [&] { return invariant_connections(c.qI.get(), c.symI.get().fields, c.p0, false).affine_dim(); });
  r.check({"geom.QI.connection.quaternionic.dim", n, "quaternionic invariant connections of Q_I: affine dimension",
           "a two-parameter quaternionic sub-family"},
          2, [&] { return invariant_connections(c.qI.get(), c.symI.get().fields, c.p0, true).affine_dim(); });
  r.check({"geom.QII.metric", n, "a nondegenerate invariant symmetric form exists at p0", "no invariant metric"},
          false, [&] { return invariant_metric_check(c.symII.get().fields, c.p0).nondegenerate; });
}

inline void property_suite(Context& c, Recorder& r) {
  const std::size_t n = c.n;
  r.check({"property.homomorphism.curvature", n, "rho([x, y]) = [rho(x), rho(y)] on all basis pairs of g_0, V^II",
           "V^II is a g_0-module"},
          true, [&] { return !homomorphism_failure(c.g.get().alg, c.v2.get().rep).has_value(); });
  r.check({"property.homomorphism.torsion", n, "rho([x, y]) = [rho(x), rho(y)] on all basis pairs of g_0, V^I",
           "V^I is a g_0-module"},
          true, [&] { return !homomorphism_failure(c.g.get().alg, c.v1.get().rep).has_value(); });
  r.check({"property.homomorphism.h2", n, "rho([x, y]) = [rho(x), rho(y)] on each H^2 summand",
           "H^2 summands are g_0-modules"},
          true, [&] {
            for (const auto& s : c.h2.get())
              if (homomorphism_failure(c.g.get().alg, s.rep)) return false;
            return true;
          });
  auto minimality = [&](const ModuleRep& m, const SparseVec& w) {
    std::mt19937_64 rng(c.config.seed);
    const std::size_t ext = orbit_dimension(m, w);
    std::size_t below = 0;
    for (int k = 0; k < 200; ++k)
      if (orbit_dimension(m, random_element(m.dim(), rng)) < ext) ++below;
    return below;
  };
  r.check({"property.orbit_minimality.curvature", n, "random [v] in PV^II with orbit smaller than [w_II] (of 200)",
           "the extremal orbit is minimal"},
          0, [&] { return minimality(c.v2.get().rep, c.w2.get().coords); });
  r.check({"property.orbit_minimality.torsion", n, "random [v] in PV^I with orbit smaller than [w_I] (of 200)",
           "the extremal orbit is minimal"},
          0, [&] { return minimality(c.v1.get().rep, c.w1.get().coords); });
}

inline void global_properties(const SuiteConfig& config, Recorder& r) {
  r.check({"property.rank_nullity", 0, "seeded random matrices with rank + nullity = cols and exact kernels",
           "rank-nullity"},
          500, [&] {
            std::mt19937_64 rng(config.seed);
            std::uniform_int_distribution<int> size(1, 8), val(-3, 3), sparse(0, 2);
            int ok = 0;
            for (int t = 0; t < 500; ++t) {
              const std::size_t rows = size(rng), cols = size(rng);
              Mat<Rat> m(rows, cols);
              for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                  if (sparse(rng)) m(i, j) = Rat(val(rng)) / Rat(1 + sparse(rng));
              const auto ker = kernel(m);
              bool good = rank(m) + ker.size() == cols && rank_generic(m) == rank(m);
              for (const auto& v : ker)
                for (const auto& x : m.apply(v)) good = good && is_zero(x);
              ok += good;
            }
            return ok;
          });
  r.check({"property.determinism", 0, "two runs of the lie suite give byte-identical reports", "determinism"}, true,
          [&] {
            SuiteConfig sub = config;
            sub.suites = {"lie"};
            sub.ns = {2};
            sub.timings = false;
            return to_json(run(sub)).dump() == to_json(run(sub)).dump();
          });
}

}  // namespace detail

/// Runs the selected suites for every n, in dependency order.
inline Report run(const SuiteConfig& config) {
  config.validate();
  Report rep;
  rep.config = config;
  Recorder r;
  for (auto n : config.ns) {
    Context c(n, config);
    if (config.selected("lie")) detail::lie_suite(c, r);
    if (config.selected("kostant")) detail::kostant_suite(c, r);
    if (config.selected("hmod")) detail::hmod_suite(c, r);
    if (config.selected("deform")) detail::deform_suite(c, r);
    if (config.selected("geom")) detail::geom_suite(c, r);
    if (config.selected("property")) detail::property_suite(c, r);
  }
  if (config.selected("property")) detail::global_properties(config, r);
  rep.checks = r.take();
  sort_checks(rep.checks);
  return rep;
}

}  // namespace aqsym::report
