// Acceptance driver: runs every suite for n = 2, 3 (the symmetry solver for
// n = 2 only) and prints one PASS/FAIL line per acceptance criterion. A
// criterion passes when all of its checks are present and pass.

#include "aqsym/report/suites.hpp"

#include <chrono>
#include <iostream>

using namespace aqsym::report;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::pair<std::string, std::size_t>> checks;  // (id, n)
};

std::vector<std::pair<std::string, std::size_t>> for_ns(const std::vector<std::string>& ids,
                                                         const std::vector<std::size_t>& ns) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (auto n : ns)
    for (const auto& id : ids) out.emplace_back(id, n);
  return out;
}

std::vector<Criterion> criteria() {
  const std::vector<std::size_t> both{2, 3}, two{2};
  std::vector<Criterion> c;
  c.push_back({1, "sl(n+1,H): dimension, |1|-grading dimensions, Jacobi",
               for_ns({"lie.slh.dim", "lie.grading.dims", "lie.jacobi", "lie.grading.element"}, both)});
  auto k = for_ns({"kostant.h2.homogeneities", "kostant.h2.h3.dim", "kostant.h2.h1.iso", "kostant.h2.h2.iso"}, both);
  k.emplace_back("kostant.h2.h2.dim", 2);
  c.push_back({2, "H^2(g_-1, g): homogeneities 1 and 2, isomorphic to V^I and V^II", k});
  c.push_back({3, "annihilators of the extremal vectors: dimension and structure",
               for_ns({"hmod.annihilator.curvature.dim", "hmod.annihilator.torsion.dim", "hmod.structure.curvature",
                       "hmod.structure.torsion"},
                      both)});
  c.push_back({4, "prolongation rigidity of both annihilators",
               for_ns({"hmod.prolongation.curvature", "hmod.prolongation.torsion"}, both)});
  c.push_back({5, "equivariant b: unique, closed formula reproduced",
               for_ns({"deform.b.solutions", "deform.b.formula"}, both)});
  c.push_back({6, "f_I and f_II: Jacobi, dimension, bracket properties, symmetric pairs",
               for_ns({"deform.f2.dim", "deform.f1.dim", "deform.f2.jacobi", "deform.f1.jacobi",
                       "deform.f2.hn_in_heis_center", "deform.f1.nilpotent_ideal", "deform.f1.h1_in_hn",
                       "deform.f2.symmetric_pair", "deform.f1.symmetric_pair"},
                      both)});
  c.push_back({7, "Q_I, Q_II: quaternion relations, T_Q(Q_II) = 0, T_Q(Q_I) != 0",
               for_ns({"geom.QI.relations", "geom.QII.relations", "geom.QII.structure_tensor",
                       "geom.QI.structure_tensor"},
                      both)});
  c.push_back({8, "symmetry algebras of Q_I, Q_II: 17 verified, closed, fingerprints, hypercomplex dims",
               for_ns({"geom.QI.symmetries.dim", "geom.QII.symmetries.dim", "geom.QI.symmetries.closed",
                       "geom.QII.symmetries.closed", "geom.QI.symmetries.fingerprint",
                       "geom.QII.symmetries.fingerprint", "geom.QI.hypercomplex.dim", "geom.QII.hypercomplex.dim"},
                      two)});
  c.push_back({9, "invariant connections and metrics",
               for_ns({"geom.QII.connection.unique", "geom.QII.connection.torsion", "geom.QII.connection.ricci",
                       "geom.QII.connection.parallel_curvature", "geom.QII.connection.curvature",
                       "geom.QI.connection.all.dim", "geom.QI.connection.quaternionic.dim", "geom.QII.metric"},
                      two)});
  auto p = for_ns({"property.homomorphism.curvature", "property.homomorphism.torsion", "property.homomorphism.h2",
                   "property.orbit_minimality.curvature", "property.orbit_minimality.torsion"},
                  both);
  p.emplace_back("property.rank_nullity", 0);
  p.emplace_back("property.determinism", 0);
  c.push_back({10, "property suites: rank-nullity, module homomorphisms, orbit minimality, determinism", p});
  return c;
}

}  // namespace

int main() {
  SuiteConfig config;
  config.ns = {2, 3};
  const auto t0 = std::chrono::steady_clock::now();
  const Report rep = run(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << text_summary(rep) << "\n";
  int failed = 0;
  for (const auto& c : criteria()) {
    std::vector<std::string> bad;
    for (const auto& [id, n] : c.checks) {
      const CheckResult* r = rep.find(id, n);
      const std::string tag = id + (n ? " n=" + std::to_string(n) : std::string());
      if (!r)
        bad.push_back(tag + " (missing)");
      else if (r->status != Status::Pass)
        bad.push_back(tag + " (" + status_name(r->status) + ")");
    }
    const bool ok = bad.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ["
              << c.checks.size() - bad.size() << "/" << c.checks.size() << " checks]";
    for (const auto& b : bad) std::cout << "\n    failing: " << b;
    std::cout << "\n";
  }
  std::cout << "criteria: " << 10 - failed << " passed, " << failed << " failed; " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
