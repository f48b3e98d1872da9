// Batch verification front end: runs the selected suites and prints one line
// per check. Exit status is 0 iff no check failed, 2 on a configuration error.

#include "aqsym/report/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace aqsym::report;
  CLI::App app{"aqsym: exact verification of submaximal almost quaternionic structures"};
  SuiteConfig cfg;
  std::vector<std::string> suites{"all"};
  unsigned deg = 0, denom = 0;
  std::size_t samples = 0;
  app.add_option("--n", cfg.ns, "values of n (each >= 2)")->delimiter(',')->capture_default_str();
  app.add_option("--suite", suites, "suites: all, lie, kostant, hmod, deform, geom, property")->delimiter(',');
  auto* o_deg = app.add_option("--deg", deg, "symmetry ansatz: polynomial degree bound");
  auto* o_den = app.add_option("--denom-pow", denom, "symmetry ansatz: power of the guard polynomial");
  auto* o_smp = app.add_option("--samples", samples, "initial number of sample points");
  app.add_option("--seed", cfg.seed, "seed for sample points and random checks")->capture_default_str();
  app.add_option("--json", cfg.json_path, "write the JSON report to this path");
  app.add_flag("--quiet", cfg.quiet, "print only the summary line");
  app.add_flag("--timings", cfg.timings, "include per-check runtimes in the JSON report");
  app.add_flag("--geom-all-n", cfg.geom_all_n, "run the symmetry solver for n > 2 too (slow)");
  CLI11_PARSE(app, argc, argv);

  if (*o_deg) cfg.degree = deg;
  if (*o_den) cfg.denom_pow = denom;
  if (*o_smp) cfg.samples = samples;
  cfg.suites.clear();
  for (const auto& s : suites) {
    if (s == "all") cfg.suites = known_suites();
    else if (s != "none") cfg.suites.push_back(s);
  }

  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  const Report rep = run(cfg);
  const std::string text = text_summary(rep);
  if (cfg.quiet) std::cout << text.substr(text.rfind("summary:"));
  else std::cout << text;
  if (!cfg.json_path.empty()) {
    try {
      emit_report(rep, cfg.json_path);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 3;
    }
  }
  return rep.exit_code();
}
