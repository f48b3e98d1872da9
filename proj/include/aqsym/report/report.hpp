#pragma once

// Check results, run configuration and report emission. Reports are
// deterministic: checks are ordered by (id, n) and timings are written only
// on request.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aqsym::report {

using nlohmann::json;

inline constexpr const char* kReportVersion = "1";

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::size_t n = 0;  // 0 for checks that do not depend on n
  std::string description;
  std::string reference;  // the claim the check verifies
  json expected;
  json actual;
  Status status = Status::Skipped;
  long runtime_ms = 0;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> s{"lie", "kostant", "hmod", "deform", "geom", "property"};
  return s;
}

struct SuiteConfig {
  std::vector<std::size_t> ns{2};
  std::vector<std::string> suites = known_suites();
  // Symmetry-solver overrides; unset values use the per-structure defaults.
  std::optional<unsigned> degree, denom_pow;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  bool geom_all_n = false;  // run the symmetry solver for n > 2 as well
  bool timings = false;     // include runtime_ms in the JSON report
  std::string json_path;
  bool quiet = false;

  [[nodiscard]] bool selected(const std::string& suite) const {
    return std::find(suites.begin(), suites.end(), suite) != suites.end();
  }

  void validate() const {
    for (auto n : ns)
      if (n < 2) throw ConfigError("n must be at least 2 (got " + std::to_string(n) + ")");
    for (const auto& s : suites)
      if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
        throw ConfigError("unknown suite '" + s + "'");
    if (degree && *degree == 0) throw ConfigError("--deg must be positive");
    if (samples && *samples == 0) throw ConfigError("--samples must be positive");
  }

  [[nodiscard]] json to_json() const {
    json j;
    j["n"] = ns;
    std::vector<std::string> ordered;
    for (const auto& s : known_suites())
      if (selected(s)) ordered.push_back(s);
    j["suites"] = ordered;
    j["degree"] = degree ? json(*degree) : json("default");
    j["denom_pow"] = denom_pow ? json(*denom_pow) : json("default");
    j["samples"] = samples ? json(*samples) : json("default");
    j["seed"] = seed;
    j["geom_all_n"] = geom_all_n;
    return j;
  }
};

/// Thrown by a lazy artifact whose construction failed earlier; checks that
/// hit it are reported as skipped rather than failed again.
class PrerequisiteFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value computed on first use. A failure is remembered, so the root cause
/// surfaces in exactly one check.
template <class T>
class Lazy {
 public:
  Lazy(std::string name, std::function<T()> make) : name_(std::move(name)), make_(std::move(make)) {}

  T& get() {
    if (error_) throw PrerequisiteFailed(name_ + " unavailable: " + *error_);
    if (!value_) {
      try {
        value_.emplace(make_());
      } catch (const PrerequisiteFailed&) {
        throw;
      } catch (const std::exception& e) {
        error_ = e.what();
        throw;
      }
    }
    return *value_;
  }

 private:
  std::string name_;
  std::function<T()> make_;
  std::optional<T> value_;
  std::optional<std::string> error_;
};

struct CheckSpec {
  std::string id;
  std::size_t n = 0;
  std::string description;
  std::string reference;
};

class Recorder {
 public:
  /// Runs `f` (returning the actual value) and compares it with `expected`.
  template <class F>
  void check(const CheckSpec& s, const json& expected, F&& f) {
    run(s, [&] { return std::make_pair(expected, json(f())); });
  }

  /// As check, for expectations that are themselves computed: `f` returns
  /// (expected, actual).
  template <class F>
  void check_pair(const CheckSpec& s, F&& f) {
    run(s, [&] {
      auto [e, a] = f();
      return std::make_pair(json(e), json(a));
    });
  }

  [[nodiscard]] const std::vector<CheckResult>& results() const { return results_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  template <class F>
  void run(const CheckSpec& s, F&& f) {
    CheckResult r;
    r.id = s.id;
    r.n = s.n;
    r.description = s.description;
    r.reference = s.reference;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [e, a] = f();
      r.expected = std::move(e);
      r.actual = std::move(a);
      r.status = r.expected == r.actual ? Status::Pass : Status::Fail;
    } catch (const PrerequisiteFailed& e) {
      r.actual = json{{"skipped", e.what()}};
      r.status = Status::Skipped;
    } catch (const std::exception& e) {
      r.actual = json{{"error", e.what()}};
      r.status = Status::Fail;
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> results_;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
  }
  /// 0 iff no check failed.
  [[nodiscard]] int exit_code() const { return count(Status::Fail) == 0 ? 0 : 1; }

  [[nodiscard]] const CheckResult* find(const std::string& id, std::size_t n = 0) const {
    for (const auto& c : checks)
      if (c.id == id && c.n == n) return &c;
    return nullptr;
  }
};

inline void sort_checks(std::vector<CheckResult>& checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.id, a.n) < std::tie(b.id, b.n);
  });
}

inline json to_json(const CheckResult& c, bool timings) {
  json j;
  j["id"] = c.id;
  j["n"] = c.n;
  j["description"] = c.description;
  j["reference"] = c.reference;
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  j["status"] = status_name(c.status);
  if (timings) j["runtime_ms"] = c.runtime_ms;
  return j;
}

inline json to_json(const Report& r) {
  json j;
  j["version"] = kReportVersion;
  j["config"] = r.config.to_json();
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c, r.config.timings));
  return j;
}

/// `[PASS] deform.f2.dim n=2 expected=17 actual=17 (ref: ...)`
inline std::string text_line(const CheckResult& c) {
  std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
  std::string s = "[" + tag + "] " + c.id;
  if (c.n) s += " n=" + std::to_string(c.n);
  s += " expected=" + c.expected.dump() + " actual=" + c.actual.dump();
  if (!c.reference.empty()) s += " (ref: " + c.reference + ")";
  return s;
}

inline std::string text_summary(const Report& r) {
  std::string s;
  for (const auto& c : r.checks) s += text_line(c) + "\n";
  s += "summary: " + std::to_string(r.count(Status::Pass)) + " passed, " + std::to_string(r.count(Status::Fail)) +
       " failed, " + std::to_string(r.count(Status::Skipped)) + " skipped\n";
  return s;
}

/// Writes the JSON report; identical reports give identical bytes.
inline void emit_report(const Report& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file '" + path + "'");
  out << to_json(r).dump(2) << "\n";
  if (!out) throw std::runtime_error("error writing report file '" + path + "'");
}

}  // namespace aqsym::report
