#include "aqsym/report/suites.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace aqsym;
using namespace aqsym::report;

TEST(Recorder, StatusFromComparison) {
  Recorder r;
  r.check({"a.pass", 2, "d", "ref"}, 3, [] { return 3; });
  r.check({"a.fail", 2, "d", "ref"}, 3, [] { return 4; });
  r.check({"a.throw", 2, "d", "ref"}, 3, []() -> int { throw std::runtime_error("boom"); });
  r.check_pair({"a.pair", 0, "d", "ref"}, [] { return std::make_pair(json::array({1, 2}), json::array({1, 2})); });
  const auto& c = r.results();
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0].status, Status::Pass);
  EXPECT_EQ(c[1].status, Status::Fail);
  EXPECT_EQ(c[2].status, Status::Fail);
  EXPECT_EQ(c[2].actual["error"], "boom");
  EXPECT_EQ(c[3].status, Status::Pass);
}

TEST(Recorder, FailedPrerequisiteSkipsDependents) {
  int calls = 0;
  Lazy<int> broken("thing", [&]() -> int {
    ++calls;
    throw std::runtime_error("cannot build");
  });
  Recorder r;
  r.check({"first", 2, "", ""}, 1, [&] { return broken.get(); });
  r.check({"second", 2, "", ""}, 1, [&] { return broken.get(); });
  const auto& c = r.results();
  EXPECT_EQ(c[0].status, Status::Fail);
  EXPECT_EQ(c[1].status, Status::Skipped);
  EXPECT_EQ(calls, 1);
}

TEST(Lazy, BuildsOnce) {
  int calls = 0;
  Lazy<int> x("x", [&] { return ++calls; });
  EXPECT_EQ(x.get(), 1);
  EXPECT_EQ(x.get(), 1);
  EXPECT_EQ(calls, 1);
}

TEST(Config, Validation) {
  SuiteConfig c;
  EXPECT_NO_THROW(c.validate());
  c.ns = {1};
  EXPECT_THROW(c.validate(), ConfigError);
  c.ns = {2};
  c.suites = {"lie", "nope"};
  EXPECT_THROW(c.validate(), ConfigError);
  c.suites = {"lie"};
  c.samples = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c.samples.reset();
  c.degree = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Config, JsonListsSuitesInCanonicalOrder) {
  SuiteConfig c;
  c.suites = {"geom", "lie"};
  EXPECT_EQ(c.to_json()["suites"], json::array({"lie", "geom"}));
  EXPECT_EQ(c.to_json()["degree"], "default");
}

TEST(Report, SortingAndText) {
  Report rep;
  rep.checks.push_back({"b", 3, "", "r", 1, 1, Status::Pass, 5});
  rep.checks.push_back({"b", 2, "", "r", 1, 2, Status::Fail, 5});
  rep.checks.push_back({"a", 0, "", "", 1, json(), Status::Skipped, 5});
  sort_checks(rep.checks);
  EXPECT_EQ(rep.checks[0].id, "a");
  EXPECT_EQ(rep.checks[1].n, 2u);
  EXPECT_EQ(rep.exit_code(), 1);
  EXPECT_EQ(text_line(rep.checks[1]), "[FAIL] b n=2 expected=1 actual=2 (ref: r)");
  EXPECT_EQ(text_line(rep.checks[0]), "[SKIP] a expected=1 actual=null");
  const std::string s = text_summary(rep);
  EXPECT_NE(s.find("summary: 1 passed, 1 failed, 1 skipped"), std::string::npos);
  EXPECT_FALSE(to_json(rep)["checks"][0].contains("runtime_ms"));
  rep.config.timings = true;
  EXPECT_TRUE(to_json(rep)["checks"][0].contains("runtime_ms"));
  EXPECT_NE(rep.find("b", 3), nullptr);
  EXPECT_EQ(rep.find("b", 4), nullptr);
}

TEST(Report, EmitIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto p1 = (dir / "aqsym_report_1.json").string(), p2 = (dir / "aqsym_report_2.json").string();
  SuiteConfig c;
  c.suites = {"lie"};
  emit_report(run(c), p1);
  emit_report(run(c), p2);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(slurp(p1), slurp(p2));
  const json j = json::parse(slurp(p1));
  EXPECT_EQ(j["version"], kReportVersion);
  EXPECT_EQ(j["checks"].size(), 6u);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  EXPECT_THROW(emit_report(run(c), (dir / "no_such_dir" / "x.json").string()), std::runtime_error);
}

TEST(Run, EmptySelection) {
  SuiteConfig c;
  c.suites = {};
  const auto rep = run(c);
  EXPECT_TRUE(rep.checks.empty());
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Run, LieSuiteN2AndN3) {
  SuiteConfig c;
  c.ns = {3, 2};
  c.suites = {"lie"};
  const auto rep = run(c);
  EXPECT_EQ(rep.count(Status::Pass), rep.checks.size());
  ASSERT_NE(rep.find("lie.slh.dim", 3), nullptr);
  EXPECT_EQ(rep.find("lie.slh.dim", 3)->actual, 63);
  EXPECT_EQ(rep.checks.front().n, 2u);
}

TEST(Run, InvalidConfigThrows) {
  SuiteConfig c;
  c.ns = {0};
  EXPECT_THROW(run(c), ConfigError);
}
