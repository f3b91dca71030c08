#include <gtest/gtest.h>

#include <cstdlib>

#include "modhodge/errors.hpp"
#include "modhodge/parallel.hpp"
#include "modhodge/suites.hpp"

namespace modhodge {
namespace {

Json asJson(const std::vector<VerificationReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(r.toJson());
  return out;
}

TEST(Suites, NamesAreStable) {
  EXPECT_EQ(suiteNames(), (std::vector<std::string>{"basis", "membership", "ses-check", "cube-check",
                                                    "proj-coh", "blowup-check", "dvr-check", "kunneth-check"}));
}

TEST(Suites, ConfigValidation) {
  SuiteConfig config = SuiteConfig::quick("basis");
  config.window = 0;
  EXPECT_THROW(config.validate(), PreconditionError);
  config = SuiteConfig::quick("no-such-suite");
  EXPECT_THROW(runSuite(config), PreconditionError);
}

TEST(Suites, ResultsDoNotDependOnWorkerCount) {
  for (const std::string name : {"basis", "membership", "proj-coh", "dvr-check", "kunneth-check"}) {
    SuiteConfig config = SuiteConfig::quick(name);
    config.workers = 1;
    const Json serial = asJson(runSuite(config));
    config.workers = 3;
    EXPECT_EQ(asJson(runSuite(config)), serial) << name;
  }
}

TEST(Suites, QuickGridsPass) {
  for (const std::string name : {"basis", "membership", "proj-coh", "dvr-check", "kunneth-check"}) {
    const auto reports = runSuite(SuiteConfig::quick(name));
    EXPECT_FALSE(reports.empty()) << name;
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.toJson().dump();
  }
}

TEST(Suites, SeedChangesTheRandomForms) {
  SuiteConfig config = SuiteConfig::quick("membership");
  const Json first = asJson(runSuite(config));
  config.seed = 2;
  EXPECT_NE(asJson(runSuite(config)), first);
}

TEST(Reports, JsonRoundTrip) {
  VerificationReport report;
  report.statement = "kunneth";
  report.parameters = {{"n", 2}, {"r", {1, 0}}};
  report.window = Json::array({-3, 3});
  report.fail("first");
  report.fail("second");
  report.note("checked");
  const Json j = report.toJson();
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["witness"], "first");
  EXPECT_EQ(VerificationReport::fromJson(j).toJson(), j);

  for (const auto& r : runSuite(SuiteConfig::quick("proj-coh")))
    EXPECT_EQ(VerificationReport::fromJson(r.toJson()).toJson(), r.toJson());
}

TEST(Parallel, PreservesOrderAndPropagatesErrors) {
  std::vector<int> items(50);
  for (int k = 0; k < 50; ++k) items[k] = k;
  const auto squares = parallelMap(items, [](int v) { return v * v; }, 4);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(squares[k], k * k);
  EXPECT_THROW(parallelMap(items, [](int v) { return v == 17 ? throw std::runtime_error("boom"), v : v; }, 4),
               std::runtime_error);
}

TEST(Parallel, WorkersFromEnvironment) {
  setenv("MODHODGE_WORKERS", "3", 1);
  EXPECT_EQ(defaultWorkers(), 3u);
  unsetenv("MODHODGE_WORKERS");
  EXPECT_GE(defaultWorkers(), 1u);
}

}  // namespace
}  // namespace modhodge
