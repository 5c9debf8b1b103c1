#include <gtest/gtest.h>

#include "json.hpp"
#include "webperm/errors.hpp"
#include "webperm/verify.hpp"

using namespace webperm;

namespace {

SuiteParams small() {
  SuiteParams p;
  p.max_n = 5;
  p.max_chords = 4;
  return p;
}

}  // namespace

TEST(Verify, EverySuitePassesAtSmallSizes) {
  for (const auto& name : suite_names()) {
    const auto report = run_suite(name, small());
    EXPECT_TRUE(report.passed()) << name;
    EXPECT_FALSE(report.checks.empty()) << name;
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.id << ": " << c.witness.value_or("");
  }
}

TEST(Verify, ChecksAreSortedAndUnique) {
  const auto report = run_suite("all", small());
  for (std::size_t i = 1; i < report.checks.size(); ++i) {
    EXPECT_LT(report.checks[i - 1].id, report.checks[i].id);
  }
}

TEST(Verify, ThreadCountDoesNotChangeTheReport) {
  auto p = small();
  const auto one = run_suite("all", p);
  p.threads = 4;
  const auto four = run_suite("all", p);
  ASSERT_EQ(one.checks.size(), four.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    EXPECT_EQ(one.checks[i].id, four.checks[i].id);
    EXPECT_EQ(one.checks[i].passed, four.checks[i].passed);
  }
}

TEST(Verify, JsonShape) {
  const auto j = nlohmann::json::parse(run_suite("chord", small()).to_json(false));
  EXPECT_EQ(j["suite"], "chord");
  EXPECT_EQ(j["params"]["max_n"], 5);
  EXPECT_EQ(j["params"]["max_chords"], 4);
  EXPECT_EQ(j["elapsed_ms"], 0);
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_EQ(c["status"], "pass");
    EXPECT_TRUE(c["witness"].is_null());
  }
}

TEST(Verify, RejectsUnknownSuitesAndBadParameters) {
  EXPECT_THROW(run_suite("nope", small()), PreconditionError);
  auto p = small();
  p.threads = 0;
  EXPECT_THROW(run_suite("chord", p), PreconditionError);
}

TEST(Verify, HardCaps) {
  auto p = small();
  p.max_n = kHardMaxN + 1;
  EXPECT_THROW(validate(p), CapExceeded);
  p.unsafe_no_cap = true;
  EXPECT_NO_THROW(validate(p));
  p = small();
  p.max_chords = kHardMaxChords + 1;
  EXPECT_THROW(validate(p), CapExceeded);
}
