#include "luk/errors.hpp"
#include "luk/suites.hpp"

#include <gtest/gtest.h>

using namespace luk;

TEST(Suites, SmallRunsPass) {
  for (const auto& name : suite_names()) {
    if (name == "bonus" || name == "size") continue;
    SuiteConfig cfg;
    cfg.count = 4;
    SuiteResult r = run_suite(name, cfg);
    EXPECT_TRUE(r.ok()) << name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.total, 4u) << name;
    EXPECT_FALSE(suite_summary(name).empty());
    EXPECT_GT(default_count(name), 0u);
  }
}

TEST(Suites, BonusChainLimit) {
  SuiteConfig cfg;
  cfg.max_chain = 3;
  SuiteResult r = run_suite("bonus", cfg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.total, 7u);  // 1 + 2 + 3 exhaustive, plus the long chain
}

TEST(Suites, StructuredFormat) {
  SuiteConfig cfg;
  cfg.count = 3;
  SuiteResult r = run_suite("small-solution", cfg);
  std::string s = format_result(r, true, false);
  EXPECT_EQ(s, "suite=small-solution\ntotal=3\npassed=3\nnote.witness_box(2,20).M=277\nverdict=pass\n");
  EXPECT_EQ(format_result(r, false, false).rfind("small-solution: 3/3 passed", 0), 0u);
}

TEST(Suites, UnknownName) {
  EXPECT_THROW(run_suite("no-such-suite", {}), Error);
}

TEST(Suites, Deterministic) {
  SuiteConfig cfg;
  cfg.count = 20;
  cfg.seed = 5;
  SuiteResult a = run_suite("theorem-mv", cfg);
  cfg.threads = 1;
  SuiteResult b = run_suite("theorem-mv", cfg);
  EXPECT_EQ(format_result(a, true, false), format_result(b, true, false));
  cfg.seed = 6;
  EXPECT_TRUE(run_suite("theorem-mv", cfg).ok());
}
