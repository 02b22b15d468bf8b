#pragma once

#include "luk/decide.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace luk {

struct SuiteConfig {
  std::size_t count = 0;  // 0: the suite's default instance count
  std::uint64_t seed = 1;
  std::size_t max_chain = 8;  // bonus: longest gadget chain checked exhaustively
  std::size_t c = 20;
  std::size_t threads = 0;  // 0: LUK_THREADS, else hardware concurrency
  DecideOptions decide;
};

struct SuiteResult {
  std::string name;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;                         // first few, in instance order
  std::vector<std::pair<std::string, std::string>> notes;   // extra measured facts
  double elapsed_ms = 0;

  bool ok() const { return total > 0 && passed == total; }
};

std::vector<std::string> suite_names();
std::string suite_summary(const std::string& name);
std::size_t default_count(const std::string& name);

/// Throws luk::Error on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

std::size_t worker_count(const SuiteConfig& cfg);

std::string format_result(const SuiteResult& r, bool structured, bool timings);

}  // namespace luk
