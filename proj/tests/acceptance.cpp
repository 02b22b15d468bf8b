// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "luk/decide.hpp"
#include "luk/linear.hpp"
#include "luk/reduction.hpp"
#include "luk/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace luk;

namespace {

using Clock = std::chrono::steady_clock;

// time limits, seconds
constexpr double kTauLimit = 10;
constexpr double kDeltaLimit = 10;
constexpr double kSigmaLimit = 60;
constexpr double kGadgetLimit = 5;
constexpr double kTheoremLimit = 300;
constexpr double kSmallLimit = 5;
constexpr double kBruteLimit = 120;
constexpr double kSigmaFactor = 7;

struct Check {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void report(int n, const char* what, const std::function<Check()>& body) {
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c = {false, std::string("exception: ") + e.what()};
  }
  if (!c.ok) ++failures;
  std::printf("criterion %2d: %s  %s  [%s]\n", n, c.ok ? "PASS" : "FAIL", what, c.detail.c_str());
  std::fflush(stdout);
}

std::string note(const SuiteResult& r, const std::string& key) {
  for (const auto& [k, v] : r.notes)
    if (k == key) return v;
  return "";
}

std::string secs(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", ms / 1000);
  return buf;
}

SuiteResult last_pab;

Check suite(const char* name, std::size_t count, double limit_s, SuiteResult* keep = nullptr) {
  SuiteConfig cfg;
  cfg.count = count;
  SuiteResult r = run_suite(name, cfg);
  if (keep) *keep = r;
  Check c;
  c.ok = r.ok() && r.total == count && r.elapsed_ms < limit_s * 1000;
  c.detail = std::to_string(r.passed) + "/" + std::to_string(r.total) + " in " + secs(r.elapsed_ms);
  if (!r.failures.empty()) c.detail += "; first failure " + r.failures.front();
  return c;
}

}  // namespace

int main() {
  report(1, "tau commutes with r, range near 1/2", [] { return suite("tau", 300, kTauLimit); });

  report(2, "delta shifts term functions by -1", [] { return suite("delta", 300, kDeltaLimit); });

  report(3, "sigma_q = tau_q o delta on the 1/8 grid, size <= 7x", [] {
    SuiteResult r;
    Check c = suite("sigma", 100, kSigmaLimit, &r);
    double factor = std::stod(note(r, "max_size_factor"));
    c.ok = c.ok && factor <= kSigmaFactor;
    c.detail += ", max size factor " + note(r, "max_size_factor");
    return c;
  });

  report(4, "gadget has the exact solution, chain 512 by propagation", [] {
    auto t0 = Clock::now();
    std::size_t chains = 0;
    for (std::size_t len = 1; len <= 8; ++len)
      for (std::size_t k = 0; k < len; ++k) {
        ReductionParams p{len - 1 - k, k, 20};
        DecideOptions o;
        o.propagate = false;
        Verdict v = decide_MV(Formula::conj(Signature::MV, gadget_atoms(p, gadget_vars(p, true))), o);
        if (!v.sat() || v.witness != gadget_values(p))
          return Check{false, "M=" + std::to_string(p.M) + " k=" + std::to_string(p.k) + " wrong"};
        ++chains;
      }
    ReductionParams p{511, 0, 20};
    Verdict v = decide_MV(Formula::conj(Signature::MV, gadget_atoms(p, gadget_vars(p, true))));
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    bool ok = v.sat() && v.witness == gadget_values(p) && v.stats.nodes == 1 && ms < kGadgetLimit * 1000;
    return Check{ok, std::to_string(chains) + " chains searched, 512 propagated in " + secs(ms)};
  });

  report(5, "pAb formula and its MV translation agree, witnesses map back",
         [] { return suite("theorem-pab", 200, kTheoremLimit, &last_pab); });

  report(6, "MV formula and its self-translation agree, witnesses map back",
         [] { return suite("theorem-mv", 200, kTheoremLimit); });

  report(7, "small integer solutions, witness_box(2,20) = 277", [] {
    Check c = suite("small-solution", 100, kSmallLimit);
    std::size_t M = witness_box(2, 20).M;
    c.ok = c.ok && M == 277;
    c.detail += ", witness_box(2,20).M = " + std::to_string(M);
    return c;
  });

  report(8, "every SAT pAb witness lies in [-2^M, 2^M]", [] {
    std::string b = note(last_pab, "bounded_witnesses");
    auto slash = b.find('/');
    if (slash == std::string::npos) return Check{false, "no bounded-witness count"};
    bool ok = b.substr(0, slash) == b.substr(slash + 1) && b.substr(slash + 1) != "0";
    return Check{ok, b + " SAT witnesses bounded"};
  });

  report(9, "MV oracle agrees with grid search at 1/64", [] { return suite("brute-force", 100, kBruteLimit); });

  report(10, "S(F) size stays within 64 (M + k + size F)", [] {
    SuiteConfig cfg;
    cfg.count = 5;
    SuiteResult r = run_suite("size", cfg);
    std::string d;
    for (const auto& [k, v] : r.notes) d += k + "=" + v + " ";
    return Check{r.ok() && r.total == 5, d + "limit " + std::to_string(kSizeGuard)};
  });

  std::printf("%s\n", failures == 0 ? "all criteria pass" : (std::to_string(failures) + " criteria fail").c_str());
  return failures == 0 ? 0 : 1;
}
