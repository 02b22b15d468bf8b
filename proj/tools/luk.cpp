// luk: translate, decide and lemma-check formulas of the MV and pointed
// l-group languages.

#include "luk/decide.hpp"
#include "luk/errors.hpp"
#include "luk/linear.hpp"
#include "luk/parser.hpp"
#include "luk/reduction.hpp"
#include "luk/semantics.hpp"
#include "luk/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

namespace {

enum Exit { kSat = 0, kOk = 0, kUnsat = 1, kFail = 1, kUsage = 2, kCap = 3 };

struct Common {
  std::string input;
  std::string expr;
  std::string lang;
  std::string out;
  std::string format = "text";
  bool timings = false;

  bool structured() const { return format == "structured"; }
};

luk::FormulaFile load(const Common& c) {
  if (!c.expr.empty()) {
    if (!c.input.empty()) throw luk::Error("give either an input file or -e, not both");
    if (c.lang.empty()) throw luk::Error("-e needs --lang");
    luk::FormulaFile f{luk::parse_signature(c.lang), {}};
    f.formulas.push_back(luk::parse_formula(c.expr, f.sig));
    return f;
  }
  if (c.input.empty()) throw luk::Error("no input (give a file or -e)");
  luk::FormulaFile f = luk::read_formula_file(c.input);
  if (!c.lang.empty() && luk::parse_signature(c.lang) != f.sig)
    throw luk::SignatureError(c.input + ": file declares #lang " + std::string(luk::signature_tag(f.sig)) +
                              " but --lang " + c.lang + " was given");
  return f;
}

// Output goes to a sibling temp file first so a failed run leaves nothing behind.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw luk::Error("cannot write " + tmp.string());
    os << text;
    os.flush();
    if (!os) {
      os.close();
      fs::remove(tmp);
      throw luk::Error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::string stats_text(const luk::DecideStats& s, bool timings, const char* sep) {
  std::ostringstream os;
  os << "disjuncts" << sep << s.disjuncts << '\n';
  os << "nodes" << sep << s.nodes << '\n';
  os << "peak_rows" << sep << s.peak_rows << '\n';
  os << "propagated" << sep << s.propagated << '\n';
  if (timings) os << "elapsed_ms" << sep << std::fixed << std::setprecision(3) << s.elapsed_ms << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions between the existential theories of the pointed real l-group and the standard "
               "MV-algebra, with exact decision oracles."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "luk 0.1.0");

  Common common;
  std::size_t c = 20;
  std::optional<std::size_t> M_override, k_override;
  bool unsafe_M = false;
  std::uint64_t seed = 0;
  std::size_t count = 0, max_chain = 8;
  luk::DecideOptions dopt;
  bool no_propagate = false;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("input", common.input, "Formula file (#lang header, one formula per line)");
      sub->add_option("-e,--expr", common.expr, "Formula given inline");
      sub->add_option("--lang", common.lang, "Language tag: ab, pab, mv, mvhalf")
          ->check(CLI::IsMember({"ab", "pab", "mv", "mvhalf"}));
    }
    sub->add_option("--out", common.out, "Write the result here instead of stdout");
    sub->add_option("--format", common.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--timings", common.timings, "Include wall-clock timings");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--dnf-cap", dopt.dnf_cap, "Maximal number of DNF disjuncts");
    sub->add_option("--split-cap", dopt.split_cap, "Maximal number of case-split nodes");
    sub->add_option("--fm-cap", dopt.fm_row_cap, "Maximal Fourier-Motzkin row count");
  };

  auto* translate = app.add_subcommand("translate", "Build S(F, M, k)");
  add_common(translate, true);
  bool to_mv = false, self = false;
  translate->add_flag("--to-mv", to_mv, "pAb input: the l-group reduction");
  std::string to;
  translate->add_option("--to", to, "Target language (mv)")->check(CLI::IsMember({"mv"}));
  translate->add_flag("--self", self, "MV input: the self-translation");
  translate->add_option("--c", c, "Constant c in M = ceil(c N log2(3 c N))");
  translate->add_option("--M", M_override, "Override M (needs --unsafe-M)");
  translate->add_flag("--unsafe-M", unsafe_M, "Acknowledge that an overridden M may be unsound");
  translate->add_option("--k", k_override, "Override k (at least the maximal term depth)");

  auto* decide = app.add_subcommand("decide", "Decide the existential closure");
  add_common(decide, true);
  add_caps(decide);
  decide->add_option("--seed", seed, "Shuffle the case-split order (0 keeps the canonical order)");
  decide->add_flag("--no-propagate", no_propagate, "Skip unit propagation");

  auto* check = app.add_subcommand("check-lemma", "Run a randomized lemma suite");
  std::string lemma;
  check->add_option("lemma", lemma, "Suite name, 'all', or 'list'")->required();
  add_common(check, false);
  add_caps(check);
  std::uint64_t suite_seed = 1;
  check->add_option("--seed", suite_seed, "Suite seed");
  check->add_option("--count", count, "Number of instances (0: suite default)");
  check->add_option("--max-chain", max_chain, "Longest gadget chain checked exhaustively");
  check->add_option("--c", c, "Constant c for the witness box");

  auto* eval = app.add_subcommand("eval", "Evaluate a formula at an assignment");
  add_common(eval, true);
  std::string at, assign;
  eval->add_option("--at", at, "Assignment file: lines 'name = p/q'");
  eval->add_option("--assign", assign, "Inline assignment 'x = 1/2, y = 0'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (translate->parsed()) {
      luk::FormulaFile file = load(common);
      luk::Formula f = file.conjunction();
      bool pab = f.sig() == luk::Signature::Ab || f.sig() == luk::Signature::pAb;
      if (to_mv || !to.empty()) {
        if (!pab) throw luk::SignatureError("--to mv needs ab or pab input");
      } else if (self) {
        if (f.sig() != luk::Signature::MV) throw luk::SignatureError("--self needs mv input");
      } else {
        throw luk::Error("choose --to mv or --self");
      }
      if (self && (to_mv || !to.empty())) throw luk::Error("--to and --self exclude each other");
      if (M_override && !unsafe_M) throw luk::Error("--M needs --unsafe-M");
      luk::ReductionParams p = luk::default_params(f, c);
      if (M_override) p.M = *M_override;
      if (k_override) p.k = *k_override;
      luk::Translation t = pab ? luk::build_S_pAb(f, p) : luk::build_S_MV(f, p);
      std::string report = luk::report_text(t, common.timings);
      if (M_override) report += "M_override=unsafe\n";
      std::string text = luk::format_formula_file(t.output, lines_of(report));
      emit(common.out, text);
      if (!common.out.empty() && common.out != "-") std::cout << report;
      return kOk;
    }

    if (decide->parsed()) {
      luk::FormulaFile file = load(common);
      luk::Formula f = file.conjunction();
      dopt.seed = seed;
      dopt.propagate = !no_propagate;
      luk::Verdict v = luk::decide(f, dopt);
      std::ostringstream os;
      if (common.structured()) {
        os << "lang=" << luk::signature_tag(f.sig()) << '\n';
        os << "status=" << (v.sat() ? "SAT" : "UNSAT") << '\n';
        for (const auto& [x, q] : v.witness) os << "witness." << x << '=' << luk::to_string(q) << '\n';
        os << stats_text(v.stats, common.timings, "=");
        os << "verdict=" << (v.sat() ? "SAT" : "UNSAT") << '\n';
      } else {
        os << (v.sat() ? "SAT" : "UNSAT") << '\n';
        if (v.sat()) os << luk::format_assignment(v.witness);
        if (common.timings) os << "# " << std::fixed << std::setprecision(3) << v.stats.elapsed_ms << " ms\n";
      }
      emit(common.out, os.str());
      return v.sat() ? kSat : kUnsat;
    }

    if (check->parsed()) {
      if (lemma == "list") {
        std::ostringstream os;
        for (const auto& n : luk::suite_names()) os << std::left << std::setw(16) << n << luk::suite_summary(n) << '\n';
        emit(common.out, os.str());
        return kOk;
      }
      std::vector<std::string> names;
      if (lemma == "all") names = luk::suite_names();
      else {
        luk::suite_summary(lemma);  // validates the name
        names.push_back(lemma);
      }
      luk::SuiteConfig cfg;
      cfg.count = count;
      cfg.seed = suite_seed;
      cfg.max_chain = max_chain;
      cfg.c = c;
      cfg.decide = dopt;
      std::ostringstream os;
      bool all_ok = true;
      for (const auto& n : names) {
        luk::SuiteResult r = luk::run_suite(n, cfg);
        all_ok = all_ok && r.ok();
        os << luk::format_result(r, common.structured(), common.timings);
      }
      emit(common.out, os.str());
      return all_ok ? kOk : kFail;
    }

    if (eval->parsed()) {
      luk::FormulaFile file = load(common);
      luk::Formula f = file.conjunction();
      luk::Assignment v;
      if (!at.empty()) {
        std::ifstream is(at);
        if (!is) throw luk::Error("cannot read " + at);
        std::stringstream ss;
        ss << is.rdbuf();
        v = luk::parse_assignment(ss.str());
      }
      if (!assign.empty()) {
        std::string text = assign;
        for (auto& ch : text)
          if (ch == ',') ch = '\n';
        for (const auto& [x, q] : luk::parse_assignment(text)) v[x] = q;
      }
      bool truth = luk::eval_formula(f, v, luk::algebra_for(f.sig()));
      emit(common.out, common.structured() ? std::string("value=") + (truth ? "true" : "false") + "\n"
                                           : std::string(truth ? "true" : "false") + "\n");
      return truth ? kOk : kFail;
    }
  } catch (const luk::CapExceeded& e) {
    std::cerr << "luk: resource cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "luk: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
