#include "luk/suites.hpp"

#include "luk/errors.hpp"
#include "luk/generate.hpp"
#include "luk/reduction.hpp"
#include "luk/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace luk {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;  // why it failed
  bool sat = false;
  bool bounded = true;
  double value = 0;
};

using Instance = std::function<Outcome(std::size_t index, Rng& rng)>;

std::vector<Outcome> run_parallel(std::size_t n, const SuiteConfig& cfg, const Instance& fn) {
  std::vector<Outcome> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      Rng rng = instance_rng(cfg.seed, i);
      try {
        out[i] = fn(i, rng);
      } catch (const std::exception& e) {
        out[i] = Outcome{false, std::string("exception: ") + e.what()};
      }
    }
  };
  std::size_t w = std::min(worker_count(cfg), std::max<std::size_t>(n, 1));
  if (w <= 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < w; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

std::vector<std::string> var_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Outcome pass() { return Outcome{true, {}}; }
Outcome fail(std::string why) { return Outcome{false, std::move(why)}; }

std::string show(const Assignment& v) {
  std::string s;
  for (const auto& [n, q] : v) s += (s.empty() ? "" : ", ") + n + "=" + to_string(q);
  return "{" + s + "}";
}

// -- tau commutes with r ------------------------------------------------------

Outcome tau_instance(std::size_t, Rng& rng) {
  TermShape shape{Signature::Ab, var_names(uniform(rng, 1, 4)), uniform(rng, 0, 4)};
  Term phi = random_term(rng, shape);
  std::size_t l = term_depth(phi);
  ReductionParams p{uniform(rng, 0, 6), uniform(rng, l, 4), 20};
  Rational box = pow2(static_cast<long>(p.M));
  Assignment a, ra;
  for (const auto& x : variables(phi)) {
    a[x] = random_rational(rng, -box, box, 16);
    ra[x] = r_map(p, a[x]);
  }
  Rational f = eval_term(phi, a, Algebra::R);
  Rational g = eval_term(tau(phi), ra, Algebra::StdMVHalf);
  if (g != r_map(p, f)) return fail(print_term(phi) + " at " + show(a) + ": tau gives " + to_string(g));
  Rational width = pow2(-static_cast<long>(p.k - l + 1));
  if (abs(g - Rational(1, 2)) > width) return fail(print_term(phi) + ": value " + to_string(g) + " leaves the range");
  return pass();
}

// -- tau' on formulas ---------------------------------------------------------

FormulaShape ab_formula_shape(Rng& rng, std::size_t vars, std::size_t depth, std::size_t atoms, Signature sig) {
  FormulaShape s;
  s.term = TermShape{sig, var_names(uniform(rng, 1, vars)), depth};
  s.max_atoms = atoms;
  s.relations = {Rel::Eq, Rel::Le, Rel::Lt};
  return s;
}

Assignment small_point(Rng& rng, const std::vector<std::string>& vars, const Rational& lo, const Rational& hi,
                       long den) {
  Assignment a;
  for (const auto& x : vars) a[x] = random_rational(rng, lo, hi, den);
  return a;
}

Outcome etau_instance(std::size_t, Rng& rng) {
  Formula f = random_formula(rng, ab_formula_shape(rng, 3, 3, 3, Signature::Ab));
  ReductionParams p{uniform(rng, 1, 6), max_term_depth(f), 20};
  Assignment a = small_point(rng, variables(f), -2, 2, 2), ra;
  for (const auto& [x, v] : a) ra[x] = r_map(p, v);
  bool lhs = eval_formula(f, a, Algebra::R);
  bool rhs = eval_formula(tau_prime(f), ra, Algebra::StdMVHalf);
  if (lhs != rhs) return fail(print_formula(f) + " at " + show(a));
  Outcome o = pass();
  o.sat = lhs;
  return o;
}

// -- Tseitin and tau' ---------------------------------------------------------

Outcome tseitin_tau_instance(std::size_t, Rng& rng) {
  Formula f = random_formula(rng, ab_formula_shape(rng, 3, 3, 3, Signature::Ab));
  ReductionParams p{uniform(rng, 1, 6), max_term_depth(f), 20};
  Assignment a = small_point(rng, variables(f), -2, 2, 2), v;
  for (const auto& [x, q] : a) v[x] = r_map(p, q);
  TseitinResult ts = tseitin(f);
  Assignment ext = extend_tseitin(v, ts.defmap, [](const Term& t, const Assignment& w) {
    return eval_term(tau(t), w, Algebra::StdMVHalf);
  });
  bool plain = eval_formula(tau_prime(f), v, Algebra::StdMVHalf);
  bool flat = eval_formula(tau_prime(ts.formula), ext, Algebra::StdMVHalf);
  if (plain != flat) return fail(print_formula(f) + " at " + show(a));
  Outcome o = pass();
  o.sat = plain;
  return o;
}

// -- the gadget ---------------------------------------------------------------

Formula gadget_formula(const ReductionParams& p) {
  return Formula::conj(Signature::MV, gadget_atoms(p, gadget_vars(p, true)));
}

Outcome check_gadget(const ReductionParams& p, const SuiteConfig& cfg, bool exhaustive) {
  Formula g = gadget_formula(p);
  Assignment want = gadget_values(p);
  DecideOptions opt = cfg.decide;
  opt.propagate = !exhaustive;
  std::string tag = "M=" + std::to_string(p.M) + " k=" + std::to_string(p.k);
  Verdict v = decide_MV(g, opt);
  if (!v.sat()) return fail(tag + ": gadget reported UNSAT");
  if (v.witness != want) return fail(tag + ": witness " + show(v.witness));
  if (!exhaustive) {
    if (v.stats.nodes != 1) return fail(tag + ": propagation left case splits");
    return pass();
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    DecideOptions o = opt;
    o.seed = seed;
    Verdict s = decide_MV(g, o);
    if (!s.sat() || s.witness != want) return fail(tag + ": different witness under seed " + std::to_string(seed));
  }
  for (const auto& [name, value] : want) {
    for (int side = 0; side < 2; ++side) {
      DecideOptions o = opt;
      o.extra_rows.push_back(side == 0 ? LinearRow{{{name, 1}}, true, value} : LinearRow{{{name, -1}}, true, -value});
      if (decide_MV(g, o).sat())
        return fail(tag + ": another solution with " + name + (side == 0 ? " < " : " > ") + to_string(value));
    }
  }
  return pass();
}

// -- the shift by -1 ----------------------------------------------------------

TermShape mv_shape(Rng& rng, std::size_t vars, std::size_t depth) {
  return TermShape{Signature::MV, var_names(uniform(rng, 1, vars)), depth};
}

Outcome delta_instance(std::size_t, Rng& rng) {
  Term phi = random_term(rng, mv_shape(rng, 3, uniform(rng, 0, 4)));
  Assignment a = small_point(rng, variables(phi), 0, 1, 16), s;
  for (const auto& [x, q] : a) s[x] = q - 1;
  Rational lhs = eval_term(delta(phi), s, Algebra::Rminus1) + 1;
  Rational rhs = eval_term(phi, a, Algebra::StdMV);
  if (lhs != rhs) return fail(print_term(phi) + " at " + show(a));
  return pass();
}

Outcome edelta_instance(std::size_t, Rng& rng) {
  FormulaShape shape;
  shape.term = mv_shape(rng, 3, 3);
  shape.max_atoms = 3;
  Formula f = random_formula(rng, shape);
  Assignment a = small_point(rng, variables(f), 0, 1, 4), s;
  for (const auto& [x, q] : a) s[x] = q - 1;
  bool lhs = eval_formula(f, a, Algebra::StdMV);
  if (lhs != eval_formula(delta_prime(f), s, Algebra::Rminus1)) return fail(print_formula(f) + " at " + show(a));
  Outcome o = pass();
  o.sat = lhs;
  return o;
}

// -- sigma against tau_q o delta ----------------------------------------------

// Both sides of the coincidence: all points of {i/8}^n, q on the grid inside [0, 1/2].
Outcome sigma_instance(std::size_t, Rng& rng) {
  Term phi = random_term(rng, mv_shape(rng, 3, uniform(rng, 0, 3)));
  const std::string q = "q";
  Term lhs = tau_q(delta(phi), q);
  Term rhs = sigma_q(phi, q);
  if (term_size(rhs) > 7 * term_size(phi))
    return fail(print_term(phi) + ": size " + std::to_string(term_size(rhs)) + " > 7 * " +
                std::to_string(term_size(phi)));
  auto vars = variables(phi);
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = make_rational(static_cast<long>(idx[i]), 8);
    for (long j = 0; j <= 4; ++j) {
      a[q] = make_rational(j, 8);
      if (eval_term(lhs, a, Algebra::StdMVHalf) != eval_term(rhs, a, Algebra::StdMVHalf))
        return fail(print_term(phi) + " at " + show(a));
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] > 8) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  Outcome o = pass();
  o.value = static_cast<double>(term_size(rhs)) / static_cast<double>(term_size(phi));
  return o;
}

// -- tau_q' on formulas -------------------------------------------------------

Outcome etau_q_instance(std::size_t, Rng& rng) {
  FormulaShape shape;
  shape.term = mv_shape(rng, 3, 3);
  shape.max_atoms = 3;
  Formula f = random_formula(rng, shape);
  ReductionParams p{uniform(rng, 0, 4), uniform(rng, 0, 3), 20};
  Assignment a = small_point(rng, variables(f), -1, 0, 4), b;
  for (const auto& [x, v] : a) b[x] = r_map(p, v);
  b["q"] = gadget_values(p).at("q");
  Formula d = delta_prime(f);
  bool lhs = eval_formula(d, a, Algebra::Rminus1);
  if (lhs != eval_formula(tau_q_prime(d, "q"), b, Algebra::StdMVHalf)) return fail(print_formula(f) + " at " + show(a));
  Outcome o = pass();
  o.sat = lhs;
  return o;
}

// -- the l-group reduction ---------------------------------------------------

Formula pab_round_trip_formula(Rng& rng) {
  return random_formula(rng, ab_formula_shape(rng, 3, 3, 4, Signature::pAb));
}

std::size_t certified_M(const Assignment& w) {
  std::size_t M = 0;
  for (const auto& [x, v] : w)
    while (abs(v) > pow2(static_cast<long>(M))) ++M;
  return M;
}

bool within_box(const Formula& f, const Assignment& w, std::size_t c) {
  Rational bound = witness_box(std::max<std::size_t>(formula_size(f), 1), c).bound;
  return std::all_of(w.begin(), w.end(), [&](const auto& kv) { return abs(kv.second) <= bound; });
}

Outcome theorem_pab_instance(Rng& rng, const SuiteConfig& cfg) {
  Formula f = pab_round_trip_formula(rng);
  Verdict vp = decide_pAb(f, cfg.decide);
  ReductionParams p{vp.sat() ? certified_M(vp.witness) : 1, max_term_depth(f), cfg.c};
  Translation t = build_S_pAb(f, p);
  Verdict vm = decide_MV(t.output, cfg.decide);
  Outcome o;
  o.sat = vp.sat();
  o.bounded = !vp.sat() || within_box(f, vp.witness, cfg.c);
  if (vp.sat() != vm.sat())
    return fail(print_formula(f) + ": pab " + (vp.sat() ? "SAT" : "UNSAT") + ", mv " + (vm.sat() ? "SAT" : "UNSAT"));
  if (vm.sat()) {
    Assignment back = recover_witness(t, vm.witness);
    if (!check_witness(f, back, Algebra::Rminus1)) return fail(print_formula(f) + ": mapped witness " + show(back));
  }
  if (!o.bounded) return fail(print_formula(f) + ": witness outside the box " + show(vp.witness));
  o.pass = true;
  return o;
}

Outcome bounded_instance(Rng& rng, const SuiteConfig& cfg) {
  Formula f = pab_round_trip_formula(rng);
  Verdict vp = decide_pAb(f, cfg.decide);
  Outcome o = pass();
  o.sat = vp.sat();
  if (vp.sat() && !within_box(f, vp.witness, cfg.c)) return fail(print_formula(f) + ": " + show(vp.witness));
  return o;
}

// -- the MV self-translation --------------------------------------------------

Formula mv_round_trip_formula(Rng& rng) {
  FormulaShape shape;
  shape.term = mv_shape(rng, 2, 2);
  shape.max_atoms = 3;
  return random_formula(rng, shape);
}

Outcome theorem_mv_instance(Rng& rng, const SuiteConfig& cfg) {
  Formula f = mv_round_trip_formula(rng);
  ReductionParams p{2, max_term_depth(f), cfg.c};
  Translation t = build_S_MV(f, p);
  Verdict vf = decide_MV(f, cfg.decide);
  Verdict vs = decide_MV(t.output, cfg.decide);
  if (vf.sat() != vs.sat())
    return fail(print_formula(f) + ": F " + (vf.sat() ? "SAT" : "UNSAT") + ", S " + (vs.sat() ? "SAT" : "UNSAT"));
  if (vs.sat()) {
    Assignment back = recover_witness(t, vs.witness);
    if (!check_witness(f, back, Algebra::StdMV)) return fail(print_formula(f) + ": mapped witness " + show(back));
  }
  Outcome o = pass();
  o.sat = vf.sat();
  return o;
}

// -- small solutions ----------------------------------------------------------

Outcome small_solution_instance(std::size_t, Rng& rng) {
  std::size_t m = uniform(rng, 1, 4);
  auto k = static_cast<std::int64_t>(uniform(rng, 1, 3));
  LinearSystem s = random_feasible_system(rng, m, k, uniform(rng, 1, 6));
  Rational bound = small_witness_bound(s.cols(), s.entry_bound());
  LinearVerdict plain = feasible(s);
  if (!plain.feasible) return fail("planted system reported infeasible:\n" + dump_system(s));
  for (const auto& x : plain.witness)
    if (abs(x) > bound) return fail("witness entry " + to_string(x) + " beyond " + to_string(bound));
  if (!feasible_small(s).feasible) return fail("no solution inside the box:\n" + dump_system(s));
  return pass();
}

// -- grid search -------------------------------------------------------------

Outcome brute_force_instance(Rng& rng, const SuiteConfig& cfg) {
  FormulaShape shape;
  shape.term = TermShape{Signature::MVHalf, var_names(uniform(rng, 1, 2)), 2};
  shape.max_atoms = 3;
  Formula f = random_formula(rng, shape);
  auto vars = variables(f);
  bool grid_sat = false;
  std::vector<long> idx(vars.size(), 0);
  while (!grid_sat) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = make_rational(idx[i], 64);
    grid_sat = eval_formula(f, a, Algebra::StdMVHalf);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] > 64) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  Verdict v = decide_MV(f, cfg.decide);
  Outcome o;
  o.sat = v.sat();
  if (grid_sat && !v.sat()) return fail(print_formula(f) + ": grid SAT, oracle UNSAT");
  if (!grid_sat && v.sat()) {
    bool off_grid = std::any_of(v.witness.begin(), v.witness.end(),
                                [](const auto& kv) { return 64 % kv.second.get_den() != 0; });
    if (!off_grid || !check_witness(f, v.witness, Algebra::StdMVHalf))
      return fail(print_formula(f) + ": oracle SAT at " + show(v.witness) + " but grid UNSAT");
    o.value = 1;  // off-grid only
  }
  o.pass = true;
  return o;
}

// -- size guard --------------------------------------------------------------

// Conjunction of n/4 atoms x_i + -1 <= x_{i+1} /\ 0, four leaves each.
Formula size_family(std::size_t n) {
  std::vector<Atom> atoms;
  std::size_t vars = std::max<std::size_t>(n / 4, 2);
  for (std::size_t i = 0; i < n / 4; ++i) {
    Term x = Term::var("x" + std::to_string(i % vars + 1));
    Term y = Term::var("x" + std::to_string((i + 1) % vars + 1));
    atoms.push_back(Atom{x + Term::minus_one(), Rel::Le, meet(y, Term::zero())});
  }
  return Formula::conj(Signature::pAb, atoms);
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

struct SuiteDef {
  std::string summary;
  std::size_t count;
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> r{
      {"tau", {"tau commutes with r on bounded inputs and lands near 1/2", 300}},
      {"etau", {"atoms hold in R iff their tau-images hold at r(a)", 200}},
      {"tseitin-tau", {"tau' of a formula and of its Tseitin variant agree under the extension", 200}},
      {"bonus", {"the gadget equations have exactly one solution", 0}},
      {"delta", {"delta shifts term functions by one", 300}},
      {"edelta", {"formulas hold in [0,1] iff their delta-images hold one unit down", 200}},
      {"sigma", {"sigma_q coincides with tau_q o delta on the 1/8 grid, size at most 7x", 100}},
      {"etau-q", {"delta-images hold in R iff their tau_q-images hold at r(a)", 200}},
      {"theorem-pab", {"pAb formula and its MV translation agree; witnesses map back", 200}},
      {"theorem-mv", {"MV formula and its self-translation agree; witnesses map back", 200}},
      {"small-solution", {"feasible integer systems have solutions inside (mk)^m", 100}},
      {"bounded", {"pAb witnesses lie inside 2^M for the proof constant", 200}},
      {"brute-force", {"MV oracle agrees with grid search at step 1/64", 100}},
      {"size", {"S(F) stays within 64 (M + k + size F) on a doubling family", 5}},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [n, d] : registry()) out.push_back(n);
  return out;
}

std::string suite_summary(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown lemma suite '" + name + "'");
  return it->second.summary;
}

std::size_t default_count(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown lemma suite '" + name + "'");
  return it->second.count;
}

std::size_t worker_count(const SuiteConfig& cfg) {
  if (cfg.threads) return cfg.threads;
  if (const char* env = std::getenv("LUK_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = cfg.count ? cfg.count : default_count(name);
  SuiteResult res;
  res.name = name;
  std::vector<Outcome> outs;

  auto plain = [&](Outcome (*fn)(std::size_t, Rng&)) { outs = run_parallel(n, cfg, fn); };
  auto with_cfg = [&](Outcome (*fn)(Rng&, const SuiteConfig&)) {
    outs = run_parallel(n, cfg, [&](std::size_t, Rng& rng) { return fn(rng, cfg); });
  };
  auto count_sat = [&] {
    return std::to_string(std::count_if(outs.begin(), outs.end(), [](const Outcome& o) { return o.sat; }));
  };

  if (name == "tau") plain(tau_instance);
  else if (name == "etau") plain(etau_instance), res.notes.emplace_back("true_instances", count_sat());
  else if (name == "tseitin-tau") plain(tseitin_tau_instance), res.notes.emplace_back("true_instances", count_sat());
  else if (name == "delta") plain(delta_instance);
  else if (name == "edelta") plain(edelta_instance), res.notes.emplace_back("true_instances", count_sat());
  else if (name == "etau-q") plain(etau_q_instance), res.notes.emplace_back("true_instances", count_sat());
  else if (name == "small-solution") {
    plain(small_solution_instance);
    res.notes.emplace_back("witness_box(2,20).M", std::to_string(witness_box(2, 20).M));
  } else if (name == "sigma") {
    plain(sigma_instance);
    double worst = 0;
    for (const auto& o : outs) worst = std::max(worst, o.value);
    res.notes.emplace_back("max_size_factor", fixed(worst, 3));
  } else if (name == "bonus") {
    std::vector<ReductionParams> ps;
    for (std::size_t len = 1; len <= cfg.max_chain; ++len)
      for (std::size_t k = 0; k < len; ++k) ps.push_back(ReductionParams{len - 1 - k, k, cfg.c});
    std::size_t exhaustive = ps.size();
    ps.push_back(ReductionParams{511, 0, cfg.c});
    outs = run_parallel(ps.size(), cfg, [&](std::size_t i, Rng&) { return check_gadget(ps[i], cfg, i < exhaustive); });
    res.notes.emplace_back("exhaustive_chains", std::to_string(exhaustive));
    res.notes.emplace_back("propagated_chain", "512");
  } else if (name == "theorem-pab") {
    with_cfg(theorem_pab_instance);
    res.notes.emplace_back("sat_instances", count_sat());
    res.notes.emplace_back("bounded_witnesses",
                           std::to_string(std::count_if(outs.begin(), outs.end(), [](const Outcome& o) { return o.sat && o.bounded; })) +
                               "/" + count_sat());
  } else if (name == "theorem-mv") {
    with_cfg(theorem_mv_instance);
    res.notes.emplace_back("sat_instances", count_sat());
  } else if (name == "bounded") {
    with_cfg(bounded_instance);
    res.notes.emplace_back("sat_instances", count_sat());
  } else if (name == "brute-force") {
    with_cfg(brute_force_instance);
    res.notes.emplace_back("sat_instances", count_sat());
    res.notes.emplace_back("off_grid_only",
                           std::to_string(std::count_if(outs.begin(), outs.end(), [](const Outcome& o) { return o.value > 0; })));
  } else if (name == "size") {
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0, s = 4; i < n; ++i, s *= 2) sizes.push_back(s);
    outs = run_parallel(sizes.size(), cfg, [&](std::size_t i, Rng&) {
      Formula f = size_family(sizes[i]);
      Translation t = build_S_pAb(f, default_params(f, cfg.c));
      Outcome o;
      o.value = t.size_ratio();
      o.pass = formula_size(f) == sizes[i] && o.value <= static_cast<double>(kSizeGuard);
      if (!o.pass) o.detail = "size " + std::to_string(sizes[i]) + ": ratio " + fixed(o.value, 3);
      return o;
    });
    for (std::size_t i = 0; i < sizes.size(); ++i)
      res.notes.emplace_back("ratio@" + std::to_string(sizes[i]), fixed(outs[i].value, 4));
  } else {
    throw Error("unknown lemma suite '" + name + "'");
  }

  res.total = outs.size();
  for (std::size_t i = 0; i < outs.size(); ++i) {
    if (outs[i].pass) ++res.passed;
    else if (res.failures.size() < 5) res.failures.push_back("#" + std::to_string(i) + " " + outs[i].detail);
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string format_result(const SuiteResult& r, bool structured, bool timings) {
  std::ostringstream os;
  if (structured) {
    os << "suite=" << r.name << '\n' << "total=" << r.total << '\n' << "passed=" << r.passed << '\n';
    for (const auto& [k, v] : r.notes) os << "note." << k << '=' << v << '\n';
    for (const auto& f : r.failures) os << "failure=" << f << '\n';
    if (timings) os << "elapsed_ms=" << fixed(r.elapsed_ms, 1) << '\n';
    os << "verdict=" << (r.ok() ? "pass" : "fail") << '\n';
    return os.str();
  }
  os << r.name << ": " << r.passed << "/" << r.total << " passed";
  if (timings) os << " in " << fixed(r.elapsed_ms / 1000.0, 2) << " s";
  os << '\n';
  for (const auto& [k, v] : r.notes) os << "  " << k << " = " << v << '\n';
  for (const auto& f : r.failures) os << "  FAIL " << f << '\n';
  return os.str();
}

}  // namespace luk
