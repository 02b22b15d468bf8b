#include "luk/reduction.hpp"

#include "luk/errors.hpp"
#include "luk/linear.hpp"
#include "luk/transform.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace luk {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Term plus_mv(const Term& a, const Term& b) {
  return otimes(oplus(a, b), oplus(Term::half(), otimes(a, b)));
}

Term tau_rec(const Term& t) {
  switch (t.op()) {
    case Op::Var: return t;
    case Op::Zero: return Term::half();
    case Op::MinusOne: throw ReductionError("tau: constant -1 needs the q-variant");
    case Op::Neg: return mv_not(tau_rec(t.child(0)));
    case Op::Meet: return meet(tau_rec(t.left()), tau_rec(t.right()));
    case Op::Join: return join(tau_rec(t.left()), tau_rec(t.right()));
    case Op::Plus: return plus_mv(tau_rec(t.left()), tau_rec(t.right()));
    default: throw ReductionError(std::string("tau: operator outside the l-group language: ") + std::string(op_symbol(t.op())));
  }
}

Term tau_q_rec(const Term& t, const Term& q) {
  switch (t.op()) {
    case Op::Var: return meet(join(t, q), Term::half());
    case Op::Zero: return Term::half();
    case Op::MinusOne: return q;
    case Op::Neg: return mv_not(tau_q_rec(t.child(0), q));
    case Op::Meet: return meet(tau_q_rec(t.left(), q), tau_q_rec(t.right(), q));
    case Op::Join: return join(tau_q_rec(t.left(), q), tau_q_rec(t.right(), q));
    case Op::Plus: return plus_mv(tau_q_rec(t.left(), q), tau_q_rec(t.right(), q));
    default: throw ReductionError(std::string("tau_q: operator outside pAb: ") + std::string(op_symbol(t.op())));
  }
}

void require_absent(const Term& t, const std::string& q, const char* who) {
  for (const auto& v : variables(t))
    if (v == q) throw ReductionError(std::string(who) + ": variable " + q + " occurs in the input");
}

void require_absent(const Formula& f, const std::string& q, const char* who) {
  for (const auto& v : variables(f))
    if (v == q) throw ReductionError(std::string(who) + ": variable " + q + " occurs in the input");
}

void require_mv(const Term& t, const char* who) {
  switch (t.op()) {
    case Op::Var:
    case Op::Zero:
    case Op::One:
    case Op::Not:
    case Op::Meet:
    case Op::Join:
    case Op::OPlus:
    case Op::OTimes:
    case Op::Implies: break;
    default: throw ReductionError(std::string(who) + ": operator outside MV: " + std::string(op_symbol(t.op())));
  }
  for (int i = 0; i < arity(t.op()); ++i) require_mv(t.child(i), who);
}

Term negate(const Term& t);

Term push(const Term& t) {
  switch (t.op()) {
    case Op::Not: return negate(t.child(0));
    case Op::Var:
    case Op::Zero:
    case Op::One:
    case Op::Half: return t;
    default: break;
  }
  if (arity(t.op()) == 2) return Term::binary(t.op(), push(t.left()), push(t.right()));
  return Term::unary(t.op(), push(t.child(0)));
}

// push(~t)
Term negate(const Term& t) {
  switch (t.op()) {
    case Op::Var: return mv_not(t);
    case Op::Zero: return Term::one();
    case Op::One: return Term::zero();
    case Op::Half: return t;
    case Op::Not: return push(t.child(0));
    case Op::Meet: return join(negate(t.left()), negate(t.right()));
    case Op::Join: return meet(negate(t.left()), negate(t.right()));
    case Op::OPlus: return otimes(negate(t.left()), negate(t.right()));
    case Op::OTimes: return oplus(negate(t.left()), negate(t.right()));
    case Op::Implies: return otimes(push(t.left()), negate(t.right()));
    default: throw ReductionError("push_negations: operator outside MV");
  }
}

Term delta_rec(const Term& t) {
  const Term m1 = Term::minus_one();
  const Term z = Term::zero();
  switch (t.op()) {
    case Op::Var: return meet(join(t, m1), z);
    case Op::Zero: return m1;
    case Op::One: return z;
    case Op::Not: return -delta_rec(t.child(0)) + m1;
    case Op::Implies: return meet(delta_rec(t.right()) + -delta_rec(t.left()), z);
    case Op::OTimes: return join(delta_rec(t.left()) + delta_rec(t.right()), m1);
    case Op::OPlus: return meet(delta_rec(t.left()) + (delta_rec(t.right()) + -m1), z);
    case Op::Meet: return meet(delta_rec(t.left()), delta_rec(t.right()));
    case Op::Join: return join(delta_rec(t.left()), delta_rec(t.right()));
    default: throw ReductionError("delta: unexpected operator");
  }
}

Term sigma_rec(const Term& t, const Term& q) {
  const Term h = Term::half();
  switch (t.op()) {
    case Op::Var: return meet(join(t, q), h);
    case Op::Zero: return q;
    case Op::One: return h;
    case Op::Not: return otimes(oplus(mv_not(sigma_rec(t.child(0), q)), q), h);
    case Op::Implies: return meet(otimes(implies(sigma_rec(t.left(), q), sigma_rec(t.right(), q)), h), h);
    case Op::OTimes: return join(otimes(oplus(sigma_rec(t.left(), q), sigma_rec(t.right(), q)), h), q);
    case Op::OPlus: return meet(oplus(sigma_rec(t.left(), q), otimes(sigma_rec(t.right(), q), mv_not(q))), h);
    case Op::Meet: return meet(sigma_rec(t.left(), q), sigma_rec(t.right(), q));
    case Op::Join: return join(sigma_rec(t.left(), q), sigma_rec(t.right(), q));
    default: throw ReductionError("sigma_q: unexpected operator");
  }
}

Term replace_leaf(const Term& t, Op which, const Term& by) {
  return map_leaves(t, [&](const Term& leaf) { return leaf.op() == which ? by : leaf; });
}

Term rename_vars(const Term& t, const std::map<std::string, std::string>& ren) {
  if (ren.empty()) return t;
  return map_leaves(t, [&](const Term& leaf) {
    if (!leaf.is_var()) return leaf;
    auto it = ren.find(leaf.name());
    return it == ren.end() ? leaf : Term::var(it->second);
  });
}

// Moves source variables off reserved names.
std::vector<std::pair<std::string, std::string>> plan_renaming(const Formula& f, const GadgetVars& g) {
  std::set<std::string> reserved(g.z.begin(), g.z.end());
  reserved.insert(g.q);
  if (!g.r.empty()) reserved.insert(g.r);
  auto vars = variables(f);
  std::set<std::string> used(vars.begin(), vars.end());
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : vars) {
    if (!reserved.count(v)) continue;
    std::string n = v + "_0";
    while (reserved.count(n) || used.count(n)) n += "_0";
    used.insert(n);
    out.emplace_back(v, n);
  }
  return out;
}

Formula apply_renaming(const Formula& f, const std::vector<std::pair<std::string, std::string>>& ren) {
  if (ren.empty()) return f;
  std::map<std::string, std::string> m(ren.begin(), ren.end());
  return map_terms(f, f.sig(), [&](const Term& t) { return rename_vars(t, m); });
}

void require_sig(const Formula& f, std::initializer_list<Signature> ok, const char* who) {
  if (std::find(ok.begin(), ok.end(), f.sig()) == ok.end())
    throw ReductionError(std::string(who) + ": unexpected input language " + std::string(signature_tag(f.sig())));
}

}  // namespace

ReductionParams default_params(const Formula& f, std::size_t c) {
  ReductionParams p;
  p.c = c;
  p.k = max_term_depth(f);
  p.M = witness_box(std::max<std::size_t>(formula_size(f), 1), c).M;
  return p;
}

GadgetVars gadget_vars(const ReductionParams& p, bool with_r) {
  GadgetVars g;
  for (std::size_t i = 1; i <= p.M + p.k + 1; ++i) g.z.push_back("z" + std::to_string(i));
  if (with_r) g.r = "r";
  return g;
}

Assignment gadget_values(const ReductionParams& p) {
  Assignment v;
  const long n = static_cast<long>(p.M + p.k + 1);
  for (long i = 1; i <= n; ++i) v["z" + std::to_string(i)] = pow2(-i);
  v["q"] = Rational(1, 2) - pow2(-n);
  v["r"] = Rational(1, 2) - pow2(-static_cast<long>(p.k + 1));
  return v;
}

std::vector<Atom> gadget_atoms(const ReductionParams& p, const GadgetVars& g) {
  const std::size_t n = p.M + p.k + 1;
  if (g.z.size() != n) throw ReductionError("gadget: chain length does not match M + k + 1");
  auto z = [&](std::size_t i) { return Term::var(g.z[i - 1]); };
  std::vector<Atom> out;
  out.push_back(Atom{z(1), Rel::Eq, mv_not(z(1))});
  if (!g.r.empty()) out.push_back(Atom{Term::var(g.r), Rel::Eq, mv_not(oplus(z(1), z(p.k + 1)))});
  out.push_back(Atom{Term::var(g.q), Rel::Eq, mv_not(oplus(z(1), z(n)))});
  for (std::size_t i = 1; i + 1 <= n; ++i) out.push_back(Atom{oplus(z(i + 1), z(i + 1)), Rel::Eq, z(i)});
  return out;
}

Rational r_map(const ReductionParams& p, const Rational& a) {
  return a * pow2(-static_cast<long>(p.M + p.k + 1)) + Rational(1, 2);
}

Rational r_inverse(const ReductionParams& p, const Rational& b) {
  return (b - Rational(1, 2)) * pow2(static_cast<long>(p.M + p.k + 1));
}

Term tau(const Term& t) {
  if (term_depth(t) > kTauDepthCap)
    throw ReductionError("tau: input depth " + std::to_string(term_depth(t)) + " exceeds the cap " +
                         std::to_string(kTauDepthCap));
  return tau_rec(t);
}

Formula tau_prime(const Formula& f) {
  require_sig(f, {Signature::Ab}, "tau'");
  return map_terms(f, Signature::MVHalf, [](const Term& t) { return tau(t); });
}

Term tau_q(const Term& t, const std::string& q) {
  require_absent(t, q, "tau_q");
  return tau_q_rec(t, Term::var(q));
}

Formula tau_q_prime(const Formula& f, const std::string& q) {
  require_sig(f, {Signature::Ab, Signature::pAb}, "tau_q'");
  require_absent(f, q, "tau_q'");
  const Term qv = Term::var(q);
  return map_terms(f, Signature::MVHalf, [&](const Term& t) { return tau_q_rec(t, qv); });
}

Term push_negations(const Term& t) {
  require_mv(t, "push_negations");
  return push(t);
}

Term delta(const Term& t) {
  require_mv(t, "delta");
  return delta_rec(push(t));
}

Formula delta_prime(const Formula& f) {
  require_sig(f, {Signature::MV}, "delta'");
  return map_terms(f, Signature::pAb, [](const Term& t) { return delta(t); });
}

Term sigma_q(const Term& t, const std::string& q) {
  require_mv(t, "sigma_q");
  require_absent(t, q, "sigma_q");
  return sigma_rec(push(t), Term::var(q));
}

Formula sigma_q_prime(const Formula& f, const std::string& q) {
  require_sig(f, {Signature::MV}, "sigma_q'");
  require_absent(f, q, "sigma_q'");
  const Term qv = Term::var(q);
  return map_terms(f, Signature::MVHalf, [&](const Term& t) {
    require_mv(t, "sigma_q'");
    return sigma_rec(push(t), qv);
  });
}

Formula zeta_pAb(const Formula& fp, const GadgetVars& g) {
  require_sig(fp, {Signature::Ab, Signature::pAb}, "zeta");
  for (const auto& v : variables(fp)) {
    if (v == g.q || v == g.r || std::find(g.z.begin(), g.z.end(), v) != g.z.end())
      throw ReductionError("zeta: gadget variable " + v + " occurs in the input");
  }
  if (g.z.empty()) throw ReductionError("zeta: empty gadget chain");
  const Term qv = Term::var(g.q);
  const Term z1 = Term::var(g.z.front());
  return map_terms(fp, Signature::MV, [&](const Term& t) {
    Term s = replace_leaf(t, Op::MinusOne, qv);
    return replace_leaf(tau_rec(s), Op::Half, z1);
  });
}

Formula zeta_MV(const Formula& f, const GadgetVars& g) {
  for (const auto& v : variables(f)) {
    if (v == g.q || std::find(g.z.begin(), g.z.end(), v) != g.z.end())
      throw ReductionError("zeta: gadget variable " + v + " occurs in the input");
  }
  if (g.z.empty()) throw ReductionError("zeta: empty gadget chain");
  const Term z1 = Term::var(g.z.front());
  Formula s = sigma_q_prime(f, g.q);
  return map_terms(s, Signature::MV, [&](const Term& t) { return replace_leaf(t, Op::Half, z1); });
}

double Translation::size_ratio() const {
  double denom = static_cast<double>(params.M + params.k + source_size);
  return denom > 0 ? static_cast<double>(output_size) / denom : 0.0;
}

Translation build_S_pAb(const Formula& f, const ReductionParams& p) {
  require_sig(f, {Signature::Ab, Signature::pAb}, "build_S_pAb");
  if (p.k < max_term_depth(f))
    throw ReductionError("build_S_pAb: k = " + std::to_string(p.k) + " is below the maximal term depth " +
                         std::to_string(max_term_depth(f)));
  Translation t{Translation::Kind::PAbToMV, f, f, f, p, gadget_vars(p, true), {}, {}, 0, 0};
  t.source_size = formula_size(f);
  t.renaming = plan_renaming(f, t.gadget);
  t.renamed = apply_renaming(f, t.renaming);

  auto t0 = Clock::now();
  std::vector<std::string> taken = variables(t.renamed);
  taken.insert(taken.end(), t.gadget.z.begin(), t.gadget.z.end());
  taken.push_back(t.gadget.q);
  taken.push_back(t.gadget.r);
  TseitinNamer namer(taken);
  TseitinResult ts = tseitin(t.renamed, namer);
  t.defmap = ts.defmap;
  t.ms_tseitin = ms_since(t0);

  t0 = Clock::now();
  Formula z = zeta_pAb(ts.formula, t.gadget);
  t.ms_translate = ms_since(t0);

  t0 = Clock::now();
  std::vector<Formula> parts{z};
  for (const auto& a : gadget_atoms(p, t.gadget)) parts.push_back(Formula::atom(Signature::MV, a));
  const Term r = Term::var(t.gadget.r);
  auto vars = variables(t.renamed);
  for (const auto& x : vars) parts.push_back(Formula::atom(Signature::MV, r, Rel::Le, Term::var(x)));
  for (const auto& x : vars) parts.push_back(Formula::atom(Signature::MV, Term::var(x), Rel::Le, mv_not(r)));
  t.output = Formula::conj(parts);
  t.output_size = formula_size(t.output);
  t.ms_assemble = ms_since(t0);
  if (t.output_size > kSizeGuard * (p.M + p.k + t.source_size))
    throw ReductionError("build_S_pAb: output size " + std::to_string(t.output_size) + " breaks the size guard");
  return t;
}

Translation build_S_MV(const Formula& f, const ReductionParams& p) {
  require_sig(f, {Signature::MV}, "build_S_MV");
  Translation t{Translation::Kind::MVToMV, f, f, f, p, gadget_vars(p, false), {}, {}, 0, 0};
  t.source_size = formula_size(f);
  t.renaming = plan_renaming(f, t.gadget);
  t.renamed = apply_renaming(f, t.renaming);

  auto t0 = Clock::now();
  Formula z = zeta_MV(t.renamed, t.gadget);
  t.ms_translate = ms_since(t0);

  t0 = Clock::now();
  std::vector<Formula> parts{z};
  for (const auto& a : gadget_atoms(p, t.gadget)) parts.push_back(Formula::atom(Signature::MV, a));
  t.output = Formula::conj(parts);
  t.output_size = formula_size(t.output);
  t.ms_assemble = ms_since(t0);
  if (t.output_size > kSizeGuard * (p.M + p.k + 7 * t.source_size))
    throw ReductionError("build_S_MV: output size " + std::to_string(t.output_size) + " breaks the size guard");
  return t;
}

Assignment recover_witness(const Translation& t, const Assignment& w) {
  std::map<std::string, std::string> ren(t.renaming.begin(), t.renaming.end());
  Assignment out;
  Rational q = gadget_values(t.params).at("q");
  if (auto it = w.find(t.gadget.q); it != w.end()) q = it->second;
  for (const auto& x : variables(t.source)) {
    auto r = ren.find(x);
    const std::string& name = r == ren.end() ? x : r->second;
    auto it = w.find(name);
    if (it == w.end()) throw Error("recover_witness: no value for " + name);
    if (t.kind == Translation::Kind::PAbToMV) {
      out[x] = r_inverse(t.params, it->second);
    } else {
      Rational b = it->second;
      if (b < q) b = q;
      if (b > Rational(1, 2)) b = Rational(1, 2);
      out[x] = r_inverse(t.params, b) + 1;
    }
  }
  return out;
}

std::string report_text(const Translation& t, bool timings) {
  std::ostringstream os;
  os << "translation=" << (t.kind == Translation::Kind::PAbToMV ? "pab-to-mv" : "mv-to-mv") << '\n';
  os << "source_lang=" << signature_tag(t.source.sig()) << '\n';
  os << "source_size=" << t.source_size << '\n';
  os << "source_atoms=" << atom_count(t.source) << '\n';
  os << "k=" << t.params.k << '\n';
  os << "M=" << t.params.M << '\n';
  os << "c=" << t.params.c << '\n';
  os << "gadget_chain=" << t.gadget.z.size() << '\n';
  os << "gadget_z=" << t.gadget.z.front() << ".." << t.gadget.z.back() << '\n';
  os << "gadget_q=" << t.gadget.q << '\n';
  if (!t.gadget.r.empty()) os << "gadget_r=" << t.gadget.r << '\n';
  for (const auto& [from, to] : t.renaming) os << "renamed=" << from << "->" << to << '\n';
  os << "tseitin_vars=" << t.defmap.size() << '\n';
  os << "output_size=" << t.output_size << '\n';
  os << "output_atoms=" << atom_count(t.output) << '\n';
  os << "size_ratio=" << std::fixed << std::setprecision(4) << t.size_ratio() << '\n';
  if (timings) {
    os << std::setprecision(3);
    os << "ms_tseitin=" << t.ms_tseitin << '\n';
    os << "ms_translate=" << t.ms_translate << '\n';
    os << "ms_assemble=" << t.ms_assemble << '\n';
  }
  return os.str();
}

}  // namespace luk
