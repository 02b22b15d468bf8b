#include "luk/decide.hpp"

#include "luk/errors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>

namespace luk {

namespace {

using Clock = std::chrono::steady_clock;

struct Def {
  std::string out;
  Op op;
  std::vector<std::string> args;
};

// sum coef*var + constant over representative names
struct Lin {
  std::map<std::string, Rational> coef;
  Rational constant;
};

Lin operator+(Lin a, const Lin& b) {
  for (const auto& [n, c] : b.coef) a.coef[n] += c;
  a.constant += b.constant;
  return a;
}

Lin scaled(Lin a, const Rational& s) {
  for (auto& [n, c] : a.coef) c *= s;
  a.constant *= s;
  return a;
}

Lin operator-(const Lin& a, const Lin& b) { return a + scaled(b, -1); }

Lin lin_of(const Rational& c) {
  Lin l;
  l.constant = c;
  return l;
}

Rational eval_lin(const Lin& l, const std::map<std::string, Rational>& x) {
  Rational v = l.constant;
  for (const auto& [n, c] : l.coef)
    if (sgn(c) != 0) v += c * x.at(n);
  return v;
}

// a <= b / a < b. Coefficients here are always small integers.
LinearRow le_row(const Lin& a, const Lin& b, bool strict) {
  Lin d = a - b;
  LinearRow r;
  for (const auto& [n, c] : d.coef) {
    if (sgn(c) == 0) continue;
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw std::logic_error("decide: non-integer coefficient");
    r.terms.emplace_back(n, c.get_num().get_si());
  }
  r.strict = strict;
  r.rhs = -d.constant;
  return r;
}

// out = min(l1, l2) or out = max(l1, l2)
struct Kink {
  Lin out, l1, l2;
  bool is_min;
};

Rational constant_value(Op op) {
  switch (op) {
    case Op::Zero: return 0;
    case Op::One: return 1;
    case Op::MinusOne: return -1;
    case Op::Half: return Rational(1, 2);
    default: throw std::logic_error("decide: not a constant");
  }
}

Rational apply_op(Op op, const std::vector<Rational>& a) {
  switch (op) {
    case Op::Neg: return -a[0];
    case Op::Not: return 1 - a[0];
    case Op::Plus: return a[0] + a[1];
    case Op::Meet: return std::min(a[0], a[1]);
    case Op::Join: return std::max(a[0], a[1]);
    case Op::OPlus: return mv_oplus(a[0], a[1]);
    case Op::OTimes: return mv_otimes(a[0], a[1]);
    case Op::Implies: return mv_implies(a[0], a[1]);
    default: return constant_value(op);
  }
}

class Conflict {};

struct Interval {
  Rational lo, hi;
};

Interval apply_interval(Op op, const std::vector<Interval>& a) {
  switch (op) {
    case Op::Not: return {1 - a[0].hi, 1 - a[0].lo};
    case Op::Meet: return {std::min(a[0].lo, a[1].lo), std::min(a[0].hi, a[1].hi)};
    case Op::Join: return {std::max(a[0].lo, a[1].lo), std::max(a[0].hi, a[1].hi)};
    case Op::OPlus: return {mv_oplus(a[0].lo, a[1].lo), mv_oplus(a[0].hi, a[1].hi)};
    case Op::OTimes: return {mv_otimes(a[0].lo, a[1].lo), mv_otimes(a[0].hi, a[1].hi)};
    case Op::Implies: return {mv_implies(a[0].hi, a[1].lo), mv_implies(a[0].lo, a[1].hi)};
    default: {
      Rational c = constant_value(op);
      return {c, c};
    }
  }
}

class Solver {
 public:
  Solver(bool mv, const DecideOptions& opt, DecideStats& stats, std::mt19937_64* rng)
      : mv_(mv), opt_(opt), stats_(stats), rng_(rng) {}

  std::optional<Assignment> run(const std::vector<Atom>& atoms, const std::vector<std::string>& source_vars) {
    std::vector<Atom> rels;
    for (const auto& a : atoms) {
      if (a.rhs.is_var()) {
        rels.push_back(a);
        continue;
      }
      Def d{a.lhs.name(), a.rhs.op(), {}};
      for (int i = 0; i < arity(d.op); ++i) d.args.push_back(a.rhs.child(i).name());
      defs_.push_back(std::move(d));
    }
    for (const auto& a : rels) {
      id(a.lhs.name());
      id(a.rhs.name());
    }
    for (const auto& d : defs_) {
      id(d.out);
      for (const auto& x : d.args) id(x);
    }
    for (const auto& r : opt_.extra_rows)
      for (const auto& [n, c] : r.terms) id(n);

    try {
      if (opt_.propagate) propagate(rels);
      return search(rels, source_vars);
    } catch (const Conflict&) {
      return std::nullopt;
    }
  }

 private:
  int id(const std::string& n) {
    auto [it, inserted] = ids_.try_emplace(n, static_cast<int>(names_.size()));
    if (inserted) {
      names_.push_back(n);
      parent_.push_back(it->second);
      value_.emplace_back();
    }
    return it->second;
  }

  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  int find(const std::string& n) { return find(ids_.at(n)); }

  const std::optional<Rational>& known(const std::string& n) { return value_[find(n)]; }

  void assign(const std::string& n, const Rational& v) {
    int r = find(n);
    if (value_[r]) {
      if (*value_[r] != v) throw Conflict{};
      return;
    }
    if (mv_ && (v < 0 || v > 1)) throw Conflict{};
    value_[r] = v;
    ++stats_.propagated;
    changed_ = true;
  }

  void unite(const std::string& a, const std::string& b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (value_[ra] && value_[rb] && *value_[ra] != *value_[rb]) throw Conflict{};
    if (!value_[ra]) value_[ra] = value_[rb];
    parent_[rb] = ra;
    changed_ = true;
  }

  void propagate(const std::vector<Atom>& rels) {
    for (const auto& a : rels)
      if (a.rel == Rel::Eq) unite(a.lhs.name(), a.rhs.name());
    do {
      changed_ = false;
      for (const auto& d : defs_) step(d);
    } while (changed_);
  }

  void step(const Def& d) {
    if (d.args.empty()) {
      assign(d.out, constant_value(d.op));
      return;
    }
    std::vector<Rational> vals;
    bool all = true;
    for (const auto& a : d.args) {
      const auto& v = known(a);
      if (!v) {
        all = false;
        break;
      }
      vals.push_back(*v);
    }
    if (all) {
      assign(d.out, apply_op(d.op, vals));
      return;
    }
    const std::optional<Rational> out = known(d.out);
    if (d.args.size() == 1) {
      bool self = find(d.out) == find(d.args[0]);
      if (d.op == Op::Not) {
        if (self) assign(d.out, Rational(1, 2));
        else if (out) assign(d.args[0], 1 - *out);
      } else if (d.op == Op::Neg) {
        if (self) assign(d.out, 0);
        else if (out) assign(d.args[0], -*out);
      }
      return;
    }
    if (!out) return;
    const bool same = find(d.args[0]) == find(d.args[1]);
    switch (d.op) {
      case Op::Plus:
        if (same) assign(d.args[0], *out / 2);
        else if (known(d.args[0])) assign(d.args[1], *out - *known(d.args[0]));
        else if (known(d.args[1])) assign(d.args[0], *out - *known(d.args[1]));
        break;
      case Op::OPlus:
        if (same && *out < 1) assign(d.args[0], *out / 2);
        break;
      case Op::OTimes:
        if (same && *out > 0) assign(d.args[0], (*out + 1) / 2);
        break;
      default: break;
    }
  }

  // MV only: an interval for every representative, from the box, the
  // relations and the definitions.
  void compute_bounds(const std::vector<Atom>& rels) {
    bounds_.assign(names_.size(), Interval{0, 1});
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (value_[i]) bounds_[i] = {*value_[i], *value_[i]};
    auto meet_into = [&](int r, const Interval& iv) {
      Interval& b = bounds_[r];
      bool moved = false;
      if (iv.lo > b.lo) b.lo = iv.lo, moved = true;
      if (iv.hi < b.hi) b.hi = iv.hi, moved = true;
      if (b.lo > b.hi) throw Conflict{};
      return moved;
    };
    for (int round = 0; round < 8; ++round) {
      bool moved = false;
      for (const auto& a : rels) {
        int l = find(a.lhs.name()), r = find(a.rhs.name());
        if (a.rel == Rel::Eq) {
          Interval both{std::max(bounds_[l].lo, bounds_[r].lo), std::min(bounds_[l].hi, bounds_[r].hi)};
          moved |= meet_into(l, both);
          moved |= meet_into(r, both);
        } else {
          moved |= meet_into(l, {0, bounds_[r].hi});
          moved |= meet_into(r, {bounds_[l].lo, 1});
        }
      }
      for (const auto& d : defs_) {
        std::vector<Interval> args;
        for (const auto& x : d.args) args.push_back(bounds_[find(x)]);
        int o = find(d.out);
        moved |= meet_into(o, apply_interval(d.op, args));
        if (d.op == Op::Not) moved |= meet_into(find(d.args[0]), {1 - bounds_[o].hi, 1 - bounds_[o].lo});
      }
      if (!moved) break;
    }
  }

  Interval lin_bounds(const Lin& l) {
    Interval iv{l.constant, l.constant};
    for (const auto& [n, c] : l.coef) {
      const Interval& b = bounds_[find(n)];
      if (sgn(c) > 0) iv.lo += c * b.lo, iv.hi += c * b.hi;
      else iv.lo += c * b.hi, iv.hi += c * b.lo;
    }
    return iv;
  }

  Lin var_lin(const std::string& n) {
    int r = find(n);
    if (value_[r]) return lin_of(*value_[r]);
    Lin l;
    l.coef[names_[r]] = 1;
    return l;
  }

  std::optional<Assignment> search(const std::vector<Atom>& rels, const std::vector<std::string>& source_vars) {
    std::vector<LinearRow> base;
    std::vector<std::string> columns;
    std::set<std::string> seen_cols;
    auto note_cols = [&](const LinearRow& r) {
      for (const auto& [n, c] : r.terms)
        if (seen_cols.insert(n).second) columns.push_back(n);
    };
    auto push_row = [&](LinearRow r) {
      if (r.terms.empty()) {
        if (r.strict ? !(0 < r.rhs) : !(0 <= r.rhs)) throw Conflict{};
        return;
      }
      note_cols(r);
      base.push_back(std::move(r));
    };
    auto push_eq = [&](const Lin& a, const Lin& b) {
      push_row(le_row(a, b, false));
      push_row(le_row(b, a, false));
    };

    for (const auto& a : rels) {
      Lin l = var_lin(a.lhs.name()), r = var_lin(a.rhs.name());
      if (a.rel == Rel::Eq) push_eq(l, r);
      else push_row(le_row(l, r, a.rel == Rel::Lt));
    }
    if (mv_) compute_bounds(rels);
    std::vector<Kink> kinks;
    // kinks whose winning side the bounds already decide are equalities
    auto add_kink = [&](Kink k) {
      if (mv_) {
        Interval a = lin_bounds(k.l1), b = lin_bounds(k.l2);
        bool l1_wins = k.is_min ? a.hi <= b.lo : a.lo >= b.hi;
        bool l2_wins = k.is_min ? b.hi <= a.lo : b.lo >= a.hi;
        if (l1_wins) return push_eq(k.out, k.l1);
        if (l2_wins) return push_eq(k.out, k.l2);
      }
      kinks.push_back(std::move(k));
    };
    for (const auto& d : defs_) {
      Lin out = var_lin(d.out);
      std::vector<Lin> a;
      for (const auto& x : d.args) a.push_back(var_lin(x));
      switch (d.op) {
        case Op::Zero:
        case Op::One:
        case Op::MinusOne:
        case Op::Half: push_eq(out, lin_of(constant_value(d.op))); break;
        case Op::Neg: push_eq(out, scaled(a[0], -1)); break;
        case Op::Not: push_eq(out, lin_of(1) - a[0]); break;
        case Op::Plus: push_eq(out, a[0] + a[1]); break;
        case Op::Meet: add_kink({out, a[0], a[1], true}); break;
        case Op::Join: add_kink({out, a[0], a[1], false}); break;
        case Op::OPlus: add_kink({out, lin_of(1), a[0] + a[1], true}); break;
        case Op::OTimes: add_kink({out, lin_of(0), a[0] + a[1] - lin_of(1), false}); break;
        case Op::Implies: add_kink({out, lin_of(1), lin_of(1) - a[0] + a[1], true}); break;
        default: throw std::logic_error("decide: unexpected definition");
      }
    }
    // a (+) b + a (*) b = a + b and a /\ b + a \/ b = a + b: valid rows that
    // make the pair behave linearly in the relaxation
    std::map<std::tuple<Op, int, int>, std::string> by_args;
    for (const auto& d : defs_) {
      if (d.args.size() != 2) continue;
      int x = find(d.args[0]), y = find(d.args[1]);
      by_args.try_emplace({d.op, std::min(x, y), std::max(x, y)}, d.out);
    }
    for (const auto& [key, out] : by_args) {
      auto [op, x, y] = key;
      Op partner = op == Op::OPlus ? Op::OTimes : op == Op::Meet ? Op::Join : Op::Var;
      if (partner == Op::Var) continue;
      auto it = by_args.find({partner, x, y});
      if (it == by_args.end()) continue;
      push_eq(var_lin(out) + var_lin(it->second), var_lin(names_[x]) + var_lin(names_[y]));
    }
    // relaxation: the convex half of every kink
    for (const auto& k : kinks) {
      if (k.is_min) {
        push_row(le_row(k.out, k.l1, false));
        push_row(le_row(k.out, k.l2, false));
      } else {
        push_row(le_row(k.l1, k.out, false));
        push_row(le_row(k.l2, k.out, false));
      }
    }
    for (const auto& r : opt_.extra_rows) {
      Lin l;
      for (const auto& [n, c] : r.terms) l = l + scaled(var_lin(n), c);
      push_row(le_row(l, lin_of(r.rhs), r.strict));
    }
    // every source variable gets a column or a value
    for (const auto& v : source_vars) {
      if (!ids_.count(v)) continue;
      int r = find(v);
      if (!value_[r] && seen_cols.insert(names_[r]).second) columns.push_back(names_[r]);
    }
    if (mv_) {
      std::vector<std::string> cols = columns;
      for (const auto& c : cols) {
        const Interval& b = bounds_[find(c)];
        push_row(LinearRow{{{c, 1}}, false, b.hi});
        push_row(LinearRow{{{c, -1}}, false, -b.lo});
      }
    }

    order_.resize(kinks.size());
    std::iota(order_.begin(), order_.end(), 0);
    if (rng_) std::shuffle(order_.begin(), order_.end(), *rng_);

    std::vector<LinearRow> tight;
    auto sol = branch(base, columns, kinks, tight);
    if (!sol) return std::nullopt;
    Assignment w;
    for (const auto& v : source_vars) {
      if (!ids_.count(v)) {
        w[v] = 0;
        continue;
      }
      int r = find(v);
      if (value_[r]) w[v] = *value_[r];
      else w[v] = sol->at(names_[r]);
    }
    return w;
  }

  std::optional<std::map<std::string, Rational>> branch(const std::vector<LinearRow>& base,
                                                        const std::vector<std::string>& columns,
                                                        const std::vector<Kink>& kinks, std::vector<LinearRow>& tight) {
    if (++stats_.nodes > opt_.split_cap) throw CapExceeded("case-split nodes", opt_.split_cap);
    std::vector<LinearRow> rows = base;
    rows.insert(rows.end(), tight.begin(), tight.end());
    LinearSystem sys = make_system(rows, columns);
    FeasibleOptions fo;
    fo.row_cap = opt_.fm_row_cap;
    if (mv_) fo.box = Rational(1);
    LinearVerdict lv = feasible(sys, fo);
    stats_.peak_rows = std::max(stats_.peak_rows, lv.peak_rows);
    if (!lv.feasible) return std::nullopt;
    std::map<std::string, Rational> x;
    for (std::size_t j = 0; j < sys.cols(); ++j) x[sys.columns[j]] = lv.witness[j];

    for (std::size_t idx : order_) {
      const Kink& k = kinks[idx];
      Rational o = eval_lin(k.out, x), a = eval_lin(k.l1, x), b = eval_lin(k.l2, x);
      Rational want = k.is_min ? std::min(a, b) : std::max(a, b);
      if (o == want) continue;
      // close the gap on one side: out = l1 (l1 wins ties) or out = l2 (strictly)
      bool first_l1 = k.is_min ? a <= b : a >= b;
      if (rng_) first_l1 = ((*rng_)() & 1) != 0;
      for (int t = 0; t < 2; ++t) {
        const bool use_l1 = (t == 0) == first_l1;
        const Lin& side = use_l1 ? k.l1 : k.l2;
        tight.push_back(k.is_min ? le_row(side, k.out, false) : le_row(k.out, side, false));
        if (!use_l1) tight.push_back(k.is_min ? le_row(k.l2, k.l1, true) : le_row(k.l1, k.l2, true));
        auto sol = branch(base, columns, kinks, tight);
        tight.pop_back();
        if (!use_l1) tight.pop_back();
        if (sol) return sol;
      }
      return std::nullopt;
    }
    return x;
  }

  bool mv_;
  const DecideOptions& opt_;
  DecideStats& stats_;
  std::mt19937_64* rng_;
  std::vector<Def> defs_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<int> parent_;
  std::vector<std::optional<Rational>> value_;
  std::vector<std::size_t> order_;
  std::vector<Interval> bounds_;
  bool changed_ = false;
};

Verdict run(const Formula& f, bool mv, const DecideOptions& opt) {
  auto t0 = Clock::now();
  Verdict v;
  const Algebra alg = algebra_for(f.sig());
  std::vector<std::string> vars = variables(f);
  std::vector<Conjunction> disjuncts = dnf(nnf_trichotomy(f), opt.dnf_cap);
  std::optional<std::mt19937_64> rng;
  if (opt.seed != 0) rng.emplace(opt.seed);

  std::vector<std::string> taken = vars;
  for (const auto& r : opt.extra_rows)
    for (const auto& [n, c] : r.terms) taken.push_back(n);

  for (const auto& conj : disjuncts) {
    ++v.stats.disjuncts;
    TseitinNamer namer(taken);
    std::vector<Atom> atoms = tseitin_atoms(conj, namer);
    Solver s(mv, opt, v.stats, rng ? &*rng : nullptr);
    auto w = s.run(atoms, vars);
    if (!w) continue;
    if (!eval_formula(f, *w, alg)) throw std::logic_error("decide: witness fails re-evaluation");
    v.status = Verdict::Status::Sat;
    v.witness = std::move(*w);
    break;
  }
  v.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return v;
}

}  // namespace

Verdict decide_pAb(const Formula& f, const DecideOptions& opt) {
  if (f.sig() != Signature::Ab && f.sig() != Signature::pAb)
    throw SignatureError("decide_pAb: formula is in language " + std::string(signature_tag(f.sig())));
  return run(f, false, opt);
}

Verdict decide_MV(const Formula& f, const DecideOptions& opt) {
  if (f.sig() != Signature::MV && f.sig() != Signature::MVHalf)
    throw SignatureError("decide_MV: formula is in language " + std::string(signature_tag(f.sig())));
  return run(f, true, opt);
}

Verdict decide(const Formula& f, const DecideOptions& opt) {
  return f.sig() == Signature::MV || f.sig() == Signature::MVHalf ? decide_MV(f, opt) : decide_pAb(f, opt);
}

bool check_witness(const Formula& f, const Assignment& v, Algebra a) { return eval_formula(f, v, a); }

}  // namespace luk
