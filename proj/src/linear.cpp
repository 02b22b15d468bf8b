#include "luk/linear.hpp"

#include "luk/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace luk {

std::int64_t LinearSystem::entry_bound() const {
  Integer k = 1;
  auto bump = [&](const Integer& v) {
    Integer a = abs(v);
    if (a > k) k = a;
  };
  for (const auto& row : A)
    for (auto v : row) bump(Integer(static_cast<long>(v)));
  for (const auto& row : B)
    for (auto v : row) bump(Integer(static_cast<long>(v)));
  for (const auto& v : b) bump(ceil(abs(v)));
  for (const auto& v : d) bump(ceil(abs(v)));
  if (!k.fits_slong_p()) throw Error("entry bound does not fit in 64 bits");
  return k.get_si();
}

std::size_t LinearSystem::max_row_support() const {
  std::size_t best = 0;
  auto scan = [&](const std::vector<std::vector<std::int64_t>>& m) {
    for (const auto& row : m)
      best = std::max<std::size_t>(best, std::count_if(row.begin(), row.end(), [](auto v) { return v != 0; }));
  };
  scan(A);
  scan(B);
  return best;
}

LinearSystem make_system(const std::vector<LinearRow>& rows, std::vector<std::string> columns) {
  LinearSystem s;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& c : columns) index.emplace(c, index.size());
  s.columns = std::move(columns);
  for (const auto& r : rows)
    for (const auto& [name, coef] : r.terms)
      if (index.emplace(name, index.size()).second) s.columns.push_back(name);
  for (const auto& r : rows) {
    std::vector<std::int64_t> row(s.columns.size(), 0);
    for (const auto& [name, coef] : r.terms) row[index.at(name)] += coef;
    if (r.strict) {
      s.B.push_back(std::move(row));
      s.d.push_back(r.rhs);
    } else {
      s.A.push_back(std::move(row));
      s.b.push_back(r.rhs);
    }
  }
  return s;
}

namespace {

struct LinExpr {
  std::map<std::string, std::int64_t> coef;
  Rational constant;

  LinExpr& operator+=(const LinExpr& o) {
    for (const auto& [n, c] : o.coef) coef[n] += c;
    constant += o.constant;
    return *this;
  }
  LinExpr operator-() const {
    LinExpr r;
    for (const auto& [n, c] : coef) r.coef[n] = -c;
    r.constant = -constant;
    return r;
  }
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a += -b; }
};

LinExpr lin_const(const Rational& q) {
  LinExpr e;
  e.constant = q;
  return e;
}

// a <= b (or a < b) as a row.
LinearRow row_le(const LinExpr& a, const LinExpr& b, bool strict) {
  LinExpr diff = a - b;
  LinearRow r;
  for (const auto& [n, c] : diff.coef)
    if (c != 0) r.terms.emplace_back(n, c);
  r.strict = strict;
  r.rhs = -diff.constant;
  return r;
}

class Linearizer {
 public:
  Linearizer(const std::vector<int>& cases, const Assignment* fixed) : cases_(cases), fixed_(fixed) {}

  LinExpr walk(const Term& t, std::vector<LinearRow>& side) {
    switch (t.op()) {
      case Op::Var: {
        if (fixed_) {
          auto it = fixed_->find(t.name());
          if (it != fixed_->end()) return lin_const(it->second);
        }
        LinExpr e;
        e.coef[t.name()] = 1;
        return e;
      }
      case Op::Zero: return lin_const(0);
      case Op::One: return lin_const(1);
      case Op::MinusOne: return lin_const(-1);
      case Op::Half: return lin_const(Rational(1, 2));
      case Op::Neg: return -walk(t.child(0), side);
      case Op::Not: return lin_const(1) - walk(t.child(0), side);
      case Op::Plus: {
        LinExpr a = walk(t.left(), side);
        return a + walk(t.right(), side);
      }
      default: break;
    }
    int c = next();
    LinExpr a = walk(t.left(), side);
    LinExpr b = walk(t.right(), side);
    LinExpr one = lin_const(1);
    switch (t.op()) {
      case Op::Meet:
        side.push_back(c == 0 ? row_le(a, b, false) : row_le(b, a, false));
        return c == 0 ? a : b;
      case Op::Join:
        side.push_back(c == 0 ? row_le(b, a, false) : row_le(a, b, false));
        return c == 0 ? a : b;
      case Op::OTimes:
        if (c == 0) {
          side.push_back(row_le(a + b, one, false));
          return lin_const(0);
        }
        side.push_back(row_le(one, a + b, false));
        return a + b - one;
      case Op::OPlus:
        if (c == 0) {
          side.push_back(row_le(a + b, one, false));
          return a + b;
        }
        side.push_back(row_le(one, a + b, false));
        return one;
      case Op::Implies:
        if (c == 0) {
          side.push_back(row_le(a, b, false));
          return one;
        }
        side.push_back(row_le(b, a, false));
        return one - a + b;
      default: throw Error("linearize: unexpected operator");
    }
  }

  std::size_t used() const { return pos_; }

 private:
  int next() {
    if (pos_ >= cases_.size()) throw Error("linearize: case selection too short");
    int c = cases_[pos_++];
    if (c != 0 && c != 1) throw Error("linearize: case index must be 0 or 1");
    return c;
  }

  const std::vector<int>& cases_;
  const Assignment* fixed_;
  std::size_t pos_ = 0;
};

std::vector<LinearRow> linearize_from(const Atom& a, Linearizer& lz) {
  std::vector<LinearRow> out;
  LinExpr l = lz.walk(a.lhs, out);
  LinExpr r = lz.walk(a.rhs, out);
  switch (a.rel) {
    case Rel::Eq:
      out.push_back(row_le(l, r, false));
      out.push_back(row_le(r, l, false));
      break;
    case Rel::Le: out.push_back(row_le(l, r, false)); break;
    case Rel::Lt: out.push_back(row_le(l, r, true)); break;
  }
  return out;
}

}  // namespace

std::size_t case_points(const Term& t) {
  std::size_t n = 0;
  switch (t.op()) {
    case Op::Meet:
    case Op::Join:
    case Op::OPlus:
    case Op::OTimes:
    case Op::Implies: n = 1; break;
    default: break;
  }
  for (int i = 0; i < arity(t.op()); ++i) n += case_points(t.child(i));
  return n;
}

std::size_t case_points(const Atom& a) { return case_points(a.lhs) + case_points(a.rhs); }

std::vector<LinearRow> linearize(const Atom& a, const std::vector<int>& cases, const Assignment* fixed) {
  Linearizer lz(cases, fixed);
  auto rows = linearize_from(a, lz);
  if (lz.used() != cases.size()) throw Error("linearize: case selection too long");
  return rows;
}

LinearSystem extract_system(const Conjunction& c, const std::vector<int>& cases, const Assignment* fixed) {
  Linearizer lz(cases, fixed);
  std::vector<LinearRow> rows;
  for (const auto& a : c) {
    auto part = linearize_from(a, lz);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (lz.used() != cases.size()) throw Error("extract_system: case selection too long");
  std::vector<std::string> cols;
  if (fixed) {
    // keep column order independent of which variables happen to be fixed
    std::set<std::string> seen;
    for (const auto& a : c) {
      collect_variables(a.lhs, cols, seen);
      collect_variables(a.rhs, cols, seen);
    }
    cols.erase(std::remove_if(cols.begin(), cols.end(), [&](const std::string& n) { return fixed->count(n) > 0; }),
               cols.end());
  }
  return make_system(rows, std::move(cols));
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

using Entry = std::pair<std::size_t, Rational>;
using Sparse = std::vector<Entry>;  // sorted by column, no zero entries

// Original rows a derived row was combined from, as a bitset.
using History = std::vector<std::uint64_t>;

History& operator|=(History& x, const History& y) {
  if (x.size() < y.size()) x.resize(y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) x[i] |= y[i];
  return x;
}

std::size_t popcount(const History& h) {
  std::size_t n = 0;
  for (auto w : h) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

struct Row {
  Sparse a;
  Rational b;
  bool strict = false;
  History h;
  History h_lower;  // equalities: history of the >= half
  History u;        // columns of those original rows
};

struct SparseLess {
  bool operator()(const Sparse& x, const Sparse& y) const {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].first != y[i].first) return x[i].first < y[i].first;
      int c = cmp(x[i].second, y[i].second);
      if (c != 0) return c < 0;
    }
    return x.size() < y.size();
  }
};

const Rational* coef_of(const Sparse& a, std::size_t j) {
  auto it = std::lower_bound(a.begin(), a.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  return it != a.end() && it->first == j ? &it->second : nullptr;
}

// s*x + t*y
Sparse combine(const Rational& s, const Sparse& x, const Rational& t, const Sparse& y) {
  Sparse out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, s * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, t * y[j].second);
      ++j;
    } else {
      Rational v = s * x[i].second + t * y[j].second;
      if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Step {
  enum Kind { Subst, Elim } kind;
  std::size_t var;
  std::vector<Row> rows;  // Subst: the single equality a.x = b
};

// A bound on a normalized direction.
struct Side {
  bool present = false;
  Rational c;
  bool strict = false;
  History h;
  History u;
};

struct Bucket {
  Side upper;  // v.x <= c
  Side lower;  // v.x >= c
};

enum class Norm { Ok, Infeasible };

// Scales each row so its first coefficient is +-1, merges parallel rows, and
// pulls out equalities (matching non-strict upper and lower bounds). A merged
// row keeps the intersection of the histories: it stands in for both rows,
// so pruning it must be justified for either.
// Without `equalities` both halves of an equality stay in as rows.
Norm normalize_rows(std::vector<Row>& rows, std::vector<Row>* equalities) {
  std::map<Sparse, Bucket, SparseLess> buckets;
  std::vector<const Sparse*> order;
  for (auto& r : rows) {
    if (r.a.empty()) {
      bool ok = r.strict ? sgn(r.b) > 0 : sgn(r.b) >= 0;
      if (!ok) return Norm::Infeasible;
      continue;
    }
    const bool flip = sgn(r.a.front().second) < 0;
    if (r.a.front().second != 1) {
      Rational scale = abs(r.a.front().second);
      for (auto& e : r.a) e.second /= scale;
      r.b /= scale;
    }
    if (flip) {
      for (auto& e : r.a) e.second = -e.second;
      r.b = -r.b;
    }
    auto [it, inserted] = buckets.try_emplace(std::move(r.a));
    if (inserted) order.push_back(&it->first);
    Side& side = flip ? it->second.lower : it->second.upper;
    bool tighter = !side.present || (flip ? r.b > side.c : r.b < side.c) || (r.b == side.c && r.strict);
    if (side.present && !side.h.empty()) {
      for (std::size_t i = 0; i < side.h.size(); ++i) side.h[i] &= i < r.h.size() ? r.h[i] : 0;
      side.u |= r.u;
    } else if (!side.present) {
      side.h = std::move(r.h);
      side.u = std::move(r.u);
    }
    if (tighter) {
      side.present = true;
      side.c = r.b;
      side.strict = r.strict;
    }
  }
  rows.clear();
  for (const Sparse* key : order) {
    const Bucket& bk = buckets.at(*key);
    if (bk.upper.present && bk.lower.present) {
      int order_lu = cmp(bk.lower.c, bk.upper.c);
      if (order_lu > 0) return Norm::Infeasible;
      if (order_lu == 0 && equalities) {
        if (bk.lower.strict || bk.upper.strict) return Norm::Infeasible;
        History u = bk.upper.u;
        u |= bk.lower.u;
        equalities->push_back(Row{*key, bk.upper.c, false, bk.upper.h, bk.lower.h, std::move(u)});
        continue;
      }
    }
    if (bk.upper.present) rows.push_back(Row{*key, bk.upper.c, bk.upper.strict, bk.upper.h, {}, bk.upper.u});
    if (bk.lower.present) {
      Sparse neg = *key;
      for (auto& e : neg) e.second = -e.second;
      rows.push_back(Row{std::move(neg), -bk.lower.c, bk.lower.strict, bk.lower.h, {}, bk.lower.u});
    }
  }
  return Norm::Ok;
}

// Empty result: Chernikov pruning dropped a row the witness needed, which
// only the bookkeeping around merged rows can cause. The caller retries
// without pruning.
std::optional<LinearVerdict> eliminate(const LinearSystem& s, const FeasibleOptions& opt, bool prune) {
  const std::size_t m = s.cols();
  LinearVerdict out;
  std::vector<Row> rows;
  auto load = [&](const std::vector<std::vector<std::int64_t>>& M, const std::vector<Rational>& rhs, bool strict) {
    for (std::size_t i = 0; i < M.size(); ++i) {
      Row r;
      for (std::size_t j = 0; j < m; ++j)
        if (M[i][j] != 0) r.a.emplace_back(j, Rational(static_cast<long>(M[i][j])));
      r.b = rhs[i];
      r.strict = strict;
      rows.push_back(std::move(r));
    }
  };
  load(s.A, s.b, false);
  load(s.B, s.d, true);
  if (opt.box_rows && opt.box) {
    for (std::size_t j = 0; j < m; ++j) {
      rows.push_back(Row{{{j, Rational(1)}}, *opt.box, false, {}, {}, {}});
      rows.push_back(Row{{{j, Rational(-1)}}, *opt.box, false, {}, {}, {}});
    }
  }
  out.peak_rows = rows.size();
  // Pruning treats the current rows as a fresh system; substitution
  // starts a new one.
  auto seed_histories = [&] {
    if (!prune) return;
    const std::size_t words = (rows.size() + 63) / 64;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].h.assign(words, 0);
      rows[i].h[i / 64] |= std::uint64_t{1} << (i % 64);
      rows[i].u.assign((m + 63) / 64, 0);
      for (const auto& e : rows[i].a) rows[i].u[e.first / 64] |= std::uint64_t{1} << (e.first % 64);
    }
  };
  seed_histories();

  std::size_t eliminated = 0;
  std::vector<Step> steps;
  std::vector<bool> done(m, false);
  for (;;) {
    std::vector<Row> eqs;
    if (normalize_rows(rows, &eqs) == Norm::Infeasible) return out;
    if (!eqs.empty()) {
      // Gaussian elimination over the equalities, sparsest first
      std::stable_sort(eqs.begin(), eqs.end(), [](const Row& x, const Row& y) { return x.a.size() < y.a.size(); });
      for (std::size_t e = 0; e < eqs.size(); ++e) {
        Row eq = std::move(eqs[e]);
        if (eq.a.empty()) {
          if (sgn(eq.b) != 0) return out;
          continue;
        }
        const std::size_t p = eq.a.front().first;
        if (eq.a.front().second != 1) {
          Rational lead = eq.a.front().second;
          if (sgn(lead) < 0) std::swap(eq.h, eq.h_lower);
          for (auto& en : eq.a) en.second /= lead;
          eq.b /= lead;
        }
        auto eliminate = [&](Row& r) {
          const Rational* c = coef_of(r.a, p);
          if (!c) return;
          Rational f = *c;
          r.a = combine(1, r.a, -f, eq.a);
          r.b -= f * eq.b;
          if (prune) {
            r.h |= sgn(f) > 0 ? eq.h_lower : eq.h;
            if (!r.h_lower.empty()) r.h_lower |= sgn(f) > 0 ? eq.h : eq.h_lower;
            r.u |= eq.u;
          }
        };
        for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) eliminate(eqs[e2]);
        for (auto& r : rows) eliminate(r);
        done[p] = true;
        ++eliminated;
        steps.push_back(Step{Step::Subst, p, {std::move(eq)}});
      }
      seed_histories();
      continue;
    }
    // pick the variable with the cheapest elimination
    std::vector<long long> pos(m, 0), neg(m, 0);
    for (const auto& r : rows)
      for (const auto& [j, v] : r.a) ++(sgn(v) > 0 ? pos : neg)[j];
    std::size_t pick = m;
    long long best_cost = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (done[j] || pos[j] + neg[j] == 0) continue;
      long long cost = pos[j] * neg[j] - pos[j] - neg[j];
      if (pick == m || cost < best_cost) {
        pick = j;
        best_cost = cost;
      }
    }
    if (pick == m) break;
    std::vector<Row> up, down, next;
    for (auto& r : rows) {
      const Rational* c = coef_of(r.a, pick);
      if (!c) next.push_back(std::move(r));
      else if (sgn(*c) > 0) up.push_back(std::move(r));
      else down.push_back(std::move(r));
    }
    ++eliminated;
    std::size_t compact_at = std::max<std::size_t>(4096, 2 * next.size());
    if (up.size() * down.size() > 64 * opt.row_cap) throw CapExceeded("Fourier-Motzkin row count", opt.row_cap);
    for (const auto& p : up) {
      Rational fp = 1 / *coef_of(p.a, pick);
      for (const auto& n : down) {
        Rational fn = -1 / *coef_of(n.a, pick);
        Row r;
        r.a = combine(fp, p.a, fn, n.a);
        if (prune) {
          r.h = p.h;
          r.h |= n.h;
          r.u = p.u;
          r.u |= n.u;
          // more ancestors than eliminated columns + 1: implied by the others
          if (popcount(r.h) > 1 + popcount(r.u) - r.a.size()) continue;
        }
        r.b = fp * p.b + fn * n.b;
        r.strict = p.strict || n.strict;
        next.push_back(std::move(r));
        if (next.size() >= compact_at) {
          // parallel rows pile up when few columns are left
          if (normalize_rows(next, nullptr) == Norm::Infeasible) return out;
          if (next.size() > opt.row_cap) throw CapExceeded("Fourier-Motzkin row count", opt.row_cap);
          compact_at = std::max(compact_at, 2 * next.size());
        }
      }
    }
    out.peak_rows = std::max(out.peak_rows, next.size());
    Step st{Step::Elim, pick, {}};
    st.rows.reserve(up.size() + down.size());
    for (auto& r : up) st.rows.push_back(std::move(r));
    for (auto& r : down) st.rows.push_back(std::move(r));
    steps.push_back(std::move(st));
    done[pick] = true;
    rows = std::move(next);
  }

  // back-substitution
  std::vector<std::optional<Rational>> x(m);
  std::vector<bool> stepped(m, false);
  for (const auto& st : steps) stepped[st.var] = true;
  auto choose = [&](const Endpoint& lo, const Endpoint& hi) {
    if (opt.box) {
      Endpoint blo = lo, bhi = hi;
      Rational B = *opt.box;
      if (!blo.value || *blo.value < -B) blo = Endpoint::closed(-B);
      if (!bhi.value || *bhi.value > B) bhi = Endpoint::closed(B);
      if (!interval_empty(blo, bhi)) return simplest_in(blo, bhi);
    }
    return simplest_in(lo, hi);
  };
  for (std::size_t j = 0; j < m; ++j)
    if (!stepped[j]) x[j] = choose(Endpoint::unbounded(), Endpoint::unbounded());
  auto rest = [&](const Row& r, std::size_t skip) {
    Rational acc = 0;
    for (const auto& [j, v] : r.a) {
      if (j == skip) continue;
      if (!x[j]) throw std::logic_error("Fourier-Motzkin: back-substitution order broken");
      acc += v * *x[j];
    }
    return acc;
  };
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const std::size_t v = it->var;
    if (it->kind == Step::Subst) {
      const Row& eq = it->rows.front();
      x[v] = (eq.b - rest(eq, v)) / *coef_of(eq.a, v);
      continue;
    }
    Endpoint lo = Endpoint::unbounded(), hi = Endpoint::unbounded();
    for (const auto& r : it->rows) {
      const Rational& c = *coef_of(r.a, v);
      Rational t = (r.b - rest(r, v)) / c;
      if (sgn(c) > 0) {
        if (!hi.value || t < *hi.value || (t == *hi.value && r.strict)) hi = Endpoint{t, r.strict};
      } else {
        if (!lo.value || t > *lo.value || (t == *lo.value && r.strict)) lo = Endpoint{t, r.strict};
      }
    }
    if (interval_empty(lo, hi)) {
      if (prune) return std::nullopt;
      throw std::logic_error("Fourier-Motzkin: empty interval during back-substitution");
    }
    x[v] = choose(lo, hi);
  }
  out.witness.reserve(m);
  for (auto& v : x) out.witness.push_back(*v);
  if (!satisfies(s, out.witness)) {
    if (prune) return std::nullopt;
    throw std::logic_error("Fourier-Motzkin: witness fails the original system");
  }
  out.feasible = true;
  return out;
}

}  // namespace

LinearVerdict feasible(const LinearSystem& s, const FeasibleOptions& opt) {
  if (auto v = eliminate(s, opt, true)) return *v;
  return *eliminate(s, opt, false);
}

Rational small_witness_bound(std::size_t m, std::int64_t k) {
  Integer base = Integer(static_cast<unsigned long>(m)) * Integer(static_cast<long>(k));
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), m);
  return Rational(r);
}

LinearVerdict feasible_small(const LinearSystem& s, const FeasibleOptions& opt) {
  FeasibleOptions o = opt;
  o.box = small_witness_bound(s.cols(), s.entry_bound());
  o.box_rows = true;
  LinearVerdict v = feasible(s, o);
  if (v.feasible || s.B.empty()) return v;
  o.box_rows = false;
  return feasible(s, o);
}

WitnessBox witness_box(std::size_t N, std::size_t c) {
  if (N == 0 || c == 0) throw Error("witness_box: N and c must be positive");
  unsigned long cn = static_cast<unsigned long>(c * N);
  Integer x;
  Integer base = Integer(3UL * cn);
  mpz_pow_ui(x.get_mpz_t(), base.get_mpz_t(), cn);
  WitnessBox w;
  w.M = ceil_log2(x);
  w.bound = pow2(static_cast<long>(w.M));
  return w;
}

bool satisfies(const LinearSystem& s, const std::vector<Rational>& x) {
  if (x.size() != s.cols()) return false;
  auto dot = [&](const std::vector<std::int64_t>& row) {
    Rational acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) acc += Rational(static_cast<long>(row[j])) * x[j];
    return acc;
  };
  for (std::size_t i = 0; i < s.A.size(); ++i)
    if (dot(s.A[i]) > s.b[i]) return false;
  for (std::size_t i = 0; i < s.B.size(); ++i)
    if (!(dot(s.B[i]) < s.d[i])) return false;
  return true;
}

LinearSystem perturb_strict(const LinearSystem& s, const std::vector<Rational>& solution) {
  if (!satisfies(s, solution)) throw Error("perturb_strict: solution does not satisfy the system");
  LinearSystem out;
  out.columns = s.columns;
  out.A = s.A;
  out.b = s.b;
  for (std::size_t i = 0; i < s.B.size(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < s.cols(); ++j) lhs += Rational(static_cast<long>(s.B[i][j])) * solution[j];
    Rational dp = s.d[i] - 1;
    if (lhs > dp) dp = lhs;
    out.A.push_back(s.B[i]);
    out.b.push_back(dp);
  }
  return out;
}

std::string dump_system(const LinearSystem& s) {
  std::ostringstream os;
  os << "columns:";
  for (const auto& c : s.columns) os << ' ' << c;
  os << '\n';
  auto emit = [&](const std::vector<std::int64_t>& row, const char* rel, const Rational& rhs) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << ' ' << rel << ' ' << to_string(rhs) << '\n';
  };
  for (std::size_t i = 0; i < s.A.size(); ++i) emit(s.A[i], "<=", s.b[i]);
  for (std::size_t i = 0; i < s.B.size(); ++i) emit(s.B[i], "<", s.d[i]);
  return os.str();
}

}  // namespace luk
