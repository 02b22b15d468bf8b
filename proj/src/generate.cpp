#include "luk/generate.hpp"

#include "luk/errors.hpp"

#include <algorithm>

namespace luk {

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x4c554bu};
  return Rng(seq);
}

namespace {

bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::vector<Op> constants_of(Signature sig) {
  switch (sig) {
    case Signature::Ab: return {Op::Zero};
    case Signature::pAb: return {Op::Zero, Op::MinusOne};
    case Signature::MV: return {Op::Zero, Op::One};
    case Signature::MVHalf: return {Op::Zero, Op::One, Op::Half};
  }
  return {};
}

std::vector<Op> operations_of(Signature sig) {
  if (sig == Signature::Ab || sig == Signature::pAb) return {Op::Plus, Op::Plus, Op::Neg, Op::Meet, Op::Join};
  return {Op::OPlus, Op::OTimes, Op::Implies, Op::Not, Op::Meet, Op::Join};
}

Term leaf(Rng& rng, const TermShape& s) {
  if (s.vars.empty() || chance(rng, s.constant_bias)) return Term::constant(pick(rng, constants_of(s.sig)));
  return Term::var(pick(rng, s.vars));
}

Term grow(Rng& rng, const TermShape& s, std::size_t depth) {
  if (depth == 0 || chance(rng, s.leaf_bias)) return leaf(rng, s);
  Op op = pick(rng, operations_of(s.sig));
  if (arity(op) == 1) {
    Term c = grow(rng, s, depth - 1);
    if (c.op() == op) return c;  // keep it reduced
    return Term::unary(op, c);
  }
  Term l = grow(rng, s, depth - 1);
  return Term::binary(op, l, grow(rng, s, depth - 1));
}

Formula skeleton(Rng& rng, const FormulaShape& s, std::size_t atoms) {
  Formula f = [&] {
    if (atoms <= 1) {
      Term l = random_term(rng, s.term);
      Term r = random_term(rng, s.term);
      return Formula::atom(s.term.sig, l, pick(rng, s.relations), r);
    }
    std::size_t left = std::uniform_int_distribution<std::size_t>(1, atoms - 1)(rng);
    Formula a = skeleton(rng, s, left);
    Formula b = skeleton(rng, s, atoms - left);
    return chance(rng, 0.6) ? Formula::band(a, b) : Formula::bor(a, b);
  }();
  if (f.kind() != Formula::Kind::Not && chance(rng, s.negation_bias)) return Formula::bnot(f);
  return f;
}

}  // namespace

Term random_term(Rng& rng, const TermShape& shape) { return grow(rng, shape, shape.max_depth); }

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(shape.max_atoms, 1))(rng);
  return skeleton(rng, shape, n);
}

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den) {
  if (hi < lo) throw Error("random_rational: empty range");
  for (;;) {
    long den = std::uniform_int_distribution<long>(1, std::max(1L, max_den))(rng);
    Integer a = ceil(lo * den), b = floor(hi * den);
    if (a > b) continue;
    Integer span = b - a + 1;
    Integer off;
    if (span.fits_slong_p()) {
      off = std::uniform_int_distribution<long>(0, span.get_si() - 1)(rng);
    } else {
      gmp_randclass gen(gmp_randinit_default);
      gen.seed(static_cast<unsigned long>(rng()));
      off = gen.get_z_range(span);
    }
    Rational q(a + off, den);
    q.canonicalize();
    return q;
  }
}

LinearSystem random_feasible_system(Rng& rng, std::size_t m, std::int64_t k, std::size_t rows) {
  if (m == 0 || k <= 0) throw Error("random_feasible_system: need m >= 1 and k >= 1");
  std::uniform_int_distribution<std::int64_t> coef(-k, k), unit(-1, 1), slack(0, 2);
  std::vector<std::int64_t> x0(m);
  for (auto& v : x0) v = unit(rng);
  LinearSystem s;
  for (std::size_t j = 0; j < m; ++j) s.columns.push_back("x" + std::to_string(j + 1));
  while (s.rows() < rows) {
    std::vector<std::int64_t> a(m);
    std::int64_t dot = 0;
    for (std::size_t j = 0; j < m; ++j) {
      a[j] = coef(rng);
      dot += a[j] * x0[j];
    }
    bool strict = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    std::int64_t rhs = dot + slack(rng) + (strict ? 1 : 0);
    if (rhs > k || rhs < -k) continue;
    if (strict) {
      s.B.push_back(std::move(a));
      s.d.emplace_back(static_cast<long>(rhs));
    } else {
      s.A.push_back(std::move(a));
      s.b.emplace_back(static_cast<long>(rhs));
    }
  }
  return s;
}

}  // namespace luk
