#include "luk/decide.hpp"
#include "luk/errors.hpp"
#include "luk/generate.hpp"
#include "luk/linear.hpp"
#include "luk/parser.hpp"
#include "luk/reduction.hpp"
#include "luk/semantics.hpp"
#include "luk/transform.hpp"

#include <gtest/gtest.h>

using namespace luk;

namespace {

Term ab(const char* s) { return parse_term(s, Signature::Ab); }
Term mv(const char* s) { return parse_term(s, Signature::MV); }
Formula fpab(const char* s) { return parse_formula(s, Signature::pAb); }
Formula fmv(const char* s) { return parse_formula(s, Signature::MV); }

}  // namespace

TEST(RMap, Values) {
  ReductionParams p{2, 1, 20};
  EXPECT_EQ(r_map(p, 0), make_rational(1, 2));
  EXPECT_EQ(r_map(p, 4), make_rational(3, 4));
  EXPECT_EQ(r_map(p, -4), make_rational(1, 4));
  EXPECT_EQ(r_inverse(p, make_rational(3, 4)), 4);
  for (long a = -9; a <= 9; ++a) EXPECT_EQ(r_inverse(p, r_map(p, make_rational(a, 3))), make_rational(a, 3));
}

TEST(Tau, Clauses) {
  EXPECT_EQ(print_term(tau(ab("x + y"))), "((x (+) y) (*) (1/2 (+) (x (*) y)))");
  EXPECT_EQ(print_term(tau(ab("-x"))), "~x");
  EXPECT_EQ(print_term(tau(Term::zero())), "1/2");
  EXPECT_THROW(tau(Term::minus_one()), ReductionError);
  Term deep = Term::var("x");
  for (std::size_t i = 0; i <= kTauDepthCap; ++i) deep = deep + Term::var("y");
  EXPECT_THROW(tau(deep), ReductionError);
  EXPECT_EQ(print_formula(tau_prime(parse_formula("x + y = 0", Signature::Ab))),
            "((x (+) y) (*) (1/2 (+) (x (*) y))) = 1/2");
}

TEST(Tau, CommutesWithHalving) {
  // tau(t) at x/2 + 1/2 equals t(x)/2 + 1/2 once all values stay in [-1, 1]
  ReductionParams half{0, 0, 20};
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = instance_rng(5, i);
    Term t = random_term(rng, TermShape{Signature::Ab, {"x", "y"}, 2});
    Assignment v{{"x", random_rational(rng, make_rational(-1, 4), make_rational(1, 4), 8)},
                 {"y", random_rational(rng, make_rational(-1, 4), make_rational(1, 4), 8)}};
    Rational a = eval_term(t, v, Algebra::R);
    Assignment w;
    for (const auto& [n, x] : v) w[n] = r_map(half, x);
    EXPECT_EQ(eval_term(tau(t), w, Algebra::StdMVHalf), r_map(half, a)) << print_term(t);
  }
}

TEST(TauQ, Clauses) {
  EXPECT_EQ(print_term(tau_q(Term::minus_one(), "q")), "q");
  EXPECT_EQ(print_term(tau_q(Term::var("x"), "q")), "((x \\/ q) /\\ 1/2)");
}

TEST(PushNegations, OnlyOnVariables) {
  EXPECT_EQ(push_negations(mv("~(x -> y)")), mv("x (*) ~y"));
  EXPECT_EQ(push_negations(mv("~0")), Term::one());
  EXPECT_EQ(push_negations(mv("~(x (+) ~y)")), mv("~x (*) y"));
  EXPECT_EQ(push_negations(mv("~(x /\\ y)")), mv("~x \\/ ~y"));
}

TEST(Delta, Clauses) {
  EXPECT_EQ(print_term(delta(mv("x -> y"))), "((((y \\/ -1) /\\ 0) + -((x \\/ -1) /\\ 0)) /\\ 0)");
  EXPECT_EQ(print_term(delta(Term::zero())), "-1");
  EXPECT_EQ(print_term(delta(mv("~x"))), "(-((x \\/ -1) /\\ 0) + -1)");
  EXPECT_EQ(print_term(delta(mv("x (+) y"))), "((((x \\/ -1) /\\ 0) + (((y \\/ -1) /\\ 0) + -(-1))) /\\ 0)");
  EXPECT_EQ(print_term(delta(mv("x (*) y"))), "((((x \\/ -1) /\\ 0) + ((y \\/ -1) /\\ 0)) \\/ -1)");
}

TEST(Delta, ShiftsByMinusOne) {
  // delta(t)(x - 1) = t(x) - 1 on [0, 1]
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = instance_rng(6, i);
    Term t = random_term(rng, TermShape{Signature::MV, {"x", "y"}, 3});
    Assignment v{{"x", random_rational(rng, 0, 1, 6)}, {"y", random_rational(rng, 0, 1, 6)}};
    Assignment w;
    for (const auto& [n, x] : v) w[n] = x - 1;
    EXPECT_EQ(eval_term(delta(push_negations(t)), w, Algebra::Rminus1), eval_term(t, v, Algebra::StdMV) - 1)
        << print_term(t);
  }
}

TEST(Sigma, Clauses) {
  EXPECT_EQ(print_term(sigma_q(mv("x -> y"), "q")),
            "(((((x \\/ q) /\\ 1/2) -> ((y \\/ q) /\\ 1/2)) (*) 1/2) /\\ 1/2)");
  EXPECT_EQ(print_term(sigma_q(Term::one(), "q")), "1/2");
  EXPECT_EQ(print_term(sigma_q(Term::var("x"), "q")), "((x \\/ q) /\\ 1/2)");
  EXPECT_EQ(print_term(sigma_q(mv("x (*) y"), "q")),
            "(((((x \\/ q) /\\ 1/2) (+) ((y \\/ q) /\\ 1/2)) (*) 1/2) \\/ q)");
}

TEST(Gadget, ValuesSolveTheEquations) {
  for (std::size_t M = 0; M < 5; ++M)
    for (std::size_t k = 0; k < 4; ++k) {
      ReductionParams p{M, k, 20};
      GadgetVars g = gadget_vars(p, true);
      EXPECT_EQ(g.z.size(), M + k + 1);
      Assignment v = gadget_values(p);
      EXPECT_EQ(v.at("z1"), make_rational(1, 2));
      EXPECT_EQ(v.at("q"), make_rational(1, 2) - 1 / pow2(static_cast<long>(M + k + 1)));
      EXPECT_EQ(v.at("r"), make_rational(1, 2) - 1 / pow2(static_cast<long>(k + 1)));
      for (const auto& a : gadget_atoms(p, g)) EXPECT_TRUE(eval_atom(a, v, Algebra::StdMV)) << print_atom(a);
    }
  Assignment v = gadget_values({1, 0, 20});
  EXPECT_EQ(v.at("q"), make_rational(1, 4));
  EXPECT_EQ(v.at("r"), 0);
}

TEST(Zeta, MinusOneBecomesQ) {
  TseitinResult t = tseitin(fpab("x = -1"));
  EXPECT_EQ(print_formula(t.formula), "(x = t0) & (t0 = -1)");
  GadgetVars g = gadget_vars({1, 0, 20}, true);
  EXPECT_EQ(print_formula(zeta_pAb(t.formula, g)), "(x = t0) & (t0 = q)");
  Formula z = zeta_MV(fmv("x = 1"), g);
  EXPECT_EQ(print_formula(z), "((x \\/ q) /\\ z1) = z1");
}

TEST(BuildSpAb, SmallInstance) {
  Translation t = build_S_pAb(fpab("x = -1"), {1, 0, 20});
  std::string text = format_formula_file(t.output, {});
  EXPECT_EQ(text,
            "#lang mv\nx = t0\nt0 = q\nz1 = ~z1\nr = ~(z1 (+) z1)\nq = ~(z1 (+) z2)\n(z2 (+) z2) = z1\nr <= x\n"
            "x <= ~r\n");
  EXPECT_EQ(t.gadget.z.size(), 2u);
  EXPECT_TRUE(t.renaming.empty());
  EXPECT_NE(report_text(t).find("gadget_q=q"), std::string::npos);
}

TEST(BuildSpAb, ChainLengthAndDepthGuard) {
  Formula f = fpab("(x + y) + -1 = 0");
  Translation t = build_S_pAb(f, {3, 2, 20});
  EXPECT_EQ(t.gadget.z.size(), 6u);
  EXPECT_EQ(t.params.k, 2u);
  EXPECT_THROW(build_S_pAb(f, {3, 1, 20}), ReductionError);
}

TEST(BuildSpAb, RenamesReservedNames) {
  Translation t = build_S_pAb(fpab("q + z1 = 0"), {1, 1, 20});
  ASSERT_EQ(t.renaming.size(), 2u);
  EXPECT_EQ(t.renaming[0], (std::pair<std::string, std::string>{"q", "q_0"}));
  EXPECT_EQ(t.renaming[1], (std::pair<std::string, std::string>{"z1", "z1_0"}));
  std::string r = report_text(t);
  EXPECT_NE(r.find("renamed=q->q_0"), std::string::npos) << r;
}

TEST(BuildSpAb, WitnessRecovery) {
  for (const char* s : {"x + x = -1", "x < 0 & -1 < x", "(x /\\ y) + -1 = -y"}) {
    Formula f = fpab(s);
    Translation t = build_S_pAb(f, default_params(f, 1));
    Verdict v = decide_MV(t.output);
    ASSERT_TRUE(v.sat()) << s;
    Assignment w = recover_witness(t, v.witness);
    EXPECT_TRUE(check_witness(f, w, Algebra::Rminus1)) << s;
  }
  Formula bad = fpab("(x \\/ 0) = -1");
  EXPECT_FALSE(decide_MV(build_S_pAb(bad, default_params(bad, 1)).output).sat());
}

TEST(BuildSMV, Satisfiability) {
  Formula f = fmv("x = ~x");
  Translation t = build_S_MV(f, default_params(f, 1));
  Verdict v = decide_MV(t.output);
  ASSERT_TRUE(v.sat());
  EXPECT_TRUE(check_witness(f, recover_witness(t, v.witness), Algebra::StdMV));

  Formula g = fmv("0 = 1");
  EXPECT_FALSE(decide_MV(build_S_MV(g, default_params(g, 1)).output).sat());
}

TEST(BuildSMV, SizeGuard) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = instance_rng(9, i);
    FormulaShape shape;
    shape.term = TermShape{Signature::MV, {"x", "y", "z"}, 3};
    Formula f = random_formula(rng, shape);
    ReductionParams p = default_params(f);
    Translation t = build_S_MV(f, p);
    EXPECT_LE(t.output_size, kSizeGuard * (p.M + p.k + formula_size(f))) << print_formula(f);
    EXPECT_LE(t.size_ratio(), static_cast<double>(kSizeGuard));
  }
}

TEST(Params, Defaults) {
  Formula f = fpab("(x + y) /\\ 0 = -1");
  ReductionParams p = default_params(f, 1);
  EXPECT_EQ(p.k, 2u);
  EXPECT_EQ(p.M, witness_box(formula_size(f), 1).M);
}
