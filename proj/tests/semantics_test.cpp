#include "luk/errors.hpp"
#include "luk/parser.hpp"
#include "luk/semantics.hpp"

#include <gtest/gtest.h>

using namespace luk;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Rational val(const char* term, Signature sig, Assignment v, Algebra a) { return eval_term(parse_term(term, sig), v, a); }

bool holds(const char* f, Signature sig, Assignment v, Algebra a) { return eval_formula(parse_formula(f, sig), v, a); }

}  // namespace

TEST(Semantics, MVOperations) {
  EXPECT_EQ(mv_otimes(q(7, 10), q(3, 5)), q(3, 10));
  EXPECT_EQ(mv_oplus(q(7, 10), q(3, 5)), 1);
  EXPECT_EQ(mv_implies(q(3, 4), q(1, 4)), q(1, 2));
  EXPECT_EQ(mv_implies(q(1, 4), q(3, 4)), 1);
  EXPECT_EQ(val("x (*) y", Signature::MV, {{"x", q(7, 10)}, {"y", q(3, 5)}}, Algebra::StdMV), q(3, 10));
  EXPECT_EQ(val("~x", Signature::MV, {{"x", q(1, 4)}}, Algebra::StdMV), q(3, 4));
  EXPECT_EQ(val("1/2 (+) 1/2", Signature::MVHalf, {}, Algebra::StdMVHalf), 1);
}

TEST(Semantics, PointedGroup) {
  EXPECT_EQ(val("(x \\/ -1) /\\ 0", Signature::pAb, {{"x", -3}}, Algebra::Rminus1), -1);
  EXPECT_EQ(val("-(x + y)", Signature::Ab, {{"x", q(1, 3)}, {"y", 2}}, Algebra::R), q(-7, 3));
}

TEST(Semantics, Formulas) {
  EXPECT_TRUE(holds("x = ~x", Signature::MV, {{"x", q(1, 2)}}, Algebra::StdMV));
  EXPECT_TRUE(holds("x + x = -1", Signature::pAb, {{"x", q(-1, 2)}}, Algebra::Rminus1));
  EXPECT_TRUE(holds("!(x < 0)", Signature::pAb, {{"x", 0}}, Algebra::Rminus1));
  EXPECT_FALSE(holds("x < 0 | 0 < x", Signature::pAb, {{"x", 0}}, Algebra::Rminus1));
}

TEST(Semantics, Designated) {
  EXPECT_TRUE(is_designated(Term::one(), {{"x", q(1, 5)}}, Algebra::StdMV));
  EXPECT_TRUE(is_designated(Term::var("x"), {{"x", 0}}, Algebra::Rminus1));
  EXPECT_FALSE(is_designated(Term::var("x"), {{"x", q(-1, 3)}}, Algebra::Rminus1));
  EXPECT_FALSE(is_designated(Term::var("x"), {{"x", q(9, 10)}}, Algebra::StdMV));
}

TEST(Semantics, Errors) {
  EXPECT_THROW(val("x", Signature::MV, {}, Algebra::StdMV), EvalError);
  EXPECT_THROW(val("x", Signature::MV, {{"x", q(3, 2)}}, Algebra::StdMV), EvalError);
  EXPECT_THROW(val("x", Signature::MV, {{"x", -1}}, Algebra::StdMV), EvalError);
  EXPECT_THROW(val("1/2", Signature::MVHalf, {}, Algebra::StdMV), EvalError);
  EXPECT_THROW(val("-1", Signature::pAb, {}, Algebra::R), EvalError);
  EXPECT_THROW(val("x (+) x", Signature::MV, {{"x", 0}}, Algebra::R), EvalError);
}

TEST(Semantics, AlgebraLanguages) {
  EXPECT_EQ(algebra_for(Signature::pAb), Algebra::Rminus1);
  EXPECT_EQ(algebra_for(Signature::MVHalf), Algebra::StdMVHalf);
  EXPECT_EQ(language_of(Algebra::R), Signature::Ab);
  EXPECT_TRUE(is_mv(Algebra::StdMV));
  EXPECT_FALSE(is_mv(Algebra::Rminus1));
}
