#include "luk/errors.hpp"
#include "luk/generate.hpp"
#include "luk/parser.hpp"

#include <gtest/gtest.h>

using namespace luk;

TEST(Parser, Atoms) {
  Formula f = parse_formula("(x + y) = 0", Signature::Ab);
  EXPECT_EQ(f, Formula::atom(Signature::Ab, Term::var("x") + Term::var("y"), Rel::Eq, Term::zero()));

  Formula g = parse_formula("!(x <= -1) | (x = 0)", Signature::pAb);
  Formula want = Formula::bor(Formula::bnot(Formula::atom(Signature::pAb, Term::var("x"), Rel::Le, Term::minus_one())),
                              Formula::atom(Signature::pAb, Term::var("x"), Rel::Eq, Term::zero()));
  EXPECT_EQ(g, want);
}

TEST(Parser, SignatureViolation) {
  EXPECT_THROW(parse_formula("x (+) y = 0", Signature::Ab), SignatureError);
  EXPECT_THROW(parse_formula("x = 1/2", Signature::MV), SignatureError);
  EXPECT_THROW(parse_formula("x + y = 0", Signature::MV), SignatureError);
  EXPECT_NO_THROW(parse_formula("x = 1/2", Signature::MVHalf));
}

TEST(Parser, OnePrecedenceLevelLeftAssoc) {
  Term t = parse_term("x + y /\\ z", Signature::Ab);
  EXPECT_EQ(t, meet(Term::var("x") + Term::var("y"), Term::var("z")));
  EXPECT_EQ(parse_term("-x + y", Signature::Ab), -Term::var("x") + Term::var("y"));
}

TEST(Parser, MinusOneIsAConstant) {
  EXPECT_EQ(parse_term("-1", Signature::pAb), Term::minus_one());
  EXPECT_EQ(parse_term("-(-1)", Signature::pAb), -Term::minus_one());
  EXPECT_EQ(parse_term("--x", Signature::Ab), Term::var("x"));
}

TEST(Parser, SyntaxErrorCarriesLocation) {
  try {
    parse_formula("x = (y + ", Signature::Ab);
    FAIL() << "no error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GE(e.column(), 9u);
  }
  EXPECT_THROW(parse_formula("x + y", Signature::Ab), SyntaxError);
  EXPECT_THROW(parse_formula("x = y )", Signature::Ab), SyntaxError);
  EXPECT_THROW(parse_formula("x == y", Signature::Ab), SyntaxError);
}

TEST(Printer, Basic) {
  EXPECT_EQ(print_formula(parse_formula("x = 0", Signature::Ab)), "x = 0");
  EXPECT_EQ(print_formula(parse_formula("~~x = y", Signature::MV)), "x = y");
  EXPECT_EQ(print_formula(parse_formula("--x = y", Signature::Ab)), "x = y");
  std::string s = print_formula(parse_formula("(a = b | c = d) | e = f", Signature::Ab));
  EXPECT_EQ(s, "((a = b) | (c = d)) | (e = f)");
}

TEST(Printer, RoundTripRandom) {
  for (auto sig : {Signature::Ab, Signature::pAb, Signature::MV, Signature::MVHalf}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng = instance_rng(11, i);
      FormulaShape shape;
      shape.term = TermShape{sig, {"x", "y", "z"}, 3};
      shape.max_atoms = 4;
      shape.relations = {Rel::Eq, Rel::Le, Rel::Lt};
      if (sig == Signature::MV || sig == Signature::MVHalf) shape.relations = {Rel::Eq, Rel::Le};
      Formula f = random_formula(rng, shape);
      std::string text = print_formula(f);
      EXPECT_EQ(parse_formula(text, sig), f) << text;
      EXPECT_EQ(text.find("--"), std::string::npos) << text;
      EXPECT_EQ(text.find("~~"), std::string::npos) << text;
    }
  }
}

TEST(FormulaFile, ConjunctionOfLines) {
  FormulaFile file = parse_formula_file("#lang pab\n# a comment\nx + x = -1\n\nx <= 0  # trailing\n");
  EXPECT_EQ(file.sig, Signature::pAb);
  ASSERT_EQ(file.formulas.size(), 2u);
  EXPECT_EQ(file.conjunction(), parse_formula("x + x = -1 & x <= 0", Signature::pAb));
  EXPECT_THROW(parse_formula_file("x = 0\n"), Error);
  EXPECT_THROW(parse_formula_file("#lang nope\nx = 0\n"), Error);
}

TEST(FormulaFile, SyntaxErrorLineNumber) {
  try {
    parse_formula_file("#lang ab\nx = 0\nx = = y\n");
    FAIL() << "no error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(FormulaFile, FormatSplitsConjuncts) {
  Formula f = parse_formula("x = 0 & (y = 1 | y = 0)", Signature::MV);
  std::string text = format_formula_file(f, {"note=1"});
  EXPECT_EQ(text, "#lang mv\n# note=1\nx = 0\n(y = 1) | (y = 0)\n");
  EXPECT_EQ(parse_formula_file(text).conjunction(), f);
}

TEST(Assignment, RoundTrip) {
  Assignment v = parse_assignment("# w\nx = -1/2\ny=3\n");
  EXPECT_EQ(v.at("x"), make_rational(-1, 2));
  EXPECT_EQ(v.at("y"), 3);
  EXPECT_EQ(parse_assignment(format_assignment(v)), v);
  EXPECT_THROW(parse_assignment("x = \n"), Error);
}
