#include "luk/decide.hpp"
#include "luk/errors.hpp"
#include "luk/generate.hpp"
#include "luk/parser.hpp"
#include "luk/reduction.hpp"
#include "luk/semantics.hpp"

#include <gtest/gtest.h>

using namespace luk;

namespace {

Formula pab(const char* s) { return parse_formula(s, Signature::pAb); }
Formula mv(const char* s) { return parse_formula(s, Signature::MV); }

// exhaustive search over {i/den}^vars
bool grid_sat(const Formula& f, Algebra alg, long lo, long hi, long den) {
  std::vector<std::string> vars = variables(f);
  std::vector<long> idx(vars.size(), lo * den);
  while (true) {
    Assignment v;
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = make_rational(idx[i], den);
    if (eval_formula(f, v, alg)) return true;
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == hi * den) idx[i++] = lo * den;
    if (i == idx.size()) return false;
    ++idx[i];
  }
}

}  // namespace

TEST(DecidePAb, Examples) {
  Verdict a = decide_pAb(pab("x + x = -1"));
  ASSERT_TRUE(a.sat());
  EXPECT_EQ(a.witness.at("x"), make_rational(-1, 2));
  EXPECT_FALSE(decide_pAb(pab("x \\/ 0 = -1")).sat());
  EXPECT_FALSE(decide_pAb(pab("x < y & y < x")).sat());
  EXPECT_FALSE(decide_pAb(pab("!(x = 0) & x + x = x")).sat());
  Verdict b = decide_pAb(pab("-1 < x & x < 0 & y = x + x"));
  ASSERT_TRUE(b.sat());
  EXPECT_TRUE(check_witness(pab("-1 < x & x < 0 & y = x + x"), b.witness, Algebra::Rminus1));
}

TEST(DecideMV, Examples) {
  Verdict a = decide_MV(mv("z = ~z"));
  ASSERT_TRUE(a.sat());
  EXPECT_EQ(a.witness.at("z"), make_rational(1, 2));
  EXPECT_FALSE(decide_MV(mv("x (*) x = 1 & x = ~x")).sat());
  EXPECT_TRUE(decide_MV(mv("x <= ~x")).sat());
  EXPECT_FALSE(decide_MV(mv("1 <= 0")).sat());
  EXPECT_TRUE(decide_MV(parse_formula("x = 1/2 (+) x", Signature::MVHalf)).sat());
}

TEST(Decide, Dispatch) {
  EXPECT_TRUE(decide(pab("x = -1")).sat());
  EXPECT_FALSE(decide(mv("x (+) x = 0 & x = 1")).sat());
  EXPECT_THROW(decide_MV(pab("x = -1")), Error);
}

TEST(Decide, WitnessCoversEveryVariable) {
  Verdict v = decide_pAb(pab("x = y | z < 0"));
  ASSERT_TRUE(v.sat());
  EXPECT_EQ(v.witness.size(), 3u);
}

TEST(CheckWitness, Gadget) {
  ReductionParams p{3, 1, 20};
  GadgetVars g = gadget_vars(p, true);
  Formula f = Formula::conj(Signature::MV, gadget_atoms(p, g));
  Assignment v = gadget_values(p);
  EXPECT_TRUE(check_witness(f, v, Algebra::StdMV));
  v["q"] += make_rational(1, 1024);
  EXPECT_FALSE(check_witness(f, v, Algebra::StdMV));
  EXPECT_THROW(check_witness(f, {}, Algebra::StdMV), EvalError);
}

TEST(Decide, LongChainByPropagation) {
  ReductionParams p{511, 0, 20};
  GadgetVars g = gadget_vars(p, false);
  ASSERT_EQ(g.z.size(), 512u);
  Formula f = Formula::conj(Signature::MV, gadget_atoms(p, g));
  Verdict v = decide_MV(f);
  ASSERT_TRUE(v.sat());
  EXPECT_EQ(v.stats.nodes, 1u);
  Assignment want = gadget_values(p);
  for (const auto& z : g.z) EXPECT_EQ(v.witness.at(z), want.at(z)) << z;
  EXPECT_EQ(v.witness.at("q"), want.at("q"));
  EXPECT_EQ(v.witness.at("z512"), 1 / pow2(512));
}

TEST(Decide, SeedDoesNotChangeVerdicts) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng = instance_rng(13, i);
    FormulaShape shape;
    shape.term = TermShape{Signature::MV, {"x", "y"}, 3};
    Formula f = random_formula(rng, shape);
    DecideOptions o;
    o.seed = 7;
    Verdict a = decide_MV(f), b = decide_MV(f, o), c = decide_MV(f, o);
    EXPECT_EQ(a.sat(), b.sat()) << print_formula(f);
    EXPECT_EQ(b.witness, c.witness);
    if (b.sat()) EXPECT_TRUE(check_witness(f, b.witness, Algebra::StdMV));
  }
}

TEST(Decide, Caps) {
  Formula f = pab("(x = 0 | x = -1) & (y = 0 | y = -1) & (z = 0 | z = -1)");
  DecideOptions o;
  o.dnf_cap = 4;
  EXPECT_THROW(decide_pAb(f, o), CapExceeded);
  Formula g = pab("(x /\\ y) \\/ (y /\\ z) = (x \\/ z) + -1 & x < y & y < z");
  DecideOptions s;
  s.split_cap = 1;
  s.propagate = false;
  EXPECT_THROW(decide_pAb(g, s), CapExceeded);
  EXPECT_NO_THROW(decide_pAb(g));
}

TEST(Decide, ExtraRows) {
  DecideOptions o;
  o.extra_rows.push_back(LinearRow{{{"x", 1}}, false, make_rational(-3)});
  Verdict v = decide_pAb(pab("x + x = x + x"), o);
  ASSERT_TRUE(v.sat());
  EXPECT_LE(v.witness.at("x"), -3);
  o.extra_rows.push_back(LinearRow{{{"x", -1}}, false, make_rational(2)});
  EXPECT_FALSE(decide_pAb(pab("x = x"), o).sat());
}

TEST(Decide, AgreesWithGridMV) {
  std::size_t sat = 0;
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng = instance_rng(17, i);
    FormulaShape shape;
    shape.term = TermShape{Signature::MV, {"x", "y"}, 2};
    shape.max_atoms = 2;
    Formula f = random_formula(rng, shape);
    Verdict v = decide_MV(f);
    bool g = grid_sat(f, Algebra::StdMV, 0, 1, 12);
    if (g) EXPECT_TRUE(v.sat()) << print_formula(f);
    if (v.sat()) {
      ++sat;
      EXPECT_TRUE(check_witness(f, v.witness, Algebra::StdMV)) << print_formula(f);
    }
  }
  EXPECT_GT(sat, 30u);
}

TEST(Decide, AgreesWithGridPAb) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng = instance_rng(19, i);
    FormulaShape shape;
    shape.term = TermShape{Signature::pAb, {"x", "y"}, 2};
    shape.max_atoms = 2;
    shape.relations = {Rel::Eq, Rel::Le, Rel::Lt};
    Formula f = random_formula(rng, shape);
    Verdict v = decide_pAb(f);
    if (grid_sat(f, Algebra::Rminus1, -3, 3, 4)) EXPECT_TRUE(v.sat()) << print_formula(f);
    if (v.sat()) EXPECT_TRUE(check_witness(f, v.witness, Algebra::Rminus1)) << print_formula(f);
  }
}
