#include "luk/decide.hpp"
#include "luk/errors.hpp"
#include "luk/generate.hpp"
#include "luk/parser.hpp"
#include "luk/semantics.hpp"
#include "luk/transform.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace luk;

namespace {

Formula pab(const char* s) { return parse_formula(s, Signature::pAb); }

// every atom has at most one operation, on the rhs, over variables
bool flat(const Formula& f) {
  bool ok = true;
  for_each_atom(f, [&](const Atom& a) {
    if (!a.lhs.is_var()) ok = false;
    if (a.rhs.is_var()) return;
    for (int i = 0; i < arity(a.rhs.op()); ++i)
      if (!a.rhs.child(i).is_var()) ok = false;
  });
  return ok;
}

}  // namespace

TEST(Tseitin, SingleAtom) {
  TseitinResult t = tseitin(pab("(x + y) = 0"));
  EXPECT_EQ(atom_count(t.formula), 3u);
  EXPECT_EQ(t.defmap.size(), 2u);
  EXPECT_TRUE(flat(t.formula));
  // x + y = 0 and its variant are equisatisfiable
  EXPECT_EQ(decide_pAb(pab("(x + y) = 0")).sat(), decide_pAb(t.formula).sat());
}

TEST(Tseitin, VariablesStay) {
  Formula f = pab("x = y");
  TseitinResult t = tseitin(f);
  EXPECT_EQ(t.formula, f);
  EXPECT_TRUE(t.defmap.empty());
}

TEST(Tseitin, SharedAcrossDisjuncts) {
  TseitinResult t = tseitin(pab("(x + y = z) | (x + y = 0)"));
  std::size_t sums = 0;
  for (const auto& [name, term] : t.defmap)
    if (term == Term::var("x") + Term::var("y")) ++sums;
  EXPECT_EQ(sums, 1u);
}

TEST(Tseitin, DefmapBoundAndExtension) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = instance_rng(3, i);
    FormulaShape shape;
    shape.term = TermShape{Signature::pAb, {"x", "y"}, 3};
    shape.relations = {Rel::Eq, Rel::Le, Rel::Lt};
    Formula f = random_formula(rng, shape);
    TseitinResult t = tseitin(f);
    EXPECT_LE(t.defmap.size(), 3 * formula_size(f));
    EXPECT_TRUE(flat(t.formula)) << print_formula(t.formula);
    std::set<std::string> names;
    for (const auto& [n, term] : t.defmap) EXPECT_TRUE(names.insert(n).second);
    // the extension by subterm values satisfies the definitions, so the
    // variant holds exactly where f does
    Assignment v{{"x", random_rational(rng, -2, 2, 4)}, {"y", random_rational(rng, -2, 2, 4)}};
    Assignment ext = extend_tseitin(v, t.defmap, [](const Term& term, const Assignment& a) {
      return eval_term(term, a, Algebra::Rminus1);
    });
    EXPECT_EQ(eval_formula(f, v, Algebra::Rminus1), eval_formula(t.formula, ext, Algebra::Rminus1))
        << print_formula(f);
  }
}

TEST(Tseitin, FreshNamesAvoidTaken) {
  TseitinNamer namer({"t0", "t1"});
  bool fresh = false;
  EXPECT_EQ(namer.name_for(Term::var("x") + Term::var("y"), fresh), "t2");
  EXPECT_TRUE(fresh);
  EXPECT_EQ(namer.name_for(Term::var("x") + Term::var("y"), fresh), "t2");
  EXPECT_FALSE(fresh);
  EXPECT_EQ(namer.name_for(Term::var("x"), fresh), "x");
}

TEST(Trichotomy, Examples) {
  EXPECT_EQ(nnf_trichotomy(Formula::bnot(pab("x = 0"))), pab("x < 0 | 0 < x"));
  EXPECT_EQ(nnf_trichotomy(Formula::bnot(pab("x <= y"))), pab("y < x"));
  EXPECT_EQ(nnf_trichotomy(Formula::bnot(pab("x < y"))), pab("y <= x"));
  EXPECT_EQ(nnf_trichotomy(pab("x = y & z < 0")), pab("x = y & z < 0"));
  EXPECT_EQ(nnf_trichotomy(Formula::bnot(pab("x = 0 & y <= 0"))), pab("(x < 0 | 0 < x) | 0 < y"));
}

TEST(Dnf, Examples) {
  Formula a = pab("a = 0"), b = pab("b = 0"), c = pab("c = 0"), d = pab("d = 0");
  auto ds = dnf(Formula::band(Formula::bor(a, b), c));
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0], (Conjunction{a.atom(), c.atom()}));
  EXPECT_EQ(ds[1], (Conjunction{b.atom(), c.atom()}));
  EXPECT_EQ(dnf(Formula::band(a, c)).size(), 1u);
  EXPECT_EQ(dnf(Formula::band(Formula::bor(a, b), Formula::bor(c, d))).size(), 4u);
  EXPECT_THROW(dnf(Formula::bnot(a)), Error);
}

TEST(Dnf, Cap) {
  Formula f = pab("a = 0 | b = 0");
  Formula g = f;
  for (int i = 0; i < 12; ++i) g = Formula::band(g, f);  // 2^13 disjuncts
  EXPECT_THROW(dnf(g, 4096), CapExceeded);
  EXPECT_EQ(dnf(g, 1u << 13).size(), 1u << 13);
}
