#pragma once

#include "luk/parser.hpp"
#include "luk/rational.hpp"
#include "luk/term.hpp"

namespace luk {

/// Intended models: the real l-group, its pointed expansion by -1, the
/// standard MV-algebra on [0,1], and the latter with 1/2 named.
enum class Algebra { R, Rminus1, StdMV, StdMVHalf };

Algebra algebra_for(Signature sig);
Signature language_of(Algebra a);
bool is_mv(Algebra a);

/// Exact value of the term function at `v`. Throws EvalError on an
/// unassigned variable, an MV input outside [0,1], or a language mismatch.
Rational eval_term(const Term& t, const Assignment& v, Algebra a);
bool eval_atom(const Atom& atom, const Assignment& v, Algebra a);
bool eval_formula(const Formula& f, const Assignment& v, Algebra a);

/// Truth of a term: value 1 in the MV-algebras, value >= 0 in the l-groups.
bool is_designated(const Term& t, const Assignment& v, Algebra a);

// Basic operations of the standard MV-algebra on [0,1].
Rational mv_oplus(const Rational& a, const Rational& b);
Rational mv_otimes(const Rational& a, const Rational& b);
Rational mv_implies(const Rational& a, const Rational& b);

}  // namespace luk
