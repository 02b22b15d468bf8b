#include "luk/semantics.hpp"

#include "luk/errors.hpp"

#include <algorithm>

namespace luk {

Algebra algebra_for(Signature sig) {
  switch (sig) {
    case Signature::Ab: return Algebra::R;
    case Signature::pAb: return Algebra::Rminus1;
    case Signature::MV: return Algebra::StdMV;
    case Signature::MVHalf: return Algebra::StdMVHalf;
  }
  return Algebra::R;
}

Signature language_of(Algebra a) {
  switch (a) {
    case Algebra::R: return Signature::Ab;
    case Algebra::Rminus1: return Signature::pAb;
    case Algebra::StdMV: return Signature::MV;
    case Algebra::StdMVHalf: return Signature::MVHalf;
  }
  return Signature::Ab;
}

bool is_mv(Algebra a) { return a == Algebra::StdMV || a == Algebra::StdMVHalf; }

Rational mv_oplus(const Rational& a, const Rational& b) { return std::min(Rational(1), Rational(a + b)); }

Rational mv_otimes(const Rational& a, const Rational& b) { return std::max(Rational(0), Rational(a + b - 1)); }

Rational mv_implies(const Rational& a, const Rational& b) { return std::min(Rational(1), Rational(1 - a + b)); }

namespace {

Rational eval(const Term& t, const Assignment& v, Algebra alg, Signature sig) {
  if (!permits(sig, t.op()))
    throw EvalError("operator '" + std::string(op_symbol(t.op())) + "' cannot be evaluated in the algebra of language " +
                    std::string(signature_tag(sig)));
  switch (t.op()) {
    case Op::Var: {
      auto it = v.find(t.name());
      if (it == v.end()) throw EvalError("unassigned variable '" + t.name() + "'");
      if (is_mv(alg) && (it->second < 0 || it->second > 1))
        throw EvalError("value " + to_string(it->second) + " of '" + t.name() + "' lies outside [0,1]");
      return it->second;
    }
    case Op::Zero: return Rational(0);
    case Op::One: return Rational(1);
    case Op::MinusOne: return Rational(-1);
    case Op::Half: return make_rational(1, 2);
    case Op::Neg: return -eval(t.child(0), v, alg, sig);
    case Op::Not: return 1 - eval(t.child(0), v, alg, sig);
    default: break;
  }
  Rational a = eval(t.left(), v, alg, sig);
  Rational b = eval(t.right(), v, alg, sig);
  switch (t.op()) {
    case Op::Plus: return a + b;
    case Op::Meet: return std::min(a, b);
    case Op::Join: return std::max(a, b);
    case Op::OPlus: return mv_oplus(a, b);
    case Op::OTimes: return mv_otimes(a, b);
    case Op::Implies: return mv_implies(a, b);
    default: break;
  }
  throw EvalError("unhandled operator");
}

}  // namespace

Rational eval_term(const Term& t, const Assignment& v, Algebra a) { return eval(t, v, a, language_of(a)); }

bool eval_atom(const Atom& atom, const Assignment& v, Algebra a) {
  Rational l = eval_term(atom.lhs, v, a);
  Rational r = eval_term(atom.rhs, v, a);
  switch (atom.rel) {
    case Rel::Eq: return l == r;
    case Rel::Le: return l <= r;
    case Rel::Lt: return l < r;
  }
  return false;
}

bool eval_formula(const Formula& f, const Assignment& v, Algebra a) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return eval_atom(f.atom(), v, a);
    case Formula::Kind::Not: return !eval_formula(f.child(0), v, a);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      // Both sides are evaluated so that errors surface regardless of order.
      bool l = eval_formula(f.child(0), v, a);
      bool r = eval_formula(f.child(1), v, a);
      return f.kind() == Formula::Kind::And ? (l && r) : (l || r);
    }
  }
  return false;
}

bool is_designated(const Term& t, const Assignment& v, Algebra a) {
  Rational x = eval_term(t, v, a);
  return is_mv(a) ? x == 1 : x >= 0;
}

}  // namespace luk
