#include "luk/term.hpp"

#include "luk/errors.hpp"

#include <algorithm>

namespace luk {

std::string_view signature_tag(Signature sig) {
  switch (sig) {
    case Signature::Ab: return "ab";
    case Signature::pAb: return "pab";
    case Signature::MV: return "mv";
    case Signature::MVHalf: return "mvhalf";
  }
  return "?";
}

Signature parse_signature(std::string_view tag) {
  if (tag == "ab") return Signature::Ab;
  if (tag == "pab") return Signature::pAb;
  if (tag == "mv") return Signature::MV;
  if (tag == "mvhalf") return Signature::MVHalf;
  throw Error("unknown language tag '" + std::string(tag) + "' (expected ab, pab, mv or mvhalf)");
}

int arity(Op op) {
  switch (op) {
    case Op::Var:
    case Op::Zero:
    case Op::One:
    case Op::MinusOne:
    case Op::Half: return 0;
    case Op::Neg:
    case Op::Not: return 1;
    default: return 2;
  }
}

bool is_constant(Op op) {
  return op == Op::Zero || op == Op::One || op == Op::MinusOne || op == Op::Half;
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::Var: return "<var>";
    case Op::Zero: return "0";
    case Op::One: return "1";
    case Op::MinusOne: return "-1";
    case Op::Half: return "1/2";
    case Op::Neg: return "-";
    case Op::Not: return "~";
    case Op::Plus: return "+";
    case Op::Meet: return "/\\";
    case Op::Join: return "\\/";
    case Op::OPlus: return "(+)";
    case Op::OTimes: return "(*)";
    case Op::Implies: return "->";
  }
  return "?";
}

bool permits(Signature sig, Op op) {
  switch (op) {
    case Op::Var:
    case Op::Zero:
    case Op::Meet:
    case Op::Join: return true;
    case Op::Plus:
    case Op::Neg: return sig == Signature::Ab || sig == Signature::pAb;
    case Op::MinusOne: return sig == Signature::pAb;
    case Op::One:
    case Op::Not:
    case Op::OPlus:
    case Op::OTimes:
    case Op::Implies: return sig == Signature::MV || sig == Signature::MVHalf;
    case Op::Half: return sig == Signature::MVHalf;
  }
  return false;
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::var(std::string name) {
  std::size_t h = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(Op::Var));
  return Term(std::make_shared<const Node>(Node{Op::Var, std::move(name), {}, h}));
}

Term Term::constant(Op op) {
  if (!is_constant(op)) throw Error("Term::constant: not a constant symbol");
  return Term(std::make_shared<const Node>(Node{op, {}, {}, mix(17, static_cast<std::size_t>(op))}));
}

Term Term::unary(Op op, Term child) {
  if (arity(op) != 1) throw Error("Term::unary: not a unary symbol");
  std::size_t h = mix(child.hash(), static_cast<std::size_t>(op) * 31);
  return Term(std::make_shared<const Node>(Node{op, {}, {std::move(child)}, h}));
}

Term Term::binary(Op op, Term left, Term right) {
  if (arity(op) != 2) throw Error("Term::binary: not a binary symbol");
  std::size_t h = mix(mix(static_cast<std::size_t>(op) * 131, left.hash()), right.hash());
  return Term(std::make_shared<const Node>(Node{op, {}, {std::move(left), std::move(right)}, h}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op()) return false;
  if (a.is_var()) return a.name() == b.name();
  for (std::size_t i = 0; i < a.node_->children.size(); ++i)
    if (a.child(i) != b.child(i)) return false;
  return true;
}

bool operator<(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return false;
  if (a.op() != b.op()) return a.op() < b.op();
  if (a.is_var()) return a.name() < b.name();
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (a.child(i) < b.child(i)) return true;
    if (b.child(i) < a.child(i)) return false;
  }
  return false;
}

Term operator+(const Term& a, const Term& b) { return Term::binary(Op::Plus, a, b); }
Term operator-(const Term& a) { return Term::unary(Op::Neg, a); }
Term meet(const Term& a, const Term& b) { return Term::binary(Op::Meet, a, b); }
Term join(const Term& a, const Term& b) { return Term::binary(Op::Join, a, b); }
Term oplus(const Term& a, const Term& b) { return Term::binary(Op::OPlus, a, b); }
Term otimes(const Term& a, const Term& b) { return Term::binary(Op::OTimes, a, b); }
Term implies(const Term& a, const Term& b) { return Term::binary(Op::Implies, a, b); }
Term mv_not(const Term& a) { return Term::unary(Op::Not, a); }

std::string_view rel_symbol(Rel rel) {
  switch (rel) {
    case Rel::Eq: return "=";
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
  }
  return "?";
}

Formula Formula::atom(Signature sig, Atom a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, sig, std::move(a), {}}));
}

Formula Formula::atom(Signature sig, Term lhs, Rel rel, Term rhs) {
  return atom(sig, Atom{std::move(lhs), rel, std::move(rhs)});
}

Formula Formula::bnot(Formula f) {
  Signature sig = f.sig();
  return Formula(std::make_shared<const Node>(Node{Kind::Not, sig, std::nullopt, {std::move(f)}}));
}

Formula Formula::band(Formula a, Formula b) {
  if (a.sig() != b.sig()) throw SignatureError("conjunction of formulas in different languages");
  Signature sig = a.sig();
  return Formula(std::make_shared<const Node>(Node{Kind::And, sig, std::nullopt, {std::move(a), std::move(b)}}));
}

Formula Formula::bor(Formula a, Formula b) {
  if (a.sig() != b.sig()) throw SignatureError("disjunction of formulas in different languages");
  Signature sig = a.sig();
  return Formula(std::make_shared<const Node>(Node{Kind::Or, sig, std::nullopt, {std::move(a), std::move(b)}}));
}

Formula Formula::conj(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error("Formula::conj: empty conjunction");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = band(acc, parts[i]);
  return acc;
}

Formula Formula::conj(Signature sig, const std::vector<Atom>& atoms) {
  std::vector<Formula> parts;
  parts.reserve(atoms.size());
  for (const auto& a : atoms) parts.push_back(atom(sig, a));
  return conj(parts);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.sig() != b.sig()) return false;
  if (a.kind() == Formula::Kind::Atom) return a.atom() == b.atom();
  for (std::size_t i = 0; i < a.node_->children.size(); ++i)
    if (a.child(i) != b.child(i)) return false;
  return true;
}

std::size_t term_size(const Term& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (int i = 0; i < arity(t.op()); ++i) n += term_size(t.child(i));
  return n;
}

std::size_t term_depth(const Term& t) {
  if (t.is_leaf()) return 0;
  std::size_t d = 0;
  for (int i = 0; i < arity(t.op()); ++i) d = std::max(d, term_depth(t.child(i)));
  return d + 1;
}

std::size_t operator_count(const Term& t) {
  if (t.is_leaf()) return 0;
  std::size_t n = 1;
  for (int i = 0; i < arity(t.op()); ++i) n += operator_count(t.child(i));
  return n;
}

void for_each_atom(const Formula& f, const std::function<void(const Atom&)>& fn) {
  if (f.kind() == Formula::Kind::Atom) {
    fn(f.atom());
    return;
  }
  for_each_atom(f.child(0), fn);
  if (f.kind() != Formula::Kind::Not) for_each_atom(f.child(1), fn);
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 0;
  for_each_atom(f, [&](const Atom& a) { n += term_size(a.lhs) + term_size(a.rhs); });
  return n;
}

std::size_t atom_count(const Formula& f) {
  std::size_t n = 0;
  for_each_atom(f, [&](const Atom&) { ++n; });
  return n;
}

std::size_t max_term_depth(const Formula& f) {
  std::size_t d = 0;
  for_each_atom(f, [&](const Atom& a) { d = std::max({d, term_depth(a.lhs), term_depth(a.rhs)}); });
  return d;
}

Term normalize(const Term& t) {
  switch (arity(t.op())) {
    case 0: return t;
    case 1: {
      Term c = normalize(t.child(0));
      if (c.op() == t.op()) return c.child(0);  // --a = a, ~~a = a
      if (c == t.child(0)) return t;
      return Term::unary(t.op(), c);
    }
    default: {
      Term l = normalize(t.left());
      Term r = normalize(t.right());
      if (l == t.left() && r == t.right()) return t;
      return Term::binary(t.op(), l, r);
    }
  }
}

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const Atom& a = f.atom();
      return Formula::atom(f.sig(), normalize(a.lhs), a.rel, normalize(a.rhs));
    }
    case Formula::Kind::Not: {
      Formula c = normalize(f.child(0));
      if (c.kind() == Formula::Kind::Not) return c.child(0);
      return Formula::bnot(c);
    }
    case Formula::Kind::And: return Formula::band(normalize(f.child(0)), normalize(f.child(1)));
    case Formula::Kind::Or: return Formula::bor(normalize(f.child(0)), normalize(f.child(1)));
  }
  return f;
}

bool is_reduced(const Term& t) {
  if (t.is_leaf()) return true;
  if (arity(t.op()) == 1) return t.child(0).op() != t.op() && is_reduced(t.child(0));
  return is_reduced(t.left()) && is_reduced(t.right());
}

bool is_reduced(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return is_reduced(f.atom().lhs) && is_reduced(f.atom().rhs);
    case Formula::Kind::Not: return f.child(0).kind() != Formula::Kind::Not && is_reduced(f.child(0));
    default: return is_reduced(f.child(0)) && is_reduced(f.child(1));
  }
}

void check_signature(const Term& t, Signature sig) {
  if (!permits(sig, t.op()))
    throw SignatureError("operator '" + std::string(op_symbol(t.op())) + "' is not in language " +
                         std::string(signature_tag(sig)));
  for (int i = 0; i < arity(t.op()); ++i) check_signature(t.child(i), sig);
}

void check_signature(const Formula& f) {
  for_each_atom(f, [&](const Atom& a) {
    check_signature(a.lhs, f.sig());
    check_signature(a.rhs, f.sig());
  });
}

void collect_variables(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (t.is_var()) {
    if (seen.insert(t.name()).second) out.push_back(t.name());
    return;
  }
  for (int i = 0; i < arity(t.op()); ++i) collect_variables(t.child(i), out, seen);
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_variables(t, out, seen);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for_each_atom(f, [&](const Atom& a) {
    collect_variables(a.lhs, out, seen);
    collect_variables(a.rhs, out, seen);
  });
  return out;
}

Term map_leaves(const Term& t, const std::function<Term(const Term&)>& leaf) {
  switch (arity(t.op())) {
    case 0: return leaf(t);
    case 1: return Term::unary(t.op(), map_leaves(t.child(0), leaf));
    default: return Term::binary(t.op(), map_leaves(t.left(), leaf), map_leaves(t.right(), leaf));
  }
}

Formula map_atoms(const Formula& f, Signature sig, const std::function<Atom(const Atom&)>& fn) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return Formula::atom(sig, fn(f.atom()));
    case Formula::Kind::Not: return Formula::bnot(map_atoms(f.child(0), sig, fn));
    case Formula::Kind::And:
      return Formula::band(map_atoms(f.child(0), sig, fn), map_atoms(f.child(1), sig, fn));
    case Formula::Kind::Or:
      return Formula::bor(map_atoms(f.child(0), sig, fn), map_atoms(f.child(1), sig, fn));
  }
  return f;
}

Formula map_terms(const Formula& f, Signature sig, const std::function<Term(const Term&)>& fn) {
  return map_atoms(f, sig, [&](const Atom& a) { return Atom{fn(a.lhs), a.rel, fn(a.rhs)}; });
}

}  // namespace luk
