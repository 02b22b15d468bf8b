#include "luk/transform.hpp"

#include "luk/errors.hpp"

namespace luk {

TseitinNamer::TseitinNamer(const std::vector<std::string>& taken) : taken_(taken.begin(), taken.end()) {}

std::string TseitinNamer::name_for(const Term& t, bool& fresh) {
  fresh = false;
  if (t.is_var()) return t.name();
  if (auto it = names_.find(t); it != names_.end()) return it->second;
  std::string name;
  do {
    name = "t" + std::to_string(counter_++);
  } while (taken_.count(name));
  taken_.insert(name);
  names_.emplace(t, name);
  defs_.emplace_back(name, t);
  fresh = true;
  return name;
}

namespace {

// Names `t` and, on first sight, its subterms (pre-order, left to right),
// queueing one defining atom per new name.
std::string flatten(const Term& t, TseitinNamer& namer, std::vector<Atom>& defs) {
  bool fresh = false;
  std::string name = namer.name_for(t, fresh);
  if (!fresh) return name;
  std::size_t slot = defs.size();
  defs.push_back(Atom{Term::var(name), Rel::Eq, t});  // placeholder, filled below
  Term body = t;
  switch (arity(t.op())) {
    case 0: break;
    case 1: body = Term::unary(t.op(), Term::var(flatten(t.child(0), namer, defs))); break;
    default: {
      Term l = Term::var(flatten(t.left(), namer, defs));
      Term r = Term::var(flatten(t.right(), namer, defs));
      body = Term::binary(t.op(), l, r);
    }
  }
  defs[slot].rhs = body;
  return name;
}

Atom flatten_atom(const Atom& a, TseitinNamer& namer, std::vector<Atom>& defs) {
  Term l = Term::var(flatten(a.lhs, namer, defs));
  Term r = Term::var(flatten(a.rhs, namer, defs));
  return Atom{l, a.rel, r};
}

Formula rewrite(const Formula& f, TseitinNamer& namer, std::vector<Atom>& defs) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return Formula::atom(f.sig(), flatten_atom(f.atom(), namer, defs));
    case Formula::Kind::Not: return Formula::bnot(rewrite(f.child(0), namer, defs));
    case Formula::Kind::And: {
      Formula l = rewrite(f.child(0), namer, defs);
      return Formula::band(l, rewrite(f.child(1), namer, defs));
    }
    case Formula::Kind::Or: {
      Formula l = rewrite(f.child(0), namer, defs);
      return Formula::bor(l, rewrite(f.child(1), namer, defs));
    }
  }
  return f;
}

}  // namespace

TseitinResult tseitin(const Formula& f) {
  TseitinNamer namer(variables(f));
  return tseitin(f, namer);
}

TseitinResult tseitin(const Formula& f, TseitinNamer& namer) {
  for (const auto& v : variables(f)) namer.reserve(v);
  std::size_t before = namer.definitions().size();
  std::vector<Atom> defs;
  Formula psi = rewrite(f, namer, defs);
  std::vector<Formula> parts{psi};
  for (const auto& d : defs) parts.push_back(Formula::atom(f.sig(), d));
  const auto& all = namer.definitions();
  return TseitinResult{Formula::conj(parts), {all.begin() + static_cast<std::ptrdiff_t>(before), all.end()}};
}

std::vector<Atom> tseitin_atoms(const std::vector<Atom>& atoms, TseitinNamer& namer) {
  std::set<std::string> seen;
  std::vector<std::string> vars;
  for (const auto& a : atoms) {
    collect_variables(a.lhs, vars, seen);
    collect_variables(a.rhs, vars, seen);
  }
  for (const auto& v : vars) namer.reserve(v);
  std::vector<Atom> out, defs;
  for (const auto& a : atoms) out.push_back(flatten_atom(a, namer, defs));
  out.insert(out.end(), defs.begin(), defs.end());
  return out;
}

namespace {

Formula nnf(const Formula& f, bool negate) {
  Signature sig = f.sig();
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      if (!negate) return f;
      const Atom& a = f.atom();
      switch (a.rel) {
        case Rel::Eq:
          return Formula::bor(Formula::atom(sig, a.lhs, Rel::Lt, a.rhs), Formula::atom(sig, a.rhs, Rel::Lt, a.lhs));
        case Rel::Le: return Formula::atom(sig, a.rhs, Rel::Lt, a.lhs);
        case Rel::Lt: return Formula::atom(sig, a.rhs, Rel::Le, a.lhs);
      }
      return f;
    }
    case Formula::Kind::Not: return nnf(f.child(0), !negate);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Formula l = nnf(f.child(0), negate);
      Formula r = nnf(f.child(1), negate);
      bool conj = (f.kind() == Formula::Kind::And) != negate;
      return conj ? Formula::band(l, r) : Formula::bor(l, r);
    }
  }
  return f;
}

}  // namespace

Formula nnf_trichotomy(const Formula& f) { return nnf(f, false); }

std::vector<Conjunction> dnf(const Formula& f, std::size_t cap) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return {Conjunction{f.atom()}};
    case Formula::Kind::Not: throw Error("dnf: formula is not negation-free; apply nnf_trichotomy first");
    case Formula::Kind::Or: {
      auto l = dnf(f.child(0), cap);
      auto r = dnf(f.child(1), cap);
      if (l.size() + r.size() > cap) throw CapExceeded("DNF expansion exceeded the disjunct cap", cap);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case Formula::Kind::And: {
      auto l = dnf(f.child(0), cap);
      auto r = dnf(f.child(1), cap);
      if (l.size() * r.size() > cap) throw CapExceeded("DNF expansion exceeded the disjunct cap", cap);
      std::vector<Conjunction> out;
      out.reserve(l.size() * r.size());
      for (const auto& a : l) {
        for (const auto& b : r) {
          Conjunction c = a;
          c.insert(c.end(), b.begin(), b.end());
          out.push_back(std::move(c));
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace luk
