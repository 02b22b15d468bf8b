#pragma once

#include "luk/term.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace luk {

/// Hands out fresh Tseitin names "t<k>" and remembers which subterm each one
/// names, so identical subterms share a variable across every call made
/// through the same namer.
class TseitinNamer {
 public:
  TseitinNamer() = default;
  /// Names in `taken` are never handed out.
  explicit TseitinNamer(const std::vector<std::string>& taken);

  void reserve(const std::string& name) { taken_.insert(name); }

  /// The variable standing for `t`: the variable itself, or a fresh name.
  std::string name_for(const Term& t, bool& fresh);

  const std::vector<std::pair<std::string, Term>>& definitions() const { return defs_; }

 private:
  std::set<std::string> taken_;
  std::unordered_map<Term, std::string, TermHash> names_;
  std::vector<std::pair<std::string, Term>> defs_;
  std::size_t counter_ = 0;
};

struct TseitinResult {
  Formula formula;
  /// Fresh variable -> the subterm it names, in order of creation.
  std::vector<std::pair<std::string, Term>> defmap;
};

/// Tseitin variant: every compound subterm and constant is replaced by a
/// fresh variable, and one defining atom x = f(x_1, ..., x_n) is conjoined
/// for each. Atoms of the result contain at most one function symbol.
TseitinResult tseitin(const Formula& f);
TseitinResult tseitin(const Formula& f, TseitinNamer& namer);

/// Tseitin variant of a conjunction of atoms, returned flat; the defining
/// atoms of subterms first seen here are appended after the rewritten atoms.
std::vector<Atom> tseitin_atoms(const std::vector<Atom>& atoms, TseitinNamer& namer);

/// Extends `v` by giving each defined variable the value of its subterm.
template <class Assignment, class Eval>
Assignment extend_tseitin(const Assignment& v, const std::vector<std::pair<std::string, Term>>& defmap, Eval eval) {
  Assignment out = v;
  for (const auto& [name, term] : defmap) out[name] = eval(term, v);
  return out;
}

/// Pushes boolean negations onto atoms and removes them using the total
/// order: !(a = b) -> a < b | b < a, !(a <= b) -> b < a, !(a < b) -> b <= a.
Formula nnf_trichotomy(const Formula& f);

using Conjunction = std::vector<Atom>;

constexpr std::size_t kDefaultDnfCap = 4096;

/// Disjunctive normal form of a negation-free formula, distributing left to
/// right without deduplication. Throws CapExceeded past `cap` disjuncts.
std::vector<Conjunction> dnf(const Formula& f, std::size_t cap = kDefaultDnfCap);

}  // namespace luk
