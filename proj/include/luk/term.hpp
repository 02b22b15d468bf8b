#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace luk {

/// The four term languages: l-groups, pointed l-groups, MV-algebras, and
/// MV-algebras with the constant 1/2.
enum class Signature { Ab, pAb, MV, MVHalf };

std::string_view signature_tag(Signature sig);  // "ab", "pab", "mv", "mvhalf"
Signature parse_signature(std::string_view tag);

enum class Op : std::uint8_t {
  Var,
  // constants
  Zero,
  One,
  MinusOne,
  Half,
  // unary
  Neg,  // group inverse -
  Not,  // MV negation ~
  // binary
  Plus,
  Meet,  // /\ (min)
  Join,  // \/ (max)
  OPlus,
  OTimes,
  Implies,
};

int arity(Op op);
bool is_constant(Op op);
std::string_view op_symbol(Op op);
bool permits(Signature sig, Op op);

class Term {
 public:
  static Term var(std::string name);
  static Term constant(Op op);
  static Term unary(Op op, Term child);
  static Term binary(Op op, Term left, Term right);

  static Term zero() { return constant(Op::Zero); }
  static Term one() { return constant(Op::One); }
  static Term minus_one() { return constant(Op::MinusOne); }
  static Term half() { return constant(Op::Half); }

  Op op() const { return node_->op; }
  bool is_var() const { return node_->op == Op::Var; }
  bool is_leaf() const { return arity(node_->op) == 0; }
  const std::string& name() const { return node_->name; }
  const Term& child(std::size_t i) const { return node_->children[i]; }
  const Term& left() const { return node_->children[0]; }
  const Term& right() const { return node_->children[1]; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  /// Strict weak order consistent with structural equality.
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Term> children;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Operator sugar used heavily by the translations.
Term operator+(const Term& a, const Term& b);
Term operator-(const Term& a);
Term meet(const Term& a, const Term& b);
Term join(const Term& a, const Term& b);
Term oplus(const Term& a, const Term& b);
Term otimes(const Term& a, const Term& b);
Term implies(const Term& a, const Term& b);
Term mv_not(const Term& a);

enum class Rel : std::uint8_t { Eq, Le, Lt };
std::string_view rel_symbol(Rel rel);

struct Atom {
  Term lhs;
  Rel rel;
  Term rhs;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.rel == b.rel && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// Boolean combination of atoms. The language tag travels with the formula.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Not, And, Or };

  static Formula atom(Signature sig, Atom a);
  static Formula atom(Signature sig, Term lhs, Rel rel, Term rhs);
  static Formula bnot(Formula f);
  static Formula band(Formula a, Formula b);
  static Formula bor(Formula a, Formula b);
  /// Left-nested conjunction of a nonempty list.
  static Formula conj(const std::vector<Formula>& parts);
  static Formula conj(Signature sig, const std::vector<Atom>& atoms);

  Kind kind() const { return node_->kind; }
  Signature sig() const { return node_->sig; }
  const Atom& atom() const { return *node_->atom; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    Signature sig;
    std::optional<luk::Atom> atom;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Metrics.
std::size_t term_size(const Term& t);
std::size_t term_depth(const Term& t);
std::size_t operator_count(const Term& t);
std::size_t formula_size(const Formula& f);
std::size_t atom_count(const Formula& f);
std::size_t max_term_depth(const Formula& f);

/// Removes double group inverses and double MV negations everywhere.
Term normalize(const Term& t);
/// Normalizes every term and drops consecutive boolean negations.
Formula normalize(const Formula& f);
bool is_reduced(const Term& t);
bool is_reduced(const Formula& f);

/// Throws SignatureError naming the first operator outside `sig`.
void check_signature(const Term& t, Signature sig);
void check_signature(const Formula& f);

/// Variables in first-occurrence order (left to right, lhs before rhs).
std::vector<std::string> variables(const Term& t);
std::vector<std::string> variables(const Formula& f);
void collect_variables(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen);

/// Rebuilds terms bottom-up through `leaf`, which is called on every leaf.
Term map_leaves(const Term& t, const std::function<Term(const Term&)>& leaf);
/// Applies `fn` to both sides of every atom, keeping the boolean skeleton.
Formula map_atoms(const Formula& f, Signature sig, const std::function<Atom(const Atom&)>& fn);
Formula map_terms(const Formula& f, Signature sig, const std::function<Term(const Term&)>& fn);

/// Visits atom occurrences left to right.
void for_each_atom(const Formula& f, const std::function<void(const Atom&)>& fn);

}  // namespace luk
