#pragma once

#include "luk/rational.hpp"
#include "luk/term.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace luk {

// Concrete syntax, whitespace-insensitive:
//
//   formula := conj { "|" conj }        conj := lit { "&" lit }
//   lit     := "!" lit | "(" formula ")" | atom
//   atom    := term rel term            rel  := "=" | "<=" | "<"
//   term    := lterm { binop lterm }    (one precedence level, left-assoc)
//   binop   := "+" | "\/" | "/\" | "(+)" | "(*)" | "->"
//   lterm   := "-" lterm | "~" lterm | "(" term ")" | var | const
//   const   := "0" | "1" | "-1" | "1/2"
//
// Parsed formulas come back normalized and checked against the language.

Term parse_term(std::string_view text, Signature sig);
Formula parse_formula(std::string_view text, Signature sig);

/// Fully parenthesized rendering; parse_formula(print_formula(f)) == f.
std::string print_term(const Term& t);
std::string print_atom(const Atom& a);
std::string print_formula(const Formula& f);

/// A formula file: "#lang <tag>" on the first line, then one formula per
/// non-blank line. "#" starts a comment.
struct FormulaFile {
  Signature sig;
  std::vector<Formula> formulas;

  /// Conjunction of all formulas in the file.
  Formula conjunction() const;
};

FormulaFile parse_formula_file(std::string_view text);
FormulaFile read_formula_file(const std::string& path);
/// Splits top-level conjunctions so each conjunct lands on its own line.
std::string format_formula_file(const Formula& f, const std::vector<std::string>& header_comments = {});

using Assignment = std::map<std::string, Rational>;

/// Lines of the form "name = p/q"; "#" comments and blank lines are ignored.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& v);

}  // namespace luk
