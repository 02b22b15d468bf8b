#pragma once

#include "luk/linear.hpp"
#include "luk/parser.hpp"
#include "luk/rational.hpp"
#include "luk/term.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace luk {

using Rng = std::mt19937_64;

/// Independent stream for instance `index` of a run seeded with `seed`.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

struct TermShape {
  Signature sig = Signature::Ab;
  std::vector<std::string> vars{"x", "y"};
  std::size_t max_depth = 3;
  /// Chance that a node above depth 0 stops early as a leaf.
  double leaf_bias = 0.25;
  /// Chance that a leaf is a constant rather than a variable.
  double constant_bias = 0.2;
};

/// A random reduced term (no double inverses or double negations).
Term random_term(Rng& rng, const TermShape& shape);

struct FormulaShape {
  TermShape term;
  std::size_t max_atoms = 3;
  std::vector<Rel> relations{Rel::Eq, Rel::Le};
  double negation_bias = 0.2;
};

Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Uniform over fractions p/q in [lo, hi] with q <= max_den.
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den);

/// A feasible system with m columns and every entry and right-hand side in
/// [-k, k]: rows are drawn around a planted point in {-1, 0, 1}^m. About one
/// row in four is strict.
LinearSystem random_feasible_system(Rng& rng, std::size_t m, std::int64_t k, std::size_t rows);

}  // namespace luk
