#pragma once

#include "luk/parser.hpp"
#include "luk/rational.hpp"
#include "luk/term.hpp"
#include "luk/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace luk {

/// A x <= b together with B x < d over named columns. A and B are integer
/// matrices; right-hand sides are rational.
struct LinearSystem {
  std::vector<std::string> columns;
  std::vector<std::vector<std::int64_t>> A;
  std::vector<Rational> b;
  std::vector<std::vector<std::int64_t>> B;
  std::vector<Rational> d;

  std::size_t cols() const { return columns.size(); }
  std::size_t rows() const { return A.size() + B.size(); }
  /// k: the largest absolute entry over A, B and the (ceiled) right-hand
  /// sides; 1 for an empty system.
  std::int64_t entry_bound() const;
  /// Largest number of nonzero coefficients in any row.
  std::size_t max_row_support() const;
};

/// A single row over named variables: sum coef*var (< or <=) rhs.
struct LinearRow {
  std::vector<std::pair<std::string, std::int64_t>> terms;
  bool strict = false;
  Rational rhs;
};

/// Assembles rows into a system; columns follow `columns`, then any further
/// variables in first-appearance order.
LinearSystem make_system(const std::vector<LinearRow>& rows, std::vector<std::string> columns = {});

/// Number of two-way case points (lattice and MV operations) in a term or atom.
std::size_t case_points(const Term& t);
std::size_t case_points(const Atom& a);

/// Rows describing `a` once every case point is resolved by `cases`
/// (consumed in pre-order, lhs before rhs). Case 0 of a meet/join picks the
/// left argument as the min/max, case 1 the right one; for the MV
/// operations case 0 is the regime a + b <= 1 (a <= b for ->) and case 1
/// its complement. Variables in `fixed` are folded into the right-hand side.
std::vector<LinearRow> linearize(const Atom& a, const std::vector<int>& cases, const Assignment* fixed = nullptr);

/// The system of a flat conjunction under a full case selection, listed
/// atom by atom. Equalities become two opposite inequalities.
LinearSystem extract_system(const Conjunction& c, const std::vector<int>& cases, const Assignment* fixed = nullptr);

struct FeasibleOptions {
  std::size_t row_cap = 200000;
  /// When set, unbounded or oversized coordinate choices are clamped to
  /// [-box, box] whenever the feasible interval allows.
  std::optional<Rational> box;
  /// Adds the rows -box <= x_i <= box to the system before elimination.
  bool box_rows = false;
};

struct LinearVerdict {
  bool feasible = false;
  std::vector<Rational> witness;  // one value per column when feasible
  std::size_t peak_rows = 0;
};

/// Fourier-Motzkin elimination with strict/non-strict bookkeeping. Explicit
/// equalities are eliminated by substitution first. A feasible verdict
/// carries a witness that satisfies every row exactly; coordinates are the
/// simplest rationals in their back-substitution intervals.
LinearVerdict feasible(const LinearSystem& s, const FeasibleOptions& opt = {});

/// (m k)^m: a feasible integer system with m columns and entries in [-k, k]
/// has a solution inside this box.
Rational small_witness_bound(std::size_t m, std::int64_t k);

/// Solves inside the small-witness box for the system's own m and k, falling
/// back to the unboxed search if the box cuts every solution away (possible
/// only with strict rows).
LinearVerdict feasible_small(const LinearSystem& s, const FeasibleOptions& opt = {});

struct WitnessBox {
  std::size_t M = 0;
  Rational bound;  // 2^M
};

/// M = ceil(c N log2(3 c N)), computed as ceil(log2((3cN)^(cN))) over integers.
WitnessBox witness_box(std::size_t N, std::size_t c);

bool satisfies(const LinearSystem& s, const std::vector<Rational>& x);

/// Replaces B x < d by B x <= d' with d - 1 <= d' < d, chosen so that
/// `solution` still satisfies the result.
LinearSystem perturb_strict(const LinearSystem& s, const std::vector<Rational>& solution);

/// Plain-text tableau: one row per line, integer coefficients, relation, rhs.
std::string dump_system(const LinearSystem& s);

}  // namespace luk
