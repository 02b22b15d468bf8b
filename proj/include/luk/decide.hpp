#pragma once

#include "luk/linear.hpp"
#include "luk/parser.hpp"
#include "luk/semantics.hpp"
#include "luk/term.hpp"
#include "luk/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace luk {

struct DecideOptions {
  std::size_t dnf_cap = kDefaultDnfCap;
  std::size_t split_cap = std::size_t{1} << 16;
  std::size_t fm_row_cap = 200000;
  /// Unit propagation of forced values before any case split.
  bool propagate = true;
  /// 0 keeps the canonical exploration order; anything else shuffles it.
  std::uint64_t seed = 0;
  /// Extra linear side conditions over the formula's variables, conjoined
  /// to every disjunct.
  std::vector<LinearRow> extra_rows;
};

struct DecideStats {
  std::size_t disjuncts = 0;  // explored
  std::size_t nodes = 0;      // branch-and-bound nodes, summed over disjuncts
  std::size_t peak_rows = 0;
  std::size_t propagated = 0;  // values fixed by propagation
  double elapsed_ms = 0;
};

struct Verdict {
  enum class Status { Sat, Unsat } status = Status::Unsat;
  Assignment witness;  // present iff Sat; one value per variable of the input
  DecideStats stats;

  bool sat() const { return status == Status::Sat; }
};

/// Existential closure over the reals with -1 (languages Ab and pAb).
Verdict decide_pAb(const Formula& f, const DecideOptions& opt = {});
/// Existential closure over [0,1] (languages MV and MVHalf).
Verdict decide_MV(const Formula& f, const DecideOptions& opt = {});
/// Dispatches on the formula's language.
Verdict decide(const Formula& f, const DecideOptions& opt = {});

bool check_witness(const Formula& f, const Assignment& v, Algebra a);

}  // namespace luk
