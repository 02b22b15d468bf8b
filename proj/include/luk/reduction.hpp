#pragma once

#include "luk/parser.hpp"
#include "luk/rational.hpp"
#include "luk/term.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace luk {

struct ReductionParams {
  std::size_t M = 0;
  std::size_t k = 0;
  std::size_t c = 20;
};

/// k = maximal term depth of F, M = witness_box(formula_size(F), c).M.
ReductionParams default_params(const Formula& f, std::size_t c = 20);

/// Reserved names of the constant-defining gadget: z1 ... z<M+k+1>, q, and
/// r for the l-group reduction.
struct GadgetVars {
  std::vector<std::string> z;
  std::string q = "q";
  std::string r;  // empty when unused
};

GadgetVars gadget_vars(const ReductionParams& p, bool with_r);

/// The unique solution of the gadget equations: z_i = 2^-i,
/// q = 1/2 - 2^-(M+k+1), r = 1/2 - 2^-(k+1).
Assignment gadget_values(const ReductionParams& p);

/// The gadget equations themselves, in the order they appear in S.
std::vector<Atom> gadget_atoms(const ReductionParams& p, const GadgetVars& g);

/// r(a) = a / 2^(M+k+1) + 1/2, and its inverse.
Rational r_map(const ReductionParams& p, const Rational& a);
Rational r_inverse(const ReductionParams& p, const Rational& b);

constexpr std::size_t kTauDepthCap = 12;

/// Ab -> MVHalf. Throws ReductionError on -1 or on input deeper than the cap.
Term tau(const Term& t);
Formula tau_prime(const Formula& f);

/// pAb -> MVHalf with -1 sent to the variable q.
Term tau_q(const Term& t, const std::string& q);
Formula tau_q_prime(const Formula& f, const std::string& q);

/// Rewrites an MV term so that ~ only applies to variables (De Morgan,
/// ~(a -> b) = a (*) ~b, ~0 = 1, ~1 = 0).
Term push_negations(const Term& t);

/// MV -> pAb, after push_negations. Besides the variable, ->, (*), 0, 1 and
/// lattice clauses: delta(~x) = -delta(x) + -1 and
/// delta(a (+) b) = (delta(a) + (delta(b) + -(-1))) /\ 0.
Term delta(const Term& t);
Formula delta_prime(const Formula& f);

/// MV -> MVHalf, the polynomial companion of tau_q o delta, with
/// sigma(~x) = (~sigma(x) (+) q) (*) 1/2 and
/// sigma(a (+) b) = (sigma(a) (+) (sigma(b) (*) ~q)) /\ 1/2.
Term sigma_q(const Term& t, const std::string& q);
Formula sigma_q_prime(const Formula& f, const std::string& q);

/// -1 -> q, then tau', then 1/2 -> z1. Expects a Tseitin variant.
Formula zeta_pAb(const Formula& tseitin_variant, const GadgetVars& g);
/// sigma'_q, then 1/2 -> z1.
Formula zeta_MV(const Formula& f, const GadgetVars& g);

constexpr std::size_t kSizeGuard = 64;

struct Translation {
  enum class Kind { PAbToMV, MVToMV } kind;
  Formula source;   // as given
  Formula renamed;  // source after moving off reserved names
  Formula output;
  ReductionParams params;
  GadgetVars gadget;
  std::vector<std::pair<std::string, std::string>> renaming;  // old -> new
  std::vector<std::pair<std::string, Term>> defmap;          // Tseitin definitions
  std::size_t source_size = 0;
  std::size_t output_size = 0;
  double ms_tseitin = 0, ms_translate = 0, ms_assemble = 0;

  /// output_size / (M + k + source_size).
  double size_ratio() const;
};

/// The l-group reduction S(F, M, k). Requires p.k >= max term depth of F.
Translation build_S_pAb(const Formula& f, const ReductionParams& p);
/// The MV self-translation S(F, M, k).
Translation build_S_MV(const Formula& f, const ReductionParams& p);

/// Maps a satisfying assignment of the output back to the source variables:
/// r^-1 for the l-group reduction, r^-1(clamp to [q, 1/2]) + 1 for the
/// self-translation.
Assignment recover_witness(const Translation& t, const Assignment& output_witness);

/// key=value lines describing the translation; timings only on request.
std::string report_text(const Translation& t, bool timings = false);

}  // namespace luk
