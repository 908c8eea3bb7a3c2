#pragma once

#include <string>

#include "propersplit/splitting.hpp"

namespace propersplit {

/// Four equivalent characterisations of pinv(t) v >= 0 for a proper
/// splitting, plus the closed-form spectral radius they imply.
struct Prop61Record {
  bool tdv_psd = false;          ///< pinv(t) v PSD
  bool tvstar_psd_rank = false;  ///< t v* PSD with rank(t v*) = rank(v)
  bool sandwich = false;         ///< 0 <= pinv(u) v <= P_{R(v*)}
  bool formula_holds = false;    ///< pinv(u) v PSD and lhs matches rhs
  double formula_lhs = 0.0;      ///< rho(pinv(u) v)
  double formula_rhs = 0.0;      ///< rho(pinv(t) v) / (1 + rho(pinv(t) v))
};

/// The sandwich 0 <= pinv(u) t <= P_{R(t*)} and its radius formula.
struct Prop62Record {
  bool udt_sandwich = false;
  bool formula_holds = false;  ///< pinv(u) v PSD and lhs matches rhs
  double formula_lhs = 0.0;    ///< rho(pinv(u) v)
  double formula_rhs = 0.0;    ///< (rho(pinv(t) u) - 1) / rho(pinv(t) u)
};

/// Convergence verdict for the iteration induced by a proper splitting.
struct ConvergenceReport {
  double rho_udv = 0.0;
  bool converges = false;  ///< rho_udv < 1 with margin psd_tol
  double rho_tdv = 0.0;
  double rho_tdu = 0.0;
  Prop61Record prop61;
  Prop62Record prop62;
};

/// Radius bound extracted from a Hermitian solution of u x = v.
struct HermitianBoundReport {
  bool applicable = false;
  double rho_bound = 0.0;  ///< rho(x_tilde)
  double rho_udv = 0.0;    ///< bounded by rho_bound when applicable
};

/// Outcome of a two-splitting comparison theorem.
struct ComparisonVerdict {
  bool preconditions_hold = false;
  double rho1 = 0.0;
  double rho2 = 0.0;
  bool ordering_holds = false;  ///< rho1 <= rho2 < 1 (margin 1e-9)
  std::string detail;           ///< which precondition failed, if any
};

/// Comparison of the structured splittings available for a given t.
struct StructuredComparison {
  bool pp_branch = false;  ///< t = P_{R(t)} P_{R(t*)}
  double rho_polar = 0.0;
  double rho_projection = 0.0;
  bool pp_ordering = false;  ///< rho_polar <= rho_projection < 1

  bool normal_branch = false;    ///< t normal
  double pt_minus_t_norm = 0.0;  ///< ||P_{R(t)} - t||
  bool normal_convergent = false;

  bool hermitian_branch = false;  ///< Hermitian t, P - |t| PSD, norm < 1
  double rho_v2 = 0.0;            ///< radius of the range-projector seed
  bool hermitian_ordering = false;
};

/// Radii, the convergence verdict and both positivity records.
ConvergenceReport convergence_report(const ProperSplitting& s,
                                     const Tolerances& tol = {});

/// If x_tilde is Hermitian, solves u x = v and has spectral radius below
/// one, then rho(pinv(u) v) <= rho(x_tilde) < 1. Throws NotApplicable when
/// any precondition fails.
HermitianBoundReport hermitian_solution_bound(const ProperSplitting& s,
                                              const Matrix& x_tilde,
                                              const Tolerances& tol = {});

/// Comparison by right-hand summands: preconditions are pinv(t) v1 PSD,
/// pinv(t) v1 <= pinv(t) v2 and N(v1) = N(v2). Throws MismatchedT.
ComparisonVerdict compare_by_v(const ProperSplitting& s1,
                               const ProperSplitting& s2,
                               const Tolerances& tol = {});

/// Comparison by left-hand summands: preconditions are the Loewner chain
/// 0 <= pinv(t) u1 <= pinv(t) u2 <= P_{R(t*)}. Throws MismatchedT.
ComparisonVerdict compare_by_u(const ProperSplitting& s1,
                               const ProperSplitting& s2,
                               const Tolerances& tol = {});

/// Evaluates the structured-splitting branches that apply to t (product of
/// projectors, normal, Hermitian). Throws NotApplicable when t is neither a
/// product of projectors nor normal, and NotSquare for rectangular t.
StructuredComparison structured_comparisons(const Matrix& t,
                                            const Tolerances& tol = {});

}  // namespace propersplit
