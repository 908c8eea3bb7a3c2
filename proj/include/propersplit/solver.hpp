#pragma once

#include <optional>
#include <vector>

#include "propersplit/reduced.hpp"
#include "propersplit/splitting.hpp"

namespace propersplit {

/// Knobs for the fixed-point iteration. The defaults favour reproducible
/// traces: a zero start, a relative step-norm stop and a large but finite
/// budget.
struct IterationConfig {
  Index max_iter = 10000;
  double step_tol = 1e-10;          ///< stop when ||step|| <= step_tol (1+||x||)
  double divergence_guard = 1e12;   ///< abort when ||x|| exceeds this factor
  std::optional<Matrix> x0;         ///< initial iterate; zero when absent
};

/// Why the iteration stopped. `converged` in SolveReport additionally
/// requires the limit to match the reduced-solution oracle.
enum class SolveStatus { converged, max_iterations, diverged };

/// The affine iteration x -> y x + z induced by a splitting, a right-hand
/// side and a complement of the nullspace.
struct IterationOperators {
  Matrix y;           ///< reduced solution of u y = v for the complement
  Matrix z;           ///< reduced solution of u z = w for the complement
  double rho_y = 0.0; ///< spectral radius of y (equals rho(pinv(u) v))
};

struct SolveReport {
  Matrix x;
  SolveStatus status = SolveStatus::max_iterations;
  bool converged = false;  ///< step criterion met and oracle gap validated
  Index iterations = 0;
  double residual = 0.0;   ///< ||t x - w||_F at the final iterate
  std::vector<double> step_norms;  ///< ||x^{i+1} - x^i||_F per iteration
  double rho_ym = 0.0;
  bool rho_warning = false;  ///< rho_ym >= 1 - 1e-9: contraction not certified
  double oracle_gap = 0.0;   ///< distance to the reduced solution of t x = w
  bool hermitian = false;    ///< flags of the final iterate (square x only)
  bool psd = false;
};

/// Builds the iteration operators for t x = w under the given splitting and
/// complement. Throws NotSolvable when R(w) is not inside R(t) and
/// NotAComplement when m does not complement N(t).
IterationOperators build_iteration(const ProperSplitting& s, const Matrix& w,
                                   const Subspace& m,
                                   const Tolerances& tol = {});

/// Runs x^{i+1} = y x^i + z until the relative step criterion, the
/// iteration budget or the divergence guard fires. Never throws for
/// non-convergence: the outcome is in the report. Throws NotSolvable,
/// NotAComplement or Error (bad config) before iterating.
SolveReport solve_iterative(const ProperSplitting& s, const Matrix& w,
                            const Subspace& m, const IterationConfig& cfg = {},
                            const Tolerances& tol = {});

/// Solves t x s = w in two one-sided passes: first t y = w reduced for m,
/// then s* z = y*, returning z*. Both passes use internally chosen scaled
/// splittings, which contract at rate 1/2. Throws NotSolvable naming the
/// step that failed.
Matrix solve_two_sided(const Matrix& t, const Matrix& s, const Matrix& w,
                       const Subspace& m, const IterationConfig& cfg = {},
                       const Tolerances& tol = {});

/// Computes pinv(t) as the limit of the iteration for t x = P_{R(t)} with
/// the minimal-norm complement R(t*). Throws Diverged or MaxIterations when
/// the iteration fails, and MismatchedT when s does not split t.
Matrix pinv_via_splitting(const Matrix& t, const ProperSplitting& s,
                          const IterationConfig& cfg = {},
                          const Tolerances& tol = {});

}  // namespace propersplit
