#include "propersplit/solver.hpp"

#include <algorithm>

namespace propersplit {

namespace {

constexpr double kOracleGapTol = 1e-7;
constexpr double kRhoWarningMargin = 1e-9;

void validate_config(const IterationConfig& cfg) {
  if (cfg.max_iter < 1) throw Error("solver: max_iter must be at least 1");
  if (!(cfg.step_tol > 0.0)) throw Error("solver: step_tol must be positive");
  if (!(cfg.divergence_guard > 0.0)) {
    throw Error("solver: divergence_guard must be positive");
  }
}

}  // namespace

IterationOperators build_iteration(const ProperSplitting& s, const Matrix& w,
                                   const Subspace& m, const Tolerances& tol) {
  IterationOperators ops;
  ops.y = reduced_solution({s.u, s.v}, m, tol).x;
  ops.z = reduced_solution({s.u, w}, m, tol).x;
  ops.rho_y = spectral_radius(ops.y);
  return ops;
}

SolveReport solve_iterative(const ProperSplitting& s, const Matrix& w,
                            const Subspace& m, const IterationConfig& cfg,
                            const Tolerances& tol) {
  validate_config(cfg);
  const IterationOperators ops = build_iteration(s, w, m, tol);

  Matrix x = Matrix::Zero(s.t.cols(), w.cols());
  if (cfg.x0) {
    if (cfg.x0->rows() != x.rows() || cfg.x0->cols() != x.cols()) {
      throw Error("solver: x0 has the wrong shape");
    }
    x = *cfg.x0;
  }

  SolveReport report;
  report.rho_ym = ops.rho_y;
  report.rho_warning = ops.rho_y >= 1.0 - kRhoWarningMargin;
  report.step_norms.reserve(
      static_cast<std::size_t>(std::min<Index>(cfg.max_iter, 4096)));

  const double guard = cfg.divergence_guard * (1.0 + ops.z.norm());
  report.status = SolveStatus::max_iterations;
  for (Index it = 1; it <= cfg.max_iter; ++it) {
    const Matrix next = ops.y * x + ops.z;
    const double step = (next - x).norm();
    report.step_norms.push_back(step);
    x = next;
    report.iterations = it;
    if (!x.allFinite() || x.norm() > guard) {
      report.status = SolveStatus::diverged;
      break;
    }
    if (step <= cfg.step_tol * (1.0 + x.norm())) {
      report.status = SolveStatus::converged;
      break;
    }
  }

  report.x = x;
  report.residual = (s.t * x - w).norm();
  const Matrix oracle = reduced_solution({s.t, w}, m, tol).x;
  report.oracle_gap = (x - oracle).norm();
  report.converged = report.status == SolveStatus::converged &&
                     report.oracle_gap <= kOracleGapTol * (1.0 + x.norm());
  if (x.rows() == x.cols()) {
    report.hermitian = is_hermitian(x, tol);
    report.psd = is_psd(x, tol);
  }
  return report;
}

Matrix solve_two_sided(const Matrix& t, const Matrix& s, const Matrix& w,
                       const Subspace& m, const IterationConfig& cfg,
                       const Tolerances& tol) {
  // Internal scaled splittings u = 2t contract at rate 1/2 regardless of t,
  // so each pass converges whenever its equation is solvable.
  SolveReport first;
  try {
    first = solve_iterative(validate_proper(t, 2.0 * t, tol), w, m, cfg, tol);
  } catch (const NotSolvable&) {
    throw NotSolvable("two-sided solve, first step: R(w) is not inside R(t)");
  }
  if (first.status == SolveStatus::diverged) {
    throw Diverged("two-sided solve, first step diverged");
  }
  if (!first.converged) {
    throw MaxIterations("two-sided solve, first step did not converge");
  }

  SolveReport second;
  try {
    const Matrix s_adj = s.adjoint();
    second = solve_iterative(validate_proper(s_adj, 2.0 * s_adj, tol),
                             first.x.adjoint(), min_norm_subspace(s_adj, tol),
                             cfg, tol);
  } catch (const NotSolvable&) {
    throw NotSolvable(
        "two-sided solve, second step: R(y*) is not inside R(s*)");
  }
  if (second.status == SolveStatus::diverged) {
    throw Diverged("two-sided solve, second step diverged");
  }
  if (!second.converged) {
    throw MaxIterations("two-sided solve, second step did not converge");
  }
  return second.x.adjoint();
}

Matrix pinv_via_splitting(const Matrix& t, const ProperSplitting& s,
                          const IterationConfig& cfg, const Tolerances& tol) {
  if (t.rows() != s.t.rows() || t.cols() != s.t.cols() ||
      (t - s.t).norm() != 0.0) {
    throw MismatchedT("pinv_via_splitting: s is not a splitting of t");
  }
  const SolveReport report = solve_iterative(
      s, orth_projector(t, tol), min_norm_subspace(t, tol), cfg, tol);
  if (report.status == SolveStatus::diverged) {
    throw Diverged("pinv_via_splitting: iteration diverged");
  }
  if (!report.converged) {
    throw MaxIterations(
        "pinv_via_splitting: iteration did not converge within the budget");
  }
  return report.x;
}

}  // namespace propersplit
