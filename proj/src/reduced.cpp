#include "propersplit/reduced.hpp"

namespace propersplit {

namespace {

void require_equation_shapes(const MatrixEquation& eq, const char* what) {
  if (eq.t.rows() < 1 || eq.t.cols() < 1 || eq.w.cols() < 1) {
    throw Error(std::string(what) + ": empty matrix");
  }
  if (eq.w.rows() != eq.t.rows()) {
    throw Error(std::string(what) + ": t and w must have the same number of rows");
  }
  if (!eq.t.allFinite() || !eq.w.allFinite()) {
    throw Error(std::string(what) + ": matrix has non-finite entries");
  }
}

/// dim(R(a) intersect R(b)) == 0, for orthonormal bases a and b in C^n.
bool intersection_trivial(const Matrix& a, const Matrix& b,
                          const Tolerances& tol) {
  const Index total = a.cols() + b.cols();
  if (total == 0) return true;
  if (total > a.rows()) return false;
  if (a.cols() == 0 || b.cols() == 0) return true;
  Matrix stacked(a.rows(), total);
  stacked << a, b;
  return numeric_rank(stacked, tol) == total;
}

}  // namespace

bool check_solvable(const MatrixEquation& eq, const Tolerances& tol) {
  require_equation_shapes(eq, "check_solvable");
  return range_contains(eq.t, eq.w, tol);
}

ReducedSolutionReport reduced_solution(const MatrixEquation& eq,
                                       const Subspace& m,
                                       const Tolerances& tol) {
  require_equation_shapes(eq, "reduced_solution");
  if (m.ambient_dim() != eq.t.cols()) {
    throw NotAComplement("reduced_solution: complement lives in the wrong space");
  }
  if (!check_solvable(eq, tol)) {
    throw NotSolvable("reduced_solution: R(w) is not contained in R(t)");
  }
  const Matrix q = oblique_projector(m, nullspace_subspace(eq.t, tol), tol);
  ReducedSolutionReport report;
  report.x = q * (pinv(eq.t, tol) * eq.w);
  report.residual = (eq.t * report.x - eq.w).norm();
  if (report.x.rows() == report.x.cols()) {
    report.hermitian = is_hermitian(report.x, tol);
    report.psd = is_psd(report.x, tol);
    report.spectrum = spectrum(report.x);
  }
  return report;
}

ExistenceFlags existence_flags(const MatrixEquation& eq,
                               const Tolerances& tol) {
  require_equation_shapes(eq, "existence_flags");
  ExistenceFlags flags;
  flags.solvable = check_solvable(eq, tol);

  // The Hermitian/PSD questions concern square solutions; they need w to
  // have as many columns as t, otherwise t w* is not even composable.
  if (eq.w.cols() != eq.t.cols()) return flags;

  const Matrix tw = eq.t * eq.w.adjoint();
  const bool tw_hermitian = is_hermitian(tw, tol);
  const bool tw_psd_rank =
      is_psd(tw, tol) && numeric_rank(tw, tol) == numeric_rank(eq.w, tol);
  flags.hermitian_solution_exists = flags.solvable && tw_hermitian;
  flags.psd_solution_exists = flags.solvable && tw_psd_rank;

  const Matrix bw = range_basis(eq.w.adjoint(), tol);
  const Matrix bn = nullspace_basis(eq.t, tol);
  const bool disjoint = intersection_trivial(bw, bn, tol);
  flags.hermitian_reduced_exists = flags.hermitian_solution_exists && disjoint;
  flags.psd_reduced_exists = flags.psd_solution_exists && disjoint;

  if (flags.hermitian_reduced_exists) {
    // witness complement M = R(w*) + (R(w*) + N(t))^perp
    const Index n = eq.t.cols();
    Matrix span(n, bw.cols() + bn.cols());
    span << bw, bn;
    const Matrix rest = bw.cols() + bn.cols() > 0
                            ? nullspace_basis(span.adjoint(), tol)
                            : Matrix::Identity(n, n);
    Matrix basis(n, bw.cols() + rest.cols());
    basis << bw, rest;
    flags.witness.emplace(basis, tol);
  }
  return flags;
}

ReducedClassification classify_reduced(const Matrix& x,
                                       const MatrixEquation& eq,
                                       const Subspace& m,
                                       const Tolerances& tol) {
  ReducedClassification c;
  if (x.rows() == x.cols()) {
    c.hermitian = is_hermitian(x, tol);
    c.normal = is_normal(x, tol);
    c.psd = is_psd(x, tol);
  }
  c.inclusion = range_contains(m.basis(), eq.w.adjoint(), tol);
  return c;
}

ComplexVector spectrum_of_reduced(const MatrixEquation& eq, const Subspace& m,
                                  const Tolerances& tol) {
  require_equation_shapes(eq, "spectrum_of_reduced");
  if (eq.t.rows() != eq.t.cols() || eq.w.cols() != eq.t.cols()) {
    throw NotSquare("spectrum_of_reduced: solutions of this equation are not square");
  }
  // N(t) inside N(w), equivalently R(w*) inside R(t*).
  if (!range_contains(eq.t.adjoint(), eq.w.adjoint(), tol)) {
    throw NotApplicable("spectrum_of_reduced: N(t) is not contained in N(w)");
  }
  return reduced_solution(eq, m, tol).spectrum;
}

}  // namespace propersplit
