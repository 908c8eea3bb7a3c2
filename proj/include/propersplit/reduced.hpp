#pragma once

#include <optional>

#include "propersplit/linalg.hpp"

namespace propersplit {

/// The linear matrix equation t * x = w.
struct MatrixEquation {
  Matrix t;  ///< m-by-n coefficient
  Matrix w;  ///< m-by-r right-hand side
};

/// Reduced solution for a complement m of N(t): the unique solution whose
/// column space lies inside m.
struct ReducedSolutionReport {
  Matrix x;
  double residual = 0.0;    ///< ||t x - w||_F
  bool hermitian = false;   ///< meaningful for square x only
  bool psd = false;         ///< meaningful for square x only
  ComplexVector spectrum;   ///< eigenvalues when x is square, empty otherwise
};

/// Existence answers for t x = w, plus a witness complement for the
/// Hermitian case when one exists.
struct ExistenceFlags {
  bool solvable = false;                  ///< R(w) inside R(t)
  bool hermitian_solution_exists = false; ///< some Hermitian solution
  bool psd_solution_exists = false;       ///< some PSD solution
  bool hermitian_reduced_exists = false;  ///< Hermitian among reduced solutions
  bool psd_reduced_exists = false;        ///< PSD among reduced solutions
  std::optional<Subspace> witness;        ///< complement realising the above
};

/// Structural classification of a reduced solution.
struct ReducedClassification {
  bool hermitian = false;
  bool normal = false;
  bool psd = false;
  bool inclusion = false;  ///< R(w*) inside m
};

/// True iff R(w) is contained in R(t) within tolerance.
bool check_solvable(const MatrixEquation& eq, const Tolerances& tol = {});

/// The reduced solution x = Q_{m // N(t)} * pinv(t) * w. Throws NotSolvable
/// when the equation has no solution and NotAComplement when m does not
/// complement N(t).
ReducedSolutionReport reduced_solution(const MatrixEquation& eq,
                                       const Subspace& m,
                                       const Tolerances& tol = {});

/// Existence of Hermitian / PSD (reduced) solutions. The Hermitian and PSD
/// questions ask about square solutions, so those flags are only raised when
/// w has as many columns as t; the witness complement is
/// R(w*) + (R(w*) + N(t))^perp when a Hermitian reduced solution exists.
ExistenceFlags existence_flags(const MatrixEquation& eq,
                               const Tolerances& tol = {});

/// Classifies a reduced solution x of eq with respect to the complement m.
ReducedClassification classify_reduced(const Matrix& x,
                                       const MatrixEquation& eq,
                                       const Subspace& m,
                                       const Tolerances& tol = {});

/// Eigenvalues of the reduced solution for m. They coincide with the
/// spectrum of pinv(t) * w whenever N(t) is contained in N(w); that
/// hypothesis is validated here. Throws NotSquare for non-square solutions
/// and NotApplicable when the nullspace hypothesis fails.
ComplexVector spectrum_of_reduced(const MatrixEquation& eq, const Subspace& m,
                                  const Tolerances& tol = {});

}  // namespace propersplit
