#pragma once

#include "propersplit/types.hpp"

namespace propersplit {

/// Full SVD with a numeric rank decided by the relative cutoff in tol.
SvdFactors svd(const Matrix& a, const Tolerances& tol = {});

/// Numeric rank of a (singular values above rank_rtol * sigma_max).
Index numeric_rank(const Matrix& a, const Tolerances& tol = {});

/// Moore-Penrose pseudoinverse via SVD; singular values at or below the
/// cutoff are dropped. The zero matrix maps to the zero of transposed shape.
Matrix pinv(const Matrix& a, const Tolerances& tol = {});

/// Polar decomposition a = u * p with u a partial isometry (u*u equals the
/// orthogonal projector onto R(a*)) and p = |a| positive semidefinite.
PolarFactors polar_decompose(const Matrix& a, const Tolerances& tol = {});

/// Orthogonal projector onto R(a).
Matrix orth_projector(const Matrix& a, const Tolerances& tol = {});

/// Orthonormal basis of R(a) (first numeric_rank left singular vectors).
Matrix range_basis(const Matrix& a, const Tolerances& tol = {});

/// Orthonormal basis of N(a) (trailing right singular vectors).
Matrix nullspace_basis(const Matrix& a, const Tolerances& tol = {});

/// R(a*) as a Subspace; the canonical complement of N(a).
Subspace min_norm_subspace(const Matrix& a, const Tolerances& tol = {});

/// N(a) as a Subspace.
Subspace nullspace_subspace(const Matrix& a, const Tolerances& tol = {});

/// Projector onto m along n. Throws NotAComplement unless dim m + dim n
/// equals the ambient dimension and the stacked basis [B_m B_n] is square
/// with condition number at most tol.cond_max.
Matrix oblique_projector(const Subspace& m, const Subspace& n,
                         const Tolerances& tol = {});

/// Eigenvalues of a square matrix (unordered). Throws NotSquare.
ComplexVector spectrum(const Matrix& a);

/// Largest eigenvalue magnitude. Throws NotSquare.
double spectral_radius(const Matrix& a);

/// Largest singular value (spectral norm).
double operator_norm(const Matrix& a);

/// ||a - a*||_F <= sym_tol * (1 + ||a||_F). Requires a square.
bool is_hermitian(const Matrix& a, const Tolerances& tol = {});

/// ||a a* - a* a||_F <= sym_tol * (1 + ||a||_F^2). Requires a square.
bool is_normal(const Matrix& a, const Tolerances& tol = {});

/// Hermitian within sym_tol and smallest eigenvalue of the Hermitian part
/// at least -psd_tol * (1 + norm). The symmetry gate precedes the
/// eigenvalue check; a non-Hermitian matrix is never reported PSD.
bool is_psd(const Matrix& a, const Tolerances& tol = {});

/// Loewner order: true iff b - a is PSD within psd_tol. Throws NotHermitian
/// if either argument fails the symmetry gate.
bool loewner_leq(const Matrix& a, const Matrix& b, const Tolerances& tol = {});

/// True iff R(a) = R(b), decided by comparing orthogonal projectors.
/// Requires equal row counts.
bool ranges_equal(const Matrix& a, const Matrix& b, const Tolerances& tol = {});

/// True iff R(b) is contained in R(a): (I - P_{R(a)}) b vanishes.
bool range_contains(const Matrix& a, const Matrix& b,
                    const Tolerances& tol = {});

/// Reverse-order law check for the product t1 * t2.
struct GrevilleCheck {
  bool law_holds = false;         ///< pinv(t1 t2) == pinv(t2) pinv(t1)
  bool inclusions_hold = false;   ///< R(t1* t1 t2) in R(t2) and
                                  ///< R(t2 t2* t1*) in R(t1*)
};

/// Tests the reverse-order law and its two range-inclusion characterisations.
GrevilleCheck check_greville(const Matrix& t1, const Matrix& t2,
                             const Tolerances& tol = {});

}  // namespace propersplit
