#pragma once

#include <Eigen/Dense>
#include <complex>

#include "propersplit/errors.hpp"

namespace propersplit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numeric gates shared by every operation.
///
/// All comparisons in the library are relative: a quantity q is treated as
/// zero when |q| <= tol * (1 + scale) for the natural scale of the check.
struct Tolerances {
  /// Relative singular-value cutoff for numeric rank. Zero (the default)
  /// selects the size-dependent value max(m, n) * eps * 64 at the call site;
  /// explicit values must be strictly positive.
  double rank_rtol = 0.0;

  /// Hermitian-deviation gate: ||A - A*||_F <= sym_tol * (1 + ||A||_F).
  double sym_tol = 1e-10;

  /// Eigenvalue slack for positive-semidefinite and Loewner-order tests.
  double psd_tol = 1e-10;

  /// Condition cap for the stacked basis of an oblique projector.
  double cond_max = 1e12;

  /// The cutoff actually applied to singular values of an m-by-n matrix.
  double effective_rank_rtol(Index rows, Index cols) const;
};

/// Full singular value decomposition a = left * diag(singular_values) * right*.
struct SvdFactors {
  Matrix left;                ///< m-by-m unitary
  RealVector singular_values; ///< min(m, n) values, nonincreasing, >= 0
  Matrix right;               ///< n-by-n unitary
  Index numeric_rank = 0;     ///< count of singular values above the cutoff
};

/// Polar factors a = u * p with u a partial isometry and p = |a| PSD.
struct PolarFactors {
  Matrix u;  ///< m-by-n, u*u = projector onto R(a*)
  Matrix p;  ///< n-by-n, the modulus (a*a)^(1/2)
};

/// A subspace of C^n represented by a full-column-rank basis.
class Subspace {
 public:
  /// Validates that the columns are linearly independent (numeric rank = k).
  explicit Subspace(Matrix basis, const Tolerances& tol = {});

  const Matrix& basis() const { return basis_; }
  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }

 private:
  Matrix basis_;
};

}  // namespace propersplit
