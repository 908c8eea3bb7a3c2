#include "propersplit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace propersplit {

namespace {

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(std::string(what) + ": matrix has non-finite entries");
  }
}

void require_nonempty(const Matrix& a, const char* what) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw Error(std::string(what) + ": matrix must have at least one row and column");
  }
}

Eigen::JacobiSVD<Matrix> full_svd(const Matrix& a) {
  return Eigen::JacobiSVD<Matrix>(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

/// Hermitian part (a + a*) / 2; the eigenvalue tests only ever see this.
Matrix hermitian_part(const Matrix& a) {
  return Complex(0.5, 0.0) * (a + a.adjoint());
}

RealVector hermitian_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

double Tolerances::effective_rank_rtol(Index rows, Index cols) const {
  if (rank_rtol > 0.0) return rank_rtol;
  const double eps = std::numeric_limits<double>::epsilon();
  return 64.0 * eps * static_cast<double>(std::max(rows, cols));
}

Subspace::Subspace(Matrix basis, const Tolerances& tol) : basis_(std::move(basis)) {
  if (basis_.rows() < 1) {
    throw Error("Subspace: ambient dimension must be positive");
  }
  require_finite(basis_, "Subspace");
  if (basis_.cols() > 0 && numeric_rank(basis_, tol) != basis_.cols()) {
    throw Error("Subspace: basis columns are linearly dependent");
  }
}

SvdFactors svd(const Matrix& a, const Tolerances& tol) {
  require_nonempty(a, "svd");
  require_finite(a, "svd");
  auto dec = full_svd(a);
  SvdFactors f;
  f.left = dec.matrixU();
  f.singular_values = dec.singularValues();
  f.right = dec.matrixV();
  const double smax = f.singular_values.size() > 0 ? f.singular_values(0) : 0.0;
  const double cutoff = tol.effective_rank_rtol(a.rows(), a.cols()) * smax;
  f.numeric_rank = 0;
  for (Index i = 0; i < f.singular_values.size(); ++i) {
    if (f.singular_values(i) > cutoff && f.singular_values(i) > 0.0) {
      ++f.numeric_rank;
    }
  }
  return f;
}

Index numeric_rank(const Matrix& a, const Tolerances& tol) {
  return svd(a, tol).numeric_rank;
}

Matrix pinv(const Matrix& a, const Tolerances& tol) {
  const SvdFactors f = svd(a, tol);
  const Index r = f.numeric_rank;
  Matrix result = Matrix::Zero(a.cols(), a.rows());
  if (r == 0) return result;
  // V_r * diag(1/sigma) * U_r^*
  result = f.right.leftCols(r) *
           f.singular_values.head(r).cwiseInverse().cast<Complex>().asDiagonal() *
           f.left.leftCols(r).adjoint();
  return result;
}

PolarFactors polar_decompose(const Matrix& a, const Tolerances& tol) {
  const SvdFactors f = svd(a, tol);
  const Index r = f.numeric_rank;
  PolarFactors pf;
  pf.u = Matrix::Zero(a.rows(), a.cols());
  pf.p = Matrix::Zero(a.cols(), a.cols());
  if (r == 0) return pf;
  pf.u = f.left.leftCols(r) * f.right.leftCols(r).adjoint();
  pf.p = f.right.leftCols(r) *
         f.singular_values.head(r).cast<Complex>().asDiagonal() *
         f.right.leftCols(r).adjoint();
  return pf;
}

Matrix orth_projector(const Matrix& a, const Tolerances& tol) {
  const SvdFactors f = svd(a, tol);
  const Index r = f.numeric_rank;
  if (r == 0) return Matrix::Zero(a.rows(), a.rows());
  const Matrix ur = f.left.leftCols(r);
  return ur * ur.adjoint();
}

Matrix range_basis(const Matrix& a, const Tolerances& tol) {
  const SvdFactors f = svd(a, tol);
  return f.left.leftCols(f.numeric_rank);
}

Matrix nullspace_basis(const Matrix& a, const Tolerances& tol) {
  const SvdFactors f = svd(a, tol);
  return f.right.rightCols(a.cols() - f.numeric_rank);
}

Subspace min_norm_subspace(const Matrix& a, const Tolerances& tol) {
  const SvdFactors f = svd(a, tol);
  return Subspace(f.right.leftCols(f.numeric_rank), tol);
}

Subspace nullspace_subspace(const Matrix& a, const Tolerances& tol) {
  return Subspace(nullspace_basis(a, tol), tol);
}

Matrix oblique_projector(const Subspace& m, const Subspace& n,
                         const Tolerances& tol) {
  const Index dim = m.ambient_dim();
  if (n.ambient_dim() != dim) {
    throw NotAComplement("oblique_projector: subspaces live in different spaces");
  }
  if (m.dim() + n.dim() != dim) {
    throw NotAComplement("oblique_projector: dimensions do not add up to the ambient dimension");
  }
  Matrix stacked(dim, dim);
  stacked << m.basis(), n.basis();
  const auto dec = full_svd(stacked);
  const RealVector& sv = dec.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0 || sv(0) / smin > tol.cond_max) {
    throw NotAComplement("oblique_projector: stacked basis is singular or too ill-conditioned");
  }
  // Q = [B_m 0] * [B_m B_n]^{-1}; only the first dim(m) rows of the inverse
  // contribute, so build them from the SVD factors directly.
  const Matrix inverse = dec.matrixV() *
                         sv.cwiseInverse().cast<Complex>().asDiagonal() *
                         dec.matrixU().adjoint();
  return m.basis() * inverse.topRows(m.dim());
}

ComplexVector spectrum(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw NotSquare("spectrum: matrix is not square");
  }
  require_nonempty(a, "spectrum");
  require_finite(a, "spectrum");
  Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error("spectrum: eigenvalue iteration failed to converge");
  }
  return es.eigenvalues();
}

double spectral_radius(const Matrix& a) {
  return spectrum(a).cwiseAbs().maxCoeff();
}

double operator_norm(const Matrix& a) {
  require_nonempty(a, "operator_norm");
  require_finite(a, "operator_norm");
  return full_svd(a).singularValues()(0);
}

bool is_hermitian(const Matrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= tol.sym_tol * (1.0 + a.norm());
}

bool is_normal(const Matrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = a.norm();
  return (a * a.adjoint() - a.adjoint() * a).norm() <=
         tol.sym_tol * (1.0 + scale * scale);
}

bool is_psd(const Matrix& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol)) return false;
  const Matrix h = hermitian_part(a);
  const RealVector ev = hermitian_eigenvalues(h);
  return ev.minCoeff() >= -tol.psd_tol * (1.0 + h.norm());
}

bool loewner_leq(const Matrix& a, const Matrix& b, const Tolerances& tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error("loewner_leq: matrices must be square and of equal size");
  }
  if (!is_hermitian(a, tol)) {
    throw NotHermitian("loewner_leq: left argument is not Hermitian");
  }
  if (!is_hermitian(b, tol)) {
    throw NotHermitian("loewner_leq: right argument is not Hermitian");
  }
  const Matrix d = b - a;
  const RealVector ev = hermitian_eigenvalues(d);
  return ev.minCoeff() >= -tol.psd_tol * (1.0 + d.norm());
}

bool ranges_equal(const Matrix& a, const Matrix& b, const Tolerances& tol) {
  if (a.rows() != b.rows()) {
    throw Error("ranges_equal: matrices must have the same number of rows");
  }
  const Matrix pa = orth_projector(a, tol);
  const Matrix pb = orth_projector(b, tol);
  const double scale = 1.0 + std::sqrt(static_cast<double>(a.rows()));
  return (pa - pb).norm() <= tol.sym_tol * scale;
}

bool range_contains(const Matrix& a, const Matrix& b, const Tolerances& tol) {
  if (a.rows() != b.rows()) {
    throw Error("range_contains: matrices must have the same number of rows");
  }
  const Matrix pa = orth_projector(a, tol);
  return (b - pa * b).norm() <= tol.sym_tol * (1.0 + b.norm());
}

GrevilleCheck check_greville(const Matrix& t1, const Matrix& t2,
                             const Tolerances& tol) {
  if (t1.cols() != t2.rows()) {
    throw Error("check_greville: inner dimensions do not match");
  }
  // The identity checks in this family use a fixed 1e-9 relative gate; see
  // the splitting diagnostics for the same convention.
  constexpr double kIdentityTol = 1e-9;
  GrevilleCheck out;
  const Matrix product = t1 * t2;
  const Matrix lhs = pinv(product, tol);
  const Matrix rhs = pinv(t2, tol) * pinv(t1, tol);
  out.law_holds =
      (lhs - rhs).norm() <= kIdentityTol * (1.0 + lhs.norm() + rhs.norm());
  const bool c1 = range_contains(t2, t1.adjoint() * t1 * t2, tol);
  const bool c2 =
      range_contains(t1.adjoint(), t2 * t2.adjoint() * t1.adjoint(), tol);
  out.inclusions_hold = c1 && c2;
  return out;
}

}  // namespace propersplit
