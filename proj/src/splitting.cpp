#include "propersplit/splitting.hpp"

#include <Eigen/LU>

namespace propersplit {

namespace {

void require_same_shape(const Matrix& t, const Matrix& u, const char* what) {
  if (t.rows() != u.rows() || t.cols() != u.cols()) {
    throw Error(std::string(what) + ": t and u must have the same shape");
  }
  if (t.rows() < 1 || t.cols() < 1) {
    throw Error(std::string(what) + ": empty matrix");
  }
  if (!t.allFinite() || !u.allFinite()) {
    throw Error(std::string(what) + ": matrix has non-finite entries");
  }
}

double relative_residual(const Matrix& got, const Matrix& want) {
  return (got - want).norm() / (1.0 + want.norm());
}

}  // namespace

ProperSplitting validate_proper(const Matrix& t, const Matrix& u,
                                const Tolerances& tol) {
  require_same_shape(t, u, "validate_proper");
  if (!ranges_equal(u, t, tol)) {
    throw NotProper("validate_proper: R(u) != R(t)");
  }
  if (!ranges_equal(u.adjoint(), t.adjoint(), tol)) {
    throw NotProper("validate_proper: N(u) != N(t)");
  }
  ProperSplitting s{t, u, u - t};
  // Consequences of the definition; failures here indicate numerically
  // inconsistent inputs rather than a wrong splitting shape.
  if (!range_contains(t, s.v, tol)) {
    throw NotProper("validate_proper: R(v) escapes R(t)");
  }
  if (!range_contains(t.adjoint(), s.v.adjoint(), tol)) {
    throw NotProper("validate_proper: N(t) escapes N(v)");
  }
  return s;
}

SplittingDiagnostics diagnostics(const ProperSplitting& s,
                                 const Tolerances& tol) {
  const Matrix pu = pinv(s.u, tol);
  const Matrix pt = pinv(s.t, tol);

  SplittingDiagnostics d;
  d.udv = pu * s.v;
  d.udt = pu * s.t;
  d.tdv = pt * s.v;
  d.tdu = pt * s.u;

  const Index n = s.t.cols();
  const Matrix iter = Matrix::Identity(n, n) - d.udv;
  if (numeric_rank(iter, tol) < n) {
    throw SingularIteration(
        "diagnostics: I - pinv(u) v is numerically singular");
  }

  d.rho_udv = spectral_radius(d.udv);
  d.rho_tdv = spectral_radius(d.tdv);
  d.rho_tdu = spectral_radius(d.tdu);

  d.herm_vt = is_hermitian(s.v * s.t.adjoint(), tol);
  d.herm_ut = is_hermitian(s.u * s.t.adjoint(), tol);
  d.herm_vu = is_hermitian(s.v * s.u.adjoint(), tol);
  d.herm_udv = is_hermitian(d.udv, tol);
  d.herm_tdu = is_hermitian(d.tdu, tol);
  d.herm_tdv = is_hermitian(d.tdv, tol);

  d.psd_udv = is_psd(d.udv, tol);
  d.psd_udt = is_psd(d.udt, tol);

  d.id_t_residual = relative_residual(s.u * iter, s.t);
  d.id_pinv_residual =
      relative_residual(iter.partialPivLu().solve(pu), pt);
  d.id_greville_residual = relative_residual(pinv(d.tdu, tol), d.udt);
  return d;
}

ProperSplitting polar_splitting(const Matrix& t, const Tolerances& tol) {
  const PolarFactors f = polar_decompose(t, tol);
  return validate_proper(t, f.u, tol);
}

ProperSplitting projection_splitting(const Matrix& t, const Tolerances& tol) {
  if (t.rows() != t.cols()) {
    throw NotSquare("projection_splitting: t must be square");
  }
  const Subspace range(range_basis(t, tol), tol);
  const Subspace null = nullspace_subspace(t, tol);
  // throws NotAComplement when R(t) and N(t) do not split the space
  const Matrix q = oblique_projector(range, null, tol);
  return validate_proper(t, q, tol);
}

bool is_product_of_projections(const Matrix& t, const Tolerances& tol) {
  if (t.rows() != t.cols()) return false;
  const Matrix product =
      orth_projector(t, tol) * orth_projector(t.adjoint(), tol);
  return (t - product).norm() <= tol.sym_tol * (1.0 + t.norm());
}

ProperSplitting range_projector_splitting(const Matrix& t,
                                          const Tolerances& tol) {
  if (t.rows() != t.cols()) {
    throw NotSquare("range_projector_splitting: t must be square");
  }
  if (!is_normal(t, tol)) {
    throw NotNormal("range_projector_splitting: t is not normal");
  }
  return validate_proper(t, orth_projector(t, tol), tol);
}

}  // namespace propersplit
