#pragma once

#include "propersplit/linalg.hpp"

namespace propersplit {

/// A proper splitting t = u - v: R(u) = R(t) and N(u) = N(t).
/// Instances are produced by validate_proper or the constructions below.
struct ProperSplitting {
  Matrix t;
  Matrix u;
  Matrix v;  ///< u - t
};

/// Products, spectral radii and structure flags of a proper splitting.
struct SplittingDiagnostics {
  Matrix udv;  ///< pinv(u) * v, the iteration matrix seed
  Matrix udt;  ///< pinv(u) * t
  Matrix tdv;  ///< pinv(t) * v
  Matrix tdu;  ///< pinv(t) * u

  double rho_udv = 0.0;
  double rho_tdv = 0.0;
  double rho_tdu = 0.0;

  // The six Hermitian conditions are equivalent for a proper splitting:
  // v t*, u t*, v u* Hermitian iff pinv(u) v, pinv(t) u, pinv(t) v are.
  bool herm_vt = false;
  bool herm_ut = false;
  bool herm_vu = false;
  bool herm_udv = false;
  bool herm_tdu = false;
  bool herm_tdv = false;

  bool psd_udv = false;  ///< pinv(u) v positive semidefinite
  bool psd_udt = false;  ///< pinv(u) t positive semidefinite

  // Relative residuals of the structural identities:
  double id_t_residual = 0.0;        ///< t = u (I - pinv(u) v)
  double id_pinv_residual = 0.0;     ///< pinv(t) = (I - pinv(u) v)^{-1} pinv(u)
  double id_greville_residual = 0.0; ///< pinv(pinv(t) u) = pinv(u) t
};

/// Checks that u - (u - t) is a proper splitting of t and packages it.
/// Throws NotProper naming the condition that failed.
ProperSplitting validate_proper(const Matrix& t, const Matrix& u,
                                const Tolerances& tol = {});

/// Products and flags for a validated splitting. Throws SingularIteration
/// when I - pinv(u) v is numerically singular (it is invertible in exact
/// arithmetic for every proper splitting).
SplittingDiagnostics diagnostics(const ProperSplitting& s,
                                 const Tolerances& tol = {});

/// Splitting induced by the polar decomposition: u is the partial isometry
/// of t. Then pinv(u) v = P_{R(t*)} - |t|, which is PSD iff ||t|| <= 1.
ProperSplitting polar_splitting(const Matrix& t, const Tolerances& tol = {});

/// Splitting u = Q_{R(t) // N(t)} for square t whose range and nullspace
/// are complementary. Throws NotSquare or NotAComplement.
ProperSplitting projection_splitting(const Matrix& t,
                                     const Tolerances& tol = {});

/// True iff t equals P_{R(t)} * P_{R(t*)}, i.e. t is a product of two
/// orthogonal projectors.
bool is_product_of_projections(const Matrix& t, const Tolerances& tol = {});

/// Splitting u = P_{R(t)} for a normal matrix t. Throws NotSquare or
/// NotNormal.
ProperSplitting range_projector_splitting(const Matrix& t,
                                          const Tolerances& tol = {});

}  // namespace propersplit
