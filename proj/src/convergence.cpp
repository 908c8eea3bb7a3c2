#include "propersplit/convergence.hpp"

#include <cmath>

namespace propersplit {

namespace {

// Margin used when asserting strict inequalities rho < 1 and orderings
// rho1 <= rho2 in theorem verdicts.
constexpr double kOrderingTol = 1e-9;

// Relative gate for "x solves the equation" style identity checks.
constexpr double kIdentityTol = 1e-9;

bool loewner_leq_safe(const Matrix& a, const Matrix& b, const Tolerances& tol) {
  if (!is_hermitian(a, tol) || !is_hermitian(b, tol)) return false;
  return loewner_leq(a, b, tol);
}

bool formula_matches(double lhs, double rhs) {
  return std::abs(lhs - rhs) <= kOrderingTol * (1.0 + std::abs(rhs));
}

}  // namespace

ConvergenceReport convergence_report(const ProperSplitting& s,
                                     const Tolerances& tol) {
  const Matrix pu = pinv(s.u, tol);
  const Matrix pt = pinv(s.t, tol);
  const Matrix udv = pu * s.v;
  const Matrix udt = pu * s.t;
  const Matrix tdv = pt * s.v;
  const Matrix tdu = pt * s.u;

  ConvergenceReport r;
  r.rho_udv = spectral_radius(udv);
  r.rho_tdv = spectral_radius(tdv);
  r.rho_tdu = spectral_radius(tdu);
  r.converges = r.rho_udv < 1.0 - tol.psd_tol;

  const bool udv_psd = is_psd(udv, tol);

  r.prop61.tdv_psd = is_psd(tdv, tol);
  const Matrix tv = s.t * s.v.adjoint();
  r.prop61.tvstar_psd_rank =
      is_psd(tv, tol) && numeric_rank(tv, tol) == numeric_rank(s.v, tol);
  r.prop61.sandwich =
      udv_psd && loewner_leq_safe(udv, orth_projector(s.v.adjoint(), tol), tol);
  r.prop61.formula_lhs = r.rho_udv;
  r.prop61.formula_rhs = r.rho_tdv / (1.0 + r.rho_tdv);
  r.prop61.formula_holds =
      udv_psd && formula_matches(r.prop61.formula_lhs, r.prop61.formula_rhs);

  const Matrix prs = orth_projector(s.t.adjoint(), tol);
  r.prop62.udt_sandwich = is_psd(udt, tol) && loewner_leq_safe(udt, prs, tol);
  r.prop62.formula_lhs = r.rho_udv;
  // rho(pinv(t) u) vanishes only for t = 0, where the formula degenerates
  // to 0 = 0.
  r.prop62.formula_rhs =
      r.rho_tdu > tol.psd_tol ? (r.rho_tdu - 1.0) / r.rho_tdu : 0.0;
  r.prop62.formula_holds =
      udv_psd && formula_matches(r.prop62.formula_lhs, r.prop62.formula_rhs);
  return r;
}

HermitianBoundReport hermitian_solution_bound(const ProperSplitting& s,
                                              const Matrix& x_tilde,
                                              const Tolerances& tol) {
  if (x_tilde.rows() != s.t.cols() || x_tilde.cols() != s.t.cols()) {
    throw NotApplicable(
        "hermitian_solution_bound: x_tilde has the wrong shape");
  }
  if (!is_hermitian(x_tilde, tol)) {
    throw NotApplicable("hermitian_solution_bound: x_tilde is not Hermitian");
  }
  if ((s.u * x_tilde - s.v).norm() > kIdentityTol * (1.0 + s.v.norm())) {
    throw NotApplicable("hermitian_solution_bound: u x_tilde != v");
  }
  HermitianBoundReport r;
  r.rho_bound = spectral_radius(x_tilde);
  if (r.rho_bound >= 1.0) {
    throw NotApplicable(
        "hermitian_solution_bound: rho(x_tilde) is not below one");
  }
  r.rho_udv = spectral_radius(pinv(s.u, tol) * s.v);
  r.applicable = true;
  return r;
}

namespace {

void require_shared_t(const ProperSplitting& s1, const ProperSplitting& s2) {
  if (s1.t.rows() != s2.t.rows() || s1.t.cols() != s2.t.cols() ||
      (s1.t - s2.t).norm() != 0.0) {
    throw MismatchedT("compare: the two splittings do not share the same t");
  }
}

ComparisonVerdict finish_comparison(const ProperSplitting& s1,
                                    const ProperSplitting& s2,
                                    bool preconditions, std::string detail,
                                    const Tolerances& tol) {
  ComparisonVerdict v;
  v.preconditions_hold = preconditions;
  v.detail = std::move(detail);
  v.rho1 = spectral_radius(pinv(s1.u, tol) * s1.v);
  v.rho2 = spectral_radius(pinv(s2.u, tol) * s2.v);
  if (preconditions) {
    v.ordering_holds =
        v.rho1 <= v.rho2 + kOrderingTol && v.rho2 <= 1.0 - kOrderingTol;
    if (!v.ordering_holds) {
      v.detail = "preconditions hold but the radius ordering failed";
    }
  }
  return v;
}

}  // namespace

ComparisonVerdict compare_by_v(const ProperSplitting& s1,
                               const ProperSplitting& s2,
                               const Tolerances& tol) {
  require_shared_t(s1, s2);
  const Matrix pt = pinv(s1.t, tol);
  const Matrix tdv1 = pt * s1.v;
  const Matrix tdv2 = pt * s2.v;

  bool ok = true;
  std::string detail;
  if (!is_psd(tdv1, tol)) {
    ok = false;
    detail = "pinv(t) v1 is not PSD";
  } else if (!loewner_leq_safe(tdv1, tdv2, tol)) {
    ok = false;
    detail = "pinv(t) v1 <= pinv(t) v2 fails";
  } else if (!ranges_equal(s1.v.adjoint(), s2.v.adjoint(), tol)) {
    ok = false;
    detail = "N(v1) != N(v2)";
  }
  return finish_comparison(s1, s2, ok, std::move(detail), tol);
}

ComparisonVerdict compare_by_u(const ProperSplitting& s1,
                               const ProperSplitting& s2,
                               const Tolerances& tol) {
  require_shared_t(s1, s2);
  const Matrix pt = pinv(s1.t, tol);
  const Matrix tdu1 = pt * s1.u;
  const Matrix tdu2 = pt * s2.u;

  bool ok = true;
  std::string detail;
  if (!is_psd(tdu1, tol)) {
    ok = false;
    detail = "pinv(t) u1 is not PSD";
  } else if (!loewner_leq_safe(tdu1, tdu2, tol)) {
    ok = false;
    detail = "pinv(t) u1 <= pinv(t) u2 fails";
  } else if (!loewner_leq_safe(tdu2, orth_projector(s1.t.adjoint(), tol),
                               tol)) {
    ok = false;
    detail = "pinv(t) u2 <= P_{R(t*)} fails";
  }
  return finish_comparison(s1, s2, ok, std::move(detail), tol);
}

StructuredComparison structured_comparisons(const Matrix& t,
                                            const Tolerances& tol) {
  if (t.rows() != t.cols()) {
    throw NotSquare("structured_comparisons: t must be square");
  }
  StructuredComparison out;
  out.pp_branch = is_product_of_projections(t, tol);
  out.normal_branch = is_normal(t, tol);
  if (!out.pp_branch && !out.normal_branch) {
    throw NotApplicable(
        "structured_comparisons: t is neither a product of two orthogonal "
        "projectors nor normal");
  }

  if (out.pp_branch) {
    const auto polar = polar_splitting(t, tol);
    const auto projection = projection_splitting(t, tol);
    out.rho_polar = spectral_radius(pinv(polar.u, tol) * polar.v);
    out.rho_projection =
        spectral_radius(pinv(projection.u, tol) * projection.v);
    out.pp_ordering = out.rho_polar <= out.rho_projection + kOrderingTol &&
                      out.rho_projection <= 1.0 - kOrderingTol;
  }

  if (out.normal_branch) {
    const Matrix v2 = orth_projector(t, tol) - t;
    out.pt_minus_t_norm = operator_norm(v2);
    out.normal_convergent = out.pt_minus_t_norm <= 1.0 - kOrderingTol;

    if (is_hermitian(t, tol)) {
      const PolarFactors f = polar_decompose(t, tol);
      const Matrix slack = orth_projector(t, tol) - f.p;
      if (is_psd(slack, tol) && out.normal_convergent) {
        out.hermitian_branch = true;
        const auto polar = polar_splitting(t, tol);
        out.rho_polar = spectral_radius(pinv(polar.u, tol) * polar.v);
        out.rho_v2 = spectral_radius(v2);
        out.hermitian_ordering =
            out.rho_polar <= out.rho_v2 + kOrderingTol &&
            out.rho_v2 <= 1.0 - kOrderingTol;
      }
    }
  }
  return out;
}

}  // namespace propersplit
