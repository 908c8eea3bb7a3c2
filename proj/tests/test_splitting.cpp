#include "doctest.h"
#include "propersplit/splitting.hpp"
#include "test_support.hpp"

using namespace propersplit;
using namespace testsupport;

namespace {

// Non-throwing Loewner comparison for flag equivalences on float data.
bool loewner_leq_safe(const Matrix& a, const Matrix& b) {
  if (!is_hermitian(a) || !is_hermitian(b)) return false;
  return loewner_leq(a, b);
}

}  // namespace

TEST_CASE("validate_proper: accepts and rejects") {
  // the two regression pairs are proper
  CHECK_NOTHROW(validate_proper(mat2(3, -1, 0, 2), mat2(4, 2, 1, 2)));
  CHECK_NOTHROW(validate_proper(mat2(1, 0, 1, 2), mat2(1, 0, 0, 2)));

  // range mismatch
  CHECK_THROWS_AS(validate_proper(diag2(1, 0), Matrix::Identity(2, 2)),
                  NotProper);
  // same range, different nullspace
  CHECK_THROWS_AS(validate_proper(diag2(1, 0), mat2(0, 1, 0, 0)), NotProper);
}

TEST_CASE("diagnostics: frozen products for the first regression pair") {
  const auto s = validate_proper(mat2(3, -1, 0, 2), mat2(4, 2, 1, 2));
  CHECK(mat_close(s.v, mat2(1, 3, 1, 0), 1e-14));
  const auto d = diagnostics(s);
  CHECK(mat_close(d.tdv, mat2(0.5, 1, 0.5, 0), 1e-12));
  CHECK(mat_close(d.udv, mat2(0, 1, 0.5, -0.5), 1e-12));
  CHECK(d.rho_udv == doctest::Approx(1.0).epsilon(1e-12));
  // identities hold
  CHECK(d.id_t_residual <= 1e-9);
  CHECK(d.id_pinv_residual <= 1e-9);
  CHECK(d.id_greville_residual <= 1e-9);
}

TEST_CASE("diagnostics: frozen products for the second regression pair") {
  const auto s = validate_proper(mat2(1, 0, 1, 2), mat2(1, 0, 0, 2));
  CHECK(mat_close(s.v, mat2(0, 0, -1, 0), 1e-14));
  const auto d = diagnostics(s);
  CHECK(mat_close(d.udt, mat2(1, 0, 0.5, 1), 1e-12));
  CHECK(mat_close(d.udv, mat2(0, 0, -0.5, 0), 1e-12));
  CHECK(d.rho_udv == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("diagnostics: identities on random proper splittings") {
  Rng rng(0x5eed0201);
  for (int k = 0; k < 50; ++k) {
    const Index m = rng.integer(2, 7);
    const Index n = rng.integer(2, 7);
    const Index r = rng.integer(1, std::min(m, n));
    const Matrix t = rng.matrix_with_rank(m, n, r);
    const ProperSplitting s = random_proper_splitting(rng, t);
    const auto d = diagnostics(s);
    CHECK(d.id_t_residual <= 1e-9);
    CHECK(d.id_pinv_residual <= 1e-9);
    CHECK(d.id_greville_residual <= 1e-9);
    // the six Hermitian flags agree (equivalent conditions)
    const bool all_true = d.herm_vt && d.herm_ut && d.herm_vu && d.herm_udv &&
                          d.herm_tdu && d.herm_tdv;
    const bool all_false = !d.herm_vt && !d.herm_ut && !d.herm_vu &&
                           !d.herm_udv && !d.herm_tdu && !d.herm_tdv;
    CHECK((all_true || all_false));
  }
}

TEST_CASE("diagnostics: Hermitian flags all fire on scaled splittings") {
  Rng rng(0x5eed0202);
  for (int k = 0; k < 20; ++k) {
    const Index n = rng.integer(2, 6);
    const Matrix t = rng.matrix_with_rank(n, n, rng.integer(1, n));
    const double beta = rng.real(0.1, 3.0);
    const auto s = validate_proper(t, (1.0 + beta) * t);
    const auto d = diagnostics(s);
    CHECK(d.herm_vt);
    CHECK(d.herm_ut);
    CHECK(d.herm_vu);
    CHECK(d.herm_udv);
    CHECK(d.herm_tdu);
    CHECK(d.herm_tdv);
    CHECK(d.psd_udv);
    CHECK(d.psd_udt);
  }
}

TEST_CASE("diagnostics: PSD characterisations of pinv(u) v and pinv(u) t") {
  Rng rng(0x5eed0203);
  int psd_seen = 0;
  for (int k = 0; k < 60; ++k) {
    const Index m = rng.integer(2, 6);
    const Index n = rng.integer(2, 6);
    const Matrix t = rng.matrix_with_rank(m, n, rng.integer(1, std::min(m, n)));
    ProperSplitting s;
    switch (k % 3) {
      case 0:  // PSD side
        s = validate_proper(t, (1.0 + rng.real(0.1, 2.0)) * t);
        break;
      case 1:  // Hermitian but not PSD side
        s = validate_proper(t, (1.0 - rng.real(0.1, 0.9)) * t);
        break;
      default:  // generic
        s = random_proper_splitting(rng, t);
        break;
    }
    const auto d = diagnostics(s);
    const Matrix prs = orth_projector(s.t.adjoint());

    const Matrix vu = s.v * s.u.adjoint();
    const bool via_vu =
        is_psd(vu) && numeric_rank(vu) == numeric_rank(s.v);
    const bool via_udt = is_hermitian(d.udt) && loewner_leq_safe(d.udt, prs);
    CHECK(d.psd_udv == via_vu);
    CHECK(d.psd_udv == via_udt);

    const Matrix tu = s.t * s.u.adjoint();
    const bool via_tu =
        is_psd(tu) && numeric_rank(tu) == numeric_rank(s.t);
    const bool via_udv = is_hermitian(d.udv) && loewner_leq_safe(d.udv, prs);
    CHECK(d.psd_udt == via_tu);
    CHECK(d.psd_udt == via_udv);

    psd_seen += d.psd_udv ? 1 : 0;
  }
  CHECK(psd_seen >= 20);  // the scaled third keeps the positive side alive
}

TEST_CASE("diagnostics: singular iteration guard") {
  // Hand-built (non-proper) data where pinv(u) v has eigenvalue one. The
  // struct is filled directly to document the numeric guard; validate_proper
  // would already have rejected it.
  ProperSplitting s;
  s.u = Matrix::Identity(2, 2);
  s.v = diag2(1, 0);
  s.t = s.u - s.v;
  CHECK_THROWS_AS(diagnostics(s), SingularIteration);
}

TEST_CASE("polar_splitting: frozen worked example") {
  const double c = std::sqrt(2.0) / 2.0;
  const Matrix t = mat2(0.5, 0, -0.5, 0);
  const auto s = polar_splitting(t);
  CHECK(mat_close(s.u, mat2(c, 0, -c, 0), 1e-12));
  const auto d = diagnostics(s);
  // pinv(u) v = P_{R(t*)} - |t| = diag(1 - sqrt(2)/2, 0)
  CHECK(mat_close(d.udv, diag2(1.0 - c, 0), 1e-12));
  CHECK(d.rho_udv == doctest::Approx((2.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("polar_splitting: iteration seed equals P_{R(t*)} - |t|") {
  Rng rng(0x5eed0204);
  for (int k = 0; k < 30; ++k) {
    const Index m = rng.integer(2, 7);
    const Index n = rng.integer(2, 7);
    const Matrix raw = rng.matrix_with_rank(m, n, rng.integer(1, std::min(m, n)));
    const Matrix t = raw / (rng.real(1.1, 4.0) * operator_norm(raw));
    const auto s = polar_splitting(t);
    const auto d = diagnostics(s);
    const PolarFactors f = polar_decompose(t);
    CHECK(mat_close(d.udv, orth_projector(t.adjoint()) - f.p, 1e-10));
    // partial isometry pseudoinverse is the adjoint
    CHECK(mat_close(pinv(s.u), s.u.adjoint(), 1e-10));
    // spectrum of the seed: {1 - sigma_i} plus zeros
    const SvdFactors sv = svd(t);
    ComplexVector expected(n);
    expected.setZero();
    for (Index i = 0; i < sv.numeric_rank; ++i) {
      expected(i) = Complex(1.0 - sv.singular_values(i), 0);
    }
    CHECK(spectra_match(spectrum(d.udv), expected, 1e-9));
  }
}

TEST_CASE("projection_splitting: frozen worked example") {
  const Matrix t = mat2(0.5, 0, -0.5, 0);
  const auto s = projection_splitting(t);
  CHECK(mat_close(s.u, mat2(1, 0, -1, 0), 1e-12));
  CHECK(mat_close(s.v, mat2(0.5, 0, -0.5, 0), 1e-12));
  const auto d = diagnostics(s);
  CHECK(mat_close(d.udv, diag2(0.5, 0), 1e-12));
  CHECK(d.rho_udv == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("projection_splitting: rejects non-complementary range and nullspace") {
  // nilpotent: R(t) = N(t) = span{e1}
  CHECK_THROWS_AS(projection_splitting(mat2(0, 1, 0, 0)), NotAComplement);
  CHECK_THROWS_AS(projection_splitting(Matrix::Zero(2, 3)), NotSquare);
}

TEST_CASE("is_product_of_projections") {
  // the worked example factors through its range and row-space projectors
  CHECK(is_product_of_projections(mat2(0.5, 0, -0.5, 0)));
  // nilpotent does not
  CHECK_FALSE(is_product_of_projections(mat2(0, 1, 0, 0)));
  CHECK_FALSE(is_product_of_projections(Matrix::Zero(2, 3)));

  // products of two orthogonal projectors are recognised
  Rng rng(0x5eed0205);
  for (int k = 0; k < 20; ++k) {
    const Index n = rng.integer(2, 6);
    const Matrix pa = orth_projector(rng.matrix_with_rank(n, n, rng.integer(1, n)));
    const Matrix pb = orth_projector(rng.matrix_with_rank(n, n, rng.integer(1, n)));
    CHECK(is_product_of_projections(pa * pb));
    // while generic matrices are not
    CHECK_FALSE(is_product_of_projections(rng.matrix(n, n)));
  }
}

TEST_CASE("range_projector_splitting: normal inputs") {
  // diagonal with a complex phase, plus a zero block
  Matrix t = Matrix::Zero(2, 2);
  t(0, 0) = 0.9 * std::exp(Complex(0, 1.0471975511965976));  // pi/3
  const auto s = range_projector_splitting(t);
  CHECK(mat_close(s.u, diag2(1, 0), 1e-12));
  CHECK(mat_close(s.v, s.u - t, 1e-14));

  CHECK_THROWS_AS(range_projector_splitting(mat2(0, 1, 0, 0)), NotNormal);
  CHECK_THROWS_AS(range_projector_splitting(Matrix::Zero(2, 3)), NotSquare);

  Rng rng(0x5eed0206);
  for (int k = 0; k < 20; ++k) {
    // random normal matrix: unitary conjugation of a diagonal
    const Index n = rng.integer(2, 6);
    const Matrix q = rng.unitary(n);
    ComplexVector d(n);
    for (Index i = 0; i < n; ++i) {
      d(i) = rng.coin() ? rng.entry() : Complex(0, 0);
    }
    const Matrix t2 = q * d.asDiagonal() * q.adjoint();
    if (numeric_rank(t2) == 0) continue;
    CHECK_NOTHROW(range_projector_splitting(t2));
  }
}
