#include <cmath>

#include "doctest.h"
#include "propersplit/solver.hpp"
#include "test_support.hpp"

using namespace propersplit;
using namespace testsupport;

namespace {

Subspace full_space(Index n) { return Subspace(Matrix::Identity(n, n)); }

Subspace span_e1() {
  Matrix b(2, 1);
  b << Complex(1, 0), Complex(0, 0);
  return Subspace(b);
}

Subspace span_ones() {
  Matrix b(2, 1);
  b << Complex(1, 0), Complex(1, 0);
  return Subspace(b);
}

}  // namespace

TEST_CASE("build_iteration: frozen scalar and diagonal operators") {
  {
    const Matrix one = Matrix::Identity(1, 1);
    const auto ops = build_iteration(validate_proper(one, 2.0 * one), one,
                                     full_space(1));
    CHECK(std::abs(ops.y(0, 0) - 0.5) <= 1e-15);
    CHECK(std::abs(ops.z(0, 0) - 0.5) <= 1e-15);
    CHECK(ops.rho_y == doctest::Approx(0.5).epsilon(1e-12));
  }
  {
    const auto s = validate_proper(diag2(1, 0), diag2(2, 0));
    const auto ops = build_iteration(s, diag2(1, 0), span_e1());
    CHECK(mat_close(ops.y, diag2(0.5, 0), 1e-12));
    CHECK(mat_close(ops.z, diag2(0.5, 0), 1e-12));
  }
}

TEST_CASE("build_iteration: minimal-norm complement gives pinv(u) products") {
  Rng rng(9101);
  for (int trial = 0; trial < 30; ++trial) {
    const Index rows = rng.integer(2, 5);
    const Index cols = rng.integer(2, 5);
    const Index r = rng.integer(1, std::min(rows, cols));
    const Matrix t = rng.matrix_with_rank(rows, cols, r);
    const auto s = random_proper_splitting(rng, t);
    const Matrix w = t * rng.matrix(cols, rng.integer(1, 3));

    const auto ops = build_iteration(s, w, min_norm_subspace(t));
    CHECK(mat_close(ops.y, pinv(s.u) * s.v, 1e-9));
    CHECK(mat_close(ops.z, pinv(s.u) * w, 1e-9));
  }
}

TEST_CASE("build_iteration: operators solve, stay in m, share the radius") {
  Rng rng(9102);
  for (int trial = 0; trial < 30; ++trial) {
    const Index rows = rng.integer(2, 5);
    const Index cols = rng.integer(2, 5);
    const Index r = rng.integer(1, std::min(rows, cols));
    const Matrix t = rng.matrix_with_rank(rows, cols, r);
    const auto s = random_proper_splitting(rng, t);
    const Matrix w = t * rng.matrix(cols, 2);

    // A complement of N(t) tilted away from R(t*): basis + small noise.
    Matrix basis = min_norm_subspace(t).basis();
    basis += 0.2 * rng.matrix(basis.rows(), basis.cols());
    Subspace m(basis);

    const auto ops = build_iteration(s, w, m);
    CHECK((s.u * ops.y - s.v).norm() <= 1e-9 * (1.0 + s.v.norm()));
    CHECK((s.u * ops.z - w).norm() <= 1e-9 * (1.0 + w.norm()));
    CHECK(range_contains(m.basis(), ops.y));
    CHECK(range_contains(m.basis(), ops.z));
    CHECK(std::abs(ops.rho_y - spectral_radius(pinv(s.u) * s.v)) <= 1e-9);
  }
}

TEST_CASE("build_iteration: rejects unsolvable w and bad complements") {
  const auto s = validate_proper(diag2(1, 0), diag2(2, 0));
  CHECK_THROWS_AS(build_iteration(s, mat2(0, 0, 1, 0), span_e1()),
                  NotSolvable);
  Matrix e2(2, 1);
  e2 << Complex(0, 0), Complex(1, 0);
  CHECK_THROWS_AS(build_iteration(s, diag2(1, 0), Subspace(e2)),
                  NotAComplement);
}

TEST_CASE("solve_iterative: scalar iteration halves its steps") {
  const Matrix one = Matrix::Identity(1, 1);
  const auto report = solve_iterative(validate_proper(one, 2.0 * one), one,
                                      full_space(1));
  CHECK(report.converged);
  CHECK(report.status == SolveStatus::converged);
  CHECK(std::abs(report.x(0, 0) - 1.0) <= 1e-9);
  CHECK(report.rho_ym == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(report.rho_warning);
  REQUIRE(report.step_norms.size() >= 10);
  for (std::size_t i = 1; i + 1 < report.step_norms.size(); ++i) {
    CHECK(report.step_norms[i] ==
          doctest::Approx(0.5 * report.step_norms[i - 1]).epsilon(1e-9));
  }
}

TEST_CASE("solve_iterative: frozen rank-one system with a tilted complement") {
  // t = diag(1,0), u = 1.3 t, w = [[1,2],[0,0]], m = span{(1,1)}: the limit
  // is the reduced solution [[1,2],[1,2]].
  const auto s = validate_proper(diag2(1, 0), 1.3 * diag2(1, 0));
  Matrix w = mat2(1, 2, 0, 0);
  const auto report = solve_iterative(s, w, span_ones());
  CHECK(report.converged);
  CHECK(mat_close(report.x, mat2(1, 2, 1, 2), 1e-8));
  CHECK(report.residual <= 1e-8 * (1.0 + w.norm()));
  CHECK(report.oracle_gap <= 1e-7 * (1.0 + report.x.norm()));
  CHECK(report.rho_ym == doctest::Approx(0.3 / 1.3).epsilon(1e-9));
  CHECK_FALSE(report.hermitian);
  CHECK_FALSE(report.psd);
}

TEST_CASE("solve_iterative: radius one stalls at the iteration budget") {
  // pinv(u) v has spectrum {1/2, -1}: bounded but non-contractive, so the
  // step norms stop shrinking and the budget fires.
  const auto s = validate_proper(mat2(3, -1, 0, 2), mat2(4, 2, 1, 2));
  IterationConfig cfg;
  cfg.max_iter = 400;
  const auto report = solve_iterative(s, s.t, min_norm_subspace(s.t), cfg);
  CHECK_FALSE(report.converged);
  CHECK(report.status == SolveStatus::max_iterations);
  CHECK(report.iterations == 400);
  CHECK(report.rho_warning);
  CHECK(report.rho_ym == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("solve_iterative: expanding splitting trips the divergence guard") {
  // u = 0.4 t gives pinv(u) v = -1.5 P, spectral radius 3/2.
  const auto s = validate_proper(diag2(1, 2), 0.4 * diag2(1, 2));
  const auto report = solve_iterative(s, s.t, min_norm_subspace(s.t));
  CHECK(report.status == SolveStatus::diverged);
  CHECK_FALSE(report.converged);
  CHECK(report.rho_warning);
  CHECK(report.rho_ym == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("solve_iterative: rejects bad configs and misshapen starts") {
  const auto s = validate_proper(diag2(1, 1), diag2(2, 2));
  const Subspace m = min_norm_subspace(s.t);
  IterationConfig cfg;
  cfg.max_iter = 0;
  CHECK_THROWS_AS(solve_iterative(s, s.t, m, cfg), Error);
  cfg.max_iter = 10;
  cfg.step_tol = 0.0;
  CHECK_THROWS_AS(solve_iterative(s, s.t, m, cfg), Error);
  cfg.step_tol = 1e-10;
  cfg.x0 = Matrix::Zero(3, 3);
  CHECK_THROWS_AS(solve_iterative(s, s.t, m, cfg), Error);
}

TEST_CASE("solve_iterative: iteration count respects the contraction rate") {
  Rng rng(9103);
  for (int trial = 0; trial < 30; ++trial) {
    const Index rows = rng.integer(2, 5);
    const Index cols = rng.integer(2, 5);
    const Index r = rng.integer(1, std::min(rows, cols));
    const Matrix t = rng.matrix_with_rank(rows, cols, r);
    const double beta = rng.real(0.3, 2.0);
    const auto s = validate_proper(t, (1.0 + beta) * t);
    const Matrix w = t * rng.matrix(cols, 2);

    const auto report = solve_iterative(s, w, min_norm_subspace(t));
    CHECK(report.converged);
    const double rho = beta / (1.0 + beta);
    const auto bound = static_cast<Index>(
        std::ceil(std::log(1e-10) / std::log(rho))) + 50;
    CHECK(report.iterations <= bound);

    // Error recursion: past the transient, steps contract at rho + slack.
    const auto& steps = report.step_norms;
    for (std::size_t i = 5; i + 1 < steps.size(); ++i) {
      CHECK(steps[i + 1] <= (rho + 0.2) * steps[i] + 1e-14);
    }
  }
}

TEST_CASE("solve_iterative: the limit does not depend on the start") {
  Rng rng(9104);
  for (int trial = 0; trial < 20; ++trial) {
    const Index rows = rng.integer(2, 5);
    const Index cols = rng.integer(2, 5);
    const Index r = rng.integer(1, std::min(rows, cols));
    const Matrix t = rng.matrix_with_rank(rows, cols, r);
    const auto s = random_proper_splitting(rng, t);
    const Matrix w = t * rng.matrix(cols, 2);
    const Subspace m = min_norm_subspace(t);

    IterationConfig cfg_a;
    cfg_a.x0 = rng.matrix(cols, 2);
    IterationConfig cfg_b;
    cfg_b.x0 = rng.matrix(cols, 2);
    const auto a = solve_iterative(s, w, m, cfg_a);
    const auto b = solve_iterative(s, w, m, cfg_b);
    if (!a.converged || !b.converged) continue;  // radius too close to 1
    CHECK(mat_dist(a.x, b.x) <= 1e-7 * (1.0 + a.x.norm()));
  }
}

TEST_CASE("solve_iterative: Hermitian limits carry their classification") {
  Rng rng(9105);
  int hermitian_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = rng.integer(2, 5);
    const Matrix t = rng.matrix_with_rank(n, n, rng.integer(1, n));
    const auto s = validate_proper(t, (1.0 + rng.real(0.2, 1.5)) * t);
    const Matrix p = orth_projector(t.adjoint());
    const Matrix w = t * (p * rng.psd(n, n) * p);  // limit P h P is PSD

    const auto report = solve_iterative(s, w, min_norm_subspace(t));
    CHECK(report.converged);
    const auto oracle = reduced_solution({t, w}, min_norm_subspace(t));
    CHECK(report.hermitian == oracle.hermitian);
    CHECK(report.psd == oracle.psd);
    if (report.hermitian) ++hermitian_seen;
  }
  CHECK(hermitian_seen >= 15);
}

TEST_CASE("solve_two_sided: identity factors reduce to one-sided solves") {
  Rng rng(9106);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = rng.integer(2, 4);
    const Matrix t = rng.matrix_with_rank(n, n, rng.integer(1, n));
    const Matrix w = t * rng.matrix(n, n);
    const Subspace m = min_norm_subspace(t);

    // s = I: t x = w, same as the one-sided reduced solution for m.
    const Matrix x = solve_two_sided(t, Matrix::Identity(n, n), w, m);
    CHECK(mat_close(x, reduced_solution({t, w}, m).x, 1e-7 * (1 + x.norm())));

    // t = I: x s = w solved through the adjoint equation.
    const Matrix s2 = rng.matrix_with_rank(n, n, rng.integer(1, n));
    const Matrix w2 = rng.matrix(n, n) * s2;
    const Matrix x2 = solve_two_sided(Matrix::Identity(n, n), s2, w2,
                                      full_space(n));
    CHECK((x2 * s2 - w2).norm() <= 1e-7 * (1.0 + w2.norm()));
  }
}

TEST_CASE("solve_two_sided: frozen rank-one sandwich") {
  const Matrix d = diag2(1, 0);
  const Matrix x = solve_two_sided(d, d, d, span_e1());
  CHECK(std::abs(x(0, 0) - 1.0) <= 1e-8);
  CHECK((d * x * d - d).norm() <= 1e-8);
}

TEST_CASE("solve_two_sided: random solvable sandwiches") {
  Rng rng(9107);
  for (int trial = 0; trial < 20; ++trial) {
    const Index m = rng.integer(2, 4);
    const Index n = rng.integer(2, 4);
    const Index p = rng.integer(2, 4);
    const Index q = rng.integer(2, 4);
    const Matrix t = rng.matrix_with_rank(m, n, rng.integer(1, std::min(m, n)));
    const Matrix s = rng.matrix_with_rank(p, q, rng.integer(1, std::min(p, q)));
    const Matrix w = t * rng.matrix(n, p) * s;  // solvable by construction

    const Matrix x = solve_two_sided(t, s, w, min_norm_subspace(t));
    CHECK((t * x * s - w).norm() <= 1e-6 * (1.0 + w.norm()));
  }
}

TEST_CASE("solve_two_sided: failures name the offending step") {
  const Matrix d = diag2(1, 0);
  // R(w) escapes R(t): the first pass cannot start.
  CHECK_THROWS_WITH_AS(solve_two_sided(d, d, mat2(0, 0, 1, 0), span_e1()),
                       doctest::Contains("first step"), NotSolvable);
  // w = [[0,1],[0,0]] is solvable against t = I, but the intermediate
  // solution has row space outside R(s*).
  CHECK_THROWS_WITH_AS(
      solve_two_sided(Matrix::Identity(2, 2), d, mat2(0, 1, 0, 0),
                      full_space(2)),
      doctest::Contains("second step"), NotSolvable);
}

TEST_CASE("pinv_via_splitting: recovers inverses and pseudoinverses") {
  {
    const Matrix t = mat2(3, -1, 0, 2);
    const Matrix x = pinv_via_splitting(t, validate_proper(t, 2.0 * t));
    CHECK(mat_close(x, pinv(t), 1e-7));
    CHECK((t * x - Matrix::Identity(2, 2)).norm() <= 1e-7);
  }
  {
    const Matrix t = diag2(1, 0);
    const Matrix x = pinv_via_splitting(t, validate_proper(t, diag2(2, 0)));
    CHECK(mat_close(x, diag2(1, 0), 1e-7));
  }
  Rng rng(9108);
  for (int trial = 0; trial < 20; ++trial) {
    const Index rows = rng.integer(2, 6);
    const Index cols = rng.integer(2, 6);
    const Index r = rng.integer(1, std::min(rows, cols));
    const Matrix t = rng.matrix_with_rank(rows, cols, r);
    const Matrix x = pinv_via_splitting(t, validate_proper(t, 1.5 * t));
    const Matrix oracle = pinv(t);
    CHECK(mat_dist(x, oracle) <= 1e-7 * (1.0 + oracle.norm()));
  }
}

TEST_CASE("pinv_via_splitting: failure modes surface as exceptions") {
  const Matrix t = diag2(1, 2);
  CHECK_THROWS_AS(pinv_via_splitting(t, validate_proper(t, 0.4 * t)),
                  Diverged);
  IterationConfig cfg;
  cfg.max_iter = 3;
  CHECK_THROWS_AS(pinv_via_splitting(t, validate_proper(t, 2.0 * t), cfg),
                  MaxIterations);
  CHECK_THROWS_AS(
      pinv_via_splitting(diag2(1, 1), validate_proper(t, 2.0 * t)),
      MismatchedT);
}
