// Python bindings for the proper-splitting toolkit. The module mirrors the
// C++ API one to one: matrices cross the boundary as complex numpy arrays
// and every deliberate failure surfaces as a propersplit.* exception.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "propersplit/convergence.hpp"
#include "propersplit/errors.hpp"
#include "propersplit/linalg.hpp"
#include "propersplit/reduced.hpp"
#include "propersplit/solver.hpp"
#include "propersplit/splitting.hpp"

namespace py = pybind11;
using namespace propersplit;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Proper splittings of rectangular matrices: pseudoinverse kernels, "
      "reduced solutions, splitting diagnostics, convergence certificates "
      "and the stationary iterative solver.";

  // ------------------------------------------------------------------ errors
  const auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<NotSquare>(m, "NotSquare", base);
  py::register_exception<NotHermitian>(m, "NotHermitian", base);
  py::register_exception<NotAComplement>(m, "NotAComplement", base);
  py::register_exception<NotSolvable>(m, "NotSolvable", base);
  py::register_exception<NotProper>(m, "NotProper", base);
  py::register_exception<NotNormal>(m, "NotNormal", base);
  py::register_exception<NotApplicable>(m, "NotApplicable", base);
  py::register_exception<MismatchedT>(m, "MismatchedT", base);
  py::register_exception<SingularIteration>(m, "SingularIteration", base);
  py::register_exception<Diverged>(m, "Diverged", base);
  py::register_exception<MaxIterations>(m, "MaxIterations", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  // ------------------------------------------------------------------- types
  py::class_<Tolerances>(m, "Tolerances",
                         "Numerical gates shared by every operation.")
      .def(py::init<>())
      .def_readwrite("rank_rtol", &Tolerances::rank_rtol)
      .def_readwrite("sym_tol", &Tolerances::sym_tol)
      .def_readwrite("psd_tol", &Tolerances::psd_tol)
      .def_readwrite("cond_max", &Tolerances::cond_max);

  py::class_<Subspace>(m, "Subspace",
                       "A subspace held as an independent column basis.")
      .def(py::init<Matrix, const Tolerances&>(), py::arg("basis"),
           py::arg("tol") = Tolerances{})
      .def_property_readonly("basis", &Subspace::basis)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim);

  py::class_<ProperSplitting>(m, "ProperSplitting",
                              "A validated decomposition t = u - v.")
      .def_readonly("t", &ProperSplitting::t)
      .def_readonly("u", &ProperSplitting::u)
      .def_readonly("v", &ProperSplitting::v);

  py::class_<SplittingDiagnostics>(m, "SplittingDiagnostics")
      .def_readonly("udv", &SplittingDiagnostics::udv)
      .def_readonly("udt", &SplittingDiagnostics::udt)
      .def_readonly("tdv", &SplittingDiagnostics::tdv)
      .def_readonly("tdu", &SplittingDiagnostics::tdu)
      .def_readonly("rho_udv", &SplittingDiagnostics::rho_udv)
      .def_readonly("rho_tdv", &SplittingDiagnostics::rho_tdv)
      .def_readonly("rho_tdu", &SplittingDiagnostics::rho_tdu)
      .def_readonly("herm_vt", &SplittingDiagnostics::herm_vt)
      .def_readonly("herm_ut", &SplittingDiagnostics::herm_ut)
      .def_readonly("herm_vu", &SplittingDiagnostics::herm_vu)
      .def_readonly("herm_udv", &SplittingDiagnostics::herm_udv)
      .def_readonly("herm_tdu", &SplittingDiagnostics::herm_tdu)
      .def_readonly("herm_tdv", &SplittingDiagnostics::herm_tdv)
      .def_readonly("psd_udv", &SplittingDiagnostics::psd_udv)
      .def_readonly("psd_udt", &SplittingDiagnostics::psd_udt)
      .def_readonly("id_t_residual", &SplittingDiagnostics::id_t_residual)
      .def_readonly("id_pinv_residual",
                    &SplittingDiagnostics::id_pinv_residual)
      .def_readonly("id_greville_residual",
                    &SplittingDiagnostics::id_greville_residual);

  py::class_<Prop61Record>(m, "Prop61Record")
      .def_readonly("tdv_psd", &Prop61Record::tdv_psd)
      .def_readonly("tvstar_psd_rank", &Prop61Record::tvstar_psd_rank)
      .def_readonly("sandwich", &Prop61Record::sandwich)
      .def_readonly("formula_holds", &Prop61Record::formula_holds)
      .def_readonly("formula_lhs", &Prop61Record::formula_lhs)
      .def_readonly("formula_rhs", &Prop61Record::formula_rhs);

  py::class_<Prop62Record>(m, "Prop62Record")
      .def_readonly("udt_sandwich", &Prop62Record::udt_sandwich)
      .def_readonly("formula_holds", &Prop62Record::formula_holds)
      .def_readonly("formula_lhs", &Prop62Record::formula_lhs)
      .def_readonly("formula_rhs", &Prop62Record::formula_rhs);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("rho_udv", &ConvergenceReport::rho_udv)
      .def_readonly("converges", &ConvergenceReport::converges)
      .def_readonly("rho_tdv", &ConvergenceReport::rho_tdv)
      .def_readonly("rho_tdu", &ConvergenceReport::rho_tdu)
      .def_readonly("prop61", &ConvergenceReport::prop61)
      .def_readonly("prop62", &ConvergenceReport::prop62);

  py::class_<HermitianBoundReport>(m, "HermitianBoundReport")
      .def_readonly("applicable", &HermitianBoundReport::applicable)
      .def_readonly("rho_bound", &HermitianBoundReport::rho_bound)
      .def_readonly("rho_udv", &HermitianBoundReport::rho_udv);

  py::class_<StructuredComparison>(m, "StructuredComparison")
      .def_readonly("pp_branch", &StructuredComparison::pp_branch)
      .def_readonly("rho_polar", &StructuredComparison::rho_polar)
      .def_readonly("rho_projection", &StructuredComparison::rho_projection)
      .def_readonly("pp_ordering", &StructuredComparison::pp_ordering)
      .def_readonly("normal_branch", &StructuredComparison::normal_branch)
      .def_readonly("pt_minus_t_norm", &StructuredComparison::pt_minus_t_norm)
      .def_readonly("normal_convergent",
                    &StructuredComparison::normal_convergent)
      .def_readonly("hermitian_branch",
                    &StructuredComparison::hermitian_branch)
      .def_readonly("rho_v2", &StructuredComparison::rho_v2)
      .def_readonly("hermitian_ordering",
                    &StructuredComparison::hermitian_ordering);

  py::class_<ComparisonVerdict>(m, "ComparisonVerdict")
      .def_readonly("preconditions_hold",
                    &ComparisonVerdict::preconditions_hold)
      .def_readonly("rho1", &ComparisonVerdict::rho1)
      .def_readonly("rho2", &ComparisonVerdict::rho2)
      .def_readonly("ordering_holds", &ComparisonVerdict::ordering_holds)
      .def_readonly("detail", &ComparisonVerdict::detail);

  py::class_<ReducedSolutionReport>(m, "ReducedSolutionReport")
      .def_readonly("x", &ReducedSolutionReport::x)
      .def_readonly("residual", &ReducedSolutionReport::residual)
      .def_readonly("hermitian", &ReducedSolutionReport::hermitian)
      .def_readonly("psd", &ReducedSolutionReport::psd)
      .def_readonly("spectrum", &ReducedSolutionReport::spectrum);

  py::class_<ExistenceFlags>(m, "ExistenceFlags")
      .def_readonly("solvable", &ExistenceFlags::solvable)
      .def_readonly("hermitian_solution_exists",
                    &ExistenceFlags::hermitian_solution_exists)
      .def_readonly("psd_solution_exists",
                    &ExistenceFlags::psd_solution_exists)
      .def_readonly("hermitian_reduced_exists",
                    &ExistenceFlags::hermitian_reduced_exists)
      .def_readonly("psd_reduced_exists", &ExistenceFlags::psd_reduced_exists)
      .def_readonly("witness", &ExistenceFlags::witness);

  py::enum_<SolveStatus>(m, "SolveStatus")
      .value("converged", SolveStatus::converged)
      .value("max_iterations", SolveStatus::max_iterations)
      .value("diverged", SolveStatus::diverged);

  py::class_<IterationConfig>(m, "IterationConfig")
      .def(py::init<>())
      .def_readwrite("max_iter", &IterationConfig::max_iter)
      .def_readwrite("step_tol", &IterationConfig::step_tol)
      .def_readwrite("divergence_guard", &IterationConfig::divergence_guard)
      .def_readwrite("x0", &IterationConfig::x0);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("x", &SolveReport::x)
      .def_readonly("status", &SolveReport::status)
      .def_readonly("converged", &SolveReport::converged)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("residual", &SolveReport::residual)
      .def_readonly("step_norms", &SolveReport::step_norms)
      .def_readonly("rho_ym", &SolveReport::rho_ym)
      .def_readonly("rho_warning", &SolveReport::rho_warning)
      .def_readonly("oracle_gap", &SolveReport::oracle_gap)
      .def_readonly("hermitian", &SolveReport::hermitian)
      .def_readonly("psd", &SolveReport::psd);

  // --------------------------------------------------------- linalg kernels
  m.def("pinv", &pinv, py::arg("a"), py::arg("tol") = Tolerances{},
        "Moore-Penrose pseudoinverse via a full SVD.");
  m.def("numeric_rank", &numeric_rank, py::arg("a"),
        py::arg("tol") = Tolerances{});
  m.def("orth_projector", &orth_projector, py::arg("a"),
        py::arg("tol") = Tolerances{},
        "Orthogonal projector onto the range of a.");
  m.def("spectrum", &spectrum, py::arg("a"),
        "Eigenvalues of a square matrix.");
  m.def("spectral_radius", &spectral_radius, py::arg("a"));
  m.def("operator_norm", &operator_norm, py::arg("a"),
        "Largest singular value.");
  m.def("is_hermitian", &is_hermitian, py::arg("a"),
        py::arg("tol") = Tolerances{});
  m.def("is_psd", &is_psd, py::arg("a"), py::arg("tol") = Tolerances{});
  m.def("loewner_leq", &loewner_leq, py::arg("a"), py::arg("b"),
        py::arg("tol") = Tolerances{},
        "Whether b - a is positive semidefinite.");
  m.def("min_norm_subspace", &min_norm_subspace, py::arg("a"),
        py::arg("tol") = Tolerances{},
        "R(a*), the complement picking the minimal-norm reduced solution.");
  m.def("nullspace_subspace", &nullspace_subspace, py::arg("a"),
        py::arg("tol") = Tolerances{});
  m.def(
      "oblique_projector",
      [](const Subspace& onto, const Subspace& along, const Tolerances& tol) {
        return oblique_projector(onto, along, tol);
      },
      py::arg("onto"), py::arg("along"), py::arg("tol") = Tolerances{},
      "Projector onto the first subspace along the second.");

  // ------------------------------------------------------- reduced solutions
  m.def(
      "check_solvable",
      [](const Matrix& t, const Matrix& w, const Tolerances& tol) {
        return check_solvable({t, w}, tol);
      },
      py::arg("t"), py::arg("w"), py::arg("tol") = Tolerances{},
      "Whether R(w) lies inside R(t).");
  m.def(
      "reduced_solution",
      [](const Matrix& t, const Matrix& w, const Subspace& m_sub,
         const Tolerances& tol) {
        return reduced_solution({t, w}, m_sub, tol);
      },
      py::arg("t"), py::arg("w"), py::arg("m"), py::arg("tol") = Tolerances{},
      "The unique solution of t x = w with R(x) inside the complement m.");
  m.def(
      "existence_flags",
      [](const Matrix& t, const Matrix& w, const Tolerances& tol) {
        return existence_flags({t, w}, tol);
      },
      py::arg("t"), py::arg("w"), py::arg("tol") = Tolerances{},
      "Hermitian/PSD existence answers for t x = w, with a witness "
      "complement when one exists.");

  // ---------------------------------------------------- splittings and radii
  m.def("validate_proper", &validate_proper, py::arg("t"), py::arg("u"),
        py::arg("tol") = Tolerances{},
        "Checks R(u) = R(t) and N(u) = N(t); returns the splitting or "
        "raises NotProper.");
  m.def("diagnostics", &diagnostics, py::arg("splitting"),
        py::arg("tol") = Tolerances{});
  m.def("polar_splitting", &polar_splitting, py::arg("t"),
        py::arg("tol") = Tolerances{},
        "u is the partial isometry of the polar decomposition of t.");
  m.def("projection_splitting", &projection_splitting, py::arg("t"),
        py::arg("tol") = Tolerances{},
        "u is the projector onto R(t) along N(t).");
  m.def("range_projector_splitting", &range_projector_splitting, py::arg("t"),
        py::arg("tol") = Tolerances{},
        "u is the orthogonal projector onto R(t); t must be normal-like.");
  m.def("is_product_of_projections", &is_product_of_projections, py::arg("t"),
        py::arg("tol") = Tolerances{});

  // ------------------------------------------------------------- convergence
  m.def("convergence_report", &convergence_report, py::arg("splitting"),
        py::arg("tol") = Tolerances{});
  m.def("hermitian_solution_bound", &hermitian_solution_bound,
        py::arg("splitting"), py::arg("x_tilde"),
        py::arg("tol") = Tolerances{},
        "Bounds rho(pinv(u) v) by rho(x_tilde) for a Hermitian solution of "
        "u x = v.");
  m.def("compare_by_v", &compare_by_v, py::arg("s1"), py::arg("s2"),
        py::arg("tol") = Tolerances{});
  m.def("compare_by_u", &compare_by_u, py::arg("s1"), py::arg("s2"),
        py::arg("tol") = Tolerances{});
  m.def("structured_comparisons", &structured_comparisons, py::arg("t"),
        py::arg("tol") = Tolerances{},
        "Radius comparisons among the structured splittings available "
        "for t (projection-product, normal and Hermitian branches).");

  // ------------------------------------------------------------------ solver
  m.def(
      "build_iteration",
      [](const ProperSplitting& s, const Matrix& w, const Subspace& m_sub,
         const Tolerances& tol) {
        const auto ops = build_iteration(s, w, m_sub, tol);
        return py::make_tuple(ops.y, ops.z, ops.rho_y);
      },
      py::arg("splitting"), py::arg("w"), py::arg("m"),
      py::arg("tol") = Tolerances{},
      "Returns (y, z, rho_y) for the affine iteration x := y x + z.");
  m.def("solve_iterative", &solve_iterative, py::arg("splitting"),
        py::arg("w"), py::arg("m"), py::arg("config") = IterationConfig{},
        py::arg("tol") = Tolerances{},
        "Runs the splitting iteration for t x = w; the outcome, including "
        "non-convergence, is in the report.");
  m.def("solve_two_sided", &solve_two_sided, py::arg("t"), py::arg("s"),
        py::arg("w"), py::arg("m"), py::arg("config") = IterationConfig{},
        py::arg("tol") = Tolerances{},
        "Solves t x s = w by two one-sided passes.");
  m.def("pinv_via_splitting", &pinv_via_splitting, py::arg("t"),
        py::arg("splitting"), py::arg("config") = IterationConfig{},
        py::arg("tol") = Tolerances{},
        "Recovers pinv(t) as the limit of the splitting iteration.");
}
