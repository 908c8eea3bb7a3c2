// Command-line front end: validate and analyze proper splittings, construct
// the structured ones, run the induced iteration, and compare two
// splittings of the same matrix.
//
// Exit codes:
//   0  success (analysis convergent / solve converged / comparison verified)
//   1  I/O or parse error, bad usage, mismatched T between files
//   2  proper but non-convergent splitting, or comparison not certified
//   3  not a proper splitting, method preconditions fail, bad complement
//   4  iteration diverged or exhausted its budget
//   5  right-hand side outside the range of T

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "propersplit/convergence.hpp"
#include "propersplit/matrix_io.hpp"
#include "propersplit/report.hpp"
#include "propersplit/solver.hpp"

namespace ps = propersplit;

namespace {

struct CommonOpts {
  ps::Tolerances tol;
  std::string json_path;
  bool quiet = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--tol-rank", o.tol.rank_rtol,
                  "relative rank cutoff; 0 selects the size-scaled default")
      ->envname("PROPER_SPLIT_TOL_RANK");
  cmd->add_option("--tol-sym", o.tol.sym_tol,
                  "relative tolerance for Hermitian checks");
  cmd->add_option("--tol-psd", o.tol.psd_tol,
                  "eigenvalue tolerance for PSD checks");
  cmd->add_option("--cond-max", o.tol.cond_max,
                  "condition cap for oblique projector bases");
  cmd->add_option("--json", o.json_path,
                  "write the machine-readable report to this file");
  cmd->add_flag("--quiet", o.quiet, "suppress the human-readable summary");
}

void say(const CommonOpts& o, const std::string& line) {
  if (!o.quiet) std::cout << line << "\n";
}

void emit_document(const CommonOpts& o, const std::string& doc) {
  if (o.json_path.empty()) return;
  std::ofstream out(o.json_path, std::ios::binary);
  if (!out) {
    throw ps::ParseError(o.json_path + ": cannot open file for writing");
  }
  out << doc << "\n";
  out.flush();
  if (!out) throw ps::ParseError(o.json_path + ": write failed");
}

ps::Matrix load(const std::string& path, const std::string& key,
                std::vector<ps::InputRecord>& inputs) {
  ps::Matrix m = ps::read_matrix_file(path);
  inputs.push_back({key, path, ps::digest_file(path), m.rows(), m.cols()});
  return m;
}

bool same_shape(const ps::Matrix& a, const ps::Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string t_path;
  std::string u_path;
  CommonOpts common;
};

int run_analyze(const AnalyzeArgs& args) {
  const CommonOpts& o = args.common;
  std::vector<ps::InputRecord> inputs;
  const ps::Matrix t = load(args.t_path, "t", inputs);
  const ps::Matrix u = load(args.u_path, "u", inputs);

  const auto fail_improper = [&](const std::string& reason) {
    emit_document(o, ps::make_document(
                         "analyze", inputs, o.tol,
                         [&](ps::JsonWriter& w) {
                           w.begin_object();
                           w.key("proper").value_bool(false);
                           w.key("error").value_str(reason);
                           w.end_object();
                         },
                         {}));
    say(o, "proper splitting: no");
    say(o, "  " + reason);
    return 3;
  };

  if (!same_shape(t, u)) {
    return fail_improper("u must have the same shape as t");
  }

  ps::ProperSplitting s;
  try {
    s = ps::validate_proper(t, u, o.tol);
  } catch (const ps::NotProper& e) {
    return fail_improper(e.what());
  }

  ps::SplittingDiagnostics diag;
  try {
    diag = ps::diagnostics(s, o.tol);
  } catch (const ps::SingularIteration& e) {
    emit_document(o, ps::make_document(
                         "analyze", inputs, o.tol,
                         [&](ps::JsonWriter& w) {
                           w.begin_object();
                           w.key("proper").value_bool(true);
                           w.key("error").value_str(e.what());
                           w.end_object();
                         },
                         {}));
    say(o, std::string("analysis failed: ") + e.what());
    return 3;
  }
  const ps::ConvergenceReport conv = ps::convergence_report(s, o.tol);

  std::vector<std::string> warnings;
  if (!conv.converges) {
    warnings.push_back("iteration radius is not below one");
  }

  emit_document(o, ps::make_document(
                       "analyze", inputs, o.tol,
                       [&](ps::JsonWriter& w) {
                         w.begin_object();
                         w.key("proper").value_bool(true);
                         w.key("diagnostics");
                         ps::write_diagnostics_json(w, diag);
                         w.key("convergence");
                         ps::write_convergence_json(w, conv);
                         w.end_object();
                       },
                       warnings));

  say(o, "proper splitting: yes");
  say(o, "rho(pinv(u) v) = " + ps::format_number(conv.rho_udv));
  say(o, "converges: " + yes_no(conv.converges));
  say(o, "hermitian family: " + yes_no(diag.herm_udv));
  say(o, "psd iteration matrix: " + yes_no(diag.psd_udv));
  return conv.converges ? 0 : 2;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string t_path;
  std::string method;
  std::string out_u = "u.mat";
  std::string out_v = "v.mat";
  CommonOpts common;
};

int run_construct(const ConstructArgs& args) {
  const CommonOpts& o = args.common;
  std::vector<ps::InputRecord> inputs;
  const ps::Matrix t = load(args.t_path, "t", inputs);

  ps::ProperSplitting s;
  try {
    if (args.method == "polar") {
      s = ps::polar_splitting(t, o.tol);
    } else if (args.method == "projection") {
      s = ps::projection_splitting(t, o.tol);
    } else {
      s = ps::range_projector_splitting(t, o.tol);
    }
  } catch (const ps::Error& e) {
    // NotSquare / NotAComplement / NotNormal / NotProper: the method does
    // not apply to this t.
    emit_document(o, ps::make_document(
                         "construct", inputs, o.tol,
                         [&](ps::JsonWriter& w) {
                           w.begin_object();
                           w.key("method").value_str(args.method);
                           w.key("ok").value_bool(false);
                           w.key("error").value_str(e.what());
                           w.end_object();
                         },
                         {}));
    say(o, std::string("construction failed: ") + e.what());
    return 3;
  }

  const double rho = ps::spectral_radius(ps::pinv(s.u, o.tol) * s.v);
  std::vector<std::string> warnings;
  if (rho >= 1.0 - o.tol.psd_tol) {
    warnings.push_back("iteration radius is not below one");
  }

  ps::write_matrix_file(args.out_u, s.u);
  ps::write_matrix_file(args.out_v, s.v);

  emit_document(o, ps::make_document(
                       "construct", inputs, o.tol,
                       [&](ps::JsonWriter& w) {
                         w.begin_object();
                         w.key("method").value_str(args.method);
                         w.key("ok").value_bool(true);
                         w.key("rho_udv").value_num(rho);
                         w.key("converges")
                             .value_bool(rho < 1.0 - o.tol.psd_tol);
                         w.key("u");
                         ps::write_matrix_json(w, s.u);
                         w.key("v");
                         ps::write_matrix_json(w, s.v);
                         w.end_object();
                       },
                       warnings));

  say(o, "method: " + args.method);
  say(o, "rho(pinv(u) v) = " + ps::format_number(rho));
  say(o, "u written to " + args.out_u);
  say(o, "v written to " + args.out_v);
  return 0;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string t_path;
  std::string u_path;
  std::string w_path;
  std::string subspace = "min-norm";
  std::string out_x = "x.mat";
  ps::IterationConfig cfg;
  CommonOpts common;
};

int run_solve(const SolveArgs& args) {
  const CommonOpts& o = args.common;
  std::vector<ps::InputRecord> inputs;
  const ps::Matrix t = load(args.t_path, "t", inputs);
  const ps::Matrix u = load(args.u_path, "u", inputs);
  const ps::Matrix w = load(args.w_path, "w", inputs);

  const auto fail = [&](int code, const std::string& reason) {
    emit_document(o, ps::make_document(
                         "solve", inputs, o.tol,
                         [&](ps::JsonWriter& jw) {
                           jw.begin_object();
                           jw.key("error").value_str(reason);
                           jw.end_object();
                         },
                         {}));
    say(o, "solve failed: " + reason);
    return code;
  };

  if (w.rows() != t.rows()) {
    return fail(1, "w must have as many rows as t");
  }
  if (!same_shape(t, u)) {
    return fail(3, "u must have the same shape as t");
  }

  ps::ProperSplitting s;
  try {
    s = ps::validate_proper(t, u, o.tol);
  } catch (const ps::NotProper& e) {
    return fail(3, e.what());
  }

  std::unique_ptr<ps::Subspace> m;
  if (args.subspace == "min-norm") {
    m = std::make_unique<ps::Subspace>(ps::min_norm_subspace(t, o.tol));
  } else {
    const ps::Matrix basis = load(args.subspace, "m", inputs);
    if (basis.rows() != t.cols()) {
      return fail(1, "subspace basis must have as many rows as t has columns");
    }
    try {
      m = std::make_unique<ps::Subspace>(basis, o.tol);
    } catch (const ps::Error& e) {
      return fail(3, e.what());
    }
  }

  ps::SolveReport report;
  try {
    report = ps::solve_iterative(s, w, *m, args.cfg, o.tol);
  } catch (const ps::NotSolvable& e) {
    return fail(5, e.what());
  } catch (const ps::NotAComplement& e) {
    return fail(3, e.what());
  }

  std::vector<std::string> warnings;
  if (report.rho_warning) {
    warnings.push_back("spectral radius within 1e-9 of one");
  }

  if (report.converged) ps::write_matrix_file(args.out_x, report.x);

  emit_document(o, ps::make_document(
                       "solve", inputs, o.tol,
                       [&](ps::JsonWriter& jw) {
                         ps::write_solve_json(jw, report);
                       },
                       warnings));

  const char* status = report.status == ps::SolveStatus::converged
                           ? "converged"
                           : report.status == ps::SolveStatus::diverged
                                 ? "diverged"
                                 : "max_iterations";
  say(o, std::string("status: ") + status);
  say(o, "iterations: " + std::to_string(report.iterations));
  say(o, "rho(y_m) = " + ps::format_number(report.rho_ym));
  say(o, "residual = " + ps::format_number(report.residual));
  if (report.converged) say(o, "x written to " + args.out_x);
  return report.converged ? 0 : 4;
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
  std::string t_path;
  std::string u1_path;
  std::string u2_path;
  std::string t2_path;  // optional: T of the second splitting, default t
  std::string by = "V";
  CommonOpts common;
};

int run_compare(const CompareArgs& args) {
  const CommonOpts& o = args.common;
  std::vector<ps::InputRecord> inputs;
  const ps::Matrix t = load(args.t_path, "t", inputs);
  const ps::Matrix u1 = load(args.u1_path, "u1", inputs);
  const ps::Matrix u2 = load(args.u2_path, "u2", inputs);
  if (!args.t2_path.empty()) {
    const ps::Matrix t2 = load(args.t2_path, "t2", inputs);
    if (!same_shape(t, t2) || (t - t2).norm() != 0.0) {
      std::cerr << "error: the two splittings do not share the same t ("
                << args.t_path << " vs " << args.t2_path << ")\n";
      return 1;
    }
  }
  if (!same_shape(t, u1) || !same_shape(t, u2)) {
    std::cerr << "error: u files must match the shape of t\n";
    return 1;
  }

  const auto finish = [&](const ps::ComparisonVerdict& verdict) {
    emit_document(o, ps::make_document(
                         "compare", inputs, o.tol,
                         [&](ps::JsonWriter& w) {
                           w.begin_object();
                           w.key("by").value_str(args.by);
                           w.key("verdict");
                           ps::write_verdict_json(w, verdict);
                           w.end_object();
                         },
                         {}));
    say(o, "rho1 = " + ps::format_number(verdict.rho1));
    say(o, "rho2 = " + ps::format_number(verdict.rho2));
    say(o, "preconditions: " + yes_no(verdict.preconditions_hold));
    say(o, "ordering rho1 <= rho2 < 1: " + yes_no(verdict.ordering_holds));
    if (!verdict.detail.empty()) say(o, "  " + verdict.detail);
    return verdict.preconditions_hold && verdict.ordering_holds ? 0 : 2;
  };

  ps::ProperSplitting s1;
  ps::ProperSplitting s2;
  try {
    s1 = ps::validate_proper(t, u1, o.tol);
    s2 = ps::validate_proper(t, u2, o.tol);
  } catch (const ps::NotProper& e) {
    // Precondition failure: report the radii of the raw pinv products.
    ps::ComparisonVerdict verdict;
    verdict.detail = e.what();
    verdict.rho1 = ps::spectral_radius(ps::pinv(u1, o.tol) * (u1 - t));
    verdict.rho2 = ps::spectral_radius(ps::pinv(u2, o.tol) * (u2 - t));
    return finish(verdict);
  }

  const ps::ComparisonVerdict verdict = args.by == "V"
                                            ? ps::compare_by_v(s1, s2, o.tol)
                                            : ps::compare_by_u(s1, s2, o.tol);
  return finish(verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper splittings of rectangular complex matrices: "
               "validation, construction, iterative solving, comparison"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Validate a splitting t = u - v and report its diagnostics");
  analyze->add_option("t", analyze_args.t_path, "matrix file for t")
      ->required();
  analyze->add_option("u", analyze_args.u_path, "matrix file for u")
      ->required();
  add_common_flags(analyze, analyze_args.common);

  ConstructArgs construct_args;
  CLI::App* construct = app.add_subcommand(
      "construct", "Build a structured splitting of t and write u, v files");
  construct->add_option("t", construct_args.t_path, "matrix file for t")
      ->required();
  construct
      ->add_option("--method", construct_args.method,
                   "polar | projection | range-projector")
      ->required()
      ->check(CLI::IsMember({"polar", "projection", "range-projector"}));
  construct->add_option("--out-u", construct_args.out_u,
                        "output path for u (default u.mat)");
  construct->add_option("--out-v", construct_args.out_v,
                        "output path for v (default v.mat)");
  add_common_flags(construct, construct_args.common);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Iterate x <- y x + z for t x = w under the given splitting");
  solve->add_option("t", solve_args.t_path, "matrix file for t")->required();
  solve->add_option("u", solve_args.u_path, "matrix file for u")->required();
  solve->add_option("w", solve_args.w_path, "matrix file for w")->required();
  solve->add_option("--subspace", solve_args.subspace,
                    "'min-norm' or a basis-matrix file for the complement");
  solve->add_option("--max-iter", solve_args.cfg.max_iter,
                    "iteration budget (default 10000)");
  solve->add_option("--step-tol", solve_args.cfg.step_tol,
                    "relative step-norm stopping tolerance (default 1e-10)");
  solve->add_option("--out", solve_args.out_x,
                    "output path for the solution (default x.mat)");
  add_common_flags(solve, solve_args.common);

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand(
      "compare", "Order the iteration radii of two splittings of the same t");
  compare->add_option("t", compare_args.t_path, "matrix file for t")
      ->required();
  compare->add_option("u1", compare_args.u1_path, "matrix file for u1")
      ->required();
  compare->add_option("u2", compare_args.u2_path, "matrix file for u2")
      ->required();
  compare->add_option("--t2", compare_args.t2_path,
                      "t of the second splitting, when read from its own "
                      "file; must equal t");
  compare->add_option("--by", compare_args.by, "V (split v1 <= v2) or U "
                      "(split u1 <= u2)")
      ->check(CLI::IsMember({"V", "U"}));
  add_common_flags(compare, compare_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return run_analyze(analyze_args);
    if (*construct) return run_construct(construct_args);
    if (*solve) return run_solve(solve_args);
    return run_compare(compare_args);
  } catch (const ps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
