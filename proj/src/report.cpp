#include "propersplit/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "propersplit/errors.hpp"

namespace propersplit {

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_in_scope_.empty()) {
    if (!first_in_scope_.back()) out_ += ',';
    first_in_scope_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  separate();
  out_ += '"';
  out_ += json_escape(name);
  out_ += "\":";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value_str(const std::string& v) {
  separate();
  out_ += '"';
  out_ += json_escape(v);
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::value_num(double v) {
  separate();
  out_ += format_number(v);
  return *this;
}

JsonWriter& JsonWriter::value_int(long long v) {
  separate();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value_bool(bool v) {
  separate();
  out_ += v ? "true" : "false";
  return *this;
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file for reading");
  std::ostringstream bytes;
  bytes << in.rdbuf();
  return fnv1a_hex(bytes.str());
}

void write_matrix_json(JsonWriter& w, const Matrix& m) {
  w.begin_object();
  w.key("rows").value_int(m.rows());
  w.key("cols").value_int(m.cols());
  w.key("entries").begin_array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      w.begin_array();
      w.value_num(m(i, j).real());
      w.value_num(m(i, j).imag());
      w.end_array();
    }
  }
  w.end_array();
  w.end_object();
}

void write_diagnostics_json(JsonWriter& w, const SplittingDiagnostics& d) {
  w.begin_object();
  w.key("udv");
  write_matrix_json(w, d.udv);
  w.key("udt");
  write_matrix_json(w, d.udt);
  w.key("tdv");
  write_matrix_json(w, d.tdv);
  w.key("tdu");
  write_matrix_json(w, d.tdu);
  w.key("rho_udv").value_num(d.rho_udv);
  w.key("rho_tdv").value_num(d.rho_tdv);
  w.key("rho_tdu").value_num(d.rho_tdu);
  w.key("herm_vt").value_bool(d.herm_vt);
  w.key("herm_ut").value_bool(d.herm_ut);
  w.key("herm_vu").value_bool(d.herm_vu);
  w.key("herm_udv").value_bool(d.herm_udv);
  w.key("herm_tdu").value_bool(d.herm_tdu);
  w.key("herm_tdv").value_bool(d.herm_tdv);
  w.key("psd_udv").value_bool(d.psd_udv);
  w.key("psd_udt").value_bool(d.psd_udt);
  w.key("id_t_residual").value_num(d.id_t_residual);
  w.key("id_pinv_residual").value_num(d.id_pinv_residual);
  w.key("id_greville_residual").value_num(d.id_greville_residual);
  w.end_object();
}

void write_convergence_json(JsonWriter& w, const ConvergenceReport& r) {
  w.begin_object();
  w.key("rho_udv").value_num(r.rho_udv);
  w.key("converges").value_bool(r.converges);
  w.key("rho_tdv").value_num(r.rho_tdv);
  w.key("rho_tdu").value_num(r.rho_tdu);
  w.key("prop61").begin_object();
  w.key("tdv_psd").value_bool(r.prop61.tdv_psd);
  w.key("tvstar_psd_rank").value_bool(r.prop61.tvstar_psd_rank);
  w.key("sandwich").value_bool(r.prop61.sandwich);
  w.key("formula_holds").value_bool(r.prop61.formula_holds);
  w.key("formula_lhs").value_num(r.prop61.formula_lhs);
  w.key("formula_rhs").value_num(r.prop61.formula_rhs);
  w.end_object();
  w.key("prop62").begin_object();
  w.key("udt_sandwich").value_bool(r.prop62.udt_sandwich);
  w.key("formula_holds").value_bool(r.prop62.formula_holds);
  w.key("formula_lhs").value_num(r.prop62.formula_lhs);
  w.key("formula_rhs").value_num(r.prop62.formula_rhs);
  w.end_object();
  w.end_object();
}

void write_solve_json(JsonWriter& w, const SolveReport& r) {
  w.begin_object();
  const char* status = r.status == SolveStatus::converged ? "converged"
                       : r.status == SolveStatus::diverged
                           ? "diverged"
                           : "max_iterations";
  w.key("status").value_str(status);
  w.key("converged").value_bool(r.converged);
  w.key("iterations").value_int(r.iterations);
  w.key("residual").value_num(r.residual);
  w.key("rho_ym").value_num(r.rho_ym);
  w.key("rho_warning").value_bool(r.rho_warning);
  w.key("oracle_gap").value_num(r.oracle_gap);
  w.key("hermitian").value_bool(r.hermitian);
  w.key("psd").value_bool(r.psd);
  w.key("step_norms").begin_array();
  for (double s : r.step_norms) w.value_num(s);
  w.end_array();
  w.key("x");
  write_matrix_json(w, r.x);
  w.end_object();
}

void write_verdict_json(JsonWriter& w, const ComparisonVerdict& v) {
  w.begin_object();
  w.key("preconditions_hold").value_bool(v.preconditions_hold);
  w.key("rho1").value_num(v.rho1);
  w.key("rho2").value_num(v.rho2);
  w.key("ordering_holds").value_bool(v.ordering_holds);
  w.key("detail").value_str(v.detail);
  w.end_object();
}

}  // namespace propersplit
