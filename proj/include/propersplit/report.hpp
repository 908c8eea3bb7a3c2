#pragma once

#include <string>
#include <vector>

#include "propersplit/convergence.hpp"
#include "propersplit/solver.hpp"
#include "propersplit/splitting.hpp"

namespace propersplit {

/// Minimal JSON writer with caller-controlled key order. Numbers are
/// emitted with 17 significant digits so identical inputs serialize to
/// byte-identical documents that round-trip through double precision.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value_str(const std::string& v);
  JsonWriter& value_num(double v);
  JsonWriter& value_int(long long v);
  JsonWriter& value_bool(bool v);

  /// The finished document; valid once every container has been closed.
  const std::string& str() const { return out_; }

 private:
  void separate();
  std::string out_;
  std::vector<bool> first_in_scope_;
  bool after_key_ = false;
};

/// "%.17g" rendering used for every number in reports (non-finite values
/// become null, which valid inputs never produce).
std::string format_number(double v);

std::string json_escape(const std::string& s);

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Digest of a file's raw bytes; throws ParseError when unreadable.
std::string digest_file(const std::string& path);

/// Matrix as {"rows":..,"cols":..,"entries":[[re,im],..]} in row-major
/// order; writes one complete JSON value.
void write_matrix_json(JsonWriter& w, const Matrix& m);

void write_diagnostics_json(JsonWriter& w, const SplittingDiagnostics& d);
void write_convergence_json(JsonWriter& w, const ConvergenceReport& r);
void write_solve_json(JsonWriter& w, const SolveReport& r);
void write_verdict_json(JsonWriter& w, const ComparisonVerdict& v);

/// One input file of a command, as recorded in the report header.
struct InputRecord {
  std::string key;   ///< role of the file: "t", "u", "w", "m", ...
  std::string path;  ///< as given on the command line
  std::string digest;
  Index rows = 0;
  Index cols = 0;
};

/// Assembles the full report document around a payload writer. The schema:
/// {"schema_version":"1","command":..,"inputs":..,"tolerances":..,
///  "payload":..,"warnings":[..]}
template <typename PayloadFn>
std::string make_document(const std::string& command,
                          const std::vector<InputRecord>& inputs,
                          const Tolerances& tol, PayloadFn&& payload,
                          const std::vector<std::string>& warnings) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value_str("1");
  w.key("command").value_str(command);
  w.key("inputs").begin_object();
  for (const InputRecord& in : inputs) {
    w.key(in.key).begin_object();
    w.key("path").value_str(in.path);
    w.key("digest").value_str(in.digest);
    w.key("rows").value_int(in.rows);
    w.key("cols").value_int(in.cols);
    w.end_object();
  }
  w.end_object();
  w.key("tolerances").begin_object();
  w.key("rank_rtol").value_num(tol.rank_rtol);
  w.key("sym_tol").value_num(tol.sym_tol);
  w.key("psd_tol").value_num(tol.psd_tol);
  w.key("cond_max").value_num(tol.cond_max);
  w.end_object();
  w.key("payload");
  payload(w);
  w.key("warnings").begin_array();
  for (const std::string& warning : warnings) w.value_str(warning);
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace propersplit
