#pragma once

#include <iosfwd>
#include <string>

#include "propersplit/errors.hpp"
#include "propersplit/types.hpp"

namespace propersplit {

/// Text format for matrices:
///   - optional blank lines and "#" comment lines anywhere;
///   - a header line "rows cols";
///   - then exactly `rows` lines of `cols` whitespace-separated entries.
/// Each entry is either a decimal real ("-1.5", "2e-3") or a complex pair
/// "a+bi" / "a-bi" with no spaces inside the token ("0.5-0.25i").
/// Parse failures throw ParseError with "name:line:column" in the message.
Matrix read_matrix(std::istream& in, const std::string& name = "<stream>");

/// Reads from a file; throws ParseError (also for unreadable paths).
Matrix read_matrix_file(const std::string& path);

/// Writes the same format back. Reals round-trip exactly (17 significant
/// digits); entries with a zero imaginary part are written as plain reals.
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

/// Serializes one entry using the file grammar ("1.5", "0.5-0.25i").
std::string format_entry(const Complex& value);

}  // namespace propersplit
