#include "propersplit/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace propersplit {

namespace {

constexpr Index kMaxDim = 100000;  // reject absurd headers before allocating

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based start position in the line
};

[[noreturn]] void fail(const std::string& name, std::size_t line,
                       std::size_t column, const std::string& message) {
  std::ostringstream out;
  out << name << ":" << line << ":" << column << ": " << message;
  throw ParseError(out.str());
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

// Strict double: the whole token must be consumed and the value finite.
bool parse_real(const std::string& text, double& out) {
  if (text.empty()) return false;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size() && std::isfinite(out);
}

bool parse_entry(const std::string& text, Complex& out) {
  if (text.empty()) return false;
  if (text.back() != 'i') {
    double re = 0.0;
    if (!parse_real(text, re)) return false;
    out = Complex(re, 0.0);
    return true;
  }
  const std::string body = text.substr(0, text.size() - 1);
  // Split "a+b" / "a-b" at the last sign that is not an exponent sign and
  // not the leading sign of a.
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char c = body[pos];
    if (c != '+' && c != '-') continue;
    const char prev = body[pos - 1];
    if (prev == 'e' || prev == 'E') continue;
    double re = 0.0;
    double im = 0.0;
    if (!parse_real(body.substr(0, pos), re)) return false;
    if (!parse_real(body.substr(pos), im)) return false;
    out = Complex(re, im);
    return true;
  }
  return false;  // no "a+bi"/"a-bi" split point
}

Index parse_dimension(const std::string& name, std::size_t line,
                      const Token& token) {
  char* end = nullptr;
  const long value = std::strtol(token.text.c_str(), &end, 10);
  if (end != token.text.c_str() + token.text.size() || value < 1 ||
      value > kMaxDim) {
    fail(name, line, token.column,
         "expected a positive dimension, got '" + token.text + "'");
  }
  return static_cast<Index>(value);
}

std::string fmt_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

Matrix read_matrix(std::istream& in, const std::string& name) {
  std::size_t line_no = 0;
  Index rows = -1;
  Index cols = -1;
  Index next_row = 0;
  Matrix m;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;
    const std::vector<Token> tokens = tokenize(line);

    if (rows < 0) {
      if (tokens.size() != 2) {
        fail(name, line_no, tokens.front().column,
             "expected header 'rows cols'");
      }
      rows = parse_dimension(name, line_no, tokens[0]);
      cols = parse_dimension(name, line_no, tokens[1]);
      m = Matrix::Zero(rows, cols);
      continue;
    }

    if (next_row >= rows) {
      fail(name, line_no, tokens.front().column,
           "unexpected content after the last row");
    }
    if (static_cast<Index>(tokens.size()) != cols) {
      fail(name, line_no, tokens.front().column,
           "expected " + std::to_string(cols) + " entries in this row, got " +
               std::to_string(tokens.size()));
    }
    for (Index j = 0; j < cols; ++j) {
      const Token& token = tokens[static_cast<std::size_t>(j)];
      Complex value;
      if (!parse_entry(token.text, value)) {
        fail(name, line_no, token.column,
             "invalid entry '" + token.text + "'");
      }
      m(next_row, j) = value;
    }
    ++next_row;
  }

  if (rows < 0) fail(name, line_no + 1, 1, "missing header 'rows cols'");
  if (next_row < rows) {
    fail(name, line_no + 1, 1,
         "expected " + std::to_string(rows) + " rows, got " +
             std::to_string(next_row));
  }
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file for reading");
  return read_matrix(in, path);
}

std::string format_entry(const Complex& value) {
  if (value.imag() == 0.0) return fmt_real(value.real());
  std::string out = fmt_real(value.real());
  out += value.imag() < 0.0 ? '-' : '+';
  out += fmt_real(std::abs(value.imag()));
  out += 'i';
  return out;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << " ";
      out << format_entry(m(i, j));
    }
    out << "\n";
  }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  write_matrix(out, m);
  out.flush();
  if (!out) throw ParseError(path + ": write failed");
}

}  // namespace propersplit
