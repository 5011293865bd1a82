/*
 * Copyright 2026 The bosonex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bosonex/complex_matrix.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bosonex {

ComplexMatrix ComplexMatrix::first_columns(std::size_t n) const {
  if (n > cols_) {
    throw std::invalid_argument("first_columns: n exceeds column count");
  }
  ComplexMatrix out(rows_, n);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

ComplexMatrix ComplexMatrix::select_rows(
    const std::vector<std::size_t>& row_indices) const {
  ComplexMatrix out(row_indices.size(), cols_);
  for (std::size_t i = 0; i < row_indices.size(); ++i) {
    if (row_indices[i] >= rows_) {
      throw std::invalid_argument("select_rows: row index out of range");
    }
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(row_indices[i], j);
  }
  return out;
}

namespace {

void format_double(std::ostream& os, double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 17);
  os.write(buf, res.ptr - buf);
}

double parse_double(const std::string& token, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw MatrixParseError(line, "bad number '" + token + "'");
  }
  return v;
}

}  // namespace

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      format_double(os, m(i, j).real());
      os << ',';
      format_double(os, m(i, j).imag());
    }
    os << '\n';
  }
}

ComplexMatrix read_matrix(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line)) throw MatrixParseError(1, "missing header");
  std::istringstream header(line);
  long long rows = -1, cols = -1;
  if (!(header >> rows >> cols) || rows < 0 || cols < 0) {
    throw MatrixParseError(1, "expected 'rows cols' header");
  }
  ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ++lineno;
    if (!std::getline(is, line)) {
      throw MatrixParseError(lineno, "unexpected end of file");
    }
    std::istringstream row(line);
    std::string token;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(row >> token)) throw MatrixParseError(lineno, "too few entries");
      auto comma = token.find(',');
      if (comma == std::string::npos) {
        throw MatrixParseError(lineno, "entry '" + token + "' missing comma");
      }
      double re = parse_double(token.substr(0, comma), lineno);
      double im = parse_double(token.substr(comma + 1), lineno);
      m(i, j) = Complex(re, im);
    }
    std::string extra;
    if (row >> extra) throw MatrixParseError(lineno, "trailing entries");
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open matrix file: " + path);
  return read_matrix(f);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  write_matrix(f, m);
}

}  // namespace bosonex
