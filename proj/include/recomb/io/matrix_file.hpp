#ifndef RECOMB_IO_MATRIX_FILE_HPP
#define RECOMB_IO_MATRIX_FILE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "recomb/io/identity_file.hpp"
#include "recomb/linalg/dense_matrix.hpp"

namespace recomb {

/// "<rows> <cols>" followed by the entries row by row.
inline IntegerMatrix parse_matrix(std::istream& in, const std::string& source = "<input>") {
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw ParseError(source, 1, "expected '<rows> <cols>'");
  IntegerMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string tok;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(in >> tok)) throw ParseError(source, i + 2, "matrix ends early");
      if (m(i, j).set_str(tok, 10) != 0) throw ParseError(source, i + 2, "not an integer: " + tok);
    }
  if (in >> tok) throw ParseError(source, m.rows() + 2, "trailing data after matrix");
  return m;
}

inline IntegerMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_matrix(in, path.string());
}

template <class T>
void write_matrix(std::ostream& out, const DenseMatrix<T>& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
}

template <class T>
std::string matrix_text(const DenseMatrix<T>& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

template <class T>
void write_matrix_file(const std::filesystem::path& path, const DenseMatrix<T>& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_matrix(out, m);
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace recomb

#endif  // RECOMB_IO_MATRIX_FILE_HPP
