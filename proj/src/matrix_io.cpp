#include "fpmm/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "fpmm/errors.hpp"

namespace fpmm::io {

void write_matrix(std::ostream& os, const Mat<double>& m, u64 p) {
  os << m.rows() << ' ' << m.cols() << ' ' << p << '\n';
  for (index_t i = 0; i < m.rows(); ++i) {
    for (index_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << static_cast<u64>(m(i, j));
    }
    os << '\n';
  }
}

std::pair<Mat<double>, u64> read_matrix(std::istream& is) {
  index_t rows, cols;
  u64 p;
  if (!(is >> rows >> cols >> p)) throw IoError("matrix file: bad header, expected 'm n p'");
  if (rows < 0 || cols < 0 || p < 2) throw IoError("matrix file: invalid header values");
  Mat<double> m(rows, cols);
  for (index_t i = 0; i < rows; ++i)
    for (index_t j = 0; j < cols; ++j) {
      u64 v;
      if (!(is >> v))
        throw IoError("matrix file: truncated at row " + std::to_string(i));
      m(i, j) = static_cast<double>(v);
    }
  m.set_max_hint(p - 1);
  return {std::move(m), p};
}

void write_matrix_file(const std::string& path, const Mat<double>& m, u64 p) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_matrix(f, m, p);
}

std::pair<Mat<double>, u64> read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  return read_matrix(f);
}

}  // namespace fpmm::io
