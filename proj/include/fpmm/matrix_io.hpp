#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "fpmm/mat.hpp"

namespace fpmm::io {

// Text format: header "m n p", then m lines of n decimal integers.
// Chosen over binary for auditability at desk scale.
void write_matrix(std::ostream& os, const Mat<double>& m, u64 p);
std::pair<Mat<double>, u64> read_matrix(std::istream& is);

void write_matrix_file(const std::string& path, const Mat<double>& m, u64 p);
std::pair<Mat<double>, u64> read_matrix_file(const std::string& path);

}  // namespace fpmm::io
