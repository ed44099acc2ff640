#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "fpmm/mat.hpp"
#include "fpmm/scalar_ops.hpp"

namespace fpmm::oracle {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision dense matrix; never touches floating-point.
class BigMat {
 public:
  BigMat() : rows_(0), cols_(0) {}
  BigMat(index_t rows, index_t cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }
  BigInt& operator()(index_t i, index_t j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const BigInt& operator()(index_t i, index_t j) const {
    return data_[static_cast<size_t>(i * cols_ + j)];
  }

  friend bool operator==(const BigMat& a, const BigMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  index_t rows_, cols_;
  std::vector<BigInt> data_;
};

// Ground truth: naive triple-loop exact product reduced mod p.
BigMat exact_mod_gemm(const BigMat& a, const BigMat& b, const BigInt& p);

// Independently coded second route (column-major accumulation); guards the
// oracle itself.
BigMat exact_mod_gemm_colmajor(const BigMat& a, const BigMat& b, const BigInt& p);

template <typename T>
BigMat to_big(const Mat<T>& m) {
  BigMat r(m.rows(), m.cols());
  for (index_t i = 0; i < m.rows(); ++i)
    for (index_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<u64>(m(i, j));
  return r;
}

template <typename T>
Mat<T> from_big(const BigMat& m) {
  Mat<T> r(m.rows(), m.cols());
  for (index_t i = 0; i < m.rows(); ++i)
    for (index_t j = 0; j < m.cols(); ++j) {
      const BigInt& v = m(i, j);
      if (v < 0 || v > (BigInt(1) << std::numeric_limits<T>::digits))
        throw Error("from_big: value not representable in the working format");
      r(i, j) = static_cast<T>(static_cast<u64>(v));
    }
  return r;
}

// First coordinate at which a floating-point matrix differs from the
// reference; nullopt when equal.
struct Mismatch {
  index_t row, col;
  std::string got, want;
};

template <typename T>
std::optional<Mismatch> first_mismatch(const Mat<T>& got, const BigMat& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols())
    return Mismatch{-1, -1, "dims", "dims"};
  for (index_t i = 0; i < got.rows(); ++i)
    for (index_t j = 0; j < got.cols(); ++j) {
      BigInt g = static_cast<u64>(got(i, j));
      if (g != want(i, j))
        return Mismatch{i, j, g.str(), want(i, j).str()};
    }
  return std::nullopt;
}

}  // namespace fpmm::oracle
