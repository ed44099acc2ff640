#include "fpmm/oracle.hpp"

namespace fpmm::oracle {

BigMat exact_mod_gemm(const BigMat& a, const BigMat& b, const BigInt& p) {
  if (a.cols() != b.rows()) throw Error("exact_mod_gemm: dimension mismatch");
  BigMat c(a.rows(), b.cols());
  for (index_t i = 0; i < a.rows(); ++i) {
    for (index_t j = 0; j < b.cols(); ++j) {
      BigInt acc = 0;
      for (index_t l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      c(i, j) = acc % p;
    }
  }
  return c;
}

BigMat exact_mod_gemm_colmajor(const BigMat& a, const BigMat& b, const BigInt& p) {
  if (a.cols() != b.rows()) throw Error("exact_mod_gemm: dimension mismatch");
  BigMat c(a.rows(), b.cols());
  for (index_t j = 0; j < b.cols(); ++j) {
    for (index_t l = 0; l < a.cols(); ++l) {
      const BigInt& blj = b(l, j);
      if (blj == 0) continue;
      for (index_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, l) * blj;
    }
    for (index_t i = 0; i < a.rows(); ++i) c(i, j) %= p;
  }
  return c;
}

}  // namespace fpmm::oracle
