#pragma once

#include <optional>

#include "fpmm/gemm_kernel.hpp"
#include "fpmm/scalar_ops.hpp"

namespace fpmm {

// Largest lambda with lambda*max_a*max_b + p - 1 <= 2^t, in exact integer
// arithmetic; nullopt when even lambda = 1 violates the bound. Unbounded
// (zero max) products report u64 max; callers clamp to k anyway.
inline std::optional<u64> max_block_size(u64 max_a, u64 max_b, u64 p, int t) {
  const u128 budget = (u128{1} << t) - (p - 1);
  const u128 ab = static_cast<u128>(max_a) * max_b;
  if (ab == 0) return std::numeric_limits<u64>::max();
  if (ab > budget) return std::nullopt;
  const u128 lambda = budget / ab;
  return lambda > std::numeric_limits<u64>::max()
             ? std::numeric_limits<u64>::max()
             : static_cast<u64>(lambda);
}

template <typename T>
std::optional<u64> max_block_size(u64 max_a, u64 max_b, const FpContext<T>& F) {
  return max_block_size(max_a, max_b, F.p(), FpContext<T>::t);
}

// Reduce every element into [0, p)
template <typename T>
void elementwise_reduce(Mat<T>& m, const FpContext<T>& F) {
  T* d = m.data();
  const size_t n = m.size();
  for (size_t i = 0; i < n; ++i) d[i] = fp_reduce(d[i], F);
  m.set_max_hint(F.p() - 1);
}

namespace detail {

template <typename T>
void check_block_inputs(const Mat<T>& C, const Mat<T>& A, const Mat<T>& B, u64 lambda,
                        const FpContext<T>& F) {
  if (A.rows() != C.rows() || B.cols() != C.cols() || A.cols() != B.rows())
    throw Error("block_gemm_mod: dimension mismatch");
  if (lambda < 1) throw InfeasibleError("block size infeasible");
  FPMM_CONTRACT(C.max_bound() < F.p(), "block_gemm_mod: C must be reduced mod p");
  FPMM_CONTRACT(
      [&] {
        const u64 lam = std::min<u64>(lambda, static_cast<u64>(A.cols()));
        const u128 peak = static_cast<u128>(lam) * A.max_bound() * B.max_bound() + (F.p() - 1);
        return peak <= (u128{1} << FpContext<T>::t);
      }(),
      "block_gemm_mod: lambda max(A) max(B) + p - 1 exceeds 2^t");
}

}  // namespace detail

// C <- C + A B mod p, panel by panel: ceil(k/lambda) kernel calls on
// m x lambda / lambda x n panels, each followed by an elementwise
// reduction of C. The last panel takes the remaining width. Requires
// lambda max(A) max(B) + p - 1 <= 2^t and C reduced mod p.
template <typename T>
void block_gemm_mod(Mat<T>& C, const Mat<T>& A, const Mat<T>& B, u64 lambda,
                    const FpContext<T>& F, const GemmKernel<T>& kernel) {
  detail::check_block_inputs(C, A, B, lambda, F);
  const index_t k = A.cols();
  const index_t lam = static_cast<index_t>(std::min<u64>(lambda, static_cast<u64>(k)));
  for (index_t j0 = 0; j0 < k; j0 += lam) {
    const index_t w = std::min(lam, k - j0);
    kernel.accumulate(C.view(), A.col_panel(j0, w), B.row_panel(j0, w));
    elementwise_reduce(C, F);
  }
}

}  // namespace fpmm
