#pragma once

#include <utility>
#include <vector>

#include "fpmm/block_product.hpp"

namespace fpmm {

// Smallest integer a with a^u >= p (exact ceiling of the real u-th root).
// Floating-point root as a starting point, then exact integer adjustment.
u64 word_base(u64 p, int u);

// Word bound used in the block-size condition: a single word is the matrix
// itself, bounded by p-1; otherwise words are bounded by the base.
inline u64 word_bound(u64 p, int u) { return u == 1 ? p - 1 : word_base(p, u); }

// M = sum_i base^i words[i], all words bounded by base
template <typename T>
struct WordDecomposition {
  u64 base;
  std::vector<Mat<T>> words;
  int word_count() const { return static_cast<int>(words.size()); }
};

// Base-alpha digit expansion of M with matrix digits, alpha = ceil(p^(1/u)).
// The whole loop runs in floating-point: quotients fl(T/alpha) floored
// (exact for integer inputs below 2^t), remainders by fma.
template <typename T>
WordDecomposition<T> decompose(const Mat<T>& M, int u, const FpContext<T>& F) {
  if (u < 1) throw Error("decompose: word count must be positive");
  FPMM_CONTRACT(M.max_bound() < F.p(), "decompose: input must be reduced mod p");
  WordDecomposition<T> d;
  d.base = word_base(F.p(), u);
  d.words.reserve(u);
  const T alpha = static_cast<T>(d.base);
  const T inv_alpha = T(1) / alpha;
  Mat<T> t_mat = M;
  for (int i = 0; i + 1 < u; ++i) {
    Mat<T> word(M.rows(), M.cols());
    T* tp = t_mat.data();
    T* wp = word.data();
    for (size_t e = 0; e < t_mat.size(); ++e) {
      T r = std::floor(tp[e] * inv_alpha);
      wp[e] = std::fma(-alpha, r, tp[e]);  // T - alpha R
      tp[e] = r;
    }
    word.set_max_hint(word_bound(F.p(), u));
    d.words.push_back(std::move(word));
  }
  t_mat.set_max_hint(word_bound(F.p(), u));
  d.words.push_back(std::move(t_mat));
  return d;
}

namespace detail {

template <typename T>
void check_mw_inputs(index_t m, index_t k, index_t n, index_t bk, int u, int v, u64 lambda,
                     const FpContext<T>& F) {
  if (u < 1 || v < 1) throw Error("multiword product: word counts must be positive");
  if (k != bk) throw Error("multiword product: dimension mismatch");
  (void)m;
  (void)n;
  if (lambda < 1) throw InfeasibleError("block size infeasible");
  const u128 peak = static_cast<u128>(lambda) * word_bound(F.p(), u) * word_bound(F.p(), v) +
                    (F.p() - 1);
  if (peak > (u128{1} << FpContext<T>::t))
    throw InfeasibleError("multiword product: lambda alpha beta + p - 1 exceeds 2^t");
}

// gamma = alpha^i beta^j mod p and delta = gamma^-1 mod p, built from
// modular powers of the (inverted) bases with a reduction at every step.
// Inverses are only taken for nonzero exponents, so the degenerate
// single-word base alpha = p (== 0 mod p) never reaches mod_inv.
template <typename T>
std::pair<T, T> scale_factors(u64 alpha, u64 beta, int i, int j, const FpContext<T>& F) {
  const T a = static_cast<T>(alpha % F.p());
  const T b = static_cast<T>(beta % F.p());
  const T gamma = residue_mul_mod(mod_pow(a, static_cast<u64>(i), F),
                                  mod_pow(b, static_cast<u64>(j), F), F);
  const T da = i > 0 ? mod_pow(mod_inv(a, F), static_cast<u64>(i), F) : T(1);
  const T db = j > 0 ? mod_pow(mod_inv(b, F), static_cast<u64>(j), F) : T(1);
  const T delta = residue_mul_mod(da, db, F);
  return {gamma, delta};
}

template <typename T>
T gamma_factor(u64 alpha, u64 beta, int i, int j, const FpContext<T>& F) {
  return residue_mul_mod(mod_pow(static_cast<T>(alpha % F.p()), static_cast<u64>(i), F),
                         mod_pow(static_cast<T>(beta % F.p()), static_cast<u64>(j), F), F);
}

template <typename T>
void scale_mod(Mat<T>& M, T factor, const FpContext<T>& F) {
  T* d = M.data();
  for (size_t e = 0; e < M.size(); ++e) d[e] = residue_mul_mod(d[e], factor, F);
  M.set_max_hint(F.p() - 1);
}

template <typename T>
void scale_mod(MatView<T> v, T factor, const FpContext<T>& F) {
  for (index_t i = 0; i < v.rows; ++i)
    for (index_t j = 0; j < v.cols; ++j) v(i, j) = residue_mul_mod(v(i, j), factor, F);
}

}  // namespace detail

// C = AB mod p from precomputed word decompositions, with no workspace
// beyond C: for each (i,j) in row-major order, C is scaled by
// delta = (alpha^i beta^j)^-1 mod p, accumulated with the block product of
// A_i B_j, then scaled back by gamma. Requires prime p (inverses).
template <typename T>
Mat<T> mw_product_words(const WordDecomposition<T>& da, const WordDecomposition<T>& db,
                        index_t m, index_t k, index_t n, u64 lambda, const FpContext<T>& F,
                        const GemmKernel<T>& kernel) {
  const int u = da.word_count(), v = db.word_count();
  detail::check_mw_inputs<T>(m, k, n, k, u, v, lambda, F);
  Mat<T> C(m, n);
  C.set_max_hint(0);
  for (int i = 0; i < u; ++i) {
    for (int j = 0; j < v; ++j) {
      auto [gamma, delta] = detail::scale_factors(da.base, db.base, i, j, F);
      detail::scale_mod(C, delta, F);
      block_gemm_mod(C, da.words[static_cast<size_t>(i)], db.words[static_cast<size_t>(j)],
                     lambda, F, kernel);
      detail::scale_mod(C, gamma, F);
    }
  }
  return C;
}

template <typename T>
Mat<T> mw_product(const Mat<T>& A, const Mat<T>& B, int u, int v, u64 lambda,
                  const FpContext<T>& F, const GemmKernel<T>& kernel) {
  if (A.cols() != B.rows()) throw Error("multiword product: dimension mismatch");
  return mw_product_words(decompose(A, u, F), decompose(B, v, F), A.rows(), A.cols(), B.cols(),
                          lambda, F, kernel);
}

enum class ConcatSide { auto_pick, a, b };

// Workspace entries used by the concatenated variant (v m n when the B
// words are concatenated, u m n for the A words)
inline u64 concat_workspace_entries(int u, int v, index_t m, index_t n, ConcatSide side) {
  const u64 mn = static_cast<u64>(m) * static_cast<u64>(n);
  return side == ConcatSide::a ? static_cast<u64>(u) * mn : static_cast<u64>(v) * mn;
}

// Same value as mw_product, but the v products A_i B_j for fixed i run as
// one kernel-level block product A_i [B_0 .. B_{v-1}] into an m x nv
// workspace (higher arithmetic intensity when n is small). side=a stacks
// the A_i words vertically instead; auto concatenates B when n < m and A
// when n > m.
template <typename T>
Mat<T> mw_product_concat_words(const WordDecomposition<T>& da, const WordDecomposition<T>& db,
                               index_t m, index_t k, index_t n, u64 lambda,
                               const FpContext<T>& F, const GemmKernel<T>& kernel,
                               ConcatSide side = ConcatSide::auto_pick) {
  const int u = da.word_count(), v = db.word_count();
  detail::check_mw_inputs<T>(m, k, n, k, u, v, lambda, F);
  if (side == ConcatSide::auto_pick) side = (n > m) ? ConcatSide::a : ConcatSide::b;

  Mat<T> C(m, n);
  C.set_max_hint(0);
  if (side == ConcatSide::b) {
    // Bcat = [B_0 .. B_v-1], k x nv, copied once per call
    Mat<T> bcat(k, n * v);
    for (int j = 0; j < v; ++j)
      for (index_t r = 0; r < k; ++r)
        for (index_t c = 0; c < n; ++c) bcat(r, j * n + c) = db.words[static_cast<size_t>(j)](r, c);
    bcat.set_max_hint(word_bound(F.p(), v));
    Mat<T> work(m, n * v);
    for (int i = 0; i < u; ++i) {
      std::fill(work.data(), work.data() + work.size(), T(0));
      work.set_max_hint(0);
      block_gemm_mod(work, da.words[static_cast<size_t>(i)], bcat, lambda, F, kernel);
      for (int j = 0; j < v; ++j) {
        const T gamma = detail::gamma_factor(da.base, db.base, i, j, F);
        MatView<T> tj = work.col_panel(j * n, n);
        detail::scale_mod(tj, gamma, F);
        for (index_t r = 0; r < m; ++r)
          for (index_t c = 0; c < n; ++c) C(r, c) = fp_reduce(C(r, c) + tj(r, c), F);
      }
    }
  } else {
    // Acat = [A_0; ..; A_u-1], um x k
    Mat<T> acat(m * u, k);
    for (int i = 0; i < u; ++i)
      for (index_t r = 0; r < m; ++r)
        for (index_t c = 0; c < k; ++c) acat(i * m + r, c) = da.words[static_cast<size_t>(i)](r, c);
    acat.set_max_hint(word_bound(F.p(), u));
    Mat<T> work(m * u, n);
    for (int j = 0; j < v; ++j) {
      std::fill(work.data(), work.data() + work.size(), T(0));
      work.set_max_hint(0);
      block_gemm_mod(work, acat, db.words[static_cast<size_t>(j)], lambda, F, kernel);
      for (int i = 0; i < u; ++i) {
        const T gamma = detail::gamma_factor(da.base, db.base, i, j, F);
        MatView<T> ti = work.row_panel(i * m, m);
        detail::scale_mod(ti, gamma, F);
        for (index_t r = 0; r < m; ++r)
          for (index_t c = 0; c < n; ++c) C(r, c) = fp_reduce(C(r, c) + ti(r, c), F);
      }
    }
  }
  C.set_max_hint(F.p() - 1);
  return C;
}

template <typename T>
Mat<T> mw_product_concat(const Mat<T>& A, const Mat<T>& B, int u, int v, u64 lambda,
                         const FpContext<T>& F, const GemmKernel<T>& kernel,
                         ConcatSide side = ConcatSide::auto_pick) {
  if (A.cols() != B.rows()) throw Error("multiword product: dimension mismatch");
  return mw_product_concat_words(decompose(A, u, F), decompose(B, v, F), A.rows(), A.cols(),
                                 B.cols(), lambda, F, kernel, side);
}

// Inverse-free variant: block product into a scratch T, scale T by gamma,
// accumulate C <- (C + T) mod p. The only variant valid for composite p.
template <typename T>
Mat<T> mw_product_workspace_words(const WordDecomposition<T>& da,
                                  const WordDecomposition<T>& db, index_t m, index_t k,
                                  index_t n, u64 lambda, const FpContext<T>& F,
                                  const GemmKernel<T>& kernel) {
  const int u = da.word_count(), v = db.word_count();
  detail::check_mw_inputs<T>(m, k, n, k, u, v, lambda, F);
  Mat<T> C(m, n);
  C.set_max_hint(0);
  Mat<T> work(m, n);
  for (int i = 0; i < u; ++i) {
    for (int j = 0; j < v; ++j) {
      std::fill(work.data(), work.data() + work.size(), T(0));
      work.set_max_hint(0);
      block_gemm_mod(work, da.words[static_cast<size_t>(i)], db.words[static_cast<size_t>(j)],
                     lambda, F, kernel);
      const T gamma = detail::gamma_factor(da.base, db.base, i, j, F);
      detail::scale_mod(work, gamma, F);
      for (index_t r = 0; r < m; ++r)
        for (index_t c = 0; c < n; ++c) C(r, c) = fp_reduce(C(r, c) + work(r, c), F);
    }
  }
  C.set_max_hint(F.p() - 1);
  return C;
}

template <typename T>
Mat<T> mw_product_workspace(const Mat<T>& A, const Mat<T>& B, int u, int v, u64 lambda,
                            const FpContext<T>& F, const GemmKernel<T>& kernel) {
  if (A.cols() != B.rows()) throw Error("multiword product: dimension mismatch");
  return mw_product_workspace_words(decompose(A, u, F), decompose(B, v, F), A.rows(), A.cols(),
                                    B.cols(), lambda, F, kernel);
}

}  // namespace fpmm
