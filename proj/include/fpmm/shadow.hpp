#pragma once

#include <string>
#include <vector>

#include "fpmm/mat.hpp"
#include "fpmm/multiword.hpp"

namespace fpmm::oracle {

// Exact-integer replay of a product run. Asserts, coordinate by
// coordinate, that every value of C + A_j B_j stays at or below 2^t before
// each reduction (with p >= 5 this also keeps every reduction input within
// the 2^(t-2) p bound of the fp reduction). No floating-point anywhere.
struct ShadowVerdict {
  bool ok = true;
  std::string check;
  int word_i = -1, word_j = -1;  // -1 outside multiword runs
  index_t panel = -1, row = -1, col = -1;
  std::string value, bound;

  std::string describe() const {
    if (ok) return "ok";
    std::string s = check + " at (" + std::to_string(row) + "," + std::to_string(col) +
                    "), panel " + std::to_string(panel);
    if (word_i >= 0) s += ", word pair (" + std::to_string(word_i) + "," + std::to_string(word_j) + ")";
    s += ": " + value + " > " + bound;
    return s;
  }
};

enum class MwStyle { inplace, workspace };

namespace detail {

inline std::string u128_str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

struct IntMat {
  index_t rows, cols;
  std::vector<u64> e;
  u64& operator()(index_t i, index_t j) { return e[static_cast<size_t>(i * cols + j)]; }
  const u64& operator()(index_t i, index_t j) const {
    return e[static_cast<size_t>(i * cols + j)];
  }
};

template <typename T>
IntMat to_int(const Mat<T>& m) {
  IntMat r{m.rows(), m.cols(), {}};
  r.e.reserve(m.size());
  for (index_t i = 0; i < m.rows(); ++i)
    for (index_t j = 0; j < m.cols(); ++j) r.e.push_back(static_cast<u64>(m(i, j)));
  return r;
}

// base-alpha digits, computed in plain integers
inline std::vector<IntMat> int_words(const IntMat& m, u64 alpha, int u) {
  std::vector<IntMat> words;
  IntMat t = m;
  for (int i = 0; i + 1 < u; ++i) {
    IntMat w{m.rows, m.cols, std::vector<u64>(t.e.size())};
    for (size_t e = 0; e < t.e.size(); ++e) {
      w.e[e] = t.e[e] % alpha;
      t.e[e] /= alpha;
    }
    words.push_back(std::move(w));
  }
  words.push_back(std::move(t));
  return words;
}

// replay C <- C + A B mod p panel by panel; C is mutated to the exact
// post-state so multiword replays can chain
inline bool replay_block(IntMat& c, const IntMat& a, const IntMat& b, u64 lambda, u64 p, int t,
                         ShadowVerdict& out) {
  const u128 limit = u128{1} << t;
  const index_t k = a.cols;
  const index_t lam = static_cast<index_t>(std::min<u64>(lambda, static_cast<u64>(std::max<index_t>(k, 1))));
  index_t panel = 0;
  for (index_t j0 = 0; j0 < k; j0 += lam, ++panel) {
    const index_t w = std::min(lam, k - j0);
    for (index_t r = 0; r < c.rows; ++r) {
      for (index_t cc = 0; cc < c.cols; ++cc) {
        u128 dot = 0;
        for (index_t l = 0; l < w; ++l)
          dot += static_cast<u128>(a(r, j0 + l)) * b(j0 + l, cc);
        const u128 peak = dot + c(r, cc);
        if (peak > limit) {
          out.ok = false;
          out.check = "C + A_j B_j exceeds 2^t";
          out.panel = panel;
          out.row = r;
          out.col = cc;
          out.value = u128_str(peak);
          out.bound = u128_str(limit);
          return false;
        }
        c(r, cc) = static_cast<u64>(peak % p);
      }
    }
  }
  return true;
}

}  // namespace detail

template <typename T>
ShadowVerdict shadow_check_block(const Mat<T>& c0, const Mat<T>& a, const Mat<T>& b, u64 lambda,
                                 const FpContext<T>& F) {
  ShadowVerdict v;
  detail::IntMat ic = detail::to_int(c0);
  detail::replay_block(ic, detail::to_int(a), detail::to_int(b), lambda, F.p(),
                       FpContext<T>::t, v);
  return v;
}

template <typename T>
ShadowVerdict shadow_check_mw(const Mat<T>& a, const Mat<T>& b, int u, int v, u64 lambda,
                              const FpContext<T>& F, MwStyle style = MwStyle::inplace) {
  ShadowVerdict verdict;
  const u64 p = F.p();
  const u64 alpha = word_base(p, u), beta = word_base(p, v);
  const auto aw = detail::int_words(detail::to_int(a), alpha, u);
  const auto bw = detail::int_words(detail::to_int(b), beta, v);
  detail::IntMat c{a.rows(), b.cols(),
                   std::vector<u64>(static_cast<size_t>(a.rows() * b.cols()), 0)};
  for (int i = 0; i < u; ++i) {
    for (int j = 0; j < v; ++j) {
      const u64 gamma = mulmod_u64(powmod_u64(alpha % p, static_cast<u64>(i), p),
                                   powmod_u64(beta % p, static_cast<u64>(j), p), p);
      verdict.word_i = i;
      verdict.word_j = j;
      if (style == MwStyle::inplace) {
        const u64 da = i > 0 ? powmod_u64(mod_inv_u64(alpha % p, p), static_cast<u64>(i), p) : 1;
        const u64 db = j > 0 ? powmod_u64(mod_inv_u64(beta % p, p), static_cast<u64>(j), p) : 1;
        const u64 delta = mulmod_u64(da, db, p);
        for (u64& e : c.e) e = mulmod_u64(e, delta, p);
        if (!detail::replay_block(c, aw[static_cast<size_t>(i)], bw[static_cast<size_t>(j)],
                                  lambda, p, FpContext<T>::t, verdict))
          return verdict;
        for (u64& e : c.e) e = mulmod_u64(e, gamma, p);
      } else {
        detail::IntMat work{c.rows, c.cols, std::vector<u64>(c.e.size(), 0)};
        if (!detail::replay_block(work, aw[static_cast<size_t>(i)], bw[static_cast<size_t>(j)],
                                  lambda, p, FpContext<T>::t, verdict))
          return verdict;
        for (size_t e = 0; e < c.e.size(); ++e)
          c.e[e] = (c.e[e] + mulmod_u64(work.e[e], gamma, p)) % p;
      }
    }
  }
  verdict.word_i = verdict.word_j = -1;
  return verdict;
}

}  // namespace fpmm::oracle
