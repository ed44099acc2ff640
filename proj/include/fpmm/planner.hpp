#pragma once

#include <array>
#include <optional>
#include <string>

#include "fpmm/int_utils.hpp"
#include "fpmm/multiword.hpp"

namespace fpmm {

struct Variant {
  int u, v;
  int products() const { return u * v; }
  friend bool operator==(Variant a, Variant b) { return a.u == b.u && a.v == b.v; }
};

// the (u,v) search space: u <= 2, v <= 4, u <= v
inline constexpr std::array<Variant, 6> kVariants = {
    {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}}};

inline std::string variant_name(Variant v) {
  return "(" + std::to_string(v.u) + "," + std::to_string(v.v) + ")";
}

// Largest lambda with lambda * bound(u) * bound(v) + p - 1 <= 2^t where
// bound(w) is the word bound of a w-word decomposition of a value < p;
// nullopt when even lambda = 1 fails.
inline std::optional<u64> mw_block_size(int u, int v, u64 p, int t) {
  return max_block_size(word_bound(p, u), word_bound(p, v), p, t);
}

template <typename T>
std::optional<u64> mw_block_size(int u, int v, const FpContext<T>& F) {
  return mw_block_size(u, v, F.p(), FpContext<T>::t);
}

// Largest bitsize b whose worst-case modulus (2^b - 1) still admits
// lambda >= 1 for the (u,v)-product; moduli must also fit below 2^(t-1).
int variant_bit_limit(int u, int v, int t);

// Whether the (u,v)-product handles every prime of bitsize `bits`
inline bool variant_admits_bits(Variant var, int bits, int t) {
  return bits <= variant_bit_limit(var.u, var.v, t);
}

enum class ConcatChoice { none, a, b };

inline const char* concat_name(ConcatChoice c) {
  switch (c) {
    case ConcatChoice::a: return "a";
    case ConcatChoice::b: return "b";
    default: return "none";
  }
}

struct ProductPlan {
  int u = 1, v = 1;
  u64 lambda = 1;
  ConcatChoice concat = ConcatChoice::none;
  u64 predicted_products = 1;           // uv
  u64 predicted_reductions = 0;         // uv m n (ceil(k/lambda) + 2)
  u64 storage_entries = 0;              // k(um + vn) + mn (+ workspace if concatenated)
  Variant variant() const { return {u, v}; }
};

// Plan for multiplying m x k by k x n matrices over a modulus of the given
// bitsize. Picks the cheapest variant (minimal uv) that handles every
// prime of that bitsize with a block size of at least min_lambda, sized at
// the worst-case modulus 2^bits - 1.
//
// Ties on uv: if concatenation is in play (min(m,n) below the threshold),
// the wider decomposition wins ((1,4) over (2,2)) since it gains more
// arithmetic intensity from concatenation; otherwise the smaller u+v wins.
// Concatenation side follows the smaller outer dimension: B when n < m,
// A when n > m.
ProductPlan select_variant(int bits, index_t m, index_t k, index_t n, int t,
                           u64 min_lambda = 1, index_t concat_threshold = 256);

// Same plan, sized at an actual modulus (lambda from p, validity from its
// bitsize)
ProductPlan plan_for_modulus(u64 p, index_t m, index_t k, index_t n, int t,
                             u64 min_lambda = 1, index_t concat_threshold = 256);

// Fill the cost/storage fields of a plan for given dimensions
void finish_plan(ProductPlan& plan, index_t m, index_t k, index_t n);

// Lower bound on the number of coprime moduli (hence matrix products) a
// residue-number-system product needs: ceil((4 log2 p + 2 log2 k) /
// (t - log2 lambda)), with log2 p taken as the integer bitsize. May
// slightly underestimate since the moduli cannot all sit at the maximum.
u64 crt_num_products(int bits_p, u64 k, int t, u64 lambda);

struct MwCount {
  Variant variant;
  u64 products;  // uv
};

// Cheapest (u,v) whose product count satisfies (u+v) bits_p <=
// uv (t - log2 lambda) and whose exact condition admits the requested
// lambda at the worst-case modulus; nullopt when no variant does.
std::optional<MwCount> mw_num_products(int bits_p, int t, u64 lambda);

}  // namespace fpmm
