#pragma once

#include <bit>
#include <cstdint>
#include <limits>

namespace fpmm {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using index_t = std::int64_t;

// bitsize of n: floor(log2 n) + 1, with bitsize(0) = 0
inline int bitsize(u64 n) { return std::bit_width(n); }

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod_u64(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

// a^e, saturating at cap (cap itself representable); avoids u128 overflow
inline u128 pow_saturating(u128 a, int e, u128 cap) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) {
    if (a != 0 && r > cap / a) return cap;
    r *= a;
    if (r > cap) return cap;
  }
  return r;
}

}  // namespace fpmm
