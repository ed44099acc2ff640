#include "fpmm/primality.hpp"

#include <initializer_list>

namespace fpmm {

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // composite
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  int r = 0;
  u64 d = n - 1;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // witnesses covering all 64-bit integers (Sinclair / Jaeschke sets)
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

u64 prev_prime(u64 limit) {
  if (limit <= 2) return 0;
  u64 n = limit - 1;
  if (n == 2) return 2;
  if ((n & 1) == 0) --n;
  for (; n >= 3; n -= 2) {
    if (is_prime_u64(n)) return n;
  }
  return 2 < limit ? 2 : 0;
}

}  // namespace fpmm
