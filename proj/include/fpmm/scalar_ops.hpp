#pragma once

#include <cmath>

#include "fpmm/fp_context.hpp"

namespace fpmm {

// x*y <= (2^(t-1)/3) p, evaluated exactly as 3xy <= 2^(t-1) p
template <typename T>
inline bool mul_reduce_input_ok(u64 x, u64 y, const FpContext<T>& F) {
  return 3 * static_cast<u128>(x) * y <= (u128{1} << (FpContext<T>::t - 1)) * F.p();
}

// x mod p for a nonnegative integer x <= 2^(t-2) p.
//
// b = xq, c = floor(b), d = fma(-c, p, x), then one conditional correction
// each way. Exact under the stated bound.
template <typename T>
inline T fp_reduce(T x, const FpContext<T>& F) {
  FPMM_CONTRACT(x >= T(0) && std::floor(x) == x, "fp_reduce: input must be a nonnegative integer");
  FPMM_CONTRACT(x <= std::ldexp(F.pf(), FpContext<T>::t - 2),
                "fp_reduce: input exceeds 2^(t-2) p");
  T b = x * F.q();
  T c = std::floor(b);
  T d = std::fma(-c, F.pf(), x);  // x - cp
  if (d >= F.pf()) d -= F.pf();
  if (d < T(0)) d += F.pf();
  return d;
}

// (x*y) mod p for integers x, y with xy <= (2^(t-1)/3) p.
//
// Splits xy into h + l with an fma, reduces h, recombines with l. Exact
// even when xy itself is not representable.
template <typename T>
inline T fp_mul_reduce(T x, T y, const FpContext<T>& F) {
  FPMM_CONTRACT(x >= T(0) && std::floor(x) == x && y >= T(0) && std::floor(y) == y,
                "fp_mul_reduce: inputs must be nonnegative integers");
  FPMM_CONTRACT(mul_reduce_input_ok(static_cast<u64>(x), static_cast<u64>(y), F),
                "fp_mul_reduce: product exceeds (2^(t-1)/3) p");
  T h = x * y;
  T l = std::fma(x, y, -h);  // xy - h
  T b = h * F.q();
  T c = std::floor(b);
  T d = std::fma(-c, F.pf(), h);  // h - cp
  T e = d + l;
  if (e >= F.pf()) e -= F.pf();
  if (e < T(0)) e += F.pf();
  return e;
}

// (x*y) mod p for residues x, y < p and any p < 2^(t-1). Uses the fp
// product reduction while its hypothesis provably holds for all residue
// pairs, otherwise 128-bit integer arithmetic.
template <typename T>
inline T residue_mul_mod(T x, T y, const FpContext<T>& F) {
  if (F.residue_mul_fp_safe()) return fp_mul_reduce(x, y, F);
  return static_cast<T>(mulmod_u64(static_cast<u64>(x), static_cast<u64>(y), F.p()));
}

// base^e mod p for base < p. Square-and-multiply with a full reduction at
// every step; paths chosen as in residue_mul_mod.
template <typename T>
inline T mod_pow(T base, u64 e, const FpContext<T>& F) {
  FPMM_CONTRACT(base >= T(0) && base < F.pf() && std::floor(base) == base,
                "mod_pow: base must be a residue");
  T result = T(1);
  T b = base;
  while (e) {
    if (e & 1) result = residue_mul_mod(result, b, F);
    b = residue_mul_mod(b, b, F);
    e >>= 1;
  }
  return result;
}

// a^-1 mod p via extended Euclid on exact integers. Throws NoInverseError
// when gcd(a, p) > 1 (only possible for composite p).
inline u64 mod_inv_u64(u64 a, u64 p) {
  i64 t0 = 0, t1 = 1;
  i64 r0 = static_cast<i64>(p), r1 = static_cast<i64>(a % p);
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
  }
  if (r0 != 1)
    throw NoInverseError("no inverse: gcd(" + std::to_string(a) + ", " + std::to_string(p) +
                         ") = " + std::to_string(r0) + "; use the workspace product variant");
  return static_cast<u64>(t0 < 0 ? t0 + static_cast<i64>(p) : t0);
}

template <typename T>
inline T mod_inv(T a, const FpContext<T>& F) {
  FPMM_CONTRACT(a >= T(0) && a < F.pf() && std::floor(a) == a,
                "mod_inv: argument must be a residue");
  if (a == T(0)) throw NoInverseError("no inverse: argument is 0 mod p");
  return static_cast<T>(mod_inv_u64(static_cast<u64>(a), F.p()));
}

}  // namespace fpmm
