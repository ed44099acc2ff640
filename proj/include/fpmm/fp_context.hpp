#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "fpmm/errors.hpp"
#include "fpmm/int_utils.hpp"
#include "fpmm/primality.hpp"

namespace fpmm {

// True if fma(a,b,c) is computed with a single rounding and basic operations
// round at the width of T. Checked once per process; a software fma that
// rounds once is acceptable.
template <typename T>
bool verify_arithmetic();

extern template bool verify_arithmetic<double>();
extern template bool verify_arithmetic<float>();

// Prime-field descriptor for exact modular arithmetic in the floating-point
// format T (binary64: t=53, binary32: t=24).
//
// Carries the modulus p, its correctly rounded reciprocal q = fl(1/p), and
// derived bounds used by the reduction algorithms. Immutable once built;
// safe to share across threads.
template <typename T>
class FpContext {
 public:
  static_assert(std::is_floating_point_v<T>);
  static constexpr int t = std::numeric_limits<T>::digits;
  static_assert(t >= 3);

  static FpContext make(u64 p, bool allow_composite = false) {
    static const bool arithmetic_ok = verify_arithmetic<T>();
    if (!arithmetic_ok)
      throw Error("floating-point environment lacks a single-rounding fma");
    if (p < 5) throw Error("modulus must be at least 5, got " + std::to_string(p));
    if (p >= (u64{1} << (t - 1)))
      throw Error("modulus must be below 2^" + std::to_string(t - 1));
    const bool prime = is_prime_u64(p);
    if (!prime && !allow_composite)
      throw Error("modulus " + std::to_string(p) +
                  " is composite; pass allow_composite to use the workspace product");
    return FpContext(p, prime);
  }

  u64 p() const { return p_; }
  T pf() const { return pf_; }
  T q() const { return q_; }
  int bits() const { return bits_; }
  bool prime() const { return prime_; }

  // 3(p-1)^2 <= 2^(t-1) p: every product of two residues satisfies the
  // proven hypothesis of the fp product reduction. Above this, scalar
  // residue products take the exact integer path.
  bool residue_mul_fp_safe() const { return residue_fp_safe_; }

 private:
  FpContext(u64 p, bool prime)
      : p_(p),
        pf_(static_cast<T>(p)),
        q_(T(1) / static_cast<T>(p)),
        bits_(bitsize(p)),
        prime_(prime),
        residue_fp_safe_(3 * static_cast<u128>(p - 1) * (p - 1) <=
                         (u128{1} << (t - 1)) * p) {}

  u64 p_;
  T pf_;
  T q_;
  int bits_;
  bool prime_;
  bool residue_fp_safe_;
};

using FpContext64 = FpContext<double>;
using FpContext32 = FpContext<float>;

}  // namespace fpmm
