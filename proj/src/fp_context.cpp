#include "fpmm/fp_context.hpp"

#include <cmath>

namespace fpmm {

namespace {

// volatile stops constant folding so we test the actual runtime paths
template <typename T>
bool fma_single_rounding() {
  constexpr int t = std::numeric_limits<T>::digits;
  volatile T eps = std::numeric_limits<T>::epsilon();  // 2^(1-t)
  volatile T x = T(1) + eps;
  // x*x = 1 + 2eps + eps^2 rounds to 1 + 2eps; a fused fma recovers the
  // eps^2 residual, a multiply-then-add fallback returns 0.
  T h = x * x;
  T l = std::fma(static_cast<T>(x), static_cast<T>(x), -h);
  if (l != static_cast<T>(eps) * static_cast<T>(eps)) return false;
  // integer witness: (2^(t-1)+1)^2 = 2^(2t-2) + 2^t + 1, residual 1
  volatile T big = std::ldexp(T(1), t - 1) + T(1);
  T h2 = big * big;
  T l2 = std::fma(static_cast<T>(big), static_cast<T>(big), -h2);
  return l2 == T(1);
}

template <typename T>
bool rounds_at_working_precision() {
  // 2^t + 1 does not fit in t significand bits; excess-precision
  // environments would keep it
  volatile T two_t = std::ldexp(T(1), std::numeric_limits<T>::digits);
  volatile T one = T(1);
  T sum = two_t + one;
  return sum == two_t;
}

}  // namespace

template <typename T>
bool verify_arithmetic() {
  return fma_single_rounding<T>() && rounds_at_working_precision<T>();
}

template bool verify_arithmetic<double>();
template bool verify_arithmetic<float>();

}  // namespace fpmm
