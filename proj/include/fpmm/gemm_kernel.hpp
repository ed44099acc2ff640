#pragma once

#include <string_view>

#include "fpmm/mat.hpp"

namespace fpmm {

// Computes C <- C + A B on floating-point panels. Callers guarantee every
// exact partial dot-product value stays at or below 2^t and all elements
// are nonnegative integers, so any summation order gives the exact integer
// product; implementations must only add and multiply the given values.
template <typename T>
class GemmKernel {
 public:
  virtual ~GemmKernel() = default;
  virtual void accumulate(MatView<T> c, ConstMatView<T> a, ConstMatView<T> b) const = 0;
  virtual std::string_view name() const = 0;
};

template <typename T>
class NaiveKernel final : public GemmKernel<T> {
 public:
  void accumulate(MatView<T> c, ConstMatView<T> a, ConstMatView<T> b) const override {
    for (index_t i = 0; i < c.rows; ++i) {
      for (index_t l = 0; l < a.cols; ++l) {
        T ail = a(i, l);
        if (ail == T(0)) continue;
        const T* brow = b.data + l * b.stride;
        T* crow = c.data + i * c.stride;
        for (index_t j = 0; j < c.cols; ++j) crow[j] += ail * brow[j];
      }
    }
  }
  std::string_view name() const override { return "naive"; }
};

template <typename T>
const GemmKernel<T>& naive_kernel() {
  static const NaiveKernel<T> k;
  return k;
}

bool blas_kernel_available();
const GemmKernel<double>& blas_kernel_f64();
const GemmKernel<float>& blas_kernel_f32();
void set_blas_threads(int n);  // no-op without BLAS

template <typename T>
const GemmKernel<T>& blas_kernel();
template <>
const GemmKernel<double>& blas_kernel<double>();
template <>
const GemmKernel<float>& blas_kernel<float>();

// "naive" or "accelerated"; nullptr if unknown or unavailable
template <typename T>
const GemmKernel<T>* kernel_by_name(std::string_view name) {
  if (name == "naive") return &naive_kernel<T>();
  if (name == "accelerated" && blas_kernel_available()) return &blas_kernel<T>();
  return nullptr;
}

}  // namespace fpmm
