#include "fpmm/gemm_kernel.hpp"

#include "fpmm/errors.hpp"

#if defined(FPMM_HAVE_CBLAS)
#include <cblas.h>
#endif

namespace fpmm {

#if defined(FPMM_HAVE_CBLAS)

namespace {

class BlasKernelF64 final : public GemmKernel<double> {
 public:
  void accumulate(MatView<double> c, ConstMatView<double> a,
                  ConstMatView<double> b) const override {
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(c.rows),
                static_cast<int>(c.cols), static_cast<int>(a.cols), 1.0, a.data,
                static_cast<int>(a.stride), b.data, static_cast<int>(b.stride), 1.0, c.data,
                static_cast<int>(c.stride));
  }
  std::string_view name() const override { return "accelerated"; }
};

class BlasKernelF32 final : public GemmKernel<float> {
 public:
  void accumulate(MatView<float> c, ConstMatView<float> a,
                  ConstMatView<float> b) const override {
    cblas_sgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(c.rows),
                static_cast<int>(c.cols), static_cast<int>(a.cols), 1.0f, a.data,
                static_cast<int>(a.stride), b.data, static_cast<int>(b.stride), 1.0f, c.data,
                static_cast<int>(c.stride));
  }
  std::string_view name() const override { return "accelerated"; }
};

}  // namespace

bool blas_kernel_available() { return true; }

const GemmKernel<double>& blas_kernel_f64() {
  static const BlasKernelF64 k;
  return k;
}

const GemmKernel<float>& blas_kernel_f32() {
  static const BlasKernelF32 k;
  return k;
}

void set_blas_threads(int n) {
  if (n > 0) openblas_set_num_threads(n);
}

#else

bool blas_kernel_available() { return false; }

const GemmKernel<double>& blas_kernel_f64() {
  throw Error("accelerated kernel not built (no CBLAS at configure time)");
}

const GemmKernel<float>& blas_kernel_f32() {
  throw Error("accelerated kernel not built (no CBLAS at configure time)");
}

void set_blas_threads(int) {}

#endif

template <>
const GemmKernel<double>& blas_kernel<double>() {
  return blas_kernel_f64();
}

template <>
const GemmKernel<float>& blas_kernel<float>() {
  return blas_kernel_f32();
}

}  // namespace fpmm
