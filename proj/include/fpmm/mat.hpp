#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "fpmm/errors.hpp"
#include "fpmm/int_utils.hpp"

namespace fpmm {

template <typename T>
struct ConstMatView {
  const T* data;
  index_t rows, cols, stride;
  const T& operator()(index_t i, index_t j) const { return data[i * stride + j]; }
};

template <typename T>
struct MatView {
  T* data;
  index_t rows, cols, stride;
  T& operator()(index_t i, index_t j) const { return data[i * stride + j]; }
  operator ConstMatView<T>() const { return {data, rows, cols, stride}; }
};

// Dense row-major matrix of nonnegative integers stored as floating-point.
// max_hint, when set, is a sound upper bound on the elements (not
// necessarily attained); reductions and decompositions maintain it.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(index_t rows, index_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), fill) {
    if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
  }

  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }
  T& operator()(index_t i, index_t j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const T& operator()(index_t i, index_t j) const {
    return data_[static_cast<size_t>(i * cols_ + j)];
  }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  MatView<T> view() { return {data_.data(), rows_, cols_, cols_}; }
  ConstMatView<T> view() const { return {data_.data(), rows_, cols_, cols_}; }

  // columns [c0, c0+ncols)
  ConstMatView<T> col_panel(index_t c0, index_t ncols) const {
    return {data_.data() + c0, rows_, ncols, cols_};
  }
  MatView<T> col_panel(index_t c0, index_t ncols) {
    return {data_.data() + c0, rows_, ncols, cols_};
  }
  // rows [r0, r0+nrows)
  ConstMatView<T> row_panel(index_t r0, index_t nrows) const {
    return {data_.data() + r0 * cols_, nrows, cols_, cols_};
  }
  MatView<T> row_panel(index_t r0, index_t nrows) {
    return {data_.data() + r0 * cols_, nrows, cols_, cols_};
  }

  const std::optional<u64>& max_hint() const { return max_hint_; }
  void set_max_hint(u64 bound) { max_hint_ = bound; }
  void clear_max_hint() { max_hint_ = std::nullopt; }

  // hint if present, else a scan
  u64 max_bound() const {
    if (max_hint_) return *max_hint_;
    T m = T(0);
    for (T v : data_) m = std::max(m, v);
    return static_cast<u64>(m);
  }

  bool same_dims(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  index_t rows_, cols_;
  std::vector<T> data_;
  std::optional<u64> max_hint_;
};

// Unbiased draw from [0, bound) by rejection; deterministic for a given
// engine state on any platform.
inline u64 bounded_u64(std::mt19937_64& rng, u64 bound) {
  const u64 reject_above = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % bound;
  u64 r;
  do {
    r = rng();
  } while (r >= reject_above);
  return r % bound;
}

inline u64 mix_seed(u64 a, u64 b) {
  // splitmix64 step
  u64 z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Matrix with entries uniform in [0, p)
template <typename T>
Mat<T> random_mat(index_t rows, index_t cols, u64 p, u64 seed) {
  std::mt19937_64 rng(seed);
  Mat<T> m(rows, cols);
  for (index_t i = 0; i < rows; ++i)
    for (index_t j = 0; j < cols; ++j) m(i, j) = static_cast<T>(bounded_u64(rng, p));
  m.set_max_hint(p - 1);
  return m;
}

template <typename T>
Mat<T> identity_mat(index_t n) {
  Mat<T> m(n, n);
  for (index_t i = 0; i < n; ++i) m(i, i) = T(1);
  m.set_max_hint(1);
  return m;
}

}  // namespace fpmm
