#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <utility>

namespace mmm {

enum class Dtype : uint32_t { f32 = 0, f64 = 1 };

inline const char* dtype_name(Dtype d) { return d == Dtype::f32 ? "f32" : "f64"; }

template <typename T>
constexpr Dtype dtype_of();
template <>
constexpr Dtype dtype_of<float>() {
  return Dtype::f32;
}
template <>
constexpr Dtype dtype_of<double>() {
  return Dtype::f64;
}

/// Vector/pattern geometry. A row region of W*P*V elements is the unit one
/// kernel call covers; each of the P pattern bits governs a group of W*V
/// consecutive elements.
struct LaneConfig {
  int w = 8;  // lanes per hardware vector
  int p = 8;  // pattern bits
  int v = 1;  // vectors per pattern bit

  static LaneConfig defaults(Dtype d) {
    return d == Dtype::f32 ? LaneConfig{8, 8, 1} : LaneConfig{4, 8, 1};
  }

  int group_width() const { return w * v; }
  int region_width() const { return w * p * v; }

  bool operator==(const LaneConfig&) const = default;
};

inline int64_t round_up(int64_t x, int64_t multiple) {
  return (x + multiple - 1) / multiple * multiple;
}

namespace detail {

inline void* aligned_malloc(size_t bytes) {
  constexpr size_t kAlign = 256;
  void* p = std::aligned_alloc(kAlign, round_up(static_cast<int64_t>(bytes), kAlign));
  if (!p) throw std::bad_alloc();
  return p;
}

}  // namespace detail

/// Row-major dense matrix. Columns are padded with zeros up to a multiple of
/// the lane config's region width so every row splits into whole regions;
/// rows start on vector-aligned addresses. Element (i, j) lives at linear
/// index i * padded_cols + j.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(int64_t rows, int64_t cols, LaneConfig lane = LaneConfig::defaults(dtype_of<T>()))
      : rows_(rows), cols_(cols), lane_(lane) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (lane.w <= 0 || lane.p <= 0 || lane.v <= 0)
      throw std::invalid_argument("lane config fields must be positive");
    const int64_t region = lane.region_width();
    padded_cols_ = round_up(cols, region);
    if (rows > std::numeric_limits<int64_t>::max() / padded_cols_ ||
        static_cast<uint64_t>(rows) * static_cast<uint64_t>(padded_cols_) >
            std::numeric_limits<size_t>::max() / sizeof(T) / 2)
      throw std::overflow_error("matrix dimensions overflow the index type");
    data_ = static_cast<T*>(detail::aligned_malloc(sizeof(T) * rows_ * padded_cols_));
    std::memset(data_, 0, sizeof(T) * rows_ * padded_cols_);
  }

  Matrix(const Matrix& o) : rows_(o.rows_), cols_(o.cols_), padded_cols_(o.padded_cols_), lane_(o.lane_) {
    if (o.data_) {
      data_ = static_cast<T*>(detail::aligned_malloc(sizeof(T) * rows_ * padded_cols_));
      std::memcpy(data_, o.data_, sizeof(T) * rows_ * padded_cols_);
    }
  }
  Matrix(Matrix&& o) noexcept { swap(o); }
  Matrix& operator=(Matrix o) noexcept {
    swap(o);
    return *this;
  }
  ~Matrix() { std::free(data_); }

  void swap(Matrix& o) noexcept {
    std::swap(rows_, o.rows_);
    std::swap(cols_, o.cols_);
    std::swap(padded_cols_, o.padded_cols_);
    std::swap(lane_, o.lane_);
    std::swap(data_, o.data_);
    std::swap(version_, o.version_);
  }

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }
  int64_t padded_cols() const { return padded_cols_; }
  const LaneConfig& lane() const { return lane_; }
  Dtype dtype() const { return dtype_of<T>(); }
  int64_t size() const { return rows_ * cols_; }

  // Content version for staleness guards: any mutable access bumps it.
  uint64_t version() const { return version_; }

  const T* data() const { return data_; }
  T* data() {
    ++version_;
    return data_;
  }
  const T* row(int64_t i) const {
    assert(i >= 0 && i < rows_);
    return data_ + i * padded_cols_;
  }
  T* row(int64_t i) {
    assert(i >= 0 && i < rows_);
    ++version_;
    return data_ + i * padded_cols_;
  }
  const T& at(int64_t i, int64_t j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[i * padded_cols_ + j];
  }
  T& at(int64_t i, int64_t j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    ++version_;
    return data_[i * padded_cols_ + j];
  }

  void fill_zero() {
    ++version_;
    std::memset(data_, 0, sizeof(T) * rows_ * padded_cols_);
  }

  /// True when padding columns hold exact zeros (the class invariant every
  /// operation in the repo must preserve).
  bool padding_is_zero() const {
    for (int64_t i = 0; i < rows_; ++i) {
      const T* r = row(i);
      for (int64_t j = cols_; j < padded_cols_; ++j)
        if (r[j] != T(0)) return false;
    }
    return true;
  }

 private:
  int64_t rows_ = 0;
  int64_t cols_ = 0;
  int64_t padded_cols_ = 0;
  LaneConfig lane_;
  T* data_ = nullptr;
  uint64_t version_ = 0;
};

/// Fraction of exact zeros over the logical (unpadded) range.
template <typename T>
double elementwise_sparsity(const Matrix<T>& m) {
  int64_t zeros = 0;
#pragma omp parallel for reduction(+ : zeros) schedule(static)
  for (int64_t i = 0; i < m.rows(); ++i) {
    const T* r = m.row(i);
    int64_t z = 0;
    for (int64_t j = 0; j < m.cols(); ++j) z += (r[j] == T(0));
    zeros += z;
  }
  return static_cast<double>(zeros) / static_cast<double>(m.rows() * m.cols());
}

}  // namespace mmm
