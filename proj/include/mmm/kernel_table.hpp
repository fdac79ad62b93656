#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "mmm/matrix.hpp"

namespace mmm {

/// One region kernel: c[..] += a * b[..] on the groups its pattern selects.
template <typename T>
using KernelFn = void (*)(T* c, T a, const T* b);

namespace detail {
// 256-entry dispatch arrays of straight-line code, one per (type, group
// width) pairing compiled into the library. Returns nullptr when the group
// width has no compiled table.
template <typename T>
const KernelFn<T>* base_kernel_table(int group_width);
}  // namespace detail

/// Dispatch table with 2^P entries. Entry k updates exactly the groups under
/// the set bits of k (MSB first): entry 0 touches nothing, entry 2^P - 1
/// updates the whole region, and no entry branches on data values.
///
/// P <= 8 resolves to a single routine per entry. Wider patterns chain two
/// 8-bit routines (groups [0,8) and [8,P)), which keeps table construction a
/// remap of the compiled 256-routine set for any P up to 16.
template <typename T>
class KernelTable {
 public:
  KernelTable() = default;

  static KernelTable build(const LaneConfig& lane);

  int pattern_bits() const { return p_; }
  int group_width() const { return g_; }
  int region_width() const { return g_ * p_; }
  size_t size() const { return size_t(1) << p_; }
  bool two_part() const { return two_part_; }

  // Single-call dispatch array; valid when !two_part().
  const KernelFn<T>* entries() const { return hi_.data(); }
  // Chained dispatch arrays; the lo routine applies lo_offset() elements in.
  const KernelFn<T>* hi() const { return hi_.data(); }
  const KernelFn<T>* lo() const { return lo_.data(); }
  int64_t lo_offset() const { return lo_offset_; }

  void apply(uint32_t code, T* c, T a, const T* b) const {
    assert(code < size());
    hi_[code](c, a, b);
    if (two_part_) lo_[code](c + lo_offset_, a, b + lo_offset_);
  }

 private:
  int p_ = 0;
  int g_ = 0;
  bool two_part_ = false;
  int64_t lo_offset_ = 0;
  std::vector<KernelFn<T>> hi_;
  std::vector<KernelFn<T>> lo_;
};

}  // namespace mmm
