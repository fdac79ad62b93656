#include "mmm/kernel_table.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace mmm {
namespace {

template <typename T, int G>
inline void fma_group(T* __restrict c, T a, const T* __restrict b) {
  for (int l = 0; l < G; ++l) c[l] = std::fma(a, b[l], c[l]);
}

template <typename T, int G, unsigned Code, unsigned J>
inline void maybe_group(T* __restrict c, T a, const T* __restrict b) {
  if constexpr ((Code >> (7u - J)) & 1u) fma_group<T, G>(c + J * G, a, b + J * G);
}

// Straight-line masked-region FMA; bit (7 - j), MSB first, owns group j.
template <typename T, int G, unsigned Code>
void pattern_kernel(T* __restrict c, T a, const T* __restrict b) {
  [&]<std::size_t... J>(std::index_sequence<J...>) {
    (maybe_group<T, G, Code, static_cast<unsigned>(J)>(c, a, b), ...);
  }(std::make_index_sequence<8>{});
}

template <typename T, int G>
struct BaseTable {
  static const std::array<KernelFn<T>, 256> table;
};

template <typename T, int G>
const std::array<KernelFn<T>, 256> BaseTable<T, G>::table =
    []<std::size_t... Code>(std::index_sequence<Code...>) {
      return std::array<KernelFn<T>, 256>{&pattern_kernel<T, G, static_cast<unsigned>(Code)>...};
    }(std::make_index_sequence<256>{});

}  // namespace

namespace detail {

template <typename T>
const KernelFn<T>* base_kernel_table(int group_width) {
  switch (group_width) {
    case 1: return BaseTable<T, 1>::table.data();
    case 2: return BaseTable<T, 2>::table.data();
    case 4: return BaseTable<T, 4>::table.data();
    case 8: return BaseTable<T, 8>::table.data();
    case 16: return BaseTable<T, 16>::table.data();
    case 32: return BaseTable<T, 32>::table.data();
    case 64: return BaseTable<T, 64>::table.data();
    default: return nullptr;
  }
}

template const KernelFn<float>* base_kernel_table<float>(int);
template const KernelFn<double>* base_kernel_table<double>(int);

}  // namespace detail

template <typename T>
KernelTable<T> KernelTable<T>::build(const LaneConfig& lane) {
  if (lane.p < 1 || lane.p > 16)
    throw std::invalid_argument("pattern size must lie in [1, 16], got " + std::to_string(lane.p));
  const int g = lane.group_width();
  const KernelFn<T>* base = detail::base_kernel_table<T>(g);
  if (!base)
    throw std::invalid_argument(std::string("unsupported lane configuration: group width ") +
                                std::to_string(g) + " for " + dtype_name(dtype_of<T>()));
  KernelTable t;
  t.p_ = lane.p;
  t.g_ = g;
  const size_t n = size_t(1) << lane.p;
  t.hi_.resize(n);
  if (lane.p <= 8) {
    for (size_t k = 0; k < n; ++k) t.hi_[k] = base[k << (8 - lane.p)];
  } else {
    t.two_part_ = true;
    t.lo_offset_ = int64_t{8} * g;
    t.lo_.resize(n);
    const int lo_bits = lane.p - 8;
    const size_t lo_mask = (size_t{1} << lo_bits) - 1;
    for (size_t k = 0; k < n; ++k) {
      t.hi_[k] = base[k >> lo_bits];
      t.lo_[k] = base[(k & lo_mask) << (8 - lo_bits)];
    }
  }
  return t;
}

template KernelTable<float> KernelTable<float>::build(const LaneConfig&);
template KernelTable<double> KernelTable<double>::build(const LaneConfig&);

}  // namespace mmm
