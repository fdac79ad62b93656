#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmm/matrix.hpp"
#include "mmm/rng.hpp"

namespace mmm {

enum class Structure { random, block_random, column, block_column };

inline const char* structure_name(Structure s) {
  switch (s) {
    case Structure::random: return "random";
    case Structure::block_random: return "block_random";
    case Structure::column: return "column";
    case Structure::block_column: return "block_column";
  }
  return "?";
}

inline Structure parse_structure(const std::string& s) {
  if (s == "random") return Structure::random;
  if (s == "block_random") return Structure::block_random;
  if (s == "column") return Structure::column;
  if (s == "block_column") return Structure::block_column;
  throw std::invalid_argument("unknown sparsity structure: " + s);
}

struct SparsitySpec {
  Structure structure = Structure::random;
  double target = 0.0;      // fraction of zero units
  int64_t block_len = 0;    // 0 = structure default (region width / vector width)
  uint64_t seed = 0;
};

namespace detail {

// Non-zero magnitude in [0.5, 1.5], either sign. Values can never collide
// with the exact zeros the structures plant.
template <typename T>
inline T draw_value(uint64_t seed, int64_t i, int64_t j) {
  const uint64_t h = hash_coords(seed, 2, static_cast<uint64_t>(i), static_cast<uint64_t>(j));
  const double mag = 0.5 + unit_double(h);
  return (h & 1) ? static_cast<T>(-mag) : static_cast<T>(mag);
}

// Exactly round(target * n_units) distinct units, chosen by a seeded partial
// Fisher-Yates shuffle. Keeps coarse-grained structures (few columns or
// blocks) on target where independent per-unit draws would wander.
inline std::vector<uint8_t> sample_zero_units(int64_t n_units, double target, uint64_t seed) {
  std::vector<uint8_t> zero(n_units, 0);
  const int64_t k = std::llround(target * static_cast<double>(n_units));
  if (k <= 0) return zero;
  std::vector<int64_t> idx(n_units);
  std::iota(idx.begin(), idx.end(), 0);
  CounterRng rng(seed, 3);
  for (int64_t t = 0; t < k; ++t) {
    const int64_t pick = t + static_cast<int64_t>(rng.below(static_cast<uint64_t>(n_units - t)));
    std::swap(idx[t], idx[pick]);
    zero[idx[t]] = 1;
  }
  return zero;
}

}  // namespace detail

/// Deterministic pseudorandom matrix with one of the four sparsity
/// structures. Same (dims, spec, lane) gives a bit-identical matrix
/// regardless of run or thread count.
template <typename T>
Matrix<T> generate(int64_t rows, int64_t cols, const SparsitySpec& spec,
                   LaneConfig lane = LaneConfig::defaults(dtype_of<T>())) {
  if (spec.target < 0.0 || spec.target > 1.0)
    throw std::invalid_argument("sparsity target must lie in [0, 1]");
  Matrix<T> m(rows, cols, lane);

  int64_t blk = spec.block_len;
  if (blk == 0)
    blk = spec.structure == Structure::block_column ? lane.w : lane.region_width();
  if (spec.structure == Structure::block_random || spec.structure == Structure::block_column) {
    if (blk <= 0 || m.padded_cols() % blk != 0)
      throw std::invalid_argument("block_len must divide the padded width");
  }

  const uint64_t seed = spec.seed;
  const double target = spec.target;

  T* const base = m.data();
  const int64_t stride = m.padded_cols();

  switch (spec.structure) {
    case Structure::random: {
      // Independent per-element draws; N is large enough that the measured
      // fraction tracks the target tightly.
#pragma omp parallel for schedule(static)
      for (int64_t i = 0; i < rows; ++i) {
        T* r = base + i * stride;
        for (int64_t j = 0; j < cols; ++j) {
          const uint64_t h = hash_coords(seed, 1, static_cast<uint64_t>(i), static_cast<uint64_t>(j));
          r[j] = unit_double(h) < target ? T(0) : detail::draw_value<T>(seed, i, j);
        }
      }
      break;
    }
    case Structure::block_random: {
      const int64_t bpr = (cols + blk - 1) / blk;  // blocks touching the logical range
      const auto zero = detail::sample_zero_units(rows * bpr, target, seed);
#pragma omp parallel for schedule(static)
      for (int64_t i = 0; i < rows; ++i) {
        T* r = base + i * stride;
        for (int64_t b = 0; b < bpr; ++b) {
          if (zero[i * bpr + b]) continue;
          const int64_t end = std::min((b + 1) * blk, cols);
          for (int64_t j = b * blk; j < end; ++j) r[j] = detail::draw_value<T>(seed, i, j);
        }
      }
      break;
    }
    case Structure::column: {
      const auto zero = detail::sample_zero_units(cols, target, seed);
#pragma omp parallel for schedule(static)
      for (int64_t i = 0; i < rows; ++i) {
        T* r = base + i * stride;
        for (int64_t j = 0; j < cols; ++j)
          if (!zero[j]) r[j] = detail::draw_value<T>(seed, i, j);
      }
      break;
    }
    case Structure::block_column: {
      const int64_t groups = (cols + blk - 1) / blk;
      const auto zero = detail::sample_zero_units(groups, target, seed);
#pragma omp parallel for schedule(static)
      for (int64_t i = 0; i < rows; ++i) {
        T* r = base + i * stride;
        for (int64_t j = 0; j < cols; ++j)
          if (!zero[j / blk]) r[j] = detail::draw_value<T>(seed, i, j);
      }
      break;
    }
  }
  return m;
}

}  // namespace mmm
