// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/simd/kernels.hpp"

#ifdef WMNROUTE_X86

#include <immintrin.h>

#define WMNROUTE_TARGET_AVX2 __attribute__((target("avx2")))

namespace wmnroute::simd::avx2 {

WMNROUTE_TARGET_AVX2 std::size_t argmax_first(const double* values, std::size_t n) {
  if (n < 8) return scalar::argmax_first(values, n);

  // Pass 1: the maximum value.
  __m256d best = _mm256_loadu_pd(values);
  std::size_t i = 4;
  for (; i + 4 <= n; i += 4) best = _mm256_max_pd(best, _mm256_loadu_pd(values + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double top = lanes[0];
  for (int k = 1; k < 4; ++k) top = lanes[k] > top ? lanes[k] : top;
  for (; i < n; ++i) top = values[i] > top ? values[i] : top;

  // Pass 2: its first occurrence.
  const __m256d target = _mm256_set1_pd(top);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(values + j), target, _CMP_EQ_OQ));
    if (mask != 0) return j + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; j < n; ++j) {
    if (values[j] == top) return j;
  }
  return 0;  // unreachable without NaNs
}

WMNROUTE_TARGET_AVX2 std::size_t relax_row(const RowRelax& row, std::uint32_t* updated) {
  const __m256d via_rate = _mm256_set1_pd(row.via_rate);
  const __m256d via_delay = _mm256_set1_pd(row.via_delay);
  const __m256d bound = _mm256_set1_pd(row.bound);
  std::size_t count = 0;
  std::size_t j = 0;
  for (; j + 4 <= row.n; j += 4) {
    const __m256d cand_delay = _mm256_add_pd(via_delay, _mm256_loadu_pd(row.pivot_delay + j));
    const __m256d feasible = _mm256_cmp_pd(cand_delay, bound, _CMP_LE_OQ);
    if (_mm256_movemask_pd(feasible) == 0) continue;
    // min(a, b) returns b unless a < b: matches the scalar ternary.
    const __m256d cap = _mm256_min_pd(_mm256_loadu_pd(row.pivot_rate + j), via_rate);
    const __m256d rate = _mm256_loadu_pd(row.rate + j);
    const __m256d delay = _mm256_loadu_pd(row.delay + j);
    const __m256d better = _mm256_or_pd(_mm256_cmp_pd(cap, rate, _CMP_GT_OQ),
                                        _mm256_cmp_pd(delay, bound, _CMP_GT_OQ));
    const __m256d take = _mm256_and_pd(feasible, better);
    int mask = _mm256_movemask_pd(take);
    if (mask == 0) continue;
    _mm256_storeu_pd(row.rate + j, _mm256_blendv_pd(rate, cap, take));
    _mm256_storeu_pd(row.delay + j, _mm256_blendv_pd(delay, cand_delay, take));
    while (mask != 0) {
      const int bit = __builtin_ctz(static_cast<unsigned>(mask));
      updated[count++] = static_cast<std::uint32_t>(j + static_cast<std::size_t>(bit));
      mask &= mask - 1;
    }
  }
  if (j < row.n) {
    RowRelax tail = row;
    tail.pivot_rate += j;
    tail.pivot_delay += j;
    tail.rate += j;
    tail.delay += j;
    tail.n -= j;
    const std::size_t extra = scalar::relax_row(tail, updated + count);
    for (std::size_t k = 0; k < extra; ++k) updated[count + k] += static_cast<std::uint32_t>(j);
    count += extra;
  }
  return count;
}

}  // namespace wmnroute::simd::avx2

#endif  // WMNROUTE_X86
