// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/simd/kernels.hpp"

namespace wmnroute::simd::scalar {

std::size_t argmax_first(const double* values, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

std::size_t relax_row(const RowRelax& row, std::uint32_t* updated) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < row.n; ++j) {
    const double delay = row.via_delay + row.pivot_delay[j];
    if (!(delay <= row.bound)) continue;
    const double cap = row.pivot_rate[j] < row.via_rate ? row.pivot_rate[j] : row.via_rate;
    if (cap > row.rate[j] || row.delay[j] > row.bound) {
      row.rate[j] = cap;
      row.delay[j] = delay;
      updated[count++] = static_cast<std::uint32_t>(j);
    }
  }
  return count;
}

}  // namespace wmnroute::simd::scalar
