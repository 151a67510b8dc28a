// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/rng.hpp"

#include <cmath>

namespace wmnroute {

double Xoshiro256::uniform(double lo, double hi) noexcept {
  const double value = lo + (hi - lo) * unit();
  return value < hi ? value : std::nextafter(hi, lo);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  SplitMix64 mix(base ^ ((stream << 32) | (stream >> 32)) ^ 0xD1B54A32D192ED03ULL);
  return mix.next();
}

}  // namespace wmnroute
