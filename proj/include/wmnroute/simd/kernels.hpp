// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

// Data-parallel inner loops of the routing algorithms. Each kernel has a
// scalar reference and an AVX2 variant; results are bit-identical (only
// min, add and ordered compares are used, never FMA or reassociation).

#if defined(__x86_64__) || defined(_M_X64)
#define WMNROUTE_X86 1
#endif

namespace wmnroute::simd {

enum class Isa { kAuto, kScalar, kAvx2 };

/// One Floyd-Warshall row update through pivot k:
///   for j: if via_delay + pivot_delay[j] <= bound and
///          (min(via_rate, pivot_rate[j]) > rate[j] or delay[j] > bound)
///          then rate[j], delay[j] take the candidate and j is reported.
/// `rate`/`delay` must not alias the pivot rows.
struct RowRelax {
  double via_rate = 0.0;
  double via_delay = 0.0;
  const double* pivot_rate = nullptr;
  const double* pivot_delay = nullptr;
  double* rate = nullptr;
  double* delay = nullptr;
  std::size_t n = 0;
  double bound = 0.0;
};

/// Writes updated column indices in ascending order; returns their count.
using RelaxRowFn = std::size_t (*)(const RowRelax& row, std::uint32_t* updated);
/// Index of the first maximum of values[0, n); n > 0, no NaNs.
using ArgmaxFn = std::size_t (*)(const double* values, std::size_t n);

struct Kernels {
  Isa isa = Isa::kScalar;
  ArgmaxFn argmax_first = nullptr;
  RelaxRowFn relax_row = nullptr;
};

/// kAuto picks WMNROUTE_ISA from the environment when set ("scalar" or
/// "avx2"), else the widest ISA the CPU supports. Throws InvalidParams for
/// an ISA the CPU lacks.
const Kernels& kernels(Isa isa = Isa::kAuto);

bool cpu_supports(Isa isa) noexcept;
Isa resolve_isa(Isa isa);
std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

namespace scalar {
std::size_t argmax_first(const double* values, std::size_t n);
std::size_t relax_row(const RowRelax& row, std::uint32_t* updated);
}  // namespace scalar

#ifdef WMNROUTE_X86
namespace avx2 {
std::size_t argmax_first(const double* values, std::size_t n);
std::size_t relax_row(const RowRelax& row, std::uint32_t* updated);
}  // namespace avx2
#endif

}  // namespace wmnroute::simd
