// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string>

#include "wmnroute/errors.hpp"
#include "wmnroute/simd/kernels.hpp"

namespace wmnroute::simd {
namespace {

const Kernels kScalarKernels{Isa::kScalar, &scalar::argmax_first, &scalar::relax_row};
#ifdef WMNROUTE_X86
const Kernels kAvx2Kernels{Isa::kAvx2, &avx2::argmax_first, &avx2::relax_row};
#endif

Isa detect_best() noexcept {
  return cpu_supports(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

Isa auto_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("WMNROUTE_ISA"); env != nullptr && *env != '\0') {
      const auto parsed = parse_isa(env);
      if (!parsed || *parsed == Isa::kAuto) return detect_best();
      return cpu_supports(*parsed) ? *parsed : Isa::kScalar;
    }
    return detect_best();
  }();
  return chosen;
}

}  // namespace

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::kAuto:
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#ifdef WMNROUTE_X86
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa resolve_isa(Isa isa) { return isa == Isa::kAuto ? auto_isa() : isa; }

const Kernels& kernels(Isa isa) {
  const Isa resolved = resolve_isa(isa);
  if (!cpu_supports(resolved)) {
    throw InvalidParams("ISA " + std::string(isa_name(resolved)) + " not supported on this CPU");
  }
#ifdef WMNROUTE_X86
  if (resolved == Isa::kAvx2) return kAvx2Kernels;
#endif
  return kScalarKernels;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kAuto:
      return "auto";
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "auto") return Isa::kAuto;
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  return std::nullopt;
}

}  // namespace wmnroute::simd
