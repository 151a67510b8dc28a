// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wmnroute/topology.hpp"

namespace wmnroute {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInfeasible = 4;

/// "const:V" or "uniform:LO:HI". Throws InvalidParams.
AttributeModel parse_model(std::string_view text);
std::string model_spec(const AttributeModel& model);

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmnroute
