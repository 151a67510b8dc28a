// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <system_error>

#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"

namespace wmnroute {

std::string format_decimal(double value) {
  if (std::isnan(value)) throw FormatError("cannot serialize NaN");
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw FormatError("decimal formatting failed");
  return std::string(buffer, end);
}

double parse_decimal(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty() || std::isnan(value)) {
    throw FormatError("not a decimal number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace wmnroute
