// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "wmnroute/cli.hpp"

int main(int argc, char** argv) {
  return wmnroute::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
