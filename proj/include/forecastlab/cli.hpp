// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forecastlab {

// Entry point behind the `forecastlab` binary. `args` excludes the program
// name. All table output goes to `out` (or the --out file); diagnostics go to
// `err`. Exit codes: 0 success, 2 input error, 3 unsupported combination,
// 4 internal numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forecastlab
