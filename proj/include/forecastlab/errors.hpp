// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace forecastlab {

// A scoring rule was asked to do something it does not define, e.g. scoring a
// continuous question with a binary-only rule. The CLI maps this to exit 3.
class unsupported_combination_error : public std::runtime_error {
  public:
    explicit unsupported_combination_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Bad input files or configuration. The CLI maps this to exit 2.
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace forecastlab
