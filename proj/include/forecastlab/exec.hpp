// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace forecastlab {

// Every parallel kernel in this library ships in two flavours: a plain serial
// loop kept as the reference implementation, and an OpenMP loop used by
// default. Both must produce bit-identical results; the tests enforce this.
enum class ExecMode {
    Serial,
    Parallel,
};

}  // namespace forecastlab
