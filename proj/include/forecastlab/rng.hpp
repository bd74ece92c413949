// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace forecastlab {

// splitmix64 finalizer; good enough to decorrelate structured keys such as
// (master_seed, replica_index, forecaster_index).
std::uint64_t mix_bits(std::uint64_t x);

// Fold a key path into a single 64-bit seed. Every key position changes the
// result, so stream(master, replica) and stream(master, replica, entity) are
// unrelated sequences.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

// A self-contained deterministic random stream. All draws are produced from
// raw 64-bit engine output with fixed bit arithmetic, so a given seed yields
// the same sequence on every platform; no std::*_distribution is used.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(mix_bits(seed)) {}

    RandomStream(std::uint64_t master, std::initializer_list<std::uint64_t> path)
        : engine_(derive_seed(master, path)) {}

    std::uint64_t next_bits() { return engine_(); }

    // Uniform on the open interval (0, 1); never returns 0 or 1 exactly.
    double unit_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
    }

    bool bernoulli(double p) { return unit_open() < p; }

    // Uniform integer in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n);

  private:
    std::mt19937_64 engine_;
};

}  // namespace forecastlab
