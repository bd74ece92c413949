// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/rng.hpp"

#include <stdexcept>

namespace forecastlab {

std::uint64_t mix_bits(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t seed = mix_bits(master);
    for (std::uint64_t key : path) {
        seed = mix_bits(seed ^ mix_bits(key + 0x8e9f0d1c2b3a4958ULL));
    }
    return seed;
}

std::uint64_t RandomStream::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("RandomStream::below: n must be positive");
    }
    // Rejection sampling over the largest multiple of n.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return draw % n;
}

}  // namespace forecastlab
