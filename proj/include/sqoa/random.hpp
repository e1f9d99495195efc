// Copyright 2026 The SQOA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace sqoa {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; bijective on 64-bit words.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based seed splitter: the seed of a stage is a pure function of the
/// master seed and the path of indices leading to it.
uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// Uniform double in [lo, hi).
double uniform_real(Rng& rng, double lo, double hi);

/// Uniform integer in [0, n) without modulo bias. n must be positive.
uint64_t uniform_index(Rng& rng, uint64_t n);

/// Fisher-Yates shuffle driven by uniform_index, identical across standard libraries.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
    for (size_t i = items.size(); i > 1; --i) {
        size_t j = uniform_index(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace sqoa
