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

#include "sqoa/random.hpp"

namespace sqoa {

uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path) {
    uint64_t h = splitmix64(master);
    for (uint64_t step : path) {
        h = splitmix64(h ^ splitmix64(step + 0x632be59bd9b4e019ULL));
    }
    return h;
}

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_real(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

uint64_t uniform_index(Rng& rng, uint64_t n) {
    // Reject draws from the incomplete top block.
    const uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

}  // namespace sqoa
