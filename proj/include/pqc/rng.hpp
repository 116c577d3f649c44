// Copyright 2026 The pqcsat Authors
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

#ifndef PQC_RNG_HPP
#define PQC_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

namespace pqc {

using Rng = std::mt19937_64;

/// Deterministic generator for the stream identified by (base_seed, keys...).
///
/// Every independent unit of sampling work (one fidelity pair, one circuit draw, one optimizer
/// restart) gets its own substream so results do not depend on which worker ran it or when.
inline Rng substream(uint64_t base_seed, std::initializer_list<uint64_t> keys) {
    std::vector<uint32_t> words;
    words.reserve(2 + 2 * keys.size());
    auto push = [&](uint64_t v) {
        words.push_back(static_cast<uint32_t>(v));
        words.push_back(static_cast<uint32_t>(v >> 32));
    };
    push(base_seed);
    for (uint64_t k : keys) {
        push(k);
    }
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

/// Uniform double on [0, 1) from the top 53 bits.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform angle on [0, 2pi).
inline double uniform_angle(Rng &rng) {
    return 2.0 * std::numbers::pi * uniform01(rng);
}

}  // namespace pqc

#endif
