// Copyright 2026 The qhide Authors
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

#ifndef QHIDE_RANDOM_H
#define QHIDE_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>

namespace qhide {

/// Seeded deterministic random source. Every sampling operation takes one
/// explicitly. A stream has a single owner; it is movable but not copyable so
/// two consumers can never silently replay the same draws.
///
/// Draws are derived from the raw 64-bit engine output with fixed arithmetic
/// (no std:: distributions), so a given seed produces the same sequence on
/// every standard library.
class RandomStream {
   public:
    explicit RandomStream(std::uint64_t seed);

    RandomStream(const RandomStream &) = delete;
    RandomStream &operator=(const RandomStream &) = delete;
    RandomStream(RandomStream &&) noexcept = default;
    RandomStream &operator=(RandomStream &&) noexcept = default;

    /// Independent stream for worker `index` of a run seeded with `seed`.
    static RandomStream substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 bits of resolution.
    double next_unit();
    bool bernoulli(double p);
    /// Uniform in [0, n). Requires n > 0.
    std::size_t next_index(std::size_t n);

    std::uint64_t seed() const {
        return seed_;
    }

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace qhide

#endif  // QHIDE_RANDOM_H
