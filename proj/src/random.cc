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

#include "qhide/random.h"

#include <stdexcept>

namespace qhide {

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {
}

RandomStream RandomStream::substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(mix_seed(seed ^ mix_seed(index + 1)));
}

std::uint64_t RandomStream::next_u64() {
    return engine_();
}

double RandomStream::next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool RandomStream::bernoulli(double p) {
    return next_unit() < p;
}

std::size_t RandomStream::next_index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("next_index requires a nonempty range");
    }
    auto k = static_cast<std::size_t>(next_unit() * static_cast<double>(n));
    return k < n ? k : n - 1;
}

}  // namespace qhide
