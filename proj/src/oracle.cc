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

#include "qhide/oracle.h"

#include <stdexcept>
#include <utility>

namespace qhide {

PairOracle::PairOracle(BasisIndex a, BasisIndex b) {
    if (a >= kDataDim || b >= kDataDim || a == b) {
        throw std::invalid_argument("PairOracle needs two distinct data basis indices");
    }
    if (a > b) {
        std::swap(a, b);
    }
    marked_ = {a, b};
}

PairOracle PairOracle::complement() const {
    std::array<BasisIndex, 2> rest{};
    std::size_t n = 0;
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        if (!marks(x)) {
            rest[n++] = x;
        }
    }
    return PairOracle(rest[0], rest[1]);
}

std::string PairOracle::to_string() const {
    return "{" + basis_label(marked_[0]) + "," + basis_label(marked_[1]) + "}";
}

std::string basis_label(BasisIndex x) {
    if (x >= kDataDim) {
        throw std::invalid_argument("not a data basis index");
    }
    return {static_cast<char>('0' + ((x >> 1) & 1)), static_cast<char>('0' + (x & 1))};
}

}  // namespace qhide
