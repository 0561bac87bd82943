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

#ifndef QHIDE_ORACLE_H
#define QHIDE_ORACLE_H

#include <array>
#include <cstdint>
#include <string>

namespace qhide {

using BasisIndex = std::uint32_t;

/// Number of basis states of the 2-qubit data register.
inline constexpr BasisIndex kDataDim = 4;

/// Balanced Boolean function on the four data basis states: f(x) = 1 on
/// exactly two of them.
class PairOracle {
   public:
    /// Throws std::invalid_argument unless a and b are distinct data indices.
    PairOracle(BasisIndex a, BasisIndex b);

    /// Marked states in increasing order.
    const std::array<BasisIndex, 2> &marked() const {
        return marked_;
    }
    bool marks(BasisIndex x) const {
        return x == marked_[0] || x == marked_[1];
    }
    /// f-bar = f xor 1.
    PairOracle complement() const;

    /// e.g. "{00,01}".
    std::string to_string() const;

    bool operator==(const PairOracle &) const = default;
    auto operator<=>(const PairOracle &) const = default;

   private:
    std::array<BasisIndex, 2> marked_;
};

/// Two-character label of a data basis index, "00".."11".
std::string basis_label(BasisIndex x);

}  // namespace qhide

#endif  // QHIDE_ORACLE_H
