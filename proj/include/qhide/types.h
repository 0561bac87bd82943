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

#ifndef QHIDE_TYPES_H
#define QHIDE_TYPES_H

#include <array>
#include <cstdint>
#include <stdexcept>

namespace qhide {

enum class Bit : std::uint8_t { kZero = 0, kOne = 1 };

/// Which data qubit carries the message. kFirst is the most significant bit
/// of a 2-qubit basis index.
enum class Position : std::uint8_t { kFirst = 1, kSecond = 2 };

/// H hides the message pair (the complement is transmitted), N does not.
enum class HideAction : std::uint8_t { kHide, kNoHide };

inline constexpr std::array<Bit, 2> kAllBits = {Bit::kZero, Bit::kOne};
inline constexpr std::array<Position, 2> kAllPositions = {Position::kFirst, Position::kSecond};
inline constexpr std::array<HideAction, 2> kAllHideActions = {HideAction::kHide, HideAction::kNoHide};

constexpr int to_int(Bit b) {
    return static_cast<int>(b);
}
constexpr int to_int(Position p) {
    return static_cast<int>(p);
}
constexpr Bit flip(Bit b) {
    return b == Bit::kZero ? Bit::kOne : Bit::kZero;
}
constexpr Position other(Position p) {
    return p == Position::kFirst ? Position::kSecond : Position::kFirst;
}

inline Bit bit_from_int(int v) {
    if (v != 0 && v != 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
    return static_cast<Bit>(v);
}
inline Position position_from_int(int v) {
    if (v != 1 && v != 2) {
        throw std::invalid_argument("position must be 1 or 2");
    }
    return static_cast<Position>(v);
}

constexpr char to_char(Bit b) {
    return b == Bit::kZero ? '0' : '1';
}
constexpr char to_char(HideAction a) {
    return a == HideAction::kHide ? 'H' : 'N';
}

}  // namespace qhide

#endif  // QHIDE_TYPES_H
