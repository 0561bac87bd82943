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

#ifndef QHIDE_EXTENSIONS_H
#define QHIDE_EXTENSIONS_H

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "qhide/protocol.h"
#include "qhide/random.h"

namespace qhide {

enum class BellState : std::uint8_t { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

inline constexpr std::array<BellState, 4> kAllBellStates = {BellState::kPhiPlus, BellState::kPhiMinus,
                                                            BellState::kPsiPlus, BellState::kPsiMinus};

/// "phi+", "phi-", "psi+", "psi-".
std::string to_string(BellState b);
/// Inverse of to_string(BellState). Throws std::invalid_argument.
BellState parse_bell_state(std::string_view name);

/// (1/sqrt 2)(|00> +- |11>) for phi, (1/sqrt 2)(|01> +- |10>) for psi.
Frame prepare_bell(BellState kind);

/// The Bell state a frame equals up to global sign, if any.
std::optional<BellState> identify_bell(const Frame &frame);

/// Applies G to a plus-sign Bell state, which swaps phi+ and psi+. Throws
/// UnhideablePhase for phi- and psi- (G only negates them) and
/// std::invalid_argument for a frame that is not a Bell state.
Frame hide_bell(const Frame &frame);

/// Readout of the plus-sign Bell encoding: outcomes 00 and 11 decode to 0,
/// 01 and 10 decode to 1.
Bit bell_parity_bit(BasisIndex outcome);
Bit decode_bell_parity(const Frame &frame, RandomStream &rng);
BitDistribution bell_parity_distribution(const Frame &frame);

/// |b1 b2>.
Frame encode_direct(Bit first, Bit second);
/// Measures a basis-state frame. Throws NotClassical on a superposition.
std::pair<Bit, Bit> decode_direct(const Frame &frame, RandomStream &rng);

/// Uniformly random Bell state as a decoy frame.
Frame dummy_frame(RandomStream &rng);
BellState dummy_kind(RandomStream &rng);

struct RawBits {
    Bit first;
    Bit second;
    bool operator==(const RawBits &) const = default;
};
struct BellSymbol {
    BellState state;
    bool operator==(const BellSymbol &) const = default;
};
struct DummySymbol {
    bool operator==(const DummySymbol &) const = default;
};

/// One unit of the extended symbol stream.
using ExtendedSymbol = std::variant<RawBits, BellSymbol, DummySymbol>;

/// Frame for a symbol. Dummy symbols draw their Bell state from `rng`.
Frame symbol_frame(const ExtendedSymbol &symbol, RandomStream &rng);

}  // namespace qhide

#endif  // QHIDE_EXTENSIONS_H
