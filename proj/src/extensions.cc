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

#include "qhide/extensions.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qhide/errors.h"

namespace qhide {

std::string to_string(BellState b) {
    switch (b) {
        case BellState::kPhiPlus:
            return "phi+";
        case BellState::kPhiMinus:
            return "phi-";
        case BellState::kPsiPlus:
            return "psi+";
        case BellState::kPsiMinus:
            return "psi-";
    }
    throw std::invalid_argument("unknown Bell state");
}

BellState parse_bell_state(std::string_view name) {
    for (BellState b : kAllBellStates) {
        if (name == to_string(b)) {
            return b;
        }
    }
    throw std::invalid_argument("unknown Bell state '" + std::string(name) + "'");
}

Frame prepare_bell(BellState kind) {
    std::vector<double> amps(kDataDim, 0.0);
    switch (kind) {
        case BellState::kPhiPlus:
            amps[0b00] = kInvSqrt2;
            amps[0b11] = kInvSqrt2;
            break;
        case BellState::kPhiMinus:
            amps[0b00] = kInvSqrt2;
            amps[0b11] = -kInvSqrt2;
            break;
        case BellState::kPsiPlus:
            amps[0b01] = kInvSqrt2;
            amps[0b10] = kInvSqrt2;
            break;
        case BellState::kPsiMinus:
            amps[0b01] = kInvSqrt2;
            amps[0b10] = -kInvSqrt2;
            break;
    }
    return Frame{StateVector(2, std::move(amps))};
}

std::optional<BellState> identify_bell(const Frame &frame) {
    for (BellState b : kAllBellStates) {
        Frame ref = prepare_bell(b);
        double plus = 0.0, minus = 0.0;
        for (BasisIndex x = 0; x < kDataDim; ++x) {
            plus = std::max(plus, std::abs(frame.payload[x] - ref.payload[x]));
            minus = std::max(minus, std::abs(frame.payload[x] + ref.payload[x]));
        }
        if (plus <= kAmplitudeTolerance || minus <= kAmplitudeTolerance) {
            return b;
        }
    }
    return std::nullopt;
}

Frame hide_bell(const Frame &frame) {
    std::optional<BellState> kind = identify_bell(frame);
    if (!kind) {
        throw std::invalid_argument("hide_bell expects a Bell state");
    }
    if (*kind == BellState::kPhiMinus || *kind == BellState::kPsiMinus) {
        throw UnhideablePhase(to_string(*kind) + " is only negated by G and cannot be hidden");
    }
    return Frame{apply_g(frame.payload)};
}

Bit bell_parity_bit(BasisIndex outcome) {
    return bit_at(outcome, Position::kFirst) == bit_at(outcome, Position::kSecond) ? Bit::kZero : Bit::kOne;
}

Bit decode_bell_parity(const Frame &frame, RandomStream &rng) {
    return bell_parity_bit(measure(frame.payload, rng).outcome);
}

BitDistribution bell_parity_distribution(const Frame &frame) {
    OutcomeDistribution dist = measurement_distribution(frame.payload);
    BitDistribution out{Rational(0), Rational(0)};
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        (bell_parity_bit(x) == Bit::kZero ? out.zero : out.one) += snap_dyadic(dist[x]);
    }
    return out;
}

Frame encode_direct(Bit first, Bit second) {
    auto index = static_cast<BasisIndex>(to_int(first) * 2 + to_int(second));
    return Frame{StateVector::basis(2, index)};
}

std::pair<Bit, Bit> decode_direct(const Frame &frame, RandomStream &rng) {
    if (frame.payload.support().size() != 1) {
        throw NotClassical("direct decoding needs a computational basis state");
    }
    BasisIndex x = measure(frame.payload, rng).outcome;
    return {bit_at(x, Position::kFirst), bit_at(x, Position::kSecond)};
}

BellState dummy_kind(RandomStream &rng) {
    return kAllBellStates[rng.next_index(kAllBellStates.size())];
}

Frame dummy_frame(RandomStream &rng) {
    return prepare_bell(dummy_kind(rng));
}

Frame symbol_frame(const ExtendedSymbol &symbol, RandomStream &rng) {
    if (const auto *raw = std::get_if<RawBits>(&symbol)) {
        return encode_direct(raw->first, raw->second);
    }
    if (const auto *bell = std::get_if<BellSymbol>(&symbol)) {
        return prepare_bell(bell->state);
    }
    return dummy_frame(rng);
}

}  // namespace qhide
