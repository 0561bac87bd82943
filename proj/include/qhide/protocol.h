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

#ifndef QHIDE_PROTOCOL_H
#define QHIDE_PROTOCOL_H

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qhide/oracle.h"
#include "qhide/random.h"
#include "qhide/rational.h"
#include "qhide/state_vector.h"
#include "qhide/types.h"

namespace qhide {

/// The 2-qubit register that travels from Alice to Bob for one message bit.
struct Frame {
    StateVector payload;

    /// Same support and amplitudes within kAmplitudeTolerance.
    bool approx_equal(const Frame &other) const {
        return payload.approx_equal(other.payload);
    }
};

/// One of the eight (bit, position, action) oracles. For N the marked pair is
/// the two states carrying `bit` at `position`; for H it is the complement.
PairOracle oracle_for(Bit bit, Position position, HideAction action);

/// Runs D_p . U_f . (W(x)W(x)I) on |00>|0>, checks that the extra qubit has
/// factored out, and returns the data register.
Frame alice_prepare(Bit bit, Position position, HideAction action);

/// Bob's readout for one key entry: G first when the entry says H, then a
/// computational-basis measurement read at `position`.
Bit bob_decode(const Frame &frame, HideAction action, Position position, RandomStream &rng);

/// Exact probabilities of each decoded bit.
struct BitDistribution {
    Rational zero;
    Rational one;

    const Rational &operator[](Bit b) const {
        return b == Bit::kZero ? zero : one;
    }
};

/// Distribution of bob_decode without sampling.
BitDistribution bob_decode_distribution(const Frame &frame, HideAction action, Position position);
/// Distribution of a direct measurement read at `position` (no G).
BitDistribution direct_readout_distribution(const Frame &frame, Position position);

struct KeyEntry {
    HideAction action;
    Position position;

    bool operator==(const KeyEntry &) const = default;
};

/// Pre-agreed per-bit schedule of (action, position) entries.
class SecretKey {
   public:
    /// Throws MalformedKey when `entries` is empty.
    explicit SecretKey(std::vector<KeyEntry> entries);

    const std::vector<KeyEntry> &entries() const {
        return entries_;
    }
    std::size_t size() const {
        return entries_.size();
    }
    const KeyEntry &operator[](std::size_t i) const {
        return entries_[i];
    }

    bool operator==(const SecretKey &) const = default;

   private:
    std::vector<KeyEntry> entries_;
};

/// Parses ([HN][12])+, e.g. "H1H2N1". Throws MalformedKey.
SecretKey parse_key(std::string_view text);
std::string format_key(const SecretKey &key);
/// Uniformly random key of `length` entries.
SecretKey random_key(std::size_t length, RandomStream &rng);

using Message = std::vector<Bit>;

/// Parses an ASCII string of '0'/'1'. The empty string is an empty message.
/// Throws MalformedMessage.
Message parse_message(std::string_view text);
std::string format_message(const Message &bits);

/// Whatever happens to a frame in transit.
using FrameTransform = std::function<Frame(const Frame &, RandomStream &)>;

FrameTransform identity_channel();

struct TransmitOptions {
    /// Reuse the key from the start once it runs out.
    bool cycle_key = false;
};

/// Sender side. Consumes one key entry per bit, in order.
class Alice {
   public:
    Alice(SecretKey key, TransmitOptions options = {});
    Frame send(Bit bit);

   private:
    SecretKey key_;
    TransmitOptions options_;
    std::size_t cursor_ = 0;
};

/// Receiver side. Must be driven with the same key and frame order as Alice.
class Bob {
   public:
    Bob(SecretKey key, TransmitOptions options = {});
    Bit receive(const Frame &frame, RandomStream &rng);

   private:
    SecretKey key_;
    TransmitOptions options_;
    std::size_t cursor_ = 0;
};

/// Sends `bits` one frame at a time through `channel` and returns what Bob
/// decodes. Throws KeyExhausted when the key is shorter than the message and
/// options.cycle_key is false.
Message transmit_message(const Message &bits, const SecretKey &key, const FrameTransform &channel, RandomStream &rng,
                         TransmitOptions options = {});

}  // namespace qhide

#endif  // QHIDE_PROTOCOL_H
