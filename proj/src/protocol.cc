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

#include "qhide/protocol.h"

#include <stdexcept>
#include <utility>

#include "qhide/errors.h"

namespace qhide {

PairOracle oracle_for(Bit bit, Position position, HideAction action) {
    std::vector<BasisIndex> carrying;
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        if (bit_at(x, position) == bit) {
            carrying.push_back(x);
        }
    }
    PairOracle plain(carrying[0], carrying[1]);
    return action == HideAction::kHide ? plain.complement() : plain;
}

Frame alice_prepare(Bit bit, Position position, HideAction action) {
    // W(x)W on |00> gives the uniform data state; the extra qubit starts in |0>.
    StateVector start = with_extra_qubit(uniform_data_state());
    StateVector marked = apply_oracle(start, oracle_for(bit, position, action));
    StateVector diffused = apply_dp(marked);
    return Frame{extract_data_register(diffused)};
}

Bit bob_decode(const Frame &frame, HideAction action, Position position, RandomStream &rng) {
    const StateVector &state = action == HideAction::kHide ? apply_g(frame.payload) : frame.payload;
    Measurement m = measure(state, rng);
    return bit_at(m.outcome, position);
}

BitDistribution direct_readout_distribution(const Frame &frame, Position position) {
    OutcomeDistribution dist = measurement_distribution(frame.payload);
    BitDistribution out{Rational(0), Rational(0)};
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        Rational p = snap_dyadic(dist[x]);
        if (bit_at(x, position) == Bit::kZero) {
            out.zero += p;
        } else {
            out.one += p;
        }
    }
    if (out.zero + out.one != Rational(1)) {
        throw InvariantViolation("readout distribution does not sum to 1");
    }
    return out;
}

BitDistribution bob_decode_distribution(const Frame &frame, HideAction action, Position position) {
    if (action == HideAction::kHide) {
        return direct_readout_distribution(Frame{apply_g(frame.payload)}, position);
    }
    return direct_readout_distribution(frame, position);
}

SecretKey::SecretKey(std::vector<KeyEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw MalformedKey("key must have at least one entry");
    }
}

SecretKey parse_key(std::string_view text) {
    if (text.empty()) {
        throw MalformedKey("empty key");
    }
    if (text.size() % 2 != 0) {
        throw MalformedKey("key has a dangling trailing token");
    }
    std::vector<KeyEntry> entries;
    entries.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        char a = text[i];
        char p = text[i + 1];
        if (a != 'H' && a != 'N') {
            throw MalformedKey("bad action '" + std::string(1, a) + "' at offset " + std::to_string(i));
        }
        if (p != '1' && p != '2') {
            throw MalformedKey("bad position '" + std::string(1, p) + "' at offset " + std::to_string(i + 1));
        }
        entries.push_back({a == 'H' ? HideAction::kHide : HideAction::kNoHide,
                           p == '1' ? Position::kFirst : Position::kSecond});
    }
    return SecretKey(std::move(entries));
}

std::string format_key(const SecretKey &key) {
    std::string out;
    out.reserve(key.size() * 2);
    for (const KeyEntry &e : key.entries()) {
        out += to_char(e.action);
        out += static_cast<char>('0' + to_int(e.position));
    }
    return out;
}

SecretKey random_key(std::size_t length, RandomStream &rng) {
    if (length == 0) {
        throw std::invalid_argument("key length must be positive");
    }
    std::vector<KeyEntry> entries;
    entries.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        HideAction a = rng.bernoulli(0.5) ? HideAction::kHide : HideAction::kNoHide;
        Position p = rng.bernoulli(0.5) ? Position::kFirst : Position::kSecond;
        entries.push_back({a, p});
    }
    return SecretKey(std::move(entries));
}

Message parse_message(std::string_view text) {
    Message bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '0') {
            bits.push_back(Bit::kZero);
        } else if (text[i] == '1') {
            bits.push_back(Bit::kOne);
        } else {
            throw MalformedMessage("message must contain only 0 and 1 (offset " + std::to_string(i) + ")");
        }
    }
    return bits;
}

std::string format_message(const Message &bits) {
    std::string out;
    out.reserve(bits.size());
    for (Bit b : bits) {
        out += to_char(b);
    }
    return out;
}

FrameTransform identity_channel() {
    return [](const Frame &f, RandomStream &) { return f; };
}

namespace {

const KeyEntry &entry_at(const SecretKey &key, std::size_t cursor, const TransmitOptions &options) {
    if (cursor >= key.size()) {
        if (!options.cycle_key) {
            throw KeyExhausted("key has " + std::to_string(key.size()) + " entries but bit " +
                               std::to_string(cursor + 1) + " was requested");
        }
        return key[cursor % key.size()];
    }
    return key[cursor];
}

}  // namespace

Alice::Alice(SecretKey key, TransmitOptions options) : key_(std::move(key)), options_(options) {
}

Frame Alice::send(Bit bit) {
    const KeyEntry &e = entry_at(key_, cursor_, options_);
    ++cursor_;
    return alice_prepare(bit, e.position, e.action);
}

Bob::Bob(SecretKey key, TransmitOptions options) : key_(std::move(key)), options_(options) {
}

Bit Bob::receive(const Frame &frame, RandomStream &rng) {
    const KeyEntry &e = entry_at(key_, cursor_, options_);
    ++cursor_;
    return bob_decode(frame, e.action, e.position, rng);
}

Message transmit_message(const Message &bits, const SecretKey &key, const FrameTransform &channel, RandomStream &rng,
                         TransmitOptions options) {
    if (bits.size() > key.size() && !options.cycle_key) {
        throw KeyExhausted("message has " + std::to_string(bits.size()) + " bits but the key only " +
                           std::to_string(key.size()) + " entries");
    }
    Alice alice(key, options);
    Bob bob(key, options);
    Message received;
    received.reserve(bits.size());
    for (Bit b : bits) {
        Frame sent = alice.send(b);
        Frame arrived = channel(sent, rng);
        received.push_back(bob.receive(arrived, rng));
    }
    return received;
}

}  // namespace qhide
