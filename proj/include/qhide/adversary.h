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

#ifndef QHIDE_ADVERSARY_H
#define QHIDE_ADVERSARY_H

#include <optional>
#include <vector>

#include "qhide/protocol.h"
#include "qhide/random.h"
#include "qhide/types.h"

namespace qhide {

/// M measures the intercepted frame directly; GM applies G first.
enum class EveAction : std::uint8_t { kMeasure, kDiffuseMeasure };

/// Eve's guess of Alice's full preparation choice, used when she resends a
/// freshly prepared superposition.
struct PsChoice {
    Bit bit;
    Position position;
    HideAction hide;

    bool operator==(const PsChoice &) const = default;
};

/// SM resends the collapsed basis state; PS resends alice_prepare(choice).
struct ResendPolicy {
    enum class Kind : std::uint8_t { kSameMeasured, kPrepareSuperposition };

    static ResendPolicy same_measured() {
        return ResendPolicy{Kind::kSameMeasured, std::nullopt};
    }
    static ResendPolicy prepare(PsChoice choice) {
        return ResendPolicy{Kind::kPrepareSuperposition, choice};
    }

    Kind kind;
    /// Present exactly when kind is kPrepareSuperposition.
    std::optional<PsChoice> ps_choice;

    bool operator==(const ResendPolicy &) const = default;
};

struct EveStrategy {
    EveAction action;
    Position read_position;
    ResendPolicy resend;

    bool operator==(const EveStrategy &) const = default;
};

struct EveRecord {
    Bit guessed_bit;
    Frame resent;
};

/// Intercept-resend on one frame.
EveRecord eve_intercept(const Frame &frame, const EveStrategy &strategy, RandomStream &rng);

struct WeightedEveRecord {
    Rational probability;
    EveRecord record;
};

/// Every outcome of eve_intercept with its exact Born probability, in basis
/// index order. Zero-probability outcomes are omitted.
std::vector<WeightedEveRecord> eve_intercept_branches(const Frame &frame, const EveStrategy &strategy);

/// Independent Bernoulli priors for each of Eve's choices.
struct StrategyPriors {
    double measure = 0.5;     // P(M) versus GM
    double read_first = 0.5;  // P(read position 1)
    double resend_same = 0.5; // P(SM) versus PS
    double ps_bit_one = 0.5;
    double ps_first = 0.5;
    double ps_hide = 0.5;

    /// Throws std::invalid_argument if any entry is outside [0, 1].
    void validate() const;
};

EveStrategy random_strategy(RandomStream &rng, const StrategyPriors &priors = {});

/// Channel that intercepts every frame with a fresh strategy drawn from
/// `priors`, or with a fixed strategy. Keeps a log of Eve's records.
class EveChannel {
   public:
    explicit EveChannel(StrategyPriors priors);
    explicit EveChannel(EveStrategy fixed);

    Frame operator()(const Frame &frame, RandomStream &rng);

    struct Entry {
        EveStrategy strategy;
        EveRecord record;
    };
    const std::vector<Entry> &log() const {
        return log_;
    }

   private:
    StrategyPriors priors_;
    std::optional<EveStrategy> fixed_;
    std::vector<Entry> log_;
};

}  // namespace qhide

#endif  // QHIDE_ADVERSARY_H
