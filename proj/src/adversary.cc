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

#include "qhide/adversary.h"

#include <stdexcept>
#include <string>

#include "qhide/errors.h"

namespace qhide {

namespace {

StateVector eve_view(const Frame &frame, EveAction action) {
    return action == EveAction::kDiffuseMeasure ? apply_g(frame.payload) : frame.payload;
}

Frame resend_frame(const EveStrategy &strategy, const StateVector &collapsed) {
    if (strategy.resend.kind == ResendPolicy::Kind::kSameMeasured) {
        return Frame{collapsed};
    }
    if (!strategy.resend.ps_choice) {
        throw std::invalid_argument("PS resend policy is missing its preparation choice");
    }
    const PsChoice &c = *strategy.resend.ps_choice;
    return alice_prepare(c.bit, c.position, c.hide);
}

}  // namespace

EveRecord eve_intercept(const Frame &frame, const EveStrategy &strategy, RandomStream &rng) {
    Measurement m = measure(eve_view(frame, strategy.action), rng);
    return EveRecord{bit_at(m.outcome, strategy.read_position), resend_frame(strategy, m.collapsed)};
}

std::vector<WeightedEveRecord> eve_intercept_branches(const Frame &frame, const EveStrategy &strategy) {
    StateVector view = eve_view(frame, strategy.action);
    OutcomeDistribution dist = measurement_distribution(view);
    std::vector<WeightedEveRecord> out;
    Rational total(0);
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        Rational p = snap_dyadic(dist[x]);
        if (p == Rational(0)) {
            continue;
        }
        total += p;
        out.push_back({p, EveRecord{bit_at(x, strategy.read_position),
                                    resend_frame(strategy, StateVector::basis(2, x))}});
    }
    if (total != Rational(1)) {
        throw InvariantViolation("intercept branches do not sum to 1");
    }
    return out;
}

void StrategyPriors::validate() const {
    for (double p : {measure, read_first, resend_same, ps_bit_one, ps_first, ps_hide}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("strategy prior outside [0, 1]: " + std::to_string(p));
        }
    }
}

EveStrategy random_strategy(RandomStream &rng, const StrategyPriors &priors) {
    priors.validate();
    EveStrategy s{};
    s.action = rng.bernoulli(priors.measure) ? EveAction::kMeasure : EveAction::kDiffuseMeasure;
    s.read_position = rng.bernoulli(priors.read_first) ? Position::kFirst : Position::kSecond;
    if (rng.bernoulli(priors.resend_same)) {
        s.resend = ResendPolicy::same_measured();
    } else {
        PsChoice c{};
        c.bit = rng.bernoulli(priors.ps_bit_one) ? Bit::kOne : Bit::kZero;
        c.position = rng.bernoulli(priors.ps_first) ? Position::kFirst : Position::kSecond;
        c.hide = rng.bernoulli(priors.ps_hide) ? HideAction::kHide : HideAction::kNoHide;
        s.resend = ResendPolicy::prepare(c);
    }
    return s;
}

EveChannel::EveChannel(StrategyPriors priors) : priors_(priors) {
    priors_.validate();
}

EveChannel::EveChannel(EveStrategy fixed) : fixed_(fixed) {
}

Frame EveChannel::operator()(const Frame &frame, RandomStream &rng) {
    EveStrategy s = fixed_ ? *fixed_ : random_strategy(rng, priors_);
    EveRecord r = eve_intercept(frame, s, rng);
    log_.push_back({s, r});
    return r.resent;
}

}  // namespace qhide
