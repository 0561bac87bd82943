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

#include "qhide/analysis.h"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "qhide/errors.h"
#include "qhide/protocol.h"

namespace qhide {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

bool is_probability(const Rational &r) {
    return r >= kZero && r <= kOne;
}

HideAction ps_hide_of(ResendKind r) {
    return r == ResendKind::kPrepareHidden ? HideAction::kHide : HideAction::kNoHide;
}

Rational complement_of(const Rational &r) {
    return kOne - r;
}

}  // namespace

std::string to_string(EveAction a) {
    return a == EveAction::kMeasure ? "M" : "GM";
}

std::string to_string(ResendKind r) {
    switch (r) {
        case ResendKind::kSame:
            return "SM";
        case ResendKind::kPrepareHidden:
            return "PS-H";
        case ResendKind::kPrepareUnhidden:
            return "PS-N";
    }
    throw std::invalid_argument("unknown resend kind");
}

std::string to_string(EvalMode m) {
    return m == EvalMode::kPaperCombinatorial ? "paper" : "quantum";
}

std::string Scenario::label() const {
    return std::string(1, to_char(alice)) + "-" + to_string(eve) + "-" + to_string(resend);
}

std::vector<Scenario> enumerate_leaves() {
    std::vector<Scenario> out;
    for (HideAction a : {HideAction::kHide, HideAction::kNoHide}) {
        for (EveAction e : {EveAction::kMeasure, EveAction::kDiffuseMeasure}) {
            for (ResendKind r : {ResendKind::kSame, ResendKind::kPrepareHidden, ResendKind::kPrepareUnhidden}) {
                out.push_back({a, e, r});
            }
        }
    }
    return out;
}

void BranchPriors::validate() const {
    for (const Rational *p :
         {&alice_hide, &eve_measure, &resend_same, &resend_ps_hide, &resend_ps_nohide, &eve_read_first}) {
        if (!is_probability(*p)) {
            throw std::invalid_argument("branch prior outside [0, 1]: " + to_string(*p));
        }
    }
    if (resend_same + resend_ps_hide + resend_ps_nohide != kOne) {
        throw std::invalid_argument("resend priors SM + PS-H + PS-N must sum to 1");
    }
}

Rational BranchPriors::alice_weight(HideAction a) const {
    return a == HideAction::kHide ? alice_hide : complement_of(alice_hide);
}

Rational BranchPriors::eve_weight(EveAction e) const {
    return e == EveAction::kMeasure ? eve_measure : complement_of(eve_measure);
}

Rational BranchPriors::resend_weight(ResendKind r) const {
    switch (r) {
        case ResendKind::kSame:
            return resend_same;
        case ResendKind::kPrepareHidden:
            return resend_ps_hide;
        case ResendKind::kPrepareUnhidden:
            return resend_ps_nohide;
    }
    throw std::invalid_argument("unknown resend kind");
}

Rational leaf_probability_paper(const Scenario &s) {
    if (s.resend == ResendKind::kSame) {
        if (s.alice == HideAction::kHide) {
            // G spreads the collapsed state over all four outcomes: a random
            // state (1/4) read at the right position (1/2).
            return kQuarter * kHalf;
        }
        // Direct readout: Eve's M left the right state, GM the complement.
        return s.eve == EveAction::kMeasure ? kOne : kZero;
    }
    if (ps_hide_of(s.resend) != s.alice) {
        return kZero;
    }
    // Hide guess right; bit and position each guessed with probability 1/2.
    return kHalf * kHalf;
}

Rational leaf_probability_quantum_given(const Scenario &s, Bit bit, Position position) {
    std::vector<std::pair<Rational, ResendPolicy>> resends;
    if (s.resend == ResendKind::kSame) {
        resends.emplace_back(kOne, ResendPolicy::same_measured());
    } else {
        for (Bit b : kAllBits) {
            for (Position p : kAllPositions) {
                resends.emplace_back(kQuarter, ResendPolicy::prepare({b, p, ps_hide_of(s.resend)}));
            }
        }
    }

    Frame sent = alice_prepare(bit, position, s.alice);
    Rational total(0);
    for (Position read : kAllPositions) {
        for (const auto &[resend_weight, resend] : resends) {
            EveStrategy strategy{s.eve, read, resend};
            for (const WeightedEveRecord &branch : eve_intercept_branches(sent, strategy)) {
                BitDistribution bob = bob_decode_distribution(branch.record.resent, s.alice, position);
                total += kHalf * resend_weight * branch.probability * bob[bit];
            }
        }
    }
    if (!is_probability(total)) {
        throw InvariantViolation("quantum leaf probability outside [0, 1] for " + s.label());
    }
    return total;
}

Rational leaf_probability_quantum(const Scenario &s) {
    Rational total(0);
    for (Bit bit : kAllBits) {
        for (Position pos : kAllPositions) {
            total += kQuarter * leaf_probability_quantum_given(s, bit, pos);
        }
    }
    return total;
}

McEstimate make_estimate(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) {
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    }
    McEstimate e;
    e.trials = trials;
    e.successes = successes;
    e.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(trials));
    return e;
}

bool run_scenario_trial(const Scenario &s, RandomStream &rng) {
    Bit bit = rng.bernoulli(0.5) ? Bit::kOne : Bit::kZero;
    Position pos = rng.bernoulli(0.5) ? Position::kFirst : Position::kSecond;
    Frame sent = alice_prepare(bit, pos, s.alice);

    EveStrategy strategy{};
    strategy.action = s.eve;
    strategy.read_position = rng.bernoulli(0.5) ? Position::kFirst : Position::kSecond;
    if (s.resend == ResendKind::kSame) {
        strategy.resend = ResendPolicy::same_measured();
    } else {
        PsChoice c{};
        c.bit = rng.bernoulli(0.5) ? Bit::kOne : Bit::kZero;
        c.position = rng.bernoulli(0.5) ? Position::kFirst : Position::kSecond;
        c.hide = ps_hide_of(s.resend);
        strategy.resend = ResendPolicy::prepare(c);
    }
    EveRecord intercepted = eve_intercept(sent, strategy, rng);
    return bob_decode(intercepted.resent, s.alice, pos, rng) == bit;
}

McEstimate monte_carlo_leaf(const Scenario &s, std::uint64_t trials, RandomStream &rng) {
    if (trials == 0) {
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    }
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        hits += run_scenario_trial(s, rng) ? 1 : 0;
    }
    return make_estimate(hits, trials);
}

McEstimate monte_carlo_leaf_partitioned(const Scenario &s, std::uint64_t trials, std::uint64_t seed,
                                        unsigned partitions) {
    if (trials == 0) {
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    }
    if (partitions == 0) {
        throw std::invalid_argument("partitions must be positive");
    }
    std::vector<std::uint64_t> hits(partitions, 0);
    std::vector<std::thread> workers;
    workers.reserve(partitions);
    for (unsigned i = 0; i < partitions; ++i) {
        std::uint64_t share = trials / partitions + (i < trials % partitions ? 1 : 0);
        workers.emplace_back([&s, &hits, i, share, seed] {
            RandomStream rng = RandomStream::substream(seed, i);
            std::uint64_t h = 0;
            for (std::uint64_t t = 0; t < share; ++t) {
                h += run_scenario_trial(s, rng) ? 1 : 0;
            }
            hits[i] = h;
        });
    }
    for (std::thread &w : workers) {
        w.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) {
        total += h;
    }
    return make_estimate(total, trials);
}

TreeReport build_tree_report(const BranchPriors &priors, const TreeOptions &options) {
    priors.validate();
    TreeReport report;
    report.branch_priors = priors;
    std::vector<Scenario> leaves = enumerate_leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        LeafResult leaf{leaves[i], leaf_probability_paper(leaves[i]), leaf_probability_quantum(leaves[i]),
                        std::nullopt};
        if (options.monte_carlo) {
            std::uint64_t leaf_seed = mix_seed(options.seed + i);
            leaf.mc = monte_carlo_leaf_partitioned(leaves[i], options.trials, leaf_seed, options.partitions);
        }
        report.leaves.push_back(leaf);
    }
    return report;
}

Rational eve_correct_probability_strict(const BranchPriors &priors) {
    priors.validate();
    // Eve must pick the action that exposes the message pair (GM when Alice
    // hid, M otherwise) and read the position Alice used.
    Rational action_match = priors.alice_hide * priors.eve_weight(EveAction::kDiffuseMeasure) +
                            priors.alice_weight(HideAction::kNoHide) * priors.eve_weight(EveAction::kMeasure);
    Rational position_match = kHalf * priors.eve_read_first + kHalf * complement_of(priors.eve_read_first);
    return action_match * position_match;
}

Rational eve_correct_probability_quantum(const BranchPriors &priors) {
    priors.validate();
    Rational total(0);
    for (HideAction a : kAllHideActions) {
        for (Bit bit : kAllBits) {
            for (Position pos : kAllPositions) {
                Frame sent = alice_prepare(bit, pos, a);
                for (EveAction e : {EveAction::kMeasure, EveAction::kDiffuseMeasure}) {
                    for (Position read : kAllPositions) {
                        Rational read_weight =
                            read == Position::kFirst ? priors.eve_read_first : complement_of(priors.eve_read_first);
                        Rational w = priors.alice_weight(a) * kQuarter * priors.eve_weight(e) * read_weight;
                        EveStrategy strategy{e, read, ResendPolicy::same_measured()};
                        for (const WeightedEveRecord &branch : eve_intercept_branches(sent, strategy)) {
                            if (branch.record.guessed_bit == bit) {
                                total += w * branch.probability;
                            }
                        }
                    }
                }
            }
        }
    }
    return total;
}

Rational ps_correct_probability(const BranchPriors &priors) {
    priors.validate();
    Rational ps_mass = priors.resend_ps_hide + priors.resend_ps_nohide;
    if (ps_mass == kZero) {
        return kZero;
    }
    Rational guess_hide = priors.resend_ps_hide / ps_mass;
    // Bit and position are guessed uniformly; the hide guess follows the
    // relative weight of the two PS branches.
    return kQuarter * (priors.alice_hide * guess_hide +
                       priors.alice_weight(HideAction::kNoHide) * complement_of(guess_hide));
}

AggregateReport aggregate(const TreeReport &report, EvalMode mode, const BranchPriors &priors, int max_k) {
    priors.validate();
    if (max_k < 0) {
        throw std::invalid_argument("max_k must be nonnegative");
    }
    if (report.leaves.size() != 12) {
        throw InvariantViolation("tree report must hold 12 leaves");
    }
    AggregateReport out{};
    out.mode = mode;
    Rational given_hide(0), given_nohide(0);
    for (const LeafResult &leaf : report.leaves) {
        const Rational &p = mode == EvalMode::kPaperCombinatorial ? leaf.paper_prob : leaf.quantum_prob;
        Rational w = priors.eve_weight(leaf.scenario.eve) * priors.resend_weight(leaf.scenario.resend);
        if (leaf.scenario.alice == HideAction::kHide) {
            given_hide += w * p;
        } else {
            given_nohide += w * p;
        }
    }
    out.bob_correct_given_hide = given_hide;
    out.bob_correct_given_nohide = given_nohide;
    out.eve_correct_strict = eve_correct_probability_strict(priors);
    out.eve_correct_quantum = eve_correct_probability_quantum(priors);
    out.ps_correct = ps_correct_probability(priors);
    out.per_bit_no_detect = priors.alice_weight(HideAction::kHide) * given_hide +
                            priors.alice_weight(HideAction::kNoHide) * given_nohide;

    double no_detect = to_double(out.per_bit_no_detect);
    out.detect_after_k_bits.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        out.detect_after_k_bits.push_back(1.0 - std::pow(no_detect, k));
    }

    const Rational &eve_correct =
        mode == EvalMode::kPaperCombinatorial ? out.eve_correct_strict : out.eve_correct_quantum;
    auto claim = [&](std::string id, std::string description, Rational claimed, Rational computed) {
        bool matched = mode == EvalMode::kPaperCombinatorial
                           ? claimed == computed
                           : std::abs(to_double(claimed) - to_double(computed)) <= 1e-9;
        out.paper_claims.push_back({std::move(id), std::move(description), claimed, computed, matched});
    };
    claim("eve_correct", "Eve reads the message bit correctly", Rational(1, 4), eve_correct);
    claim("ps_correct", "Eve's PS resend matches Alice's preparation", Rational(1, 8), out.ps_correct);
    claim("detect_when_hiding", "per-bit detection probability when Alice hides", Rational(61, 64),
          complement_of(given_hide));
    claim("detect_when_not_hiding", "per-bit detection probability when Alice does not hide", Rational(55, 64),
          complement_of(given_nohide));
    claim("undetected", "probability Bob cannot detect Eve on one bit", Rational(3, 16), out.per_bit_no_detect);
    claim("detect", "probability to detect Eve on one bit", Rational(13, 16), complement_of(out.per_bit_no_detect));
    claim("secure_when_processed", "probability Eve's guessed bit is wrong", Rational(3, 4),
          complement_of(eve_correct));
    return out;
}

}  // namespace qhide
