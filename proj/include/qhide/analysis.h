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

#ifndef QHIDE_ANALYSIS_H
#define QHIDE_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhide/adversary.h"
#include "qhide/random.h"
#include "qhide/rational.h"
#include "qhide/types.h"

namespace qhide {

/// What Eve sends on to Bob: the collapsed state (SM) or a fresh
/// preparation with her hide guess set to H (PS-H) or N (PS-N).
enum class ResendKind : std::uint8_t { kSame, kPrepareHidden, kPrepareUnhidden };

/// One root-to-leaf path of the Alice/Eve/Bob action tree. Bob's action is
/// implied by Alice's (he follows the key).
struct Scenario {
    HideAction alice;
    EveAction eve;
    ResendKind resend;

    /// e.g. "H-M-SM", "N-GM-PS-H".
    std::string label() const;

    bool operator==(const Scenario &) const = default;
};

std::string to_string(EveAction a);
std::string to_string(ResendKind r);

/// The 12 scenarios in canonical order: Alice H before N, Eve M before GM,
/// then SM, PS-H, PS-N.
std::vector<Scenario> enumerate_leaves();

/// Edge probabilities of the action tree. Defaults are the published edge
/// labels: 1/2 on H/N, on M/GM and on SM, 1/4 on each PS sub-branch.
struct BranchPriors {
    Rational alice_hide{1, 2};
    Rational eve_measure{1, 2};
    Rational resend_same{1, 2};
    Rational resend_ps_hide{1, 4};
    Rational resend_ps_nohide{1, 4};
    /// Eve's readout position; only affects her own guess.
    Rational eve_read_first{1, 2};

    /// Throws std::invalid_argument if a prior is outside [0, 1] or the three
    /// resend branches do not sum to 1.
    void validate() const;

    Rational alice_weight(HideAction a) const;
    Rational eve_weight(EveAction e) const;
    Rational resend_weight(ResendKind r) const;
};

/// Bob-correct probability under the counting argument attached to the
/// published tree: 1/4 x 1/2 whenever Bob must apply G to a collapsed state,
/// 1 or 0 for a direct readout after a matching or mismatched Eve
/// measurement, and 1/2 x 1/2 for a PS resend whose hide guess matches
/// Alice's action (0 otherwise).
Rational leaf_probability_paper(const Scenario &s);

/// Exact Bob-correct probability by enumerating Alice's bit and position,
/// Eve's remaining free choices and every measurement branch with its Born
/// weight. No sampling.
Rational leaf_probability_quantum(const Scenario &s);
/// Same, conditioned on Alice sending `bit` at `position`.
Rational leaf_probability_quantum_given(const Scenario &s, Bit bit, Position position);

struct McEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    /// sqrt(p(1-p)/trials).
    double std_error = 0.0;
};

McEstimate make_estimate(std::uint64_t successes, std::uint64_t trials);

/// One simulated run of the scenario with fresh randomness: returns whether
/// Bob decoded Alice's bit.
bool run_scenario_trial(const Scenario &s, RandomStream &rng);

/// Runs `trials` (>= 1) independent trials on one stream.
McEstimate monte_carlo_leaf(const Scenario &s, std::uint64_t trials, RandomStream &rng);

/// Splits `trials` across `partitions` workers, each with its own substream
/// of `seed`, and merges by summing counts. The result depends only on
/// (seed, trials, partitions), never on thread scheduling.
McEstimate monte_carlo_leaf_partitioned(const Scenario &s, std::uint64_t trials, std::uint64_t seed,
                                        unsigned partitions);

struct LeafResult {
    Scenario scenario;
    Rational paper_prob;
    Rational quantum_prob;
    std::optional<McEstimate> mc;
};

struct TreeReport {
    std::vector<LeafResult> leaves;
    BranchPriors branch_priors;
};

struct TreeOptions {
    bool monte_carlo = false;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned partitions = 4;
};

TreeReport build_tree_report(const BranchPriors &priors = {}, const TreeOptions &options = {});

enum class EvalMode : std::uint8_t { kPaperCombinatorial, kQuantumExact };

std::string to_string(EvalMode m);

/// A published aggregate figure next to the value this artifact computes for
/// the same quantity.
struct PaperClaim {
    std::string id;
    std::string description;
    Rational claimed;
    Rational computed;
    bool matched;
};

struct AggregateReport {
    EvalMode mode;
    Rational bob_correct_given_hide;
    Rational bob_correct_given_nohide;
    /// Probability that Eve's guessed bit is right when both her action and
    /// her readout position must match Alice's choice.
    Rational eve_correct_strict;
    /// Probability that Eve's guessed bit is right, by Born-rule enumeration.
    Rational eve_correct_quantum;
    /// Probability that a PS resend reproduces Alice's exact preparation.
    Rational ps_correct;
    /// Probability that one test bit arrives unchanged.
    Rational per_bit_no_detect;
    /// Index k holds 1 - per_bit_no_detect^k.
    std::vector<double> detect_after_k_bits;
    std::vector<PaperClaim> paper_claims;
};

Rational eve_correct_probability_strict(const BranchPriors &priors);
Rational eve_correct_probability_quantum(const BranchPriors &priors);
Rational ps_correct_probability(const BranchPriors &priors);

/// Folds the leaf column selected by `mode` with `priors`. detect_after_k_bits
/// covers k = 0..max_k.
AggregateReport aggregate(const TreeReport &report, EvalMode mode, const BranchPriors &priors, int max_k = 16);

}  // namespace qhide

#endif  // QHIDE_ANALYSIS_H
