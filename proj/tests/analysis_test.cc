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

#include <array>
#include <cmath>
#include <map>
#include <string>

#include "gtest/gtest.h"

using namespace qhide;

namespace {

using Amps = std::array<double, 4>;

// Independent brute-force evaluator on bare arrays: no library state
// vectors, oracles or pipeline, only the Born rule and the diffusion map.
Amps diffuse(const Amps &a) {
    double mean = (a[0] + a[1] + a[2] + a[3]) / 4.0;
    return {2 * mean - a[0], 2 * mean - a[1], 2 * mean - a[2], 2 * mean - a[3]};
}

int bit_of(int x, int pos) {
    return pos == 1 ? (x >> 1) & 1 : x & 1;
}

Amps prepared(int bit, int pos, bool hide) {
    Amps a{};
    double r = 1.0 / std::sqrt(2.0);
    for (int x = 0; x < 4; ++x) {
        bool carries = bit_of(x, pos) == bit;
        a[x] = carries != hide ? r : 0.0;
    }
    return a;
}

double bob_correct(const Amps &arrived, int bit, int pos, bool hide) {
    Amps v = hide ? diffuse(arrived) : arrived;
    double p = 0.0;
    for (int x = 0; x < 4; ++x)
        if (bit_of(x, pos) == bit) p += v[x] * v[x];
    return p;
}

double brute_force_leaf(const Scenario &s) {
    bool hide = s.alice == HideAction::kHide;
    double total = 0.0;
    for (int bit = 0; bit < 2; ++bit) {
        for (int pos = 1; pos <= 2; ++pos) {
            Amps sent = prepared(bit, pos, hide);
            Amps seen = s.eve == EveAction::kDiffuseMeasure ? diffuse(sent) : sent;
            for (int x = 0; x < 4; ++x) {
                double px = seen[x] * seen[x];
                if (px < 1e-15) continue;
                if (s.resend == ResendKind::kSame) {
                    Amps basis{};
                    basis[x] = 1.0;
                    total += 0.25 * px * bob_correct(basis, bit, pos, hide);
                } else {
                    bool eve_hide = s.resend == ResendKind::kPrepareHidden;
                    for (int eb = 0; eb < 2; ++eb)
                        for (int ep = 1; ep <= 2; ++ep)
                            total += 0.25 * px * 0.25 * bob_correct(prepared(eb, ep, eve_hide), bit, pos, hide);
                }
            }
        }
    }
    return total;
}

std::vector<Rational> frozen_paper_column() {
    return {Rational(1, 8), Rational(1, 4), Rational(0), Rational(1, 8), Rational(1, 4), Rational(0),
            Rational(1),    Rational(0),    Rational(1, 4), Rational(0), Rational(0),    Rational(1, 4)};
}

// Computed once with brute_force_leaf above and frozen.
std::vector<Rational> frozen_quantum_column() {
    Rational h(1, 2);
    return {h, h, h, h, h, h, Rational(1), h, h, Rational(0), h, h};
}

}  // namespace

TEST(Leaves, canonical_order) {
    std::vector<Scenario> leaves = enumerate_leaves();
    ASSERT_EQ(leaves.size(), 12u);
    EXPECT_EQ(leaves[0], (Scenario{HideAction::kHide, EveAction::kMeasure, ResendKind::kSame}));
    EXPECT_EQ(leaves[6], (Scenario{HideAction::kNoHide, EveAction::kMeasure, ResendKind::kSame}));
    EXPECT_EQ(leaves[11].label(), "N-GM-PS-N");
    for (std::size_t i = 0; i < leaves.size(); ++i)
        for (std::size_t j = i + 1; j < leaves.size(); ++j)
            EXPECT_FALSE(leaves[i] == leaves[j]);
}

TEST(Leaves, paper_column_matches_published_tree) {
    std::vector<Scenario> leaves = enumerate_leaves();
    std::vector<Rational> want = frozen_paper_column();
    int zeros = 0, ones = 0, fractional = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        Rational p = leaf_probability_paper(leaves[i]);
        EXPECT_EQ(p, want[i]) << leaves[i].label();
        zeros += p == Rational(0);
        ones += p == Rational(1);
        fractional += p > Rational(0) && p < Rational(1);
    }
    EXPECT_EQ(zeros, 5);
    EXPECT_EQ(ones, 1);
    EXPECT_EQ(fractional, 6);
}

TEST(Leaves, quantum_column_matches_brute_force) {
    std::vector<Scenario> leaves = enumerate_leaves();
    std::vector<Rational> frozen = frozen_quantum_column();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        Rational q = leaf_probability_quantum(leaves[i]);
        EXPECT_NEAR(to_double(q), brute_force_leaf(leaves[i]), 1e-12) << leaves[i].label();
        EXPECT_EQ(q, frozen[i]) << leaves[i].label();
    }
}

TEST(Leaves, models_agree_on_deterministic_leaves) {
    Scenario direct{HideAction::kNoHide, EveAction::kMeasure, ResendKind::kSame};
    Scenario flipped{HideAction::kNoHide, EveAction::kDiffuseMeasure, ResendKind::kSame};
    EXPECT_EQ(leaf_probability_paper(direct), Rational(1));
    EXPECT_EQ(leaf_probability_quantum(direct), Rational(1));
    EXPECT_EQ(leaf_probability_paper(flipped), Rational(0));
    EXPECT_EQ(leaf_probability_quantum(flipped), Rational(0));
    // The collapsed-then-diffused leaf is where the two models part ways.
    Scenario hidden{HideAction::kHide, EveAction::kMeasure, ResendKind::kSame};
    EXPECT_EQ(leaf_probability_paper(hidden), Rational(1, 8));
    EXPECT_EQ(leaf_probability_quantum(hidden), Rational(1, 2));
}

TEST(Leaves, quantum_is_invariant_under_relabeling) {
    for (const Scenario &s : enumerate_leaves()) {
        Rational base = leaf_probability_quantum_given(s, Bit::kZero, Position::kFirst);
        for (Bit b : kAllBits)
            for (Position p : kAllPositions)
                EXPECT_EQ(leaf_probability_quantum_given(s, b, p), base) << s.label();
    }
}

TEST(MonteCarlo, deterministic_leaf) {
    RandomStream rng(1);
    McEstimate e = monte_carlo_leaf({HideAction::kNoHide, EveAction::kMeasure, ResendKind::kSame}, 20000, rng);
    EXPECT_EQ(e.estimate, 1.0);
    EXPECT_EQ(e.std_error, 0.0);
}

TEST(MonteCarlo, within_three_sigma_of_exact) {
    for (Scenario s : {Scenario{HideAction::kHide, EveAction::kMeasure, ResendKind::kSame},
                       Scenario{HideAction::kHide, EveAction::kMeasure, ResendKind::kPrepareUnhidden}}) {
        RandomStream rng(77);
        McEstimate e = monte_carlo_leaf(s, 100000, rng);
        double exact = to_double(leaf_probability_quantum(s));
        EXPECT_LE(std::abs(e.estimate - exact), 3.0 * e.std_error) << s.label();
    }
}

TEST(MonteCarlo, partitioned_runs_are_reproducible) {
    Scenario s{HideAction::kHide, EveAction::kDiffuseMeasure, ResendKind::kPrepareHidden};
    McEstimate a = monte_carlo_leaf_partitioned(s, 10001, 42, 4);
    McEstimate b = monte_carlo_leaf_partitioned(s, 10001, 42, 4);
    EXPECT_EQ(a.successes, b.successes);
    EXPECT_EQ(a.trials, 10001u);

    // A single partition is exactly a sequential run on substream 0.
    RandomStream rng = RandomStream::substream(42, 0);
    EXPECT_EQ(monte_carlo_leaf_partitioned(s, 5000, 42, 1).successes, monte_carlo_leaf(s, 5000, rng).successes);
}

TEST(MonteCarlo, rejects_zero_trials) {
    RandomStream rng(0);
    Scenario s = enumerate_leaves()[0];
    EXPECT_THROW(monte_carlo_leaf(s, 0, rng), std::invalid_argument);
    EXPECT_THROW(monte_carlo_leaf_partitioned(s, 10, 0, 0), std::invalid_argument);
}

TEST(Priors, validation) {
    BranchPriors p;
    EXPECT_NO_THROW(p.validate());
    p.resend_same = Rational(3, 4);
    EXPECT_THROW(p.validate(), std::invalid_argument);
    BranchPriors q;
    q.alice_hide = Rational(-1, 2);
    EXPECT_THROW(q.validate(), std::invalid_argument);
}

TEST(Aggregate, paper_model) {
    BranchPriors priors;
    TreeReport report = build_tree_report(priors);
    AggregateReport agg = aggregate(report, EvalMode::kPaperCombinatorial, priors);
    // Each Eve branch contributes 1/2 * (1/2 * 1/8 + 1/4 * 1/4 + 1/4 * 0).
    EXPECT_EQ(agg.bob_correct_given_hide, Rational(1, 8));
    EXPECT_EQ(agg.bob_correct_given_nohide, Rational(5, 16));
    EXPECT_EQ(agg.per_bit_no_detect, Rational(7, 32));
    EXPECT_EQ(agg.eve_correct_strict, Rational(1, 4));
    EXPECT_EQ(agg.eve_correct_quantum, Rational(1, 2));
    EXPECT_EQ(agg.ps_correct, Rational(1, 8));

    std::map<std::string, bool> flags;
    for (const PaperClaim &c : agg.paper_claims) flags[c.id] = c.matched;
    EXPECT_EQ(flags.size(), 7u);
    EXPECT_TRUE(flags["eve_correct"]);
    EXPECT_TRUE(flags["ps_correct"]);
    EXPECT_TRUE(flags["secure_when_processed"]);
    EXPECT_FALSE(flags["detect_when_hiding"]);
    EXPECT_FALSE(flags["detect_when_not_hiding"]);
    EXPECT_FALSE(flags["undetected"]);
    EXPECT_FALSE(flags["detect"]);
}

TEST(Aggregate, quantum_model) {
    BranchPriors priors;
    AggregateReport agg = aggregate(build_tree_report(priors), EvalMode::kQuantumExact, priors);
    EXPECT_EQ(agg.bob_correct_given_hide, Rational(1, 2));
    EXPECT_EQ(agg.bob_correct_given_nohide, Rational(1, 2));
    EXPECT_EQ(agg.per_bit_no_detect, Rational(1, 2));
    EXPECT_FALSE(agg.paper_claims[0].matched);
    EXPECT_EQ(agg.paper_claims[0].computed, Rational(1, 2));
}

TEST(Aggregate, eve_correct_quantum_by_hand) {
    // Alice N, Eve M: right position reads the bit, wrong one is a coin.
    // Alice N, Eve GM and Alice H, Eve M: right position always wrong.
    // Alice H, Eve GM: like the first case.
    double expected = 0.25 * (0.75 + 0.25 + 0.25 + 0.75);
    EXPECT_NEAR(to_double(eve_correct_probability_quantum({})), expected, 1e-15);

    BranchPriors hider;
    hider.alice_hide = Rational(1);
    hider.eve_measure = Rational(0);
    EXPECT_EQ(eve_correct_probability_quantum(hider), Rational(3, 4));
    EXPECT_EQ(eve_correct_probability_strict(hider), Rational(1, 2));
}

TEST(Aggregate, detection_curve) {
    BranchPriors priors;
    AggregateReport agg = aggregate(build_tree_report(priors), EvalMode::kPaperCombinatorial, priors, 64);
    ASSERT_EQ(agg.detect_after_k_bits.size(), 65u);
    EXPECT_EQ(agg.detect_after_k_bits[0], 0.0);
    EXPECT_NEAR(agg.detect_after_k_bits[1], 25.0 / 32.0, 1e-15);
    for (std::size_t k = 1; k < agg.detect_after_k_bits.size(); ++k) {
        EXPECT_GE(agg.detect_after_k_bits[k], agg.detect_after_k_bits[k - 1]);
    }
    EXPECT_GT(agg.detect_after_k_bits.back(), 1.0 - 1e-12);
}

TEST(Aggregate, custom_priors_shift_values) {
    BranchPriors p;
    p.alice_hide = Rational(1);
    AggregateReport agg = aggregate(build_tree_report(p), EvalMode::kPaperCombinatorial, p);
    EXPECT_EQ(agg.per_bit_no_detect, Rational(1, 8));
}
