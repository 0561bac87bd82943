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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qhide/analysis.h"
#include "qhide/cli.h"
#include "qhide/errors.h"
#include "qhide/extensions.h"
#include "qhide/protocol.h"
#include "qhide/state_vector.h"

using namespace qhide;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failure reasons for one criterion.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string &what) {
        if (!ok && failures.size() < 5) {
            failures.push_back(what);
        }
    }
};

StateVector random_state(int qubits, RandomStream &rng) {
    std::vector<double> raw(std::size_t{1} << qubits);
    for (double &a : raw) {
        a = 2.0 * rng.next_unit() - 1.0;
    }
    return StateVector::normalized(qubits, raw);
}

bool close(const StateVector &a, const StateVector &b, double tol = 1e-12) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[static_cast<BasisIndex>(i)] - b[static_cast<BasisIndex>(i)]) > tol) {
            return false;
        }
    }
    return true;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Involution and form agreement of G and D_p on random states.
void operators(Check &c) {
    auto start = Clock::now();
    RandomStream rng(2026);
    for (int i = 0; i < 1000; ++i) {
        StateVector s = random_state(2, rng);
        c.expect(close(apply_g(apply_g(s)), s), "G is not an involution");
        c.expect(close(apply_g(s), apply_g_matrix(s)), "G forms disagree");
        StateVector t = random_state(3, rng);
        c.expect(close(apply_dp(apply_dp(t)), t), "D_p is not an involution");
        c.expect(close(apply_dp(t), apply_dp_matrix(t)), "D_p forms disagree");
    }
    c.expect(seconds_since(start) < 1.0, "took longer than 1 s");
}

// 2. G fixes the uniform state, spreads basis states and complements pairs.
void diffusion_laws(Check &c) {
    auto start = Clock::now();
    StateVector u = uniform_data_state();
    c.expect(close(apply_g(u), u), "uniform state not fixed");
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        StateVector g = apply_g(StateVector::basis(2, x));
        for (BasisIndex y = 0; y < kDataDim; ++y) {
            c.expect(std::abs(g[y] - (y == x ? -0.5 : 0.5)) <= 1e-12, "basis state " + basis_label(x));
        }
    }
    int pairs = 0;
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        for (BasisIndex y = x + 1; y < kDataDim; ++y) {
            std::vector<BasisIndex> rest;
            for (BasisIndex z = 0; z < kDataDim; ++z) {
                if (z != x && z != y) {
                    rest.push_back(z);
                }
            }
            c.expect(close(apply_g(pair_state(x, y)), pair_state(rest[0], rest[1])),
                     "pair " + basis_label(x) + basis_label(y));
            ++pairs;
        }
    }
    c.expect(pairs == 6, "expected 6 pairs");
    c.expect(seconds_since(start) < 1.0, "took longer than 1 s");
}

// 3. Prepared frames equal the target superpositions; the extra qubit is
// separable before it is dropped.
void hiding_pipeline(Check &c) {
    auto start = Clock::now();
    for (Bit b : kAllBits) {
        for (Position p : kAllPositions) {
            for (HideAction a : kAllHideActions) {
                std::string tag = std::string(1, to_char(b)) + "/" + std::to_string(to_int(p)) + "/" + to_char(a);
                StateVector before = apply_dp(apply_oracle(with_extra_qubit(uniform_data_state()), oracle_for(b, p, a)));
                c.expect(entanglement_residual(before) <= kSeparabilityTolerance, "entangled extra qubit " + tag);
                std::set<BasisIndex> want;
                for (BasisIndex x = 0; x < kDataDim; ++x) {
                    bool carries = bit_at(x, p) == b;
                    if (carries == (a == HideAction::kNoHide)) {
                        want.insert(x);
                    }
                }
                Frame f = alice_prepare(b, p, a);
                std::vector<BasisIndex> support = f.payload.support();
                c.expect(std::set<BasisIndex>(support.begin(), support.end()) == want, "support " + tag);
                for (BasisIndex x = 0; x < kDataDim; ++x) {
                    double target = want.count(x) ? kInvSqrt2 : 0.0;
                    c.expect(std::abs(f.payload[x] - target) <= 1e-12, "amplitude " + tag);
                }
            }
        }
    }
    c.expect(seconds_since(start) < 1.0, "took longer than 1 s");
}

// 4. Bob recovers every bit with certainty.
void round_trip(Check &c) {
    for (Bit b : kAllBits) {
        for (Position p : kAllPositions) {
            for (HideAction a : kAllHideActions) {
                c.expect(bob_decode_distribution(alice_prepare(b, p, a), a, p)[b] == Rational(1), "exact round trip");
            }
        }
    }
    RandomStream rng(4);
    int errors = 0;
    for (int i = 0; i < 10000; ++i) {
        Bit b = rng.bernoulli(0.5) ? Bit::kOne : Bit::kZero;
        Position p = rng.bernoulli(0.5) ? Position::kFirst : Position::kSecond;
        HideAction a = rng.bernoulli(0.5) ? HideAction::kHide : HideAction::kNoHide;
        errors += bob_decode(alice_prepare(b, p, a), a, p, rng) != b;
    }
    c.expect(errors == 0, std::to_string(errors) + " sampled errors");
}

// 5. A direct readout of a hidden frame never yields the sent bit.
void secrecy(Check &c) {
    for (Bit b : kAllBits) {
        for (Position p : kAllPositions) {
            Frame f = alice_prepare(b, p, HideAction::kHide);
            c.expect(direct_readout_distribution(f, p)[b] == Rational(0), "hidden bit readable");
        }
    }
}

// 6. Published leaf values and their counts.
void published_tree(Check &c) {
    std::vector<Rational> want = {Rational(1, 8), Rational(1, 4), Rational(0), Rational(1, 8),
                                  Rational(1, 4), Rational(0),    Rational(1), Rational(0),
                                  Rational(1, 4), Rational(0),    Rational(0), Rational(1, 4)};
    std::vector<Scenario> leaves = enumerate_leaves();
    c.expect(leaves.size() == 12, "expected 12 leaves");
    int zeros = 0, ones = 0, fractional = 0;
    for (std::size_t i = 0; i < leaves.size() && i < want.size(); ++i) {
        Rational p = leaf_probability_paper(leaves[i]);
        c.expect(p == want[i], leaves[i].label() + " = " + to_string(p));
        zeros += p == Rational(0);
        ones += p == Rational(1);
        fractional += p > Rational(0) && p < Rational(1);
    }
    c.expect(zeros == 5 && ones == 1 && fractional == 6, "leaf counts");
}

// 7. Sampling agrees with the exact quantum leaves.
void monte_carlo(Check &c) {
    auto start = Clock::now();
    std::uint64_t index = 0;
    for (const Scenario &s : enumerate_leaves()) {
        McEstimate e = monte_carlo_leaf_partitioned(s, 100000, 42 + index++, 4);
        double exact = to_double(leaf_probability_quantum(s));
        std::ostringstream msg;
        msg << s.label() << ": " << e.estimate << " vs " << exact << " (stderr " << e.std_error << ")";
        c.expect(std::abs(e.estimate - exact) <= 3.0 * e.std_error, msg.str());
    }
    c.expect(seconds_since(start) < 30.0, "took longer than 30 s");
}

// 8. Both Eve-correct numbers are reported and every published aggregate is
// flagged against a computed counterpart.
void documented_divergence(Check &c) {
    BranchPriors priors;
    TreeReport report = build_tree_report(priors);
    AggregateReport agg = aggregate(report, EvalMode::kPaperCombinatorial, priors);
    c.expect(agg.eve_correct_strict == Rational(1, 4), "strict Eve-correct is " + to_string(agg.eve_correct_strict));
    c.expect(agg.eve_correct_quantum == Rational(1, 2), "quantum Eve-correct is " + to_string(agg.eve_correct_quantum));
    std::set<Rational> claimed;
    for (const PaperClaim &claim : agg.paper_claims) {
        claimed.insert(claim.claimed);
        bool consistent = claim.matched == (claim.claimed == claim.computed);
        c.expect(consistent, "flag of " + claim.id);
    }
    for (Rational want : {Rational(61, 64), Rational(55, 64), Rational(3, 16), Rational(13, 16), Rational(3, 4)}) {
        c.expect(claimed.count(want) == 1, "claim " + to_string(want) + " not reported");
    }
}

// 9. Only the plus-sign Bell states can be hidden.
void bell(Check &c) {
    Frame phi = prepare_bell(BellState::kPhiPlus);
    Frame psi = prepare_bell(BellState::kPsiPlus);
    c.expect(close(hide_bell(phi).payload, psi.payload), "phi+ not mapped to psi+");
    c.expect(close(hide_bell(psi).payload, phi.payload), "psi+ not mapped to phi+");
    for (BellState b : {BellState::kPhiMinus, BellState::kPsiMinus}) {
        Frame f = prepare_bell(b);
        bool rejected = false;
        try {
            hide_bell(f);
        } catch (const UnhideablePhase &) {
            rejected = true;
        }
        c.expect(rejected, to_string(b) + " accepted");
        c.expect(measurement_distribution(apply_g(f.payload)).probabilities ==
                     measurement_distribution(f.payload).probabilities,
                 to_string(b) + " distribution changed");
    }
}

// 10. Seeded Monte Carlo output is byte-identical across runs.
void determinism(Check &c) {
    std::vector<std::string> args = {"qhide", "tree", "--mode", "mc", "--trials", "100000", "--seed", "42"};
    std::ostringstream out1, out2, err;
    int code1 = run_cli(args, out1, err);
    int code2 = run_cli(args, out2, err);
    c.expect(code1 == kExitOk && code2 == kExitOk, "nonzero exit: " + err.str());
    c.expect(!out1.str().empty() && out1.str() == out2.str(), "outputs differ");
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<void(Check &)> run;
    };
    const std::vector<Criterion> criteria = {
        {"operator correctness", operators},
        {"diffusion laws", diffusion_laws},
        {"hiding pipeline", hiding_pipeline},
        {"round trip", round_trip},
        {"hiding secrecy", secrecy},
        {"published tree", published_tree},
        {"quantum-exact vs Monte Carlo", monte_carlo},
        {"documented divergence", documented_divergence},
        {"Bell extension", bell},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            criteria[i].run(check);
        } catch (const std::exception &e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = check.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  AC" << i + 1 << "  " << criteria[i].name;
        for (const std::string &f : check.failures) {
            std::cout << "\n        " << f;
        }
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
