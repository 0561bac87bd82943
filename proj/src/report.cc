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

#include "qhide/report.h"

#include <iomanip>
#include <sstream>

namespace qhide {

std::string fixed6(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

Json to_json(const BranchPriors &priors) {
    Json j = Json::object();
    j["alice_hide"] = to_string(priors.alice_hide);
    j["eve_measure"] = to_string(priors.eve_measure);
    j["resend_sm"] = to_string(priors.resend_same);
    j["resend_ps_h"] = to_string(priors.resend_ps_hide);
    j["resend_ps_n"] = to_string(priors.resend_ps_nohide);
    j["eve_read_first"] = to_string(priors.eve_read_first);
    return j;
}

Json to_json(const LeafResult &leaf) {
    Json scenario = Json::object();
    scenario["alice"] = std::string(1, to_char(leaf.scenario.alice));
    scenario["eve"] = to_string(leaf.scenario.eve);
    scenario["resend"] = to_string(leaf.scenario.resend);
    Json j = Json::object();
    j["scenario"] = scenario;
    j["paper"] = to_string(leaf.paper_prob);
    j["quantum"] = to_string(leaf.quantum_prob);
    if (leaf.mc) {
        j["mc"] = leaf.mc->estimate;
        j["stderr"] = leaf.mc->std_error;
        j["trials"] = leaf.mc->trials;
        j["successes"] = leaf.mc->successes;
    }
    return j;
}

Json to_json(const AggregateReport &agg) {
    Json j = Json::object();
    j["mode"] = to_string(agg.mode);
    j["bob_correct_given_H"] = to_string(agg.bob_correct_given_hide);
    j["bob_correct_given_N"] = to_string(agg.bob_correct_given_nohide);
    j["eve_correct_strict"] = to_string(agg.eve_correct_strict);
    j["eve_correct_quantum"] = to_string(agg.eve_correct_quantum);
    j["ps_correct"] = to_string(agg.ps_correct);
    j["per_bit_no_detect"] = to_string(agg.per_bit_no_detect);
    Json curve = Json::array();
    for (std::size_t k = 0; k < agg.detect_after_k_bits.size(); ++k) {
        curve.push_back(Json::object({{"k", k}, {"p", agg.detect_after_k_bits[k]}}));
    }
    j["detect_after_k_bits"] = curve;
    Json claims = Json::array();
    for (const PaperClaim &c : agg.paper_claims) {
        Json cj = Json::object();
        cj["id"] = c.id;
        cj["description"] = c.description;
        cj["claimed"] = to_string(c.claimed);
        cj["claimed_percent"] = 100.0 * to_double(c.claimed);
        cj["computed"] = to_string(c.computed);
        cj["computed_percent"] = 100.0 * to_double(c.computed);
        cj["match"] = c.matched;
        claims.push_back(cj);
    }
    j["paper_claims"] = claims;
    return j;
}

Json tree_report_json(const TreeReport &report, const AggregateReport &agg) {
    Json j = Json::object();
    j["branch_priors"] = to_json(report.branch_priors);
    Json leaves = Json::array();
    for (const LeafResult &leaf : report.leaves) {
        leaves.push_back(to_json(leaf));
    }
    j["leaves"] = leaves;
    j["aggregates"] = to_json(agg);
    return j;
}

std::string tree_report_csv(const TreeReport &report) {
    std::ostringstream os;
    os << "alice,eve,resend,paper,quantum,mc,stderr\n";
    for (const LeafResult &leaf : report.leaves) {
        os << to_char(leaf.scenario.alice) << ',' << to_string(leaf.scenario.eve) << ','
           << to_string(leaf.scenario.resend) << ',' << to_string(leaf.paper_prob) << ','
           << to_string(leaf.quantum_prob) << ',';
        if (leaf.mc) {
            os << fixed6(leaf.mc->estimate) << ',' << fixed6(leaf.mc->std_error);
        } else {
            os << ',';
        }
        os << '\n';
    }
    return os.str();
}

std::string aggregate_table(const AggregateReport &agg) {
    std::ostringstream os;
    os << "aggregates (" << to_string(agg.mode) << " model)\n";
    auto row = [&os](const std::string &name, const Rational &r) {
        os << "  " << std::left << std::setw(24) << name << std::right << std::setw(10) << fixed6(to_double(r))
           << "  (" << to_string(r) << ")\n";
    };
    row("bob_correct_given_H", agg.bob_correct_given_hide);
    row("bob_correct_given_N", agg.bob_correct_given_nohide);
    row("eve_correct_strict", agg.eve_correct_strict);
    row("eve_correct_quantum", agg.eve_correct_quantum);
    row("ps_correct", agg.ps_correct);
    row("per_bit_no_detect", agg.per_bit_no_detect);
    os << "published claims\n";
    for (const PaperClaim &c : agg.paper_claims) {
        os << "  " << std::left << std::setw(24) << c.id << std::right << std::setw(10)
           << fixed6(100.0 * to_double(c.claimed)) << "%  computed " << std::setw(10)
           << fixed6(100.0 * to_double(c.computed)) << "%  " << (c.matched ? "MATCH" : "MISMATCH") << '\n';
    }
    return os.str();
}

std::string tree_report_table(const TreeReport &report, const AggregateReport &agg) {
    std::ostringstream os;
    os << std::left << std::setw(12) << "scenario" << std::right << std::setw(10) << "paper" << std::setw(10)
       << "quantum" << std::setw(10) << "mc" << std::setw(10) << "stderr" << '\n';
    for (const LeafResult &leaf : report.leaves) {
        os << std::left << std::setw(12) << leaf.scenario.label() << std::right << std::setw(10)
           << fixed6(to_double(leaf.paper_prob)) << std::setw(10) << fixed6(to_double(leaf.quantum_prob));
        if (leaf.mc) {
            os << std::setw(10) << fixed6(leaf.mc->estimate) << std::setw(10) << fixed6(leaf.mc->std_error);
        } else {
            os << std::setw(10) << "-" << std::setw(10) << "-";
        }
        os << '\n';
    }
    os << '\n' << aggregate_table(agg);
    return os.str();
}

}  // namespace qhide
