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

#include "qhide/cli.h"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qhide/adversary.h"
#include "qhide/analysis.h"
#include "qhide/errors.h"
#include "qhide/protocol.h"
#include "qhide/report.h"
#include "qhide/serialization.h"

namespace qhide {

namespace {

/// Raised for flag combinations CLI11 cannot check on its own.
class UsageError : public Error {
   public:
    using Error::Error;
};

struct CommonOptions {
    std::uint64_t seed = 0;
    CLI::Option *seed_option = nullptr;
    std::string output = "json";
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
    opts.seed_option = cmd->add_option("--seed", opts.seed, "RNG seed (falls back to $QHIDE_SEED, then 0)");
    cmd->add_option("--output", opts.output, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
}

std::uint64_t resolve_seed(const CommonOptions &opts) {
    if (opts.seed_option->count() > 0) {
        return opts.seed;
    }
    const char *env = std::getenv("QHIDE_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    std::string text(env);
    std::uint64_t v = 0;
    std::size_t used = 0;
    try {
        v = std::stoull(text, &used, 10);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.front() == '-') {
        throw UsageError("QHIDE_SEED is not an unsigned 64-bit integer: '" + text + "'");
    }
    return v;
}

struct PriorOverrides {
    std::string alice_hide;
    std::string eve_measure;
    std::string resend_sm;
    std::string resend_ps_h;
    std::string resend_ps_n;
    std::string eve_read_first;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--prior-alice-hide", alice_hide, "P(Alice hides), e.g. 1/2");
        cmd->add_option("--prior-eve-measure", eve_measure, "P(Eve measures directly)");
        cmd->add_option("--prior-resend-sm", resend_sm, "P(Eve resends the measured state)");
        cmd->add_option("--prior-ps-h", resend_ps_h, "P(Eve prepares a hidden superposition)");
        cmd->add_option("--prior-ps-n", resend_ps_n, "P(Eve prepares an unhidden superposition)");
        cmd->add_option("--prior-eve-read-first", eve_read_first, "P(Eve reads position 1)");
    }

    BranchPriors resolve() const {
        BranchPriors p;
        auto set = [](Rational &dst, const std::string &src) {
            if (!src.empty()) {
                dst = parse_rational(src);
            }
        };
        set(p.alice_hide, alice_hide);
        set(p.eve_measure, eve_measure);
        set(p.resend_same, resend_sm);
        set(p.resend_ps_hide, resend_ps_h);
        set(p.resend_ps_nohide, resend_ps_n);
        set(p.eve_read_first, eve_read_first);
        p.validate();
        return p;
    }
};

struct TransmitArgs {
    CommonOptions common;
    std::string message;
    std::string key;
    std::string eve;
    std::uint64_t trials = 1;
    bool cycle_key = false;
};

struct TreeArgs {
    CommonOptions common;
    std::string mode = "paper";
    bool paper_model = false;
    std::uint64_t trials = 100000;
    unsigned workers = 4;
    int max_k = 16;
    PriorOverrides priors;
};

struct KeygenArgs {
    CommonOptions common;
    std::size_t length = 0;
};

std::string match_marks(const Message &sent, const Message &received) {
    std::string s;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        s += sent[i] == received[i] ? '+' : 'x';
    }
    return s;
}

int cmd_transmit(const TransmitArgs &a, std::ostream &out) {
    std::uint64_t seed = resolve_seed(a.common);
    Message message = parse_message(a.message);
    SecretKey key = parse_key(a.key);
    TransmitOptions options{a.cycle_key};
    if (message.size() > key.size() && !options.cycle_key) {
        throw KeyExhausted("message has " + std::to_string(message.size()) + " bits but the key only " +
                           std::to_string(key.size()) + " entries (use --cycle-key to reuse it)");
    }
    if (a.trials == 0) {
        throw UsageError("--trials must be positive");
    }

    std::optional<EveStrategy> fixed;
    bool eve_present = !a.eve.empty() && a.eve != "none";
    if (eve_present && a.eve != "random") {
        Json doc;
        try {
            doc = Json::parse(a.eve);
        } catch (const Json::parse_error &e) {
            throw UsageError(std::string("--eve is neither 'random' nor valid JSON: ") + e.what());
        }
        fixed = strategy_from_json(doc);
    }

    RandomStream rng(seed);
    Json runs = Json::array();
    std::ostringstream table;
    std::ostringstream csv;
    csv << "run,index,key,sent,received,match,eve_guess\n";
    std::uint64_t errors_total = 0;
    for (std::uint64_t run = 0; run < a.trials; ++run) {
        std::optional<EveChannel> eve;
        if (eve_present) {
            eve = fixed ? EveChannel(*fixed) : EveChannel(StrategyPriors{});
        }
        FrameTransform channel = eve ? FrameTransform(std::ref(*eve)) : identity_channel();
        Message received = transmit_message(message, key, channel, rng, options);

        std::uint64_t errors = 0;
        Json matches = Json::array();
        for (std::size_t i = 0; i < message.size(); ++i) {
            bool ok = message[i] == received[i];
            errors += ok ? 0 : 1;
            matches.push_back(ok);
        }
        errors_total += errors;
        double rate = message.empty() ? 0.0 : static_cast<double>(errors) / static_cast<double>(message.size());

        Json rj = Json::object();
        rj["sent"] = format_message(message);
        rj["received"] = format_message(received);
        rj["matches"] = matches;
        rj["errors"] = errors;
        rj["error_rate"] = rate;
        if (eve) {
            Json log = Json::array();
            for (const EveChannel::Entry &e : eve->log()) {
                Json ej = Json::object();
                ej["strategy"] = to_json(e.strategy);
                ej["guessed_bit"] = to_int(e.record.guessed_bit);
                log.push_back(ej);
            }
            rj["eve"] = log;
        }
        runs.push_back(rj);

        table << "run " << run << '\n'
              << "  sent       " << format_message(message) << '\n'
              << "  received   " << format_message(received) << '\n'
              << "  match      " << match_marks(message, received) << '\n';
        if (eve) {
            std::string guesses;
            for (const EveChannel::Entry &e : eve->log()) {
                guesses += to_char(e.record.guessed_bit);
            }
            table << "  eve guess  " << guesses << '\n';
        }
        table << "  error rate " << fixed6(rate) << '\n';

        for (std::size_t i = 0; i < message.size(); ++i) {
            const KeyEntry &k = key[i % key.size()];
            csv << run << ',' << i << ',' << to_char(k.action) << to_int(k.position) << ',' << to_char(message[i])
                << ',' << to_char(received[i]) << ',' << (message[i] == received[i] ? 1 : 0) << ',';
            if (eve) {
                csv << to_char(eve->log()[i].record.guessed_bit);
            }
            csv << '\n';
        }
    }
    std::uint64_t total_bits = message.size() * a.trials;
    double mean_rate = total_bits == 0 ? 0.0 : static_cast<double>(errors_total) / static_cast<double>(total_bits);

    if (a.common.output == "json") {
        Json j = Json::object();
        j["command"] = "transmit";
        j["seed"] = seed;
        j["key"] = format_key(key);
        j["cycle_key"] = a.cycle_key;
        if (!eve_present) {
            j["eve"] = nullptr;
        } else if (fixed) {
            j["eve"] = to_json(*fixed);
        } else {
            j["eve"] = "random";
        }
        j["runs"] = runs;
        j["error_rate"] = mean_rate;
        out << j.dump(2) << '\n';
    } else if (a.common.output == "csv") {
        out << csv.str();
    } else {
        out << table.str() << "overall error rate " << fixed6(mean_rate) << '\n';
    }
    return kExitOk;
}

EvalMode model_for(const std::string &mode) {
    return mode == "paper" ? EvalMode::kPaperCombinatorial : EvalMode::kQuantumExact;
}

void check_tree_args(TreeArgs &a) {
    if (a.paper_model) {
        a.mode = "paper";
    }
    if (a.trials == 0) {
        throw UsageError("--trials must be positive");
    }
    if (a.workers == 0) {
        throw UsageError("--workers must be positive");
    }
    if (a.max_k < 0) {
        throw UsageError("--max-k must be nonnegative");
    }
}

Json run_header(const std::string &command, const TreeArgs &a, std::uint64_t seed) {
    Json j = Json::object();
    j["command"] = command;
    j["mode"] = a.mode;
    if (a.mode == "mc") {
        j["seed"] = seed;
        j["trials"] = a.trials;
        j["workers"] = a.workers;
    }
    return j;
}

int cmd_tree(TreeArgs a, std::ostream &out) {
    check_tree_args(a);
    BranchPriors priors = a.priors.resolve();
    std::uint64_t seed = resolve_seed(a.common);
    TreeOptions options{a.mode == "mc", a.trials, seed, a.workers};
    TreeReport report = build_tree_report(priors, options);
    AggregateReport agg = aggregate(report, model_for(a.mode), priors, a.max_k);

    if (a.common.output == "json") {
        Json j = run_header("tree", a, seed);
        Json body = tree_report_json(report, agg);
        for (auto &[k, v] : body.items()) {
            j[k] = v;
        }
        out << j.dump(2) << '\n';
    } else if (a.common.output == "csv") {
        out << tree_report_csv(report);
    } else {
        out << tree_report_table(report, agg);
    }
    return kExitOk;
}

int cmd_detect(TreeArgs a, std::ostream &out) {
    check_tree_args(a);
    BranchPriors priors = a.priors.resolve();
    std::uint64_t seed = resolve_seed(a.common);
    TreeOptions options{a.mode == "mc", a.trials, seed, a.workers};
    TreeReport report = build_tree_report(priors, options);
    AggregateReport agg = aggregate(report, model_for(a.mode), priors, a.max_k);

    Json no_detect;
    std::vector<double> curve = agg.detect_after_k_bits;
    if (a.mode == "mc") {
        // Empirical per-bit survival from the sampled leaves.
        double p = 0.0;
        for (const LeafResult &leaf : report.leaves) {
            double w = to_double(priors.alice_weight(leaf.scenario.alice) * priors.eve_weight(leaf.scenario.eve) *
                                 priors.resend_weight(leaf.scenario.resend));
            p += w * leaf.mc->estimate;
        }
        no_detect = p;
        for (int k = 0; k <= a.max_k; ++k) {
            curve[static_cast<std::size_t>(k)] = 1.0 - std::pow(p, k);
        }
    } else {
        no_detect = to_string(agg.per_bit_no_detect);
    }

    if (a.common.output == "json") {
        Json j = run_header("detect", a, seed);
        j["max_k"] = a.max_k;
        j["per_bit_no_detect"] = no_detect;
        Json cj = Json::array();
        for (std::size_t k = 0; k < curve.size(); ++k) {
            cj.push_back(Json::object({{"k", k}, {"p", curve[k]}}));
        }
        j["detect_after_k_bits"] = cj;
        j["aggregates"] = to_json(agg);
        out << j.dump(2) << '\n';
    } else if (a.common.output == "csv") {
        out << "k,detect_probability\n";
        for (std::size_t k = 0; k < curve.size(); ++k) {
            out << k << ',' << fixed6(curve[k]) << '\n';
        }
    } else {
        out << "per-bit no-detect probability: "
            << (no_detect.is_string() ? no_detect.get<std::string>() : fixed6(no_detect.get<double>())) << '\n';
        out << "  k  P(detect)\n";
        for (std::size_t k = 0; k < curve.size(); ++k) {
            out << std::string(k < 10 ? 2 : 1, ' ') << k << "  " << fixed6(curve[k]) << '\n';
        }
        out << '\n' << aggregate_table(agg);
    }
    return kExitOk;
}

int cmd_keygen(const KeygenArgs &a, std::ostream &out) {
    if (a.length == 0) {
        throw UsageError("--length must be positive");
    }
    std::uint64_t seed = resolve_seed(a.common);
    RandomStream rng(seed);
    std::string key = format_key(random_key(a.length, rng));
    if (a.common.output == "json") {
        Json j = Json::object();
        j["command"] = "keygen";
        j["seed"] = seed;
        j["length"] = a.length;
        j["key"] = key;
        out << j.dump(2) << '\n';
    } else {
        out << key << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qhide: state-hiding transmission simulator and eavesdropping analysis", "qhide"};
    app.require_subcommand(1);

    TransmitArgs transmit;
    CLI::App *tx = app.add_subcommand("transmit", "Send a message bit by bit, optionally through Eve");
    add_common(tx, transmit.common);
    tx->add_option("--message", transmit.message, "Message as a 0/1 string")->required();
    tx->add_option("--key", transmit.key, "Key string ([HN][12])+")->required();
    tx->add_option("--eve", transmit.eve, "'random', 'none' or a strategy JSON document");
    tx->add_option("--trials", transmit.trials, "Number of independent transmissions")->capture_default_str();
    tx->add_flag("--cycle-key", transmit.cycle_key, "Reuse the key when it is shorter than the message");

    TreeArgs tree;
    CLI::App *tr = app.add_subcommand("tree", "Evaluate the 12-leaf eavesdropping tree");
    TreeArgs detect;
    CLI::App *dt = app.add_subcommand("detect", "Detection probability after k test bits");
    for (auto [cmd, targs] : {std::pair{tr, &tree}, std::pair{dt, &detect}}) {
        add_common(cmd, targs->common);
        cmd->add_option("--mode", targs->mode, "paper | quantum | mc")
            ->check(CLI::IsMember({"paper", "quantum", "mc"}))
            ->capture_default_str();
        cmd->add_flag("--paper-model", targs->paper_model, "Shorthand for --mode paper");
        cmd->add_option("--trials", targs->trials, "Monte Carlo trials per leaf")->capture_default_str();
        cmd->add_option("--workers", targs->workers, "Monte Carlo partitions per leaf")->capture_default_str();
        cmd->add_option("--max-k", targs->max_k, "Largest number of test bits")->capture_default_str();
        targs->priors.add_to(cmd);
    }

    KeygenArgs keygen;
    CLI::App *kg = app.add_subcommand("keygen", "Emit a random key");
    add_common(kg, keygen.common);
    kg->add_option("--length", keygen.length, "Number of key entries")->required();

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const std::string &s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tx->parsed()) {
            return cmd_transmit(transmit, out);
        }
        if (tr->parsed()) {
            return cmd_tree(tree, out);
        }
        if (dt->parsed()) {
            return cmd_detect(detect, out);
        }
        return cmd_keygen(keygen, out);
    } catch (const InvariantViolation &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const NotSeparable &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const MalformedKey &e) {
        err << "MalformedKey: " << e.what() << '\n';
        return kExitUsage;
    } catch (const MalformedMessage &e) {
        err << "MalformedMessage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const KeyExhausted &e) {
        err << "KeyExhausted: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace qhide
