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

#include "qhide/serialization.h"

#include <stdexcept>
#include <string>

namespace qhide {

namespace {

[[noreturn]] void bad(const std::string &what) {
    throw std::invalid_argument(what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

Position position_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number_integer()) {
        bad(std::string("'") + key + "' must be 1 or 2");
    }
    return position_from_int(v.get<int>());
}

HideAction hide_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (v == "H") {
        return HideAction::kHide;
    }
    if (v == "N") {
        return HideAction::kNoHide;
    }
    bad(std::string("'") + key + "' must be \"H\" or \"N\"");
}

}  // namespace

Json to_json(const StateVector &state) {
    Json arr = Json::array();
    for (double a : state.amplitudes()) {
        arr.push_back(a);
    }
    return arr;
}

StateVector state_from_json(const Json &j) {
    if (!j.is_array()) {
        bad("state must be a JSON array");
    }
    std::vector<double> amps;
    for (const Json &v : j) {
        if (!v.is_number()) {
            bad("amplitudes must be numbers");
        }
        amps.push_back(v.get<double>());
    }
    int qubits = amps.size() == 4 ? 2 : amps.size() == 8 ? 3 : 0;
    if (qubits == 0) {
        bad("state must have 4 or 8 amplitudes");
    }
    return StateVector(qubits, std::move(amps));
}

Json to_json(const Frame &frame) {
    Json j = Json::object();
    j["amps"] = to_json(frame.payload);
    return j;
}

Frame frame_from_json(const Json &j) {
    StateVector s = state_from_json(field(j, "amps"));
    if (s.qubit_count() != 2) {
        bad("frame payload must have 4 amplitudes");
    }
    return Frame{std::move(s)};
}

Json to_json(const EveStrategy &strategy) {
    Json j = Json::object();
    j["action"] = strategy.action == EveAction::kMeasure ? "M" : "GM";
    j["read_position"] = to_int(strategy.read_position);
    if (strategy.resend.kind == ResendPolicy::Kind::kSameMeasured) {
        j["resend"] = "SM";
    } else {
        const PsChoice &c = strategy.resend.ps_choice.value();
        Json ps = Json::object();
        ps["bit"] = to_int(c.bit);
        ps["position"] = to_int(c.position);
        ps["hide"] = std::string(1, to_char(c.hide));
        j["resend"] = Json::object({{"PS", ps}});
    }
    return j;
}

EveStrategy strategy_from_json(const Json &j) {
    EveStrategy s{};
    const Json &action = field(j, "action");
    if (action == "M") {
        s.action = EveAction::kMeasure;
    } else if (action == "GM") {
        s.action = EveAction::kDiffuseMeasure;
    } else {
        bad("'action' must be \"M\" or \"GM\"");
    }
    s.read_position = position_field(j, "read_position");
    const Json &resend = field(j, "resend");
    if (resend == "SM") {
        s.resend = ResendPolicy::same_measured();
    } else if (resend.is_object() && resend.size() == 1 && resend.contains("PS")) {
        const Json &ps = resend.at("PS");
        const Json &bit = field(ps, "bit");
        if (!bit.is_number_integer()) {
            bad("'bit' must be 0 or 1");
        }
        s.resend = ResendPolicy::prepare({bit_from_int(bit.get<int>()), position_field(ps, "position"),
                                          hide_field(ps, "hide")});
    } else {
        bad("'resend' must be \"SM\" or {\"PS\": {...}}");
    }
    return s;
}

Json to_json(const ExtendedSymbol &symbol) {
    Json j = Json::object();
    if (const auto *raw = std::get_if<RawBits>(&symbol)) {
        j["kind"] = "raw";
        j["bits"] = std::string{to_char(raw->first), to_char(raw->second)};
    } else if (const auto *bell = std::get_if<BellSymbol>(&symbol)) {
        j["kind"] = "bell";
        j["state"] = to_string(bell->state);
    } else {
        j["kind"] = "dummy";
    }
    return j;
}

ExtendedSymbol symbol_from_json(const Json &j) {
    const Json &kind = field(j, "kind");
    if (kind == "raw") {
        const Json &bits = field(j, "bits");
        if (!bits.is_string()) {
            bad("'bits' must be a string");
        }
        std::string b = bits.get<std::string>();
        Message m = parse_message(b);
        if (m.size() != 2) {
            bad("'bits' must hold exactly two bits");
        }
        return RawBits{m[0], m[1]};
    }
    if (kind == "bell") {
        const Json &state = field(j, "state");
        if (!state.is_string()) {
            bad("'state' must be a string");
        }
        return BellSymbol{parse_bell_state(state.get<std::string>())};
    }
    if (kind == "dummy") {
        return DummySymbol{};
    }
    bad("'kind' must be raw, bell or dummy");
}

}  // namespace qhide
