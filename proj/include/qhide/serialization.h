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

#ifndef QHIDE_SERIALIZATION_H
#define QHIDE_SERIALIZATION_H

#include "json.hpp"
#include "qhide/adversary.h"
#include "qhide/extensions.h"
#include "qhide/protocol.h"
#include "qhide/state_vector.h"

namespace qhide {

using Json = nlohmann::ordered_json;

/// Array of 2^n amplitudes in basis-index order.
Json to_json(const StateVector &state);
StateVector state_from_json(const Json &j);

/// {"amps": [a00, a01, a10, a11]}.
Json to_json(const Frame &frame);
Frame frame_from_json(const Json &j);

/// {"action":"M"|"GM","read_position":1|2,
///  "resend":"SM"|{"PS":{"bit":b,"position":p,"hide":"H"|"N"}}}.
Json to_json(const EveStrategy &strategy);
/// Throws std::invalid_argument on a malformed document.
EveStrategy strategy_from_json(const Json &j);

/// {"kind":"raw","bits":"10"} | {"kind":"bell","state":"phi+"} | {"kind":"dummy"}.
Json to_json(const ExtendedSymbol &symbol);
ExtendedSymbol symbol_from_json(const Json &j);

}  // namespace qhide

#endif  // QHIDE_SERIALIZATION_H
