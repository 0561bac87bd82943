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

#ifndef QHIDE_REPORT_H
#define QHIDE_REPORT_H

#include <string>

#include "qhide/analysis.h"
#include "qhide/serialization.h"

namespace qhide {

Json to_json(const BranchPriors &priors);
Json to_json(const LeafResult &leaf);
Json to_json(const AggregateReport &agg);

/// {"leaves": [...], "aggregates": {...}} plus the branch priors.
Json tree_report_json(const TreeReport &report, const AggregateReport &agg);

/// One row per leaf; rationals as num/den, Monte Carlo columns empty when
/// not run.
std::string tree_report_csv(const TreeReport &report);

/// Human-readable tables with decimals to 6 places.
std::string tree_report_table(const TreeReport &report, const AggregateReport &agg);
std::string aggregate_table(const AggregateReport &agg);

/// Renders a probability with 6 decimal places.
std::string fixed6(double v);

}  // namespace qhide

#endif  // QHIDE_REPORT_H
