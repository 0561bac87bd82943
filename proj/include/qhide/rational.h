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

#ifndef QHIDE_RATIONAL_H
#define QHIDE_RATIONAL_H

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace qhide {

using Rational = boost::rational<std::int64_t>;

/// "num/den", or just "num" when den is 1.
std::string to_string(const Rational &r);
/// Accepts "n", "n/d" or a finite decimal such as "0.25". Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
double to_double(const Rational &r);

/// Converts a Born probability computed in floating point to the exact
/// dyadic rational it approximates. Every squared amplitude this protocol
/// produces is of the form m/2^k; anything else throws InvariantViolation.
Rational snap_dyadic(double probability);

}  // namespace qhide

#endif  // QHIDE_RATIONAL_H
