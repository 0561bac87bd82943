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

#include "qhide/rational.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "qhide/errors.h"

namespace qhide {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(text.substr(0, slash));
        std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15 || frac.front() == '-' || frac.front() == '+') {
            throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
        }
        bool negative = !whole.empty() && whole.front() == '-';
        std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_int(whole);
        std::int64_t f = parse_int(frac);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            den *= 10;
        }
        Rational magnitude = Rational(w < 0 ? -w : w) + Rational(f, den);
        return negative ? -magnitude : magnitude;
    }
    return Rational(parse_int(text));
}

double to_double(const Rational &r) {
    return boost::rational_cast<double>(r);
}

Rational snap_dyadic(double probability) {
    constexpr int kMaxExponent = 20;
    constexpr double kTolerance = 1e-12;
    if (!std::isfinite(probability) || probability < -kTolerance || probability > 1.0 + kTolerance) {
        throw InvariantViolation("probability out of range: " + std::to_string(probability));
    }
    std::int64_t den = 1;
    for (int k = 0; k <= kMaxExponent; ++k, den *= 2) {
        double scaled = probability * static_cast<double>(den);
        double nearest = std::round(scaled);
        if (std::abs(probability - nearest / static_cast<double>(den)) <= kTolerance) {
            return Rational(static_cast<std::int64_t>(nearest), den);
        }
    }
    throw InvariantViolation("probability " + std::to_string(probability) + " is not a short dyadic rational");
}

}  // namespace qhide
