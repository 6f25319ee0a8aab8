/*
 * Copyright 2026 The Hyperforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "hyperforge/errors.hpp"

namespace hyperforge {

/// Membership grades are exact rationals, never floating point: the level
/// and threshold theorems are biconditionals over >= comparisons and any
/// rounding would break them.
using Grade = boost::rational<std::int64_t>;

inline Grade grade_zero() { return Grade(0); }
inline Grade grade_one() { return Grade(1); }

inline bool in_unit_interval(const Grade& g) { return g >= Grade(0) && g <= Grade(1); }

/// Parse "p/q" or a bare integer "p". Normalization and sign handling come
/// from the rational type; a zero denominator is a domain error.
inline Grade parse_grade(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Grade(std::stoll(std::string(text)));
        const std::int64_t num = std::stoll(std::string(text.substr(0, slash)));
        const std::int64_t den = std::stoll(std::string(text.substr(slash + 1)));
        if (den == 0) throw DomainError("grade denominator must be non-zero");
        return Grade(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse grade '" + std::string(text) + "'");
    } catch (const std::out_of_range&) {
        throw DomainError("grade '" + std::string(text) + "' out of range");
    }
}

/// Canonical rendering: lowest terms, "p" for integers, "p/q" otherwise.
inline std::string format_grade(const Grade& g) {
    if (g.denominator() == 1) return std::to_string(g.numerator());
    return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

}  // namespace hyperforge
