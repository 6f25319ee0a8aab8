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
#include <vector>

#include "hyperforge/core.hpp"
#include "hyperforge/sweep.hpp"

namespace hyperforge {

/// Which hyperideal predicate an enumeration should filter by.
enum class IdealKind { sub_semihyperring, left, right, two_sided, weak_left };

/// Full classification of one subset. f_closed is tracked separately so a
/// failed candidacy (not an m-ary sub-semihypergroup) is distinguishable
/// from a failed absorption condition.
struct IdealReport {
    SubsetMask subset;
    bool f_closed = false;
    bool sub_semihyperring = false;
    bool left = false;
    bool right = false;
    bool two_sided = false;
    bool weak_left = false;

    bool kind(IdealKind k) const {
        switch (k) {
            case IdealKind::sub_semihyperring: return sub_semihyperring;
            case IdealKind::left: return left;
            case IdealKind::right: return right;
            case IdealKind::two_sided: return two_sided;
            case IdealKind::weak_left: return weak_left;
        }
        return false;
    }
};

/// R is closed under f (every f-value of an R-tuple stays inside R).
bool is_f_closed(const Structure& s, SubsetMask r);

/// R is an m-ary sub-semihypergroup that is also closed under g.
bool is_sub_semihyperring(const Structure& s, SubsetMask r);

/// Absorption from the left: g(a_1^{n-1}, i) in I for all a over H, i in I.
/// Candidacy (f-closure) is part of the test and failing it returns false.
bool is_left_hyperideal(const Structure& s, SubsetMask i);

/// Absorption from the right: g(i, a_1^{n-1}) in I.
bool is_right_hyperideal(const Structure& s, SubsetMask i);

/// Both left and right.
bool is_hyperideal(const Structure& s, SubsetMask i);

/// A left hyperideal where f(i, x_1^{m-1}) or f(x_1^{m-1}, i) landing inside
/// I forces every x_p into I. Either inclusion triggers the conclusion, and
/// the conclusion requires all tuple entries.
bool is_weak_left_hyperideal(const Structure& s, SubsetMask i);

/// Classify one subset against the whole taxonomy.
IdealReport classify_subset(const Structure& s, SubsetMask subset);

/// All non-empty subsets passing the requested predicate, ascending by mask.
/// The 2^k sweep is capped; exceeding the cap is a resource error.
std::vector<IdealReport> enumerate_hyperideals(const Structure& s, IdealKind kind,
                                               std::uint64_t max_subsets = std::uint64_t{1} << 24,
                                               const SweepOptions& opt = {});

}  // namespace hyperforge
