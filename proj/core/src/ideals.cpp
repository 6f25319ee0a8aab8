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

#include "hyperforge/ideals.hpp"

#include <string>

namespace hyperforge {

namespace {

void require_nonempty(SubsetMask r, const char* who) {
    if (r.empty()) throw DomainError(std::string(who) + ": subset must be non-empty");
}

/// Visit all tuples of the given length drawn from the members of r.
/// Returns false as soon as fn does.
template <typename Fn>
bool all_tuples_from(SubsetMask r, int len, Fn&& fn) {
    const auto members = r.to_vector();
    std::vector<std::size_t> pos(static_cast<std::size_t>(len), 0);
    std::vector<Element> tuple(static_cast<std::size_t>(len), members[0]);
    for (;;) {
        if (!fn(std::span<const Element>(tuple))) return false;
        std::size_t i = pos.size();
        for (; i-- > 0;) {
            if (++pos[i] < members.size()) {
                tuple[i] = members[pos[i]];
                break;
            }
            pos[i] = 0;
            tuple[i] = members[0];
            if (i == 0) return true;
        }
    }
}

/// Absorption with the ideal member in one fixed slot (0-based) and all
/// other slots ranging over H.
bool absorbs_in_slot(const Structure& s, SubsetMask ideal, int slot) {
    const int k = s.k();
    const int n = s.n();
    std::vector<Element> outer(static_cast<std::size_t>(n - 1), 0);
    std::vector<Element> tuple(static_cast<std::size_t>(n));
    do {
        std::copy(outer.begin(), outer.begin() + slot, tuple.begin());
        std::copy(outer.begin() + slot, outer.end(), tuple.begin() + slot + 1);
        bool ok = true;
        ideal.for_each([&](Element i) {
            tuple[static_cast<std::size_t>(slot)] = i;
            if (!ideal.contains(eval_g(s, tuple))) ok = false;
        });
        if (!ok) return false;
    } while (next_tuple(std::span<Element>(outer), k));
    return true;
}

}  // namespace

bool is_f_closed(const Structure& s, SubsetMask r) {
    require_nonempty(r, "is_f_closed");
    return all_tuples_from(r, s.m(),
                           [&](std::span<const Element> t) { return eval_f(s, t).is_subset_of(r); });
}

bool is_sub_semihyperring(const Structure& s, SubsetMask r) {
    require_nonempty(r, "is_sub_semihyperring");
    if (!is_f_closed(s, r)) return false;
    return all_tuples_from(r, s.n(),
                           [&](std::span<const Element> t) { return r.contains(eval_g(s, t)); });
}

bool is_left_hyperideal(const Structure& s, SubsetMask i) {
    require_nonempty(i, "is_left_hyperideal");
    if (!is_f_closed(s, i)) return false;
    return absorbs_in_slot(s, i, s.n() - 1);
}

bool is_right_hyperideal(const Structure& s, SubsetMask i) {
    require_nonempty(i, "is_right_hyperideal");
    if (!is_f_closed(s, i)) return false;
    return absorbs_in_slot(s, i, 0);
}

bool is_hyperideal(const Structure& s, SubsetMask i) {
    return is_left_hyperideal(s, i) && is_right_hyperideal(s, i);
}

bool is_weak_left_hyperideal(const Structure& s, SubsetMask i) {
    if (!is_left_hyperideal(s, i)) return false;

    const int k = s.k();
    const int m = s.m();
    std::vector<Element> rest(static_cast<std::size_t>(m - 1), 0);
    std::vector<Element> tuple(static_cast<std::size_t>(m));
    do {
        const bool all_in = std::all_of(rest.begin(), rest.end(),
                                        [&](Element x) { return i.contains(x); });
        if (all_in) continue;  // conclusion already satisfied
        bool ok = true;
        i.for_each([&](Element member) {
            // f(i, x_1^{m-1})
            tuple[0] = member;
            std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
            if (eval_f(s, tuple).is_subset_of(i)) ok = false;
            // f(x_1^{m-1}, i)
            std::copy(rest.begin(), rest.end(), tuple.begin());
            tuple[static_cast<std::size_t>(m - 1)] = member;
            if (eval_f(s, tuple).is_subset_of(i)) ok = false;
        });
        if (!ok) return false;
    } while (next_tuple(std::span<Element>(rest), k));
    return true;
}

IdealReport classify_subset(const Structure& s, SubsetMask subset) {
    require_nonempty(subset, "classify_subset");
    IdealReport r;
    r.subset = subset;
    r.f_closed = is_f_closed(s, subset);
    if (!r.f_closed) return r;
    r.sub_semihyperring = is_sub_semihyperring(s, subset);
    r.left = absorbs_in_slot(s, subset, s.n() - 1);
    r.right = absorbs_in_slot(s, subset, 0);
    r.two_sided = r.left && r.right;
    r.weak_left = r.left && is_weak_left_hyperideal(s, subset);
    return r;
}

std::vector<IdealReport> enumerate_hyperideals(const Structure& s, IdealKind kind,
                                               std::uint64_t max_subsets,
                                               const SweepOptions& opt) {
    const int k = s.k();
    const std::uint64_t count = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    if (count > max_subsets)
        throw ResourceError("enumerate_hyperideals: 2^k - 1 = " + std::to_string(count) +
                            " subsets exceed the cap " + std::to_string(max_subsets) +
                            "; raise the cap or reduce k");

    SweepOptions sweep = opt;
    sweep.collect_all = true;
    const auto hits = scan_hits(static_cast<std::size_t>(count), sweep, [&](std::size_t i) {
        const SubsetMask mask = SubsetMask::from_raw(static_cast<std::uint64_t>(i) + 1);
        return classify_subset(s, mask).kind(kind);
    });

    std::vector<IdealReport> out;
    out.reserve(hits.size());
    for (std::size_t i : hits)
        out.push_back(classify_subset(s, SubsetMask::from_raw(static_cast<std::uint64_t>(i) + 1)));
    return out;
}

}  // namespace hyperforge
