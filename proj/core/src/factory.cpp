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

#include "hyperforge/factory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperforge/axioms.hpp"

namespace hyperforge {

namespace {

/// Sweep cost of the full axiom conjunction; construction-time verification
/// is skipped above this budget and the cached verdict stays unset.
constexpr std::uint64_t kVerifyBudget = 20'000'000;

std::uint64_t pow_u64_capped(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && n > cap / base) return cap + 1;
        n *= base;
    }
    return n;
}

std::uint64_t conjunction_sweep_cost(int k, int m, int n) {
    const std::uint64_t cap = ~std::uint64_t{0} >> 1;
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    std::uint64_t cost = pow_u64_capped(kk, 2 * m - 1, cap) * static_cast<std::uint64_t>(m * m);
    cost += pow_u64_capped(kk, 2 * n - 1, cap) * static_cast<std::uint64_t>(n * n);
    cost += pow_u64_capped(kk, m + n - 1, cap) * static_cast<std::uint64_t>(n);
    return cost;
}

std::optional<bool> verify_if_cheap(const Structure& s) {
    if (conjunction_sweep_cost(s.k(), s.m(), s.n()) > kVerifyBudget) return std::nullopt;
    return check_mn_semihyperring(s).holds;
}

Structure with_verdict(HyperOpTable f, OpTable g) {
    Structure probe(f, g);
    return Structure(std::move(f), std::move(g), verify_if_cheap(probe));
}

}  // namespace

Structure b_construction(int k, int n, bool modulus_g) {
    if (n < 2) throw DomainError("b_construction: n must be at least 2");
    auto f = HyperOpTable::build(k, 2, [](std::span<const Element> xy) {
        return SubsetMask::single(xy[0]) | SubsetMask::single(xy[1]);
    });
    auto g = OpTable::build(k, n, [&](std::span<const Element> t) {
        if (modulus_g) {
            std::uint64_t p = 1;
            for (Element x : t) p = (p * static_cast<std::uint64_t>(x)) % static_cast<std::uint64_t>(k);
            return static_cast<Element>(p);
        }
        // Saturating finitization: min of the integer product and k-1.
        if (std::any_of(t.begin(), t.end(), [](Element x) { return x == 0; })) return Element{0};
        std::uint64_t p = 1;
        const auto cap = static_cast<std::uint64_t>(k - 1);
        for (Element x : t) {
            p *= static_cast<std::uint64_t>(x);
            if (p >= cap) return static_cast<Element>(cap);
        }
        return static_cast<Element>(p);
    });
    return with_verdict(std::move(f), std::move(g));
}

Structure semiring_lift(const OpTable& add_table, const OpTable& mul_table) {
    if (add_table.arity() != 2 || mul_table.arity() != 2)
        throw DomainError("semiring_lift: input tables must be binary");
    if (add_table.k() != mul_table.k())
        throw DomainError("semiring_lift: input tables cover different universes");
    auto f = HyperOpTable::build(add_table.k(), 2, [](std::span<const Element> xy) {
        return SubsetMask::single(xy[0]) | SubsetMask::single(xy[1]);
    });
    return with_verdict(std::move(f), mul_table);
}

Structure random_structure(std::uint64_t seed, int k, int m, int n, const Grade& density) {
    if (!(density > grade_zero()) || density > grade_one())
        throw DomainError("random_structure: density must lie in (0, 1]");
    const auto num = static_cast<std::uint64_t>(density.numerator());
    const auto den = static_cast<std::uint64_t>(density.denominator());

    SplitMix64 base(seed);
    SplitMix64 f_rng = base.split();
    SplitMix64 g_rng = base.split();

    auto f = HyperOpTable::build(k, m, [&](std::span<const Element>) {
        SubsetMask mask;
        for (Element z = 0; z < k; ++z)
            if (f_rng.below(den) < num) mask.insert(z);
        if (mask.empty()) mask.insert(static_cast<Element>(f_rng.below(static_cast<std::uint64_t>(k))));
        return mask;
    });
    auto g = OpTable::build(k, n, [&](std::span<const Element>) {
        return static_cast<Element>(g_rng.below(static_cast<std::uint64_t>(k)));
    });
    return Structure(std::move(f), std::move(g));
}

Structure relabel(const Structure& s, const std::vector<Element>& perm) {
    const int k = s.k();
    if (static_cast<int>(perm.size()) != k)
        throw DomainError("relabel: permutation length does not match universe");
    std::vector<Element> inverse(perm.size(), -1);
    for (std::size_t x = 0; x < perm.size(); ++x) {
        const Element y = perm[x];
        if (y < 0 || y >= k || inverse[static_cast<std::size_t>(y)] != -1)
            throw DomainError("relabel: not a permutation of [0, k)");
        inverse[static_cast<std::size_t>(y)] = static_cast<Element>(x);
    }

    std::vector<Element> old_tuple;
    auto f = HyperOpTable::build(k, s.m(), [&](std::span<const Element> u) {
        old_tuple.assign(u.begin(), u.end());
        for (Element& x : old_tuple) x = inverse[static_cast<std::size_t>(x)];
        SubsetMask out;
        eval_f(s, old_tuple).for_each([&](Element z) { out.insert(perm[static_cast<std::size_t>(z)]); });
        return out;
    });
    auto g = OpTable::build(k, s.n(), [&](std::span<const Element> u) {
        old_tuple.assign(u.begin(), u.end());
        for (Element& x : old_tuple) x = inverse[static_cast<std::size_t>(x)];
        return perm[static_cast<std::size_t>(eval_g(s, old_tuple))];
    });
    return Structure(std::move(f), std::move(g));
}

namespace {

std::vector<std::uint64_t> encoding_key(const Structure& s) {
    std::vector<std::uint64_t> key;
    key.reserve(s.f().size() + s.g().size());
    for (std::size_t i = 0; i < s.f().size(); ++i) key.push_back(s.f().at_flat(i).raw());
    for (std::size_t i = 0; i < s.g().size(); ++i)
        key.push_back(static_cast<std::uint64_t>(s.g().at_flat(i)));
    return key;
}

bool is_canonical(const Structure& s) {
    const int k = s.k();
    std::vector<Element> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    const auto key = encoding_key(s);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (encoding_key(relabel(s, perm)) < key) return false;
    }
    return true;
}

bool matches(const Structure& s, const ModelQuery& q) {
    if (q.semihypergroup && check_m_ary_semihypergroup(s).holds != *q.semihypergroup) return false;
    if (q.semigroup && check_n_ary_semigroup(s).holds != *q.semigroup) return false;
    if (q.distributive && check_distributive(s).holds != *q.distributive) return false;
    if (q.weak_distributive && check_weak_distributive(s).holds != *q.weak_distributive)
        return false;
    return true;
}

}  // namespace

std::vector<Structure> search_models(int k, int m, int n, const ModelQuery& query,
                                     std::uint64_t max_candidates, bool canonicalize) {
    const std::size_t f_entries = table_size(k, m);
    const std::size_t g_entries = table_size(k, n);
    const std::uint64_t masks = (std::uint64_t{1} << k) - 1;  // non-empty subsets

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < f_entries; ++i) {
        if (space > max_candidates / masks) space = max_candidates + 1;
        else space *= masks;
        if (space > max_candidates) break;
    }
    for (std::size_t i = 0; space <= max_candidates && i < g_entries; ++i) {
        if (space > max_candidates / static_cast<std::uint64_t>(k)) space = max_candidates + 1;
        else space *= static_cast<std::uint64_t>(k);
    }
    if (space > max_candidates)
        throw ResourceError("search_models: raw table space exceeds cap " +
                            std::to_string(max_candidates));

    std::vector<Structure> found;
    std::vector<std::uint64_t> f_digits(f_entries, 1);  // raw mask values, {0} first
    std::vector<Element> g_digits(g_entries, 0);

    auto advance_g = [&] {
        for (std::size_t i = g_entries; i-- > 0;) {
            if (++g_digits[i] < k) return true;
            g_digits[i] = 0;
        }
        return false;
    };
    auto advance_f = [&] {
        for (std::size_t i = f_entries; i-- > 0;) {
            if (++f_digits[i] <= masks) return true;
            f_digits[i] = 1;
        }
        return false;
    };

    do {
        std::vector<SubsetMask> f_table;
        f_table.reserve(f_entries);
        for (std::uint64_t raw : f_digits) f_table.push_back(SubsetMask::from_raw(raw));
        do {
            Structure s(HyperOpTable(k, m, f_table), OpTable(k, n, g_digits));
            if (!matches(s, query)) continue;
            if (canonicalize && !is_canonical(s)) continue;
            found.push_back(std::move(s));
        } while (advance_g());
    } while (advance_f());

    return found;
}

}  // namespace hyperforge
