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

#include "hyperforge/core.hpp"

#include <string>

namespace hyperforge {

namespace {

void require_universe(int k) {
    if (k < 1 || k > kMaxUniverse)
        throw DomainError("universe size k must be in [1, " + std::to_string(kMaxUniverse) +
                          "], got " + std::to_string(k));
}

void require_arity(int arity) {
    if (arity < 2 || arity > kMaxArity)
        throw DomainError("arity must lie in [2, " + std::to_string(kMaxArity) + "], got " +
                          std::to_string(arity));
}

}  // namespace

std::size_t table_size(int k, int arity) {
    require_universe(k);
    if (arity < 1) throw DomainError("arity must be positive");
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) {
        if (n > kMaxTableEntries / static_cast<std::size_t>(k))
            throw DomainError("table size k^arity exceeds the dense-table cap");
        n *= static_cast<std::size_t>(k);
    }
    return n;
}

std::size_t tuple_index(std::span<const Element> tuple, int k) {
    require_universe(k);
    std::size_t idx = 0;
    for (Element x : tuple) {
        if (x < 0 || x >= k)
            throw DomainError("tuple element " + std::to_string(x) + " out of range [0, " +
                              std::to_string(k) + ")");
        idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(x);
    }
    return idx;
}

void tuple_decode(std::size_t index, int k, std::span<Element> out) {
    require_universe(k);
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Element>(index % static_cast<std::size_t>(k));
        index /= static_cast<std::size_t>(k);
    }
    if (index != 0) throw DomainError("tuple_decode: index out of range for given length");
}

std::vector<Element> tuple_decode(std::size_t index, int k, int len) {
    std::vector<Element> out(static_cast<std::size_t>(len), 0);
    tuple_decode(index, k, std::span<Element>(out));
    return out;
}

bool next_tuple(std::span<Element> tuple, int k) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (++tuple[i] < k) return true;
        tuple[i] = 0;
    }
    return false;
}

HyperOpTable::HyperOpTable(int k, int arity, std::vector<SubsetMask> table)
    : k_(k), arity_(arity), table_(std::move(table)) {
    require_universe(k);
    require_arity(arity);
    const std::size_t expect = table_size(k, arity);
    if (table_.size() != expect)
        throw ValidationError("hyperoperation table has " + std::to_string(table_.size()) +
                              " entries, expected k^m = " + std::to_string(expect));
    const SubsetMask universe = SubsetMask::full(k);
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i].empty())
            throw ValidationError("hyperoperation entry is empty (f must map into P*(H))", i,
                                  tuple_decode(i, k, arity));
        if (!table_[i].is_subset_of(universe))
            throw ValidationError("hyperoperation entry has elements outside [0, k)", i,
                                  tuple_decode(i, k, arity));
    }
}

SubsetMask HyperOpTable::operator()(std::span<const Element> tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw ArityError("hyperoperation expects " + std::to_string(arity_) +
                         " arguments, got " + std::to_string(tuple.size()));
    return table_[tuple_index(tuple, k_)];
}

OpTable::OpTable(int k, int arity, std::vector<Element> table)
    : k_(k), arity_(arity), table_(std::move(table)) {
    require_universe(k);
    require_arity(arity);
    const std::size_t expect = table_size(k, arity);
    if (table_.size() != expect)
        throw ValidationError("operation table has " + std::to_string(table_.size()) +
                              " entries, expected k^n = " + std::to_string(expect));
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i] < 0 || table_[i] >= k)
            throw ValidationError("operation entry " + std::to_string(table_[i]) +
                                      " out of range [0, k)",
                                  i, tuple_decode(i, k, arity));
    }
}

Element OpTable::operator()(std::span<const Element> tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw ArityError("operation expects " + std::to_string(arity_) + " arguments, got " +
                         std::to_string(tuple.size()));
    return table_[tuple_index(tuple, k_)];
}

Structure::Structure(HyperOpTable f, OpTable g, std::optional<bool> checked_semihyperring)
    : f_(std::move(f)), g_(std::move(g)), checked_semihyperring_(checked_semihyperring) {
    if (f_.k() != g_.k())
        throw ValidationError("f and g are over different universes (k=" + std::to_string(f_.k()) +
                              " vs k=" + std::to_string(g_.k()) + ")");
}

SubsetMask eval_f(const Structure& s, std::span<const Element> tuple) { return s.f()(tuple); }

SubsetMask eval_f_subsets(const Structure& s, std::span<const SubsetMask> args) {
    const int m = s.m();
    if (static_cast<int>(args.size()) != m)
        throw ArityError("eval_f_subsets expects " + std::to_string(m) + " arguments, got " +
                         std::to_string(args.size()));
    for (SubsetMask a : args) {
        if (a.empty()) throw EmptySubsetError("eval_f_subsets: argument subset is empty");
    }

    // Odometer over the Cartesian product of the argument subsets.
    std::vector<std::vector<Element>> choices(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) choices[i] = args[i].to_vector();

    const SubsetMask universe = SubsetMask::full(s.k());
    std::vector<std::size_t> pos(args.size(), 0);
    std::vector<Element> tuple(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) tuple[i] = choices[i][0];

    SubsetMask acc;
    for (;;) {
        acc |= s.f()(tuple);
        if (acc == universe) return acc;  // union cannot grow further
        std::size_t i = args.size();
        for (; i-- > 0;) {
            if (++pos[i] < choices[i].size()) {
                tuple[i] = choices[i][pos[i]];
                break;
            }
            pos[i] = 0;
            tuple[i] = choices[i][0];
            if (i == 0) return acc;
        }
    }
}

SubsetMask eval_f_subset_slot(const Structure& s, std::span<const Element> tuple, int slot,
                              SubsetMask a) {
    const int m = s.m();
    if (static_cast<int>(tuple.size()) != m)
        throw ArityError("eval_f_subset_slot: tuple must have length " + std::to_string(m));
    if (slot < 0 || slot >= m) throw DomainError("eval_f_subset_slot: slot out of range");
    if (a.empty()) throw EmptySubsetError("eval_f_subset_slot: slot subset is empty");

    const int k = s.k();
    std::size_t base = 0;
    std::size_t stride = 1;
    for (int p = 0; p < m; ++p) {
        const Element digit = p == slot ? 0 : tuple[static_cast<std::size_t>(p)];
        if (digit < 0 || digit >= k) throw DomainError("eval_f_subset_slot: element out of range");
        base = base * static_cast<std::size_t>(k) + static_cast<std::size_t>(digit);
        if (p > slot) stride *= static_cast<std::size_t>(k);
    }

    const SubsetMask universe = SubsetMask::full(k);
    SubsetMask acc;
    std::uint64_t bits = a.raw();
    while (bits != 0) {
        const auto z = static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        acc |= s.f().at_flat(base + z * stride);
        if (acc == universe) break;
    }
    return acc;
}

Element eval_g(const Structure& s, std::span<const Element> tuple) { return s.g()(tuple); }

SubsetMask eval_g_subset(const Structure& s, std::span<const Element> prefix, SubsetMask a,
                         std::span<const Element> suffix) {
    const int n = s.n();
    if (static_cast<int>(prefix.size() + 1 + suffix.size()) != n)
        throw ArityError("eval_g_subset: prefix + slot + suffix must have length " +
                         std::to_string(n));
    if (a.empty()) throw EmptySubsetError("eval_g_subset: slot subset is empty");

    // Strided scan, as in eval_f_subset_slot.
    const int k = s.k();
    std::size_t base = 0;
    for (const Element x : prefix) {
        if (x < 0 || x >= k) throw DomainError("eval_g_subset: element out of range");
        base = base * static_cast<std::size_t>(k) + static_cast<std::size_t>(x);
    }
    base *= static_cast<std::size_t>(k);
    std::size_t stride = 1;
    for (const Element x : suffix) {
        if (x < 0 || x >= k) throw DomainError("eval_g_subset: element out of range");
        base = base * static_cast<std::size_t>(k) + static_cast<std::size_t>(x);
        stride *= static_cast<std::size_t>(k);
    }

    SubsetMask image;
    std::uint64_t bits = a.raw();
    while (bits != 0) {
        const auto z = static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        image.insert(s.g().at_flat(base + z * stride));
    }
    return image;
}

}  // namespace hyperforge
