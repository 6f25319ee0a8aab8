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

// Shared corpus of small structures. Everything is built through core table
// builders or the factory, never from hand-typed flat arrays.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperforge/core.hpp"
#include "hyperforge/factory.hpp"
#include "hyperforge/morphisms.hpp"

namespace corpus {

using hyperforge::Element;
using hyperforge::HyperOpTable;
using hyperforge::OpTable;
using hyperforge::Structure;
using hyperforge::StructureRef;
using hyperforge::SubsetMask;

inline StructureRef share(Structure s) { return std::make_shared<const Structure>(std::move(s)); }

inline StructureRef b(int k, int n) { return share(hyperforge::b_construction(k, n)); }

/// Crisp modular semiring embedded as a structure: f(x,y) = {x+y}, g = xy.
inline StructureRef crisp_zmod(int q) {
    auto f = HyperOpTable::build(q, 2, [q](std::span<const Element> t) {
        return SubsetMask::single((t[0] + t[1]) % q);
    });
    auto g = OpTable::build(q, 2, [q](std::span<const Element> t) {
        return Element((t[0] * t[1]) % q);
    });
    return share(Structure(std::move(f), std::move(g)));
}

inline OpTable zmod_add(int q) {
    return OpTable::build(q, 2,
                          [q](std::span<const Element> t) { return Element((t[0] + t[1]) % q); });
}

inline OpTable zmod_mul(int q) {
    return OpTable::build(q, 2,
                          [q](std::span<const Element> t) { return Element((t[0] * t[1]) % q); });
}

inline OpTable bool_or() {
    return OpTable::build(2, 2, [](std::span<const Element> t) { return Element(t[0] | t[1]); });
}

inline OpTable bool_and() {
    return OpTable::build(2, 2, [](std::span<const Element> t) { return Element(t[0] & t[1]); });
}

inline StructureRef bool_lift() { return share(hyperforge::semiring_lift(bool_or(), bool_and())); }

inline StructureRef zmod_lift(int q) {
    return share(hyperforge::semiring_lift(zmod_add(q), zmod_mul(q)));
}

/// Total hyperoperation with modular product: weak distributive, not
/// distributive for k >= 2.
inline StructureRef total_times(int k, int n) {
    auto f = HyperOpTable::build(k, 2, [k](std::span<const Element>) {
        return SubsetMask::full(k);
    });
    auto g = OpTable::build(k, n, [k](std::span<const Element> t) {
        std::uint64_t p = 1;
        for (Element x : t) p = p * static_cast<std::uint64_t>(x) % static_cast<std::uint64_t>(k);
        return static_cast<Element>(p);
    });
    return share(Structure(std::move(f), std::move(g)));
}

/// Boolean implication as a singleton-valued f: not associative at k = 2.
inline StructureRef nonassoc_k2() {
    auto f = HyperOpTable::build(2, 2, [](std::span<const Element> t) {
        return SubsetMask::single((1 - t[0]) | t[1]);
    });
    auto g = OpTable::build(2, 2, [](std::span<const Element> t) {
        return Element((t[0] & t[1]));
    });
    return share(Structure(std::move(f), std::move(g)));
}

/// k=2, m=n=3, crafted so both elements satisfy the displayed zero
/// conditions; zero detection must flag this instead of picking one.
inline StructureRef two_zero_k2() {
    auto f = HyperOpTable::build(2, 3, [](std::span<const Element> t) {
        if (t[0] == t[1]) return SubsetMask::single(t[2]);
        if (t[1] == t[2]) return SubsetMask::single(t[0]);
        return SubsetMask::single(0);
    });
    auto g = OpTable::build(2, 3, [](std::span<const Element> t) {
        if (t[0] == t[1]) return t[0];
        if (t[1] == t[2]) return t[1];
        return Element(0);
    });
    return share(Structure(std::move(f), std::move(g)));
}

/// Parity-pure f-values over Z_4: f(x,y) = {x+y, x+y+2}, g = product. The
/// parity partition is a strongly regular congruence here.
inline StructureRef parity_pure_z4() {
    auto f = HyperOpTable::build(4, 2, [](std::span<const Element> t) {
        const Element base = (t[0] + t[1]) % 4;
        return SubsetMask::single(base) | SubsetMask::single((base + 2) % 4);
    });
    return share(Structure(std::move(f), zmod_mul(4)));
}

struct Named {
    std::string name;
    StructureRef s;
};

/// Structures with k <= 4 for exhaustive 2^k and Bell(k) sweeps.
inline const std::vector<Named>& small() {
    static const std::vector<Named> corpus = {
        {"b1n2", b(1, 2)},          {"b2n2", b(2, 2)},
        {"b3n2", b(3, 2)},          {"b4n2", b(4, 2)},
        {"b2n3", b(2, 3)},          {"b3n3", b(3, 3)},
        {"b4n3", b(4, 3)},          {"b4n2_sat", share(hyperforge::b_construction(4, 2, false))},
        {"crisp_z2", crisp_zmod(2)}, {"crisp_z3", crisp_zmod(3)},
        {"crisp_z4", crisp_zmod(4)}, {"bool_lift", bool_lift()},
        {"z3_lift", zmod_lift(3)},  {"total2", total_times(2, 2)},
        {"total3", total_times(3, 2)}, {"parity_pure", parity_pure_z4()},
        {"nonassoc", nonassoc_k2()},
    };
    return corpus;
}

}  // namespace corpus
