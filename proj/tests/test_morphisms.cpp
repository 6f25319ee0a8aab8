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

#include <numeric>

#include "doctest.h"

#include "hyperforge/factory.hpp"
#include "hyperforge/morphisms.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace hyperforge;

namespace {

/// Target with every f-value enlarged by one extra element; the identity map
/// into it is an inclusion homomorphism but not a homomorphism.
corpus::StructureRef widened(const Structure& s) {
    auto f = HyperOpTable::build(s.k(), s.m(), [&](std::span<const Element> t) {
        SubsetMask v = eval_f(s, t);
        v.insert((v.first() + 1) % s.k());
        return v;
    });
    return corpus::share(Structure(std::move(f), s.g()));
}

}  // namespace

TEST_SUITE("morphisms") {

TEST_CASE("identity and constant maps") {
    for (const auto& [name, s] : corpus::small()) {
        INFO(name);
        CHECK(is_homomorphism(identity_mapping(s)));
    }

    // Constant map to an idempotent absorbing element of the pair structure:
    // f(0,0) = {0} and g(0,0) = 0.
    const auto s = corpus::b(4, 2);
    Mapping to_zero{s, s, std::vector<Element>(4, 0)};
    CHECK(is_homomorphism(to_zero));
}

TEST_CASE("shift map breaks the g-condition") {
    const auto s = corpus::b(5, 2);
    std::vector<Element> image{1, 2, 3, 4, 0};
    Mapping shift{s, s, image};
    CHECK_FALSE(is_homomorphism(shift));
    const auto brute = oracle::all_homomorphisms(*s, *s);
    CHECK(std::find(brute.begin(), brute.end(), std::vector<int>(image.begin(), image.end())) ==
          brute.end());
}

TEST_CASE("inclusion homomorphisms relax the f-condition") {
    const auto src = corpus::crisp_zmod(3);
    const auto tgt = widened(*src);
    Mapping id{src, tgt, {0, 1, 2}};
    CHECK(is_inclusion_homomorphism(id));
    CHECK_FALSE(is_homomorphism(id));

    // Every homomorphism is an inclusion homomorphism.
    for (const auto& [name, s] : corpus::small()) {
        if (s->k() > 3) continue;
        for (const auto& image : oracle::all_homomorphisms(*s, *s)) {
            Mapping map{s, s, std::vector<Element>(image.begin(), image.end())};
            INFO(name);
            CHECK(is_inclusion_homomorphism(map));
        }
    }

    // And a genuinely non-inclusion map exists: shrink rather than widen.
    Mapping backwards{tgt, src, {0, 1, 2}};
    CHECK_FALSE(is_inclusion_homomorphism(backwards));
}

TEST_CASE("composition") {
    const auto s = corpus::b(3, 2);
    const auto id = identity_mapping(s);
    const auto composed = compose(id, id);
    CHECK(composed.image == id.image);

    // Verified homomorphism chain stays a homomorphism.
    const auto homs = enumerate_homomorphisms(s, s);
    REQUIRE(homs.size() >= 2);
    for (const auto& first : homs)
        for (const auto& second : homs) CHECK(is_homomorphism(compose(first, second)));
    for (const auto& h : homs) CHECK(compose(h, id).image == h.image);

    const auto other = corpus::b(2, 2);
    CHECK_THROWS_AS(compose(identity_mapping(other), id), DomainError);
}

TEST_CASE("enumeration equals brute force") {
    const auto one = corpus::b(1, 2);
    CHECK(enumerate_homomorphisms(one, one).size() == 1);

    const auto b2 = corpus::b(2, 2);
    const auto found = enumerate_homomorphisms(b2, b2);
    auto has_image = [&](std::vector<Element> v) {
        for (const auto& m : found)
            if (m.image == v) return true;
        return false;
    };
    CHECK(has_image({0, 1}));  // identity
    CHECK(has_image({0, 0}));  // constant to 0

    for (const auto& [sname, src] : corpus::small()) {
        if (src->k() > 3) continue;
        for (const auto& [tname, tgt] : corpus::small()) {
            if (tgt->k() > 3 || src->m() != tgt->m() || src->n() != tgt->n()) continue;
            const auto fast = enumerate_homomorphisms(src, tgt);
            const auto brute = oracle::all_homomorphisms(*src, *tgt);
            INFO(sname, " -> ", tname);
            REQUIRE(fast.size() == brute.size());
            for (std::size_t i = 0; i < fast.size(); ++i)
                CHECK(std::vector<int>(fast[i].image.begin(), fast[i].image.end()) == brute[i]);
        }
    }
}

TEST_CASE("backtracker agrees with brute force above the plain-enumeration cutoff") {
    // k = 4 takes the pruned path; cross-check against the k^k filter.
    const auto s = corpus::b(4, 2);
    const auto fast = enumerate_homomorphisms(s, s);
    const auto brute = oracle::all_homomorphisms(*s, *s);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
        CHECK(std::vector<int>(fast[i].image.begin(), fast[i].image.end()) == brute[i]);
}

TEST_CASE("first mode returns the lexicographically least homomorphism") {
    const auto s = corpus::b(3, 2);
    const auto first = enumerate_homomorphisms(s, s, HomSearchMode::first);
    const auto all = enumerate_homomorphisms(s, s, HomSearchMode::all);
    REQUIRE(first.size() == 1);
    REQUIRE_FALSE(all.empty());
    CHECK(first[0].image == all[0].image);
}

TEST_CASE("iso mode finds relabelings and closes under inversion") {
    const auto s = corpus::b(3, 2);
    std::vector<Element> perm{2, 0, 1};
    const auto t = corpus::share(relabel(*s, perm));
    const auto isos = enumerate_homomorphisms(s, t, HomSearchMode::iso);
    REQUIRE_FALSE(isos.empty());
    bool found_perm = false;
    for (const auto& iso : isos) {
        found_perm = found_perm || iso.image == perm;
        // inverse is a homomorphism too
        std::vector<Element> inverse(iso.image.size());
        for (std::size_t x = 0; x < iso.image.size(); ++x)
            inverse[static_cast<std::size_t>(iso.image[x])] = static_cast<Element>(x);
        CHECK(is_homomorphism(Mapping{t, s, inverse}));
    }
    CHECK(found_perm);

    // No isomorphisms between different universe sizes.
    CHECK(enumerate_homomorphisms(s, corpus::b(2, 2), HomSearchMode::iso).empty());
}

TEST_CASE("parallel search merges subtree results in order") {
    const auto s = corpus::b(4, 2);
    const auto seq = enumerate_homomorphisms(s, s);
    SweepOptions four{4, false};
    const auto par = enumerate_homomorphisms(s, s, HomSearchMode::all, 10'000'000, four);
    REQUIRE(par.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(par[i].image == seq[i].image);

    const auto iso_seq = enumerate_homomorphisms(s, s, HomSearchMode::iso);
    const auto iso_par = enumerate_homomorphisms(s, s, HomSearchMode::iso, 10'000'000, four);
    REQUIRE(iso_par.size() == iso_seq.size());
    for (std::size_t i = 0; i < iso_seq.size(); ++i) CHECK(iso_par[i].image == iso_seq[i].image);
}

TEST_CASE("search space cap") {
    const auto s = corpus::b(3, 2);
    CHECK_THROWS_AS(enumerate_homomorphisms(s, s, HomSearchMode::all, 10), ResourceError);
}

TEST_CASE("arity mismatch is a domain error") {
    Mapping map{corpus::b(2, 2), corpus::b(2, 3), {0, 1}};
    CHECK_THROWS_AS(is_homomorphism(map), DomainError);
    CHECK_THROWS_AS(enumerate_homomorphisms(corpus::b(2, 2), corpus::b(2, 3)), DomainError);
}

}  // TEST_SUITE
