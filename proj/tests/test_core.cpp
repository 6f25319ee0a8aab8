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

#include <vector>

#include "doctest.h"

#include "hyperforge/core.hpp"
#include "hyperforge/factory.hpp"
#include "hyperforge/io.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace hyperforge;

namespace {

SubsetMask random_mask(SplitMix64& rng, int k) {
    SubsetMask m;
    for (Element x = 0; x < k; ++x)
        if (rng.below(2) == 0) m.insert(x);
    if (m.empty()) m.insert(static_cast<Element>(rng.below(static_cast<std::uint64_t>(k))));
    return m;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("tuple_index addresses row-major") {
    std::vector<Element> t00{0, 0};
    CHECK(tuple_index(t00, 3) == 0);
    std::vector<Element> t12{1, 2};
    CHECK(tuple_index(t12, 3) == 5);
    std::vector<Element> t210{2, 1, 0};
    CHECK(tuple_index(t210, 3) == 21);

    std::vector<Element> bad{3, 0};
    CHECK_THROWS_AS(tuple_index(bad, 3), DomainError);
}

TEST_CASE("tuple_index is a bijection for k <= 4, len <= 3") {
    for (int k = 1; k <= 4; ++k)
        for (int len = 1; len <= 3; ++len) {
            const std::size_t total = table_size(k, len);
            for (std::size_t i = 0; i < total; ++i) {
                const auto t = tuple_decode(i, k, len);
                CHECK(tuple_index(t, k) == i);
            }
        }
}

TEST_CASE("eval_f on the pair construction") {
    const auto s = corpus::b(5, 3);
    std::vector<Element> t13{1, 3};
    CHECK(eval_f(*s, t13) == SubsetMask::of({1, 3}));
    std::vector<Element> t22{2, 2};
    CHECK(eval_f(*s, t22) == SubsetMask::of({2}));

    const auto total = corpus::total_times(5, 2);
    CHECK(eval_f(*total, t13) == SubsetMask::full(5));

    std::vector<Element> wrong{1, 2, 3};
    CHECK_THROWS_AS(eval_f(*s, wrong), ArityError);
}

TEST_CASE("eval_f_subsets unions over the Cartesian product") {
    const auto s = corpus::b(5, 3);
    std::vector<SubsetMask> args{SubsetMask::of({0, 1}), SubsetMask::of({2})};
    CHECK(eval_f_subsets(*s, args) == SubsetMask::of({0, 1, 2}));

    const auto total = corpus::total_times(4, 2);
    std::vector<SubsetMask> full_args{SubsetMask::full(4), SubsetMask::full(4)};
    CHECK(eval_f_subsets(*total, full_args) == SubsetMask::full(4));

    std::vector<SubsetMask> with_empty{SubsetMask::of({0}), SubsetMask()};
    CHECK_THROWS_AS(eval_f_subsets(*s, with_empty), EmptySubsetError);
}

TEST_CASE("eval_f_subsets on singletons equals eval_f, exhaustively") {
    for (const auto& [name, s] : corpus::small()) {
        if (s->k() > 4) continue;
        std::vector<Element> t(static_cast<std::size_t>(s->m()), 0);
        do {
            std::vector<SubsetMask> args;
            for (Element x : t) args.push_back(SubsetMask::single(x));
            CHECK(eval_f_subsets(*s, args) == eval_f(*s, t));
        } while (next_tuple(std::span<Element>(t), s->k()));
    }
}

TEST_CASE("eval_f_subsets is monotone and distributes over slot-wise union") {
    SplitMix64 rng(2026);
    const auto s = corpus::b(4, 2);
    for (int round = 0; round < 200; ++round) {
        std::vector<SubsetMask> a{random_mask(rng, 4), random_mask(rng, 4)};
        std::vector<SubsetMask> b{a[0] | random_mask(rng, 4), a[1] | random_mask(rng, 4)};
        CHECK(eval_f_subsets(*s, a).is_subset_of(eval_f_subsets(*s, b)));

        // union in either argument slot
        const SubsetMask extra = random_mask(rng, 4);
        for (int slot = 0; slot < 2; ++slot) {
            auto joined = a;
            auto other = a;
            joined[static_cast<std::size_t>(slot)] = a[static_cast<std::size_t>(slot)] | extra;
            other[static_cast<std::size_t>(slot)] = extra;
            CHECK(eval_f_subsets(*s, joined) ==
                  (eval_f_subsets(*s, a) | eval_f_subsets(*s, other)));
        }
    }
}

TEST_CASE("single-slot subset evaluation agrees with the general extension") {
    SplitMix64 rng(31);
    for (const auto& [name, s] : corpus::small()) {
        if (s->k() > 4) continue;
        const int m = s->m();
        for (int round = 0; round < 30; ++round) {
            std::vector<Element> tuple(static_cast<std::size_t>(m));
            for (auto& x : tuple)
                x = static_cast<Element>(rng.below(static_cast<std::uint64_t>(s->k())));
            const int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            const SubsetMask a = random_mask(rng, s->k());
            std::vector<SubsetMask> args;
            for (int p = 0; p < m; ++p)
                args.push_back(p == slot ? a : SubsetMask::single(tuple[static_cast<std::size_t>(p)]));
            INFO(name);
            CHECK(eval_f_subset_slot(*s, tuple, slot, a) == eval_f_subsets(*s, args));
        }
    }

    const auto s = corpus::b(3, 2);
    std::vector<Element> t{0, 1};
    CHECK_THROWS_AS(eval_f_subset_slot(*s, t, 2, SubsetMask::of({0})), DomainError);
    CHECK_THROWS_AS(eval_f_subset_slot(*s, t, 0, SubsetMask()), EmptySubsetError);
}

TEST_CASE("eval_f_subsets matches the naive union oracle") {
    SplitMix64 rng(7);
    for (const auto& [name, s] : corpus::small()) {
        if (s->k() > 4 || s->m() != 2) continue;
        for (int round = 0; round < 20; ++round) {
            std::vector<SubsetMask> args{random_mask(rng, s->k()), random_mask(rng, s->k())};
            const auto a0 = args[0].to_vector();
            const auto a1 = args[1].to_vector();
            const oracle::Set want = oracle::f_subsets(
                *s, {oracle::Set(a0.begin(), a0.end()), oracle::Set(a1.begin(), a1.end())});
            const auto got = eval_f_subsets(*s, args).to_vector();
            CHECK(oracle::Set(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("eval_g looks up the stored element") {
    const auto s = corpus::b(5, 3);
    std::vector<Element> t{2, 3, 4};
    CHECK(eval_g(*s, t) == 4);  // 24 mod 5
    for (Element x = 0; x < 5; ++x) {
        std::vector<Element> u{1, 1, x};
        CHECK(eval_g(*s, u) == x);
        std::vector<Element> v{0, x, 3};
        CHECK(eval_g(*s, v) == 0);
    }
}

TEST_CASE("eval_g_subset is the elementwise image") {
    const auto s = corpus::b(5, 3);
    std::vector<Element> prefix{2};
    std::vector<Element> suffix{3};
    // {2*1*3, 2*2*3} mod 5
    CHECK(eval_g_subset(*s, prefix, SubsetMask::of({1, 2}), suffix) == SubsetMask::of({1, 2}));
    CHECK(eval_g_subset(*s, prefix, SubsetMask::of({4}), suffix) ==
          SubsetMask::single(eval_g(*s, std::vector<Element>{2, 4, 3})));
    CHECK_THROWS_AS(eval_g_subset(*s, prefix, SubsetMask(), suffix), EmptySubsetError);
    std::vector<Element> long_prefix{2, 2, 2};
    CHECK_THROWS_AS(eval_g_subset(*s, long_prefix, SubsetMask::of({1}), suffix), ArityError);

    // a constant g collapses any slot subset to a singleton
    auto constant = OpTable::build(4, 2, [](std::span<const Element>) { return Element(3); });
    const Structure c(corpus::b(4, 2)->f(), std::move(constant));
    std::vector<Element> no_prefix;
    std::vector<Element> one{1};
    CHECK(eval_g_subset(c, no_prefix, SubsetMask::full(4), one) == SubsetMask::of({3}));
}

TEST_CASE("table constructors enforce the invariants") {
    CHECK_THROWS_AS(HyperOpTable(2, 1, {}), DomainError);  // arity >= 2
    CHECK_THROWS_AS(HyperOpTable(2, 2, std::vector<SubsetMask>(3, SubsetMask::of({0}))),
                    ValidationError);  // wrong length
    // empty entry carries its flat index and decoded tuple
    std::vector<SubsetMask> with_hole(4, SubsetMask::of({0}));
    with_hole[2] = SubsetMask();
    try {
        HyperOpTable(2, 2, with_hole);
        CHECK(false);
    } catch (const ValidationError& e) {
        REQUIRE(e.flat_index.has_value());
        CHECK(*e.flat_index == 2);
        CHECK(e.tuple == std::vector<int>{1, 0});
    }

    CHECK_THROWS_AS(OpTable(2, 2, std::vector<Element>{0, 1, 2, 0}), ValidationError);
    CHECK_THROWS_AS(Structure(HyperOpTable::build(2, 2, [](auto) { return SubsetMask::of({0}); }),
                              corpus::zmod_mul(3)),
                    ValidationError);  // k mismatch
}

TEST_CASE("structure files round-trip through canonical JSON") {
    for (const auto& [name, s] : corpus::small()) {
        const Json j = structure_to_json(*s);
        const Structure back = structure_from_json(j);
        CHECK(back == *s);
        CHECK(structure_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("structure loader reports the offending entry") {
    Json j = structure_to_json(*corpus::b(2, 2));
    j["f"][1] = Json::array();  // empty row
    try {
        structure_from_json(j);
        CHECK(false);
    } catch (const ValidationError& e) {
        REQUIRE(e.flat_index.has_value());
        CHECK(*e.flat_index == 1);
        CHECK(e.tuple == std::vector<int>{0, 1});
    }

    Json bad_g = structure_to_json(*corpus::b(2, 2));
    bad_g["g"][3] = 7;
    CHECK_THROWS_AS(structure_from_json(bad_g), ValidationError);

    Json missing = structure_to_json(*corpus::b(2, 2));
    missing.erase("g");
    CHECK_THROWS_AS(structure_from_json(missing), ValidationError);
}

}  // TEST_SUITE
