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

#include <fstream>

#include "doctest.h"

#include "hyperforge/axioms.hpp"
#include "hyperforge/factory.hpp"
#include "hyperforge/io.hpp"

#include "corpus.hpp"

using namespace hyperforge;

namespace {

std::string golden_path(const char* name) {
    return std::string(HYPERFORGE_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("factory") {

TEST_CASE("b_construction builds verified structures") {
    const Structure b5 = b_construction(5, 3);
    REQUIRE(b5.checked_semihyperring().has_value());
    CHECK(*b5.checked_semihyperring());
    CHECK(check_mn_semihyperring(b5).holds);

    CHECK(b_construction(1, 2).k() == 1);
    CHECK(check_mn_semihyperring(b_construction(2, 2)).holds);

    // Saturating finitization passes the axioms as well.
    const Structure sat = b_construction(4, 2, false);
    CHECK(check_mn_semihyperring(sat).holds);
    std::vector<Element> t{2, 3};
    CHECK(eval_g(sat, t) == 3);  // min(6, 3)
}

TEST_CASE("semiring lifts verify their axioms") {
    const Structure boolean = semiring_lift(corpus::bool_or(), corpus::bool_and());
    REQUIRE(boolean.checked_semihyperring().has_value());
    CHECK(*boolean.checked_semihyperring());

    const Structure z3 = semiring_lift(corpus::zmod_add(3), corpus::zmod_mul(3));
    CHECK(check_mn_semihyperring(z3).holds);

    const Structure trivial = semiring_lift(corpus::zmod_add(1), corpus::zmod_mul(1));
    CHECK(check_mn_semihyperring(trivial).holds);

    CHECK_THROWS_AS(semiring_lift(corpus::zmod_add(2), corpus::zmod_mul(3)), DomainError);
}

TEST_CASE("cached verdicts match fresh recomputation") {
    for (const auto& [name, s] : corpus::small()) {
        if (!s->checked_semihyperring().has_value()) continue;
        INFO(name);
        CHECK(*s->checked_semihyperring() == check_mn_semihyperring(*s).holds);
    }
}

TEST_CASE("random structures are deterministic from the seed") {
    const Structure a = random_structure(42, 3, 2, 2, Grade(1, 2));
    const Structure b = random_structure(42, 3, 2, 2, Grade(1, 2));
    CHECK(a == b);
    const Structure c = random_structure(43, 3, 2, 2, Grade(1, 2));
    CHECK_FALSE(a == c);

    // density 1 fills every entry
    const Structure full = random_structure(7, 3, 2, 2, grade_one());
    for (std::size_t i = 0; i < full.f().size(); ++i)
        CHECK(full.f().at_flat(i) == SubsetMask::full(3));

    CHECK_THROWS_AS(random_structure(1, 3, 2, 2, grade_zero()), DomainError);
}

TEST_CASE("seed-42 structure matches its frozen golden file") {
    const Structure s = random_structure(42, 3, 2, 2, Grade(1, 2));
    std::ifstream in(golden_path("random_s42_k3.json"));
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(structure_to_json(s).dump() + "\n" == text);
}

TEST_CASE("model search at k=1 and k=2") {
    ModelQuery full;
    full.semihypergroup = true;
    full.semigroup = true;
    full.distributive = true;

    const auto trivial = search_models(1, 2, 2, full);
    CHECK(trivial.size() == 1);

    // The raw k=2 space is (2^2-1)^4 * 2^4 = 1296 tables.
    const auto models = search_models(2, 2, 2, full, 10'000, /*canonicalize=*/false);
    REQUIRE_FALSE(models.empty());
    bool has_b2 = false;
    for (const auto& s : models) has_b2 = has_b2 || s == b_construction(2, 2);
    CHECK(has_b2);
    for (const auto& s : models) CHECK(check_mn_semihyperring(s).holds);
}

TEST_CASE("canonicalization keeps exactly the orbit minima") {
    ModelQuery full;
    full.semihypergroup = true;
    full.semigroup = true;
    full.distributive = true;
    const auto all = search_models(2, 2, 2, full, 10'000, false);
    const auto canon = search_models(2, 2, 2, full, 10'000, true);
    CHECK(canon.size() < all.size());

    // Expanding the canonical set by both relabelings recovers the full set.
    std::vector<Structure> expanded;
    for (const auto& s : canon) {
        expanded.push_back(s);
        const Structure swapped = relabel(s, {1, 0});
        if (!(swapped == s)) expanded.push_back(swapped);
    }
    REQUIRE(expanded.size() == all.size());
    for (const auto& s : all) {
        bool found = false;
        for (const auto& e : expanded) found = found || e == s;
        CHECK(found);
    }
}

TEST_CASE("strictly weak distributive models exist at k=2") {
    ModelQuery q;
    q.semihypergroup = true;
    q.semigroup = true;
    q.weak_distributive = true;
    q.distributive = false;
    const auto strict = search_models(2, 2, 2, q, 10'000);
    REQUIRE_FALSE(strict.empty());
    for (const auto& s : strict) {
        CHECK(check_weak_distributive(s).holds);
        CHECK_FALSE(check_distributive(s).holds);
    }

    // The committed witness is one of them.
    const Structure golden = load_structure_file(golden_path("weak_not_dist_k2.json"));
    bool found = false;
    for (const auto& s : strict) found = found || s == golden;
    CHECK(found);
}

TEST_CASE("search space cap") {
    CHECK_THROWS_AS(search_models(2, 2, 2, ModelQuery{}, 100), ResourceError);
}

TEST_CASE("relabel rejects non-permutations") {
    const auto s = corpus::b(3, 2);
    CHECK_THROWS_AS(relabel(*s, {0, 0, 1}), DomainError);
    CHECK_THROWS_AS(relabel(*s, {0, 1}), DomainError);
    CHECK(relabel(relabel(*s, {1, 2, 0}), {2, 0, 1}) == *s);  // inverse round-trip
}

}  // TEST_SUITE
