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
#include <optional>
#include <vector>

#include "hyperforge/core.hpp"
#include "hyperforge/rational.hpp"

namespace hyperforge {

/// SplitMix64 (Steele, Lea, Flood 2014). The algorithm identity is part of
/// the contract: golden files generated from a seed must be reproducible by
/// any implementation of the same generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Independent child stream seeded from this one.
    SplitMix64 split() { return SplitMix64(next()); }

    /// next() reduced modulo bound (documented as-is; the reduction bias is
    /// irrelevant at desk scale but golden files depend on the exact formula).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// The pair-forming hyperstructure over residues: f(x,y) = {x,y} and g the
/// n-ary product, finitized either by reduction mod k (modulus_g = true) or
/// by saturation at k-1. Both finitizations pass the full axiom conjunction,
/// which is checked at construction when the sweep is desk-sized.
Structure b_construction(int k, int n, bool modulus_g = true);

/// Lift of a crisp semiring (add, mul) by the pair hyperoperation:
/// f(x,y) = {x,y}, g = mul. The addition table fixes the semiring being
/// lifted but does not enter the tables. Axiom checks run at construction.
Structure semiring_lift(const OpTable& add_table, const OpTable& mul_table);

/// Deterministic-from-seed random tables: each f-entry includes each element
/// with probability density (one forced uniform pick if the draw is empty),
/// g-entries uniform. Stream layout: base.split() for f, then base.split()
/// for g; f draws one word per (entry, element) plus one per forced pick;
/// g draws one word per entry. No axiom guarantees.
Structure random_structure(std::uint64_t seed, int k, int m, int n, const Grade& density);

/// Tri-state axiom requirements for model search: unset = don't care.
struct ModelQuery {
    std::optional<bool> semihypergroup;
    std::optional<bool> semigroup;
    std::optional<bool> distributive;
    std::optional<bool> weak_distributive;
};

/// Exhaustive sweep of all (f, g) tables over k elements matching the query,
/// in ascending table-encoding order. With canonicalize on, only structures
/// that are lexicographically least under element relabeling survive.
/// The raw search space is capped before symmetry pruning.
std::vector<Structure> search_models(int k, int m, int n, const ModelQuery& query,
                                     std::uint64_t max_candidates = 10'000'000,
                                     bool canonicalize = true);

/// The structure with elements renamed by perm (perm[old] = new).
Structure relabel(const Structure& s, const std::vector<Element>& perm);

}  // namespace hyperforge
