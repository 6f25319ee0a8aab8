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
#include <memory>
#include <vector>

#include "hyperforge/core.hpp"
#include "hyperforge/sweep.hpp"

namespace hyperforge {

using StructureRef = std::shared_ptr<const Structure>;

/// An element-wise map between two structures. Source and target are shared
/// so a Mapping stays valid on its own (quotients, enumeration results).
struct Mapping {
    StructureRef source;
    StructureRef target;
    std::vector<Element> image;  // image[x] = target element, length source->k()

    Element operator()(Element x) const { return image[static_cast<std::size_t>(x)]; }
};

Mapping identity_mapping(StructureRef s);

/// Elementwise image of a subset under the map.
SubsetMask map_subset(const Mapping& map, SubsetMask a);

/// The f-condition (set equality of the mapped f-value with f' of the mapped
/// tuple) and the g-condition (element equality) hold for every tuple.
/// Arities of source and target must agree.
bool is_homomorphism(const Mapping& map);

/// Same sweep with the f-condition relaxed to inclusion. The g-condition is
/// single-valued on both sides, so inclusion means equality there.
bool is_inclusion_homomorphism(const Mapping& map);

/// Pointwise composition second(first(x)). first.target and second.source
/// must be the same structure.
Mapping compose(const Mapping& first, const Mapping& second);

enum class HomSearchMode { all, first, iso };

/// Exhaustive homomorphism search from source to target.
///
/// Backtracks over partial images with forward constraint checks on fully
/// assigned tuples; every leaf is re-verified with the plain predicate, so
/// results equal brute-force filtering. Results come in lexicographic image
/// order. iso mode keeps only bijections whose inverse is a homomorphism.
/// The search space target_k^source_k is capped.
std::vector<Mapping> enumerate_homomorphisms(StructureRef source, StructureRef target,
                                             HomSearchMode mode = HomSearchMode::all,
                                             std::uint64_t max_maps = 10'000'000,
                                             const SweepOptions& opt = {});

}  // namespace hyperforge
