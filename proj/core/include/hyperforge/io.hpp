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

#include <string>

#include <nlohmann/json.hpp>

#include "hyperforge/axioms.hpp"
#include "hyperforge/congruence.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/fuzzy.hpp"
#include "hyperforge/ideals.hpp"
#include "hyperforge/morphisms.hpp"

namespace hyperforge {

/// All emitters use ordered JSON with a fixed field order so identical
/// inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

// Structure files:
// { "k": int, "m": int, "n": int,
//   "f": [[int, ...], ...],   k^m rows in row-major tuple order, sorted, non-empty
//   "g": [int, ...] }         k^n entries in row-major tuple order
Json structure_to_json(const Structure& s);
Structure structure_from_json(const nlohmann::json& j);
Structure load_structure_file(const std::string& path);

Json subset_to_json(SubsetMask mask);
Json witness_to_json(const Witness& w);
Json verdict_to_json(const AxiomVerdict& v);
Json ideal_report_to_json(const IdealReport& r);

Json partition_to_json(const EquivRelation& rel);
/// Accepts a bare class-id array or { "classes": [...] }.
EquivRelation partition_from_json(const nlohmann::json& j);

Json mapping_to_json(const Mapping& map);

/// Fuzzy subsets serialize as arrays of "p/q" strings.
Json fuzzy_subset_to_json(const FuzzySubset& mu);
FuzzySubset fuzzy_subset_from_json(const nlohmann::json& j);

// Fuzzy structure files:
// { "k": int, "m": int, "n": int,
//   "mu_f": [{ "tuple": [...], "out": int, "grade": "p/q" }, ...],
//   "mu_g": [...] }           sparse records; omitted pairs have grade 0
Json fuzzy_structure_to_json(const FuzzyHyperStructure& fs);
FuzzyHyperStructure fuzzy_structure_from_json(const nlohmann::json& j);
FuzzyHyperStructure load_fuzzy_structure_file(const std::string& path);

}  // namespace hyperforge
