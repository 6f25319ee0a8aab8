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
#include <vector>

#include "hyperforge/axioms.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/morphisms.hpp"

namespace hyperforge {

/// A partition of the universe [0, k) into classes with contiguous ids.
/// Ids follow first occurrence, so two partitions are equal iff their
/// class arrays are equal.
class EquivRelation {
public:
    /// Normalizing constructor: any labeling collapses to first-occurrence ids.
    explicit EquivRelation(std::vector<int> class_of);

    static EquivRelation identity(int k);
    static EquivRelation universal(int k);

    int k() const { return static_cast<int>(class_of_.size()); }
    int class_count() const { return classes_; }
    int class_id(Element x) const { return class_of_[static_cast<std::size_t>(x)]; }
    bool related(Element a, Element b) const { return class_id(a) == class_id(b); }

    /// Members of one class, as a subset of the universe.
    SubsetMask class_mask(int cid) const { return class_masks_[static_cast<std::size_t>(cid)]; }

    /// Lowest member of one class.
    Element representative(int cid) const { return class_mask(cid).first(); }

    /// The set of class ids met by A, as a mask over [0, class_count).
    SubsetMask class_image(SubsetMask a) const;

    /// Every class of this partition lies inside one class of coarser
    /// (i.e. this <= coarser as relations).
    bool refines(const EquivRelation& coarser) const;

    const std::vector<int>& class_array() const { return class_of_; }

    friend bool operator==(const EquivRelation& a, const EquivRelation& b) {
        return a.class_of_ == b.class_of_;
    }

private:
    std::vector<int> class_of_;
    std::vector<SubsetMask> class_masks_;
    int classes_ = 0;
};

/// The subset lift of the relation: A and B are related iff every member of
/// each has a related member in the other; equivalently, their class images
/// coincide. Both subsets must be non-empty.
bool subsets_related(const EquivRelation& rel, SubsetMask a, SubsetMask b);

/// Compatibility of the partition with f (under the subset lift) and with g.
/// The sweep perturbs one coordinate at a time; transitivity of class-image
/// equality extends it to arbitrary componentwise-related tuples.
AxiomVerdict is_congruence(const Structure& s, const EquivRelation& rel,
                           const SweepOptions& opt = {});

/// Translation compatibility: related x, y stay related after f with a fixed
/// (m-1)-tuple in front, and after g in any slot with fixed other arguments.
/// Implied by is_congruence; kept separate so it can be tested on its own.
AxiomVerdict check_translation_lemma(const Structure& s, const EquivRelation& rel,
                                     const SweepOptions& opt = {});

/// Mixed-sequence compatibility: for every split point, prefixes from one
/// related family and suffixes from another still give related f-values.
AxiomVerdict check_mixed_congruence(const Structure& s, const EquivRelation& rel,
                                    const SweepOptions& opt = {});

/// A congruence all of whose f-values are class-pure (each f(tuple) lies in
/// a single class), so related input tuples have all outputs mutually
/// related.
bool is_strongly_regular(const Structure& s, const EquivRelation& rel);

/// The quotient structure: universe = classes, f lifted to class images,
/// g to the class of the representative value. Requires a congruence;
/// independence from representatives is cross-checked during construction.
Structure quotient(const Structure& s, const EquivRelation& rel);

/// The natural map onto the quotient, carrying its own copy of both
/// structures.
Mapping natural_map(StructureRef s, const EquivRelation& rel);

/// The induced partition sigma/rho of the rho-classes; requires rho to
/// refine sigma.
EquivRelation relation_quotient(const EquivRelation& sigma, const EquivRelation& rho,
                                const Structure& s);

/// (H/rho) / (sigma/rho) is isomorphic to H/sigma: checked by isomorphism
/// search between the two constructions.
bool check_double_quotient_iso(const Structure& s, const EquivRelation& sigma,
                               const EquivRelation& rho);

/// All congruences of s, in restricted-growth-string order (universal
/// partition first, identity last). The number of partitions examined is
/// capped.
std::vector<EquivRelation> enumerate_congruences(const Structure& s,
                                                 std::uint64_t max_partitions = 1'000'000,
                                                 const SweepOptions& opt = {});

/// All set partitions of [0, k) as restricted growth strings, in
/// lexicographic order. Exposed for tests and partition tooling.
std::vector<std::vector<int>> all_partitions(int k, std::uint64_t max_partitions);

}  // namespace hyperforge
