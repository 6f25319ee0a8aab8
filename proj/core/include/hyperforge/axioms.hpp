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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperforge/core.hpp"
#include "hyperforge/sweep.hpp"

namespace hyperforge {

/// Concrete violation of an axiom, decoded for humans and re-checkable by an
/// independent oracle. Positions are 1-based insertion positions or slots.
struct Witness {
    std::string axiom;
    std::vector<int> positions;
    std::vector<Element> tuple;   // primary offending tuple
    std::vector<Element> outer;   // secondary tuple, when the axiom has one
    SubsetMask lhs;
    SubsetMask rhs;
    std::string note;             // grades and other non-subset detail
};

/// Outcome of one exhaustive axiom check. holds is true iff witnesses is
/// empty; the first witness is always the one with the lowest flat sweep
/// index, independent of job count.
struct AxiomVerdict {
    std::string axiom;
    bool holds = true;
    std::vector<Witness> witnesses;
    std::string note;

    const Witness* witness() const { return witnesses.empty() ? nullptr : &witnesses.front(); }
};

/// The source text writes the idempotency condition with the membership
/// turned around; the membership reading is the type-correct default and the
/// strict singleton reading stays available behind this switch.
enum class IdempotentReading { membership, strict_singleton };

/// Associativity of the m-ary hyperoperation: both nestings agree for every
/// insertion-position pair i < j and every (2m-1)-tuple.
AxiomVerdict check_m_ary_semihypergroup(const Structure& s, const SweepOptions& opt = {});

/// Associativity of the n-ary operation (element equality, no subsets).
AxiomVerdict check_n_ary_semigroup(const Structure& s, const SweepOptions& opt = {});

/// g distributes over f: for every slot, the g-image of an f-value equals f
/// of the per-argument g-images.
AxiomVerdict check_distributive(const Structure& s, const SweepOptions& opt = {});

/// Same sweep as check_distributive with equality relaxed to left-inclusion.
AxiomVerdict check_weak_distributive(const Structure& s, const SweepOptions& opt = {});

/// Conjunction of the three defining axioms, failing with the first witness
/// in fixed order: semihypergroup, semigroup, distributivity.
AxiomVerdict check_mn_semihyperring(const Structure& s, const SweepOptions& opt = {});

/// All e with x in f(e,...,e,x,e,...,e) for every x and every slot.
SubsetMask find_hyperadditive_identities(const Structure& s);

/// All e' with y = g(e',...,e',y,e',...,e') for every y and every slot.
SubsetMask find_multiplicative_identities(const Structure& s);

/// The unique element that is neutral for f (as the singleton {x}) and
/// absorbing for g, or absent. Two distinct candidates are a structural
/// error and throw; uniqueness is checked, not assumed.
std::optional<Element> find_zero(const Structure& s);

/// 0 in f(x_1,...,x_m) forces x_1 = ... = x_m = 0. Vacuously holds (with a
/// note) when the structure has no zero.
AxiomVerdict check_zero_sum_free(const Structure& s, const SweepOptions& opt = {});

/// x in f(x,...,x) for every x (or f(x,...,x) = {x} under the strict reading).
AxiomVerdict check_additively_idempotent(const Structure& s,
                                         IdempotentReading reading = IdempotentReading::membership,
                                         const SweepOptions& opt = {});

/// Binary tables induced by freezing the middle slots to identities:
/// <x,y> = f(x,e,...,e,y) and x*y = g(x,e',...,e',y).
/// e must be a hyperadditive identity and e' a multiplicative identity.
std::pair<HyperOpTable, OpTable> derived_binary_ops(const Structure& s, Element e, Element eprime);

}  // namespace hyperforge
