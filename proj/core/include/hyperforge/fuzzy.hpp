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

#include <vector>

#include "hyperforge/axioms.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/rational.hpp"

namespace hyperforge {

/// A fuzzy subset: one grade in [0,1] per element of the universe.
struct FuzzySubset {
    std::vector<Grade> grade;

    explicit FuzzySubset(std::vector<Grade> grades);
    int k() const { return static_cast<int>(grade.size()); }
    const Grade& operator[](Element x) const { return grade[static_cast<std::size_t>(x)]; }

    /// Distinct grade values in ascending order.
    std::vector<Grade> distinct_grades() const;
    Grade max_grade() const;
};

/// { x : mu(x) >= t }, possibly empty. t must lie in [0,1].
SubsetMask level_subset(const FuzzySubset& mu, const Grade& t);

/// The f-inequality min grade of the arguments <= min grade over the
/// f-value, plus the g-inequality with min over the argument grades.
AxiomVerdict is_fuzzy_sub_semihyperring(const Structure& s, const FuzzySubset& mu);

/// Which g slot-inequalities a fuzzy ideal check enforces. The last slot
/// mirrors crisp left absorption, the first mirrors right absorption.
enum class FuzzyIdealSide { left, right, two_sided };

/// The f-inequality plus every g slot-inequality mu(x_i) <= mu(g(x_1^n)).
AxiomVerdict is_fuzzy_hyperideal(const Structure& s, const FuzzySubset& mu);

/// One-sided variants used by the two-valued equivalence.
AxiomVerdict is_fuzzy_left_hyperideal(const Structure& s, const FuzzySubset& mu);
AxiomVerdict is_fuzzy_right_hyperideal(const Structure& s, const FuzzySubset& mu);

/// mu(x) = s inside I, t outside, for 0 <= t < s <= 1 and non-empty I.
FuzzySubset two_valued_fuzzy(SubsetMask ideal, const Grade& s, const Grade& t, int k);

/// The level-set biconditional for this (structure, mu) instance:
/// is_fuzzy_hyperideal agrees with "every non-empty level subset is a
/// hyperideal". Only the distinct grades of mu (plus 0) need testing; levels
/// are constant between consecutive grades.
bool check_level_theorem(const Structure& s, const FuzzySubset& mu);

/// Reading of the upper bound t_0 the threshold equivalence sweeps up to.
enum class UpperBoundReading { max_grade, codomain_one };

/// The three-way equivalence: fuzzy hyperideal, every non-empty level subset
/// a hyperideal, every level subset with t in [0, t_0] a hyperideal.
/// Returns true iff all three statements evaluate identically.
bool threshold_corollary(const Structure& s, const FuzzySubset& mu,
                         UpperBoundReading reading = UpperBoundReading::max_grade);

/// A fuzzy structure: graded output distributions for f and g. Every
/// f-distribution has non-empty support; every g-distribution has exactly
/// one supported output.
class FuzzyHyperStructure {
public:
    /// mu_f has k^m * k grades (tuple-major, output minor); mu_g has k^n * k.
    FuzzyHyperStructure(int k, int m, int n, std::vector<Grade> mu_f, std::vector<Grade> mu_g);

    /// Characteristic lift of a crisp structure: supported entries get the
    /// given grade, everything else 0.
    static FuzzyHyperStructure lift(const Structure& s, const Grade& support_grade = Grade(1));

    int k() const { return k_; }
    int m() const { return m_; }
    int n() const { return n_; }

    const Grade& f_grade(std::size_t tuple_flat, Element z) const {
        return mu_f_[tuple_flat * static_cast<std::size_t>(k_) + static_cast<std::size_t>(z)];
    }
    const Grade& g_grade(std::size_t tuple_flat, Element z) const {
        return mu_g_[tuple_flat * static_cast<std::size_t>(k_) + static_cast<std::size_t>(z)];
    }

    const std::vector<Grade>& f_grades() const { return mu_f_; }
    const std::vector<Grade>& g_grades() const { return mu_g_; }

private:
    int k_, m_, n_;
    std::vector<Grade> mu_f_;
    std::vector<Grade> mu_g_;
};

/// Strict-positive support collapse: f(tuple) = supported outputs, g(tuple)
/// = the unique supported output.
Structure associated_structure(const FuzzyHyperStructure& fs);

/// Grade inequality in both operations: the source grade of every
/// (tuple, output) pair is at most the target grade of its image.
bool is_fuzzy_homomorphism(const FuzzyHyperStructure& src, const FuzzyHyperStructure& tgt,
                           const std::vector<Element>& image);

/// The map, required to be a fuzzy homomorphism, is an inclusion
/// homomorphism of the associated structures. The grade inequality yields
/// support inclusion only, so inclusion (not equality) is what is asserted.
bool check_fuzzy_to_crisp_hom(const FuzzyHyperStructure& src, const FuzzyHyperStructure& tgt,
                              const std::vector<Element>& image);

}  // namespace hyperforge
