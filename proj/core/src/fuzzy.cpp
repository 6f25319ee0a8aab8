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

#include "hyperforge/fuzzy.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "hyperforge/ideals.hpp"
#include "hyperforge/morphisms.hpp"

namespace hyperforge {

FuzzySubset::FuzzySubset(std::vector<Grade> grades) : grade(std::move(grades)) {
    if (grade.empty() || grade.size() > static_cast<std::size_t>(kMaxUniverse))
        throw DomainError("fuzzy subset must cover a universe of 1.." +
                          std::to_string(kMaxUniverse) + " elements");
    for (const Grade& g : grade)
        if (!in_unit_interval(g))
            throw DomainError("fuzzy grade " + format_grade(g) + " outside [0,1]");
}

std::vector<Grade> FuzzySubset::distinct_grades() const {
    std::vector<Grade> out = grade;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Grade FuzzySubset::max_grade() const { return *std::max_element(grade.begin(), grade.end()); }

SubsetMask level_subset(const FuzzySubset& mu, const Grade& t) {
    if (!in_unit_interval(t))
        throw DomainError("level threshold " + format_grade(t) + " outside [0,1]");
    SubsetMask out;
    for (Element x = 0; x < mu.k(); ++x)
        if (mu[x] >= t) out.insert(x);
    return out;
}

namespace {

Grade min_tuple_grade(const FuzzySubset& mu, std::span<const Element> t) {
    Grade lo = mu[t[0]];
    for (std::size_t i = 1; i < t.size(); ++i) lo = std::min(lo, mu[t[i]]);
    return lo;
}

Grade inf_subset_grade(const FuzzySubset& mu, SubsetMask a) {
    Grade lo = grade_one();
    bool any = false;
    a.for_each([&](Element z) {
        lo = any ? std::min(lo, mu[z]) : mu[z];
        any = true;
    });
    return lo;
}

void require_same_universe(const Structure& s, const FuzzySubset& mu, const char* who) {
    if (mu.k() != s.k())
        throw DomainError(std::string(who) + ": fuzzy subset covers k=" + std::to_string(mu.k()) +
                          " but structure has k=" + std::to_string(s.k()));
}

/// f-inequality for every m-tuple; appends a witness and reports failure.
bool fuzzy_f_condition(const Structure& s, const FuzzySubset& mu, AxiomVerdict& v) {
    std::vector<Element> t(static_cast<std::size_t>(s.m()), 0);
    do {
        const Grade lhs = min_tuple_grade(mu, t);
        const Grade rhs = inf_subset_grade(mu, eval_f(s, t));
        if (lhs > rhs) {
            Witness w;
            w.axiom = v.axiom;
            w.tuple.assign(t.begin(), t.end());
            w.lhs = eval_f(s, t);
            w.note = "min argument grade " + format_grade(lhs) + " exceeds inf f-value grade " +
                     format_grade(rhs);
            v.witnesses.push_back(std::move(w));
            return false;
        }
    } while (next_tuple(std::span<Element>(t), s.k()));
    return true;
}

/// mu(x_slot) <= mu(g(tuple)) for every n-tuple (slot 0-based).
bool fuzzy_g_slot_condition(const Structure& s, const FuzzySubset& mu, int slot, AxiomVerdict& v) {
    std::vector<Element> t(static_cast<std::size_t>(s.n()), 0);
    do {
        const Grade lhs = mu[t[static_cast<std::size_t>(slot)]];
        const Grade rhs = mu[eval_g(s, t)];
        if (lhs > rhs) {
            Witness w;
            w.axiom = v.axiom;
            w.positions = {slot + 1};
            w.tuple.assign(t.begin(), t.end());
            w.lhs = SubsetMask::single(eval_g(s, t));
            w.note = "grade " + format_grade(lhs) + " of slot " + std::to_string(slot + 1) +
                     " exceeds grade " + format_grade(rhs) + " of the g-value";
            v.witnesses.push_back(std::move(w));
            return false;
        }
    } while (next_tuple(std::span<Element>(t), s.k()));
    return true;
}

/// min over argument grades <= mu(g(tuple)): the sub-semihyperring variant.
bool fuzzy_g_min_condition(const Structure& s, const FuzzySubset& mu, AxiomVerdict& v) {
    std::vector<Element> t(static_cast<std::size_t>(s.n()), 0);
    do {
        const Grade lhs = min_tuple_grade(mu, t);
        const Grade rhs = mu[eval_g(s, t)];
        if (lhs > rhs) {
            Witness w;
            w.axiom = v.axiom;
            w.tuple.assign(t.begin(), t.end());
            w.lhs = SubsetMask::single(eval_g(s, t));
            w.note = "min argument grade " + format_grade(lhs) + " exceeds g-value grade " +
                     format_grade(rhs);
            v.witnesses.push_back(std::move(w));
            return false;
        }
    } while (next_tuple(std::span<Element>(t), s.k()));
    return true;
}

AxiomVerdict fuzzy_ideal_check(const Structure& s, const FuzzySubset& mu, FuzzyIdealSide side,
                               const char* axiom) {
    require_same_universe(s, mu, axiom);
    AxiomVerdict v;
    v.axiom = axiom;
    if (!fuzzy_f_condition(s, mu, v)) {
        v.holds = false;
        return v;
    }
    const int n = s.n();
    std::vector<int> slots;
    if (side == FuzzyIdealSide::two_sided)
        for (int j = 0; j < n; ++j) slots.push_back(j);
    else
        slots.push_back(side == FuzzyIdealSide::left ? n - 1 : 0);
    for (int slot : slots) {
        if (!fuzzy_g_slot_condition(s, mu, slot, v)) {
            v.holds = false;
            return v;
        }
    }
    return v;
}

/// "Every non-empty level subset is a hyperideal": levels only change at the
/// distinct grades of mu, so those plus 0 decide the statement for all t.
bool all_levels_hyperideal(const Structure& s, const FuzzySubset& mu) {
    auto grades = mu.distinct_grades();
    if (grades.empty() || grades.front() != grade_zero()) grades.insert(grades.begin(), grade_zero());
    for (const Grade& t : grades) {
        const SubsetMask level = level_subset(mu, t);
        if (level.empty()) continue;
        if (!is_hyperideal(s, level)) return false;
    }
    return true;
}

}  // namespace

AxiomVerdict is_fuzzy_sub_semihyperring(const Structure& s, const FuzzySubset& mu) {
    require_same_universe(s, mu, "is_fuzzy_sub_semihyperring");
    AxiomVerdict v;
    v.axiom = "fuzzy_sub_semihyperring";
    if (!fuzzy_f_condition(s, mu, v) || !fuzzy_g_min_condition(s, mu, v)) v.holds = false;
    return v;
}

AxiomVerdict is_fuzzy_hyperideal(const Structure& s, const FuzzySubset& mu) {
    return fuzzy_ideal_check(s, mu, FuzzyIdealSide::two_sided, "fuzzy_hyperideal");
}

AxiomVerdict is_fuzzy_left_hyperideal(const Structure& s, const FuzzySubset& mu) {
    return fuzzy_ideal_check(s, mu, FuzzyIdealSide::left, "fuzzy_left_hyperideal");
}

AxiomVerdict is_fuzzy_right_hyperideal(const Structure& s, const FuzzySubset& mu) {
    return fuzzy_ideal_check(s, mu, FuzzyIdealSide::right, "fuzzy_right_hyperideal");
}

FuzzySubset two_valued_fuzzy(SubsetMask ideal, const Grade& s, const Grade& t, int k) {
    if (ideal.empty()) throw DomainError("two_valued_fuzzy: subset must be non-empty");
    if (!(t < s) || t < grade_zero() || s > grade_one())
        throw DomainError("two_valued_fuzzy: grades must satisfy 0 <= t < s <= 1");
    std::vector<Grade> grades(static_cast<std::size_t>(k), t);
    ideal.for_each([&](Element x) { grades[static_cast<std::size_t>(x)] = s; });
    return FuzzySubset(std::move(grades));
}

bool check_level_theorem(const Structure& s, const FuzzySubset& mu) {
    require_same_universe(s, mu, "check_level_theorem");
    const bool fuzzy_side = is_fuzzy_hyperideal(s, mu).holds;
    const bool level_side = all_levels_hyperideal(s, mu);
    return fuzzy_side == level_side;
}

bool threshold_corollary(const Structure& s, const FuzzySubset& mu, UpperBoundReading reading) {
    require_same_universe(s, mu, "threshold_corollary");
    const bool stmt1 = is_fuzzy_hyperideal(s, mu).holds;
    const bool stmt2 = all_levels_hyperideal(s, mu);

    // Statement (iii) sweeps every level with t in [0, t_0]. Under the
    // max-grade reading all such levels are non-empty and change only at the
    // distinct grades, so the sweep coincides with (ii). Under the
    // codomain reading t_0 = 1 and any gap above the maximum grade yields an
    // empty level, which is not a hyperideal.
    bool stmt3 = stmt2;
    if (reading == UpperBoundReading::codomain_one && mu.max_grade() != grade_one()) stmt3 = false;

    return stmt1 == stmt2 && stmt2 == stmt3;
}

FuzzyHyperStructure::FuzzyHyperStructure(int k, int m, int n, std::vector<Grade> mu_f,
                                         std::vector<Grade> mu_g)
    : k_(k), m_(m), n_(n), mu_f_(std::move(mu_f)), mu_g_(std::move(mu_g)) {
    if (k < 1 || k > kMaxUniverse) throw DomainError("fuzzy structure universe out of range");
    if (m < 2 || n < 2) throw DomainError("fuzzy structure arities must be at least 2");
    const std::size_t f_expect = table_size(k, m) * static_cast<std::size_t>(k);
    const std::size_t g_expect = table_size(k, n) * static_cast<std::size_t>(k);
    if (mu_f_.size() != f_expect)
        throw ValidationError("mu_f has " + std::to_string(mu_f_.size()) + " grades, expected " +
                              std::to_string(f_expect));
    if (mu_g_.size() != g_expect)
        throw ValidationError("mu_g has " + std::to_string(mu_g_.size()) + " grades, expected " +
                              std::to_string(g_expect));
    for (const Grade& g : mu_f_)
        if (!in_unit_interval(g)) throw DomainError("mu_f grade outside [0,1]");
    for (const Grade& g : mu_g_)
        if (!in_unit_interval(g)) throw DomainError("mu_g grade outside [0,1]");

    for (std::size_t t = 0; t < table_size(k, m); ++t) {
        bool any = false;
        for (Element z = 0; z < k; ++z) any = any || f_grade(t, z) > grade_zero();
        if (!any)
            throw ValidationError("mu_f support is empty for a tuple", t, tuple_decode(t, k, m));
    }
    for (std::size_t t = 0; t < table_size(k, n); ++t) {
        int supported = 0;
        for (Element z = 0; z < k; ++z)
            if (g_grade(t, z) > grade_zero()) ++supported;
        if (supported != 1)
            throw ValidationError("mu_g support must be single-valued per tuple, found " +
                                      std::to_string(supported),
                                  t, tuple_decode(t, k, n));
    }
}

FuzzyHyperStructure FuzzyHyperStructure::lift(const Structure& s, const Grade& support_grade) {
    if (!(support_grade > grade_zero()) || !in_unit_interval(support_grade))
        throw DomainError("lift: support grade must lie in (0,1]");
    const int k = s.k();
    std::vector<Grade> mu_f(s.f().size() * static_cast<std::size_t>(k), grade_zero());
    for (std::size_t t = 0; t < s.f().size(); ++t)
        s.f().at_flat(t).for_each([&](Element z) {
            mu_f[t * static_cast<std::size_t>(k) + static_cast<std::size_t>(z)] = support_grade;
        });
    std::vector<Grade> mu_g(s.g().size() * static_cast<std::size_t>(k), grade_zero());
    for (std::size_t t = 0; t < s.g().size(); ++t)
        mu_g[t * static_cast<std::size_t>(k) + static_cast<std::size_t>(s.g().at_flat(t))] =
            support_grade;
    return FuzzyHyperStructure(k, s.m(), s.n(), std::move(mu_f), std::move(mu_g));
}

Structure associated_structure(const FuzzyHyperStructure& fs) {
    const int k = fs.k();
    std::vector<SubsetMask> f_table(table_size(k, fs.m()));
    for (std::size_t t = 0; t < f_table.size(); ++t) {
        SubsetMask support;
        for (Element z = 0; z < k; ++z)
            if (fs.f_grade(t, z) > grade_zero()) support.insert(z);
        f_table[t] = support;
    }
    std::vector<Element> g_table(table_size(k, fs.n()));
    for (std::size_t t = 0; t < g_table.size(); ++t) {
        for (Element z = 0; z < k; ++z)
            if (fs.g_grade(t, z) > grade_zero()) g_table[t] = z;
    }
    return Structure(HyperOpTable(k, fs.m(), std::move(f_table)),
                     OpTable(k, fs.n(), std::move(g_table)));
}

bool is_fuzzy_homomorphism(const FuzzyHyperStructure& src, const FuzzyHyperStructure& tgt,
                           const std::vector<Element>& image) {
    if (src.m() != tgt.m() || src.n() != tgt.n())
        throw DomainError("is_fuzzy_homomorphism: arities of source and target differ");
    if (static_cast<int>(image.size()) != src.k())
        throw DomainError("is_fuzzy_homomorphism: image length does not match source universe");
    for (Element y : image)
        if (y < 0 || y >= tgt.k())
            throw DomainError("is_fuzzy_homomorphism: image element outside target universe");

    auto mapped_flat = [&](std::span<const Element> t) {
        std::vector<Element> mapped(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            mapped[i] = image[static_cast<std::size_t>(t[i])];
        return tuple_index(mapped, tgt.k());
    };

    std::vector<Element> t(static_cast<std::size_t>(src.m()), 0);
    std::size_t flat = 0;
    do {
        const std::size_t tgt_flat = mapped_flat(t);
        for (Element z = 0; z < src.k(); ++z)
            if (src.f_grade(flat, z) > tgt.f_grade(tgt_flat, image[static_cast<std::size_t>(z)]))
                return false;
        ++flat;
    } while (next_tuple(std::span<Element>(t), src.k()));

    std::vector<Element> u(static_cast<std::size_t>(src.n()), 0);
    flat = 0;
    do {
        const std::size_t tgt_flat = mapped_flat(u);
        for (Element z = 0; z < src.k(); ++z)
            if (src.g_grade(flat, z) > tgt.g_grade(tgt_flat, image[static_cast<std::size_t>(z)]))
                return false;
        ++flat;
    } while (next_tuple(std::span<Element>(u), src.k()));
    return true;
}

bool check_fuzzy_to_crisp_hom(const FuzzyHyperStructure& src, const FuzzyHyperStructure& tgt,
                              const std::vector<Element>& image) {
    if (!is_fuzzy_homomorphism(src, tgt, image))
        throw PreconditionError("check_fuzzy_to_crisp_hom: map is not a fuzzy homomorphism");
    auto a = std::make_shared<const Structure>(associated_structure(src));
    auto b = std::make_shared<const Structure>(associated_structure(tgt));
    return is_inclusion_homomorphism(Mapping{std::move(a), std::move(b), image});
}

}  // namespace hyperforge
