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

#include "hyperforge/congruence.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>

namespace hyperforge {

EquivRelation::EquivRelation(std::vector<int> class_of) : class_of_(std::move(class_of)) {
    if (class_of_.empty() || class_of_.size() > static_cast<std::size_t>(kMaxUniverse))
        throw DomainError("partition must cover a universe of 1.." + std::to_string(kMaxUniverse) +
                          " elements");
    std::unordered_map<int, int> relabel;
    for (int& c : class_of_) {
        auto [it, fresh] = relabel.emplace(c, classes_);
        if (fresh) ++classes_;
        c = it->second;
    }
    class_masks_.resize(static_cast<std::size_t>(classes_));
    for (std::size_t x = 0; x < class_of_.size(); ++x)
        class_masks_[static_cast<std::size_t>(class_of_[x])].insert(static_cast<Element>(x));
}

EquivRelation EquivRelation::identity(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    return EquivRelation(std::move(c));
}

EquivRelation EquivRelation::universal(int k) {
    return EquivRelation(std::vector<int>(static_cast<std::size_t>(k), 0));
}

SubsetMask EquivRelation::class_image(SubsetMask a) const {
    SubsetMask image;
    a.for_each([&](Element x) { image.insert(class_id(x)); });
    return image;
}

bool EquivRelation::refines(const EquivRelation& coarser) const {
    if (k() != coarser.k()) return false;
    for (int c = 0; c < classes_; ++c) {
        const SubsetMask members = class_mask(c);
        const int target = coarser.class_id(members.first());
        bool same = true;
        members.for_each([&](Element x) {
            if (coarser.class_id(x) != target) same = false;
        });
        if (!same) return false;
    }
    return true;
}

bool subsets_related(const EquivRelation& rel, SubsetMask a, SubsetMask b) {
    if (a.empty() || b.empty()) throw DomainError("subsets_related: subsets must be non-empty");
    return rel.class_image(a) == rel.class_image(b);
}

namespace {

void require_partition_of(const Structure& s, const EquivRelation& rel, const char* who) {
    if (rel.k() != s.k())
        throw DomainError(std::string(who) + ": partition covers k=" + std::to_string(rel.k()) +
                          " but structure has k=" + std::to_string(s.k()));
}

std::size_t pow_size(int k, int e) {
    std::size_t n = 1;
    for (int i = 0; i < e; ++i) n *= static_cast<std::size_t>(k);
    return n;
}

struct SlotCase {
    int slot;                     // 1-based
    std::vector<Element> with_x;  // full tuple with x in the slot
    std::vector<Element> with_y;  // same tuple with y instead
    Element x, y;
};

/// Decode a flat index of the per-slot perturbation sweep for the given
/// arity: flat = ((slot0 * k^{arity-1} + others) * k + x) * k + y.
SlotCase decode_slot_case(std::size_t flat, int k, int arity) {
    SlotCase c;
    c.y = static_cast<Element>(flat % static_cast<std::size_t>(k));
    flat /= static_cast<std::size_t>(k);
    c.x = static_cast<Element>(flat % static_cast<std::size_t>(k));
    flat /= static_cast<std::size_t>(k);
    const std::size_t others_total = pow_size(k, arity - 1);
    const auto others = tuple_decode(flat % others_total, k, arity - 1);
    c.slot = static_cast<int>(flat / others_total) + 1;

    c.with_x.resize(static_cast<std::size_t>(arity));
    const int s0 = c.slot - 1;
    std::copy(others.begin(), others.begin() + s0, c.with_x.begin());
    std::copy(others.begin() + s0, others.end(), c.with_x.begin() + s0 + 1);
    c.with_y = c.with_x;
    c.with_x[static_cast<std::size_t>(s0)] = c.x;
    c.with_y[static_cast<std::size_t>(s0)] = c.y;
    return c;
}

Witness slot_witness(const char* axiom, const SlotCase& c, SubsetMask lhs, SubsetMask rhs) {
    Witness w;
    w.axiom = axiom;
    w.positions = {c.slot};
    w.tuple = c.with_x;
    w.outer = c.with_y;
    w.lhs = lhs;
    w.rhs = rhs;
    return w;
}

}  // namespace

AxiomVerdict is_congruence(const Structure& s, const EquivRelation& rel, const SweepOptions& opt) {
    require_partition_of(s, rel, "is_congruence");
    const int k = s.k();
    const std::size_t f_total = static_cast<std::size_t>(s.m()) * pow_size(k, s.m() - 1) *
                                static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    const std::size_t g_total = static_cast<std::size_t>(s.n()) * pow_size(k, s.n() - 1) *
                                static_cast<std::size_t>(k) * static_cast<std::size_t>(k);

    auto violates = [&](std::size_t flat) {
        if (flat < f_total) {
            const SlotCase c = decode_slot_case(flat, k, s.m());
            if (c.x >= c.y || !rel.related(c.x, c.y)) return false;
            return !subsets_related(rel, eval_f(s, c.with_x), eval_f(s, c.with_y));
        }
        const SlotCase c = decode_slot_case(flat - f_total, k, s.n());
        if (c.x >= c.y || !rel.related(c.x, c.y)) return false;
        return !rel.related(eval_g(s, c.with_x), eval_g(s, c.with_y));
    };
    auto make_witness = [&](std::size_t flat) {
        if (flat < f_total) {
            const SlotCase c = decode_slot_case(flat, k, s.m());
            return slot_witness("congruence_f", c, eval_f(s, c.with_x), eval_f(s, c.with_y));
        }
        const SlotCase c = decode_slot_case(flat - f_total, k, s.n());
        return slot_witness("congruence_g", c, SubsetMask::single(eval_g(s, c.with_x)),
                            SubsetMask::single(eval_g(s, c.with_y)));
    };

    AxiomVerdict v;
    v.axiom = "congruence";
    for (std::size_t flat : scan_hits(f_total + g_total, opt, violates))
        v.witnesses.push_back(make_witness(flat));
    v.holds = v.witnesses.empty();
    return v;
}

AxiomVerdict check_translation_lemma(const Structure& s, const EquivRelation& rel,
                                     const SweepOptions& opt) {
    require_partition_of(s, rel, "check_translation_lemma");
    const int k = s.k();
    // Part (i): x only in the first slot of f. Part (ii): g in every slot.
    const std::size_t f_total =
        pow_size(k, s.m() - 1) * static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    const std::size_t g_total = static_cast<std::size_t>(s.n()) * pow_size(k, s.n() - 1) *
                                static_cast<std::size_t>(k) * static_cast<std::size_t>(k);

    auto violates = [&](std::size_t flat) {
        if (flat < f_total) {
            const SlotCase c = decode_slot_case(flat, k, s.m());  // slot is always 1 here
            if (c.x >= c.y || !rel.related(c.x, c.y)) return false;
            return !subsets_related(rel, eval_f(s, c.with_x), eval_f(s, c.with_y));
        }
        const SlotCase c = decode_slot_case(flat - f_total, k, s.n());
        if (c.x >= c.y || !rel.related(c.x, c.y)) return false;
        return !rel.related(eval_g(s, c.with_x), eval_g(s, c.with_y));
    };
    auto make_witness = [&](std::size_t flat) {
        if (flat < f_total) {
            const SlotCase c = decode_slot_case(flat, k, s.m());
            return slot_witness("translation_f", c, eval_f(s, c.with_x), eval_f(s, c.with_y));
        }
        const SlotCase c = decode_slot_case(flat - f_total, k, s.n());
        return slot_witness("translation_g", c, SubsetMask::single(eval_g(s, c.with_x)),
                            SubsetMask::single(eval_g(s, c.with_y)));
    };

    AxiomVerdict v;
    v.axiom = "translation_lemma";
    for (std::size_t flat : scan_hits(f_total + g_total, opt, violates))
        v.witnesses.push_back(make_witness(flat));
    v.holds = v.witnesses.empty();
    return v;
}

AxiomVerdict check_mixed_congruence(const Structure& s, const EquivRelation& rel,
                                    const SweepOptions& opt) {
    require_partition_of(s, rel, "check_mixed_congruence");
    const int k = s.k();
    const int m = s.m();
    const std::size_t tuples = pow_size(k, m);
    // flat = ((split0 * k^m) + t) * k^m + u: prefix of t/u from the first
    // related family, suffix from the second, for every split point.
    const std::size_t total = static_cast<std::size_t>(m) * tuples * tuples;

    auto related_tuples = [&](const std::vector<Element>& t, const std::vector<Element>& u) {
        for (int i = 0; i < m; ++i)
            if (!rel.related(t[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)]))
                return false;
        return true;
    };
    auto violates = [&](std::size_t flat) {
        const auto u = tuple_decode(flat % tuples, k, m);
        const auto t = tuple_decode((flat / tuples) % tuples, k, m);
        if (!related_tuples(t, u)) return false;
        return !subsets_related(rel, eval_f(s, t), eval_f(s, u));
    };
    auto make_witness = [&](std::size_t flat) {
        const auto u = tuple_decode(flat % tuples, k, m);
        const auto t = tuple_decode((flat / tuples) % tuples, k, m);
        const int split = static_cast<int>(flat / (tuples * tuples)) + 1;
        Witness w;
        w.axiom = "mixed_congruence";
        w.positions = {split};
        w.tuple = t;
        w.outer = u;
        w.lhs = eval_f(s, t);
        w.rhs = eval_f(s, u);
        return w;
    };

    AxiomVerdict v;
    v.axiom = "mixed_congruence";
    for (std::size_t flat : scan_hits(total, opt, violates)) v.witnesses.push_back(make_witness(flat));
    v.holds = v.witnesses.empty();
    return v;
}

bool is_strongly_regular(const Structure& s, const EquivRelation& rel) {
    require_partition_of(s, rel, "is_strongly_regular");
    if (!is_congruence(s, rel).holds) return false;
    // Class-pure f-values: together with the congruence condition this makes
    // all outputs of related input tuples mutually related.
    for (std::size_t flat = 0; flat < s.f().size(); ++flat)
        if (rel.class_image(s.f().at_flat(flat)).count() != 1) return false;
    return true;
}

Structure quotient(const Structure& s, const EquivRelation& rel) {
    require_partition_of(s, rel, "quotient");
    if (!is_congruence(s, rel).holds)
        throw PreconditionError("quotient: relation is not a congruence");

    const int c = rel.class_count();
    std::vector<Element> rep_low(static_cast<std::size_t>(c));
    std::vector<Element> rep_high(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
        rep_low[static_cast<std::size_t>(i)] = rel.class_mask(i).first();
        rep_high[static_cast<std::size_t>(i)] = rel.class_mask(i).last();
    }

    auto as_reps = [&](std::span<const Element> class_tuple, const std::vector<Element>& reps) {
        std::vector<Element> t(class_tuple.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] = reps[static_cast<std::size_t>(class_tuple[i])];
        return t;
    };

    auto qf = HyperOpTable::build(c, s.m(), [&](std::span<const Element> ct) {
        const SubsetMask value = rel.class_image(eval_f(s, as_reps(ct, rep_low)));
        // Independence from representatives is guaranteed by the congruence
        // condition; a disagreement here means a checker bug.
        const SubsetMask check = rel.class_image(eval_f(s, as_reps(ct, rep_high)));
        if (value != check)
            throw InternalError("quotient f-value depends on the choice of representatives");
        return value;
    });
    auto qg = OpTable::build(c, s.n(), [&](std::span<const Element> ct) {
        const Element value = rel.class_id(eval_g(s, as_reps(ct, rep_low)));
        const Element check = rel.class_id(eval_g(s, as_reps(ct, rep_high)));
        if (value != check)
            throw InternalError("quotient g-value depends on the choice of representatives");
        return value;
    });
    return Structure(std::move(qf), std::move(qg));
}

Mapping natural_map(StructureRef s, const EquivRelation& rel) {
    if (!s) throw DomainError("natural_map: null structure");
    auto q = std::make_shared<const Structure>(quotient(*s, rel));
    std::vector<Element> image(static_cast<std::size_t>(s->k()));
    for (int x = 0; x < s->k(); ++x)
        image[static_cast<std::size_t>(x)] = rel.class_id(static_cast<Element>(x));
    return Mapping{std::move(s), std::move(q), std::move(image)};
}

EquivRelation relation_quotient(const EquivRelation& sigma, const EquivRelation& rho,
                                const Structure& s) {
    require_partition_of(s, sigma, "relation_quotient");
    require_partition_of(s, rho, "relation_quotient");
    if (!rho.refines(sigma))
        throw DomainError("relation_quotient: rho is not contained in sigma");
    std::vector<int> lifted(static_cast<std::size_t>(rho.class_count()));
    for (int c = 0; c < rho.class_count(); ++c)
        lifted[static_cast<std::size_t>(c)] = sigma.class_id(rho.representative(c));
    return EquivRelation(std::move(lifted));
}

bool check_double_quotient_iso(const Structure& s, const EquivRelation& sigma,
                               const EquivRelation& rho) {
    const Structure h_rho = quotient(s, rho);
    const EquivRelation lifted = relation_quotient(sigma, rho, s);
    auto lhs = std::make_shared<const Structure>(quotient(h_rho, lifted));
    auto rhs = std::make_shared<const Structure>(quotient(s, sigma));
    return !enumerate_homomorphisms(lhs, rhs, HomSearchMode::iso).empty();
}

std::vector<std::vector<int>> all_partitions(int k, std::uint64_t max_partitions) {
    if (k < 1 || k > kMaxUniverse) throw DomainError("all_partitions: k out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(k), 0);

    // Lexicographic restricted-growth-string enumeration.
    for (;;) {
        out.push_back(rgs);
        if (out.size() > max_partitions)
            throw ResourceError("all_partitions: partition count exceeds cap " +
                                std::to_string(max_partitions));
        int i = k - 1;
        for (; i > 0; --i) {
            if (rgs[static_cast<std::size_t>(i)] <= prefix_max[static_cast<std::size_t>(i)]) {
                ++rgs[static_cast<std::size_t>(i)];
                break;
            }
        }
        if (i == 0) return out;
        for (int j = i + 1; j < k; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] =
                std::max(prefix_max[static_cast<std::size_t>(j - 1)],
                         rgs[static_cast<std::size_t>(j - 1)]);
        }
    }
}

std::vector<EquivRelation> enumerate_congruences(const Structure& s, std::uint64_t max_partitions,
                                                 const SweepOptions& opt) {
    const auto partitions = all_partitions(s.k(), max_partitions);

    SweepOptions sweep = opt;
    sweep.collect_all = true;
    const auto hits = scan_hits(partitions.size(), sweep, [&](std::size_t i) {
        return is_congruence(s, EquivRelation(partitions[i])).holds;
    });

    std::vector<EquivRelation> out;
    out.reserve(hits.size());
    for (std::size_t i : hits) out.emplace_back(partitions[i]);
    return out;
}

}  // namespace hyperforge
