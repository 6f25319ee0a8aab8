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

#include "hyperforge/axioms.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace hyperforge {

namespace {

constexpr int kMaxNestedArity = kMaxArity;

/// k^e for sweep sizing; sweeps are not bounded by the table cap but must
/// not overflow.
std::size_t sweep_pow(int k, int e) {
    std::size_t n = 1;
    for (int i = 0; i < e; ++i) {
        if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(k))
            throw ResourceError("axiom sweep size k^" + std::to_string(e) + " overflows");
        n *= static_cast<std::size_t>(k);
    }
    return n;
}

template <typename Violates, typename MakeWitness>
AxiomVerdict sweep_axiom(std::string axiom, std::size_t total, const SweepOptions& opt,
                         Violates&& violates, MakeWitness&& make_witness) {
    AxiomVerdict v;
    v.axiom = std::move(axiom);
    for (std::size_t flat : scan_hits(total, opt, violates)) v.witnesses.push_back(make_witness(flat));
    v.holds = v.witnesses.empty();
    return v;
}

/// f(x_1^{i-1}, f(x_i^{m+i-1}), x_{m+i}^{2m-1}) via the subset extension,
/// for a (2m-1)-tuple x and 1-based insertion position pos. All outer slots
/// but one are singletons, so this is a single-slot union.
SubsetMask nested_f_eval(const Structure& s, std::span<const Element> x, int pos) {
    const int m = s.m();
    const int p0 = pos - 1;
    std::array<Element, kMaxNestedArity> outer{};
    for (int p = 0; p < p0; ++p) outer[static_cast<std::size_t>(p)] = x[p];
    for (int p = p0 + 1; p < m; ++p) outer[static_cast<std::size_t>(p)] = x[p + m - 1];
    const SubsetMask inner =
        eval_f(s, x.subspan(static_cast<std::size_t>(p0), static_cast<std::size_t>(m)));
    return eval_f_subset_slot(s, std::span<const Element>(outer.data(), static_cast<std::size_t>(m)),
                              p0, inner);
}

/// g(x_1^{i-1}, g(x_i^{n+i-1}), x_{n+i}^{2n-1}).
Element nested_g_eval(const Structure& s, std::span<const Element> x, int pos) {
    const int n = s.n();
    const int p0 = pos - 1;
    std::array<Element, kMaxNestedArity> t{};
    for (int p = 0; p < p0; ++p) t[static_cast<std::size_t>(p)] = x[p];
    t[static_cast<std::size_t>(p0)] =
        eval_g(s, x.subspan(static_cast<std::size_t>(p0), static_cast<std::size_t>(n)));
    for (int p = p0 + 1; p < n; ++p) t[static_cast<std::size_t>(p)] = x[p + n - 1];
    return eval_g(s, std::span<const Element>(t.data(), static_cast<std::size_t>(n)));
}

std::vector<std::pair<int, int>> position_pairs(int arity) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= arity; ++i)
        for (int j = i + 1; j <= arity; ++j) pairs.emplace_back(i, j);
    return pairs;
}

/// Both sides of the distributivity identity for slot (1-based), an m-tuple
/// a and the (n-1)-tuple of outer arguments.
std::pair<SubsetMask, SubsetMask> distributive_sides(const Structure& s, int slot,
                                                     std::span<const Element> a,
                                                     std::span<const Element> outer) {
    const int p0 = slot - 1;
    const auto prefix = outer.subspan(0, static_cast<std::size_t>(p0));
    const auto suffix = outer.subspan(static_cast<std::size_t>(p0));

    const SubsetMask lhs = eval_g_subset(s, prefix, eval_f(s, a), suffix);

    std::vector<Element> t(static_cast<std::size_t>(s.n()));
    std::copy(prefix.begin(), prefix.end(), t.begin());
    std::copy(suffix.begin(), suffix.end(), t.begin() + p0 + 1);
    std::vector<Element> images(static_cast<std::size_t>(s.m()));
    for (int p = 0; p < s.m(); ++p) {
        t[static_cast<std::size_t>(p0)] = a[static_cast<std::size_t>(p)];
        images[static_cast<std::size_t>(p)] = eval_g(s, t);
    }
    const SubsetMask rhs = eval_f(s, images);
    return {lhs, rhs};
}

AxiomVerdict check_distributive_impl(const Structure& s, const SweepOptions& opt, bool weak) {
    const int k = s.k();
    const std::size_t km = sweep_pow(k, s.m());
    const std::size_t kn1 = sweep_pow(k, s.n() - 1);
    const std::size_t total = static_cast<std::size_t>(s.n()) * km * kn1;

    struct Case {
        int slot;
        std::vector<Element> a;
        std::vector<Element> outer;
    };
    auto decode = [&](std::size_t flat) {
        Case c;
        c.outer = tuple_decode(flat % kn1, k, s.n() - 1);
        const std::size_t rest = flat / kn1;
        c.a = tuple_decode(rest % km, k, s.m());
        c.slot = static_cast<int>(rest / km) + 1;
        return c;
    };
    auto violates = [&](std::size_t flat) {
        const Case c = decode(flat);
        const auto [lhs, rhs] = distributive_sides(s, c.slot, c.a, c.outer);
        return weak ? !lhs.is_subset_of(rhs) : lhs != rhs;
    };
    auto make_witness = [&](std::size_t flat) {
        const Case c = decode(flat);
        const auto [lhs, rhs] = distributive_sides(s, c.slot, c.a, c.outer);
        Witness w;
        w.axiom = weak ? "weak_distributive" : "distributive";
        w.positions = {c.slot};
        w.tuple = c.a;
        w.outer = c.outer;
        w.lhs = lhs;
        w.rhs = rhs;
        return w;
    };
    return sweep_axiom(weak ? "weak_distributive" : "distributive", total, opt, violates,
                       make_witness);
}

}  // namespace

AxiomVerdict check_m_ary_semihypergroup(const Structure& s, const SweepOptions& opt) {
    const int k = s.k();
    const int m = s.m();
    const auto pairs = position_pairs(m);
    const std::size_t tuples = sweep_pow(k, 2 * m - 1);
    const std::size_t total = tuples * pairs.size();

    auto violates = [&](std::size_t flat) {
        const auto [i, j] = pairs[flat % pairs.size()];
        std::array<Element, 2 * kMaxNestedArity - 1> buf;
        const std::span<Element> x(buf.data(), static_cast<std::size_t>(2 * m - 1));
        tuple_decode(flat / pairs.size(), k, x);
        return nested_f_eval(s, x, i) != nested_f_eval(s, x, j);
    };
    auto make_witness = [&](std::size_t flat) {
        const auto [i, j] = pairs[flat % pairs.size()];
        const auto x = tuple_decode(flat / pairs.size(), k, 2 * m - 1);
        Witness w;
        w.axiom = "m_ary_semihypergroup";
        w.positions = {i, j};
        w.tuple = x;
        w.lhs = nested_f_eval(s, x, i);
        w.rhs = nested_f_eval(s, x, j);
        return w;
    };
    return sweep_axiom("m_ary_semihypergroup", total, opt, violates, make_witness);
}

AxiomVerdict check_n_ary_semigroup(const Structure& s, const SweepOptions& opt) {
    const int k = s.k();
    const int n = s.n();
    const auto pairs = position_pairs(n);
    const std::size_t tuples = sweep_pow(k, 2 * n - 1);
    const std::size_t total = tuples * pairs.size();

    auto violates = [&](std::size_t flat) {
        const auto [i, j] = pairs[flat % pairs.size()];
        std::array<Element, 2 * kMaxNestedArity - 1> buf;
        const std::span<Element> x(buf.data(), static_cast<std::size_t>(2 * n - 1));
        tuple_decode(flat / pairs.size(), k, x);
        return nested_g_eval(s, x, i) != nested_g_eval(s, x, j);
    };
    auto make_witness = [&](std::size_t flat) {
        const auto [i, j] = pairs[flat % pairs.size()];
        const auto x = tuple_decode(flat / pairs.size(), k, 2 * n - 1);
        Witness w;
        w.axiom = "n_ary_semigroup";
        w.positions = {i, j};
        w.tuple = x;
        w.lhs = SubsetMask::single(nested_g_eval(s, x, i));
        w.rhs = SubsetMask::single(nested_g_eval(s, x, j));
        return w;
    };
    return sweep_axiom("n_ary_semigroup", total, opt, violates, make_witness);
}

AxiomVerdict check_distributive(const Structure& s, const SweepOptions& opt) {
    return check_distributive_impl(s, opt, /*weak=*/false);
}

AxiomVerdict check_weak_distributive(const Structure& s, const SweepOptions& opt) {
    return check_distributive_impl(s, opt, /*weak=*/true);
}

AxiomVerdict check_mn_semihyperring(const Structure& s, const SweepOptions& opt) {
    AxiomVerdict out;
    out.axiom = "mn_semihyperring";
    const AxiomVerdict subs[] = {check_m_ary_semihypergroup(s, opt), check_n_ary_semigroup(s, opt),
                                 check_distributive(s, opt)};
    for (const AxiomVerdict& v : subs) {
        if (v.holds) continue;
        if (out.holds) {
            out.holds = false;
            out.note = "fails " + v.axiom;
        }
        out.witnesses.insert(out.witnesses.end(), v.witnesses.begin(), v.witnesses.end());
        if (!opt.collect_all) break;
    }
    return out;
}

SubsetMask find_hyperadditive_identities(const Structure& s) {
    const int k = s.k();
    const int m = s.m();
    SubsetMask identities;
    std::vector<Element> t(static_cast<std::size_t>(m));
    for (Element e = 0; e < k; ++e) {
        bool ok = true;
        for (int slot = 0; ok && slot < m; ++slot) {
            for (Element x = 0; ok && x < k; ++x) {
                std::fill(t.begin(), t.end(), e);
                t[static_cast<std::size_t>(slot)] = x;
                ok = eval_f(s, t).contains(x);
            }
        }
        if (ok) identities.insert(e);
    }
    return identities;
}

SubsetMask find_multiplicative_identities(const Structure& s) {
    const int k = s.k();
    const int n = s.n();
    SubsetMask identities;
    std::vector<Element> t(static_cast<std::size_t>(n));
    for (Element e = 0; e < k; ++e) {
        bool ok = true;
        for (int slot = 0; ok && slot < n; ++slot) {
            for (Element y = 0; ok && y < k; ++y) {
                std::fill(t.begin(), t.end(), e);
                t[static_cast<std::size_t>(slot)] = y;
                ok = eval_g(s, t) == y;
            }
        }
        if (ok) identities.insert(e);
    }
    return identities;
}

std::optional<Element> find_zero(const Structure& s) {
    const int k = s.k();
    const int m = s.m();
    const int n = s.n();
    std::vector<Element> candidates;
    std::vector<Element> ft(static_cast<std::size_t>(m));
    std::vector<Element> gt(static_cast<std::size_t>(n));
    for (Element z = 0; z < k; ++z) {
        bool ok = true;
        for (Element x = 0; ok && x < k; ++x) {
            // The f-condition is read as set equality with the singleton {x},
            // the only type-correct reading for a subset-valued f.
            std::fill(ft.begin(), ft.end(), z);
            ft.back() = x;
            ok = eval_f(s, ft) == SubsetMask::single(x);
            if (ok) {
                std::fill(ft.begin(), ft.end(), z);
                ft.front() = x;
                ok = eval_f(s, ft) == SubsetMask::single(x);
            }
        }
        for (Element y = 0; ok && y < k; ++y) {
            std::fill(gt.begin(), gt.end(), z);
            gt.back() = y;
            ok = eval_g(s, gt) == z;
            if (ok) {
                std::fill(gt.begin(), gt.end(), z);
                gt.front() = y;
                ok = eval_g(s, gt) == z;
            }
        }
        if (ok) candidates.push_back(z);
    }
    if (candidates.empty()) return std::nullopt;
    if (candidates.size() > 1)
        throw DomainError("structural error: elements " + std::to_string(candidates[0]) + " and " +
                          std::to_string(candidates[1]) + " both satisfy the zero conditions");
    return candidates.front();
}

AxiomVerdict check_zero_sum_free(const Structure& s, const SweepOptions& opt) {
    const auto zero = find_zero(s);
    if (!zero) {
        AxiomVerdict v;
        v.axiom = "zero_sum_free";
        v.note = "vacuous: structure has no zero element";
        return v;
    }
    const Element z = *zero;
    const int k = s.k();
    const std::size_t total = sweep_pow(k, s.m());

    auto violates = [&](std::size_t flat) {
        if (!s.f().at_flat(flat).contains(z)) return false;
        const auto t = tuple_decode(flat, k, s.m());
        return std::any_of(t.begin(), t.end(), [&](Element x) { return x != z; });
    };
    auto make_witness = [&](std::size_t flat) {
        Witness w;
        w.axiom = "zero_sum_free";
        w.tuple = tuple_decode(flat, k, s.m());
        w.lhs = s.f().at_flat(flat);
        w.rhs = SubsetMask::single(z);
        return w;
    };
    return sweep_axiom("zero_sum_free", total, opt, violates, make_witness);
}

AxiomVerdict check_additively_idempotent(const Structure& s, IdempotentReading reading,
                                         const SweepOptions& opt) {
    const int k = s.k();
    std::vector<Element> t(static_cast<std::size_t>(s.m()));

    auto value = [&](std::size_t flat) {
        std::fill(t.begin(), t.end(), static_cast<Element>(flat));
        return eval_f(s, t);
    };
    auto violates = [&](std::size_t flat) {
        const Element x = static_cast<Element>(flat);
        const SubsetMask fx = value(flat);
        return reading == IdempotentReading::membership ? !fx.contains(x)
                                                        : fx != SubsetMask::single(x);
    };
    auto make_witness = [&](std::size_t flat) {
        const Element x = static_cast<Element>(flat);
        Witness w;
        w.axiom = "additively_idempotent";
        w.tuple = {x};
        w.lhs = value(flat);
        w.rhs = SubsetMask::single(x);
        return w;
    };
    auto v = sweep_axiom("additively_idempotent", static_cast<std::size_t>(k), opt, violates,
                         make_witness);
    if (reading == IdempotentReading::strict_singleton) v.note = "strict singleton reading";
    return v;
}

std::pair<HyperOpTable, OpTable> derived_binary_ops(const Structure& s, Element e, Element eprime) {
    if (e < 0 || e >= s.k() || !find_hyperadditive_identities(s).contains(e))
        throw PreconditionError("derived_binary_ops: " + std::to_string(e) +
                                " is not a hyperadditive identity");
    if (eprime < 0 || eprime >= s.k() || !find_multiplicative_identities(s).contains(eprime))
        throw PreconditionError("derived_binary_ops: " + std::to_string(eprime) +
                                " is not a multiplicative identity");

    std::vector<Element> ft(static_cast<std::size_t>(s.m()), e);
    auto add = HyperOpTable::build(s.k(), 2, [&](std::span<const Element> xy) {
        ft.front() = xy[0];
        ft.back() = xy[1];
        return eval_f(s, ft);
    });
    std::vector<Element> gt(static_cast<std::size_t>(s.n()), eprime);
    auto mul = OpTable::build(s.k(), 2, [&](std::span<const Element> xy) {
        gt.front() = xy[0];
        gt.back() = xy[1];
        return eval_g(s, gt);
    });
    return {std::move(add), std::move(mul)};
}

}  // namespace hyperforge
