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

#include "hyperforge/morphisms.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

namespace hyperforge {

namespace {

void validate_mapping(const Mapping& map) {
    if (!map.source || !map.target) throw DomainError("mapping has no source or target structure");
    if (static_cast<int>(map.image.size()) != map.source->k())
        throw DomainError("mapping image length " + std::to_string(map.image.size()) +
                          " does not match source universe k=" + std::to_string(map.source->k()));
    for (Element y : map.image)
        if (y < 0 || y >= map.target->k())
            throw DomainError("mapping image element " + std::to_string(y) +
                              " outside target universe");
}

void require_same_arities(const Structure& a, const Structure& b) {
    if (a.m() != b.m() || a.n() != b.n())
        throw DomainError("structures have different arities: (" + std::to_string(a.m()) + "," +
                          std::to_string(a.n()) + ") vs (" + std::to_string(b.m()) + "," +
                          std::to_string(b.n()) + ")");
}

bool satisfies(const Mapping& map, bool inclusion_only) {
    const Structure& src = *map.source;
    const Structure& tgt = *map.target;

    std::vector<Element> t(static_cast<std::size_t>(src.m()), 0);
    std::vector<Element> mapped(static_cast<std::size_t>(src.m()));
    do {
        std::transform(t.begin(), t.end(), mapped.begin(),
                       [&](Element x) { return map(x); });
        const SubsetMask lhs = map_subset(map, eval_f(src, t));
        const SubsetMask rhs = eval_f(tgt, mapped);
        if (inclusion_only ? !lhs.is_subset_of(rhs) : lhs != rhs) return false;
    } while (next_tuple(std::span<Element>(t), src.k()));

    // g is single-valued on both sides, so inclusion and equality coincide.
    std::vector<Element> u(static_cast<std::size_t>(src.n()), 0);
    std::vector<Element> mapped_u(static_cast<std::size_t>(src.n()));
    do {
        std::transform(u.begin(), u.end(), mapped_u.begin(),
                       [&](Element x) { return map(x); });
        if (map(eval_g(src, u)) != eval_g(tgt, mapped_u)) return false;
    } while (next_tuple(std::span<Element>(u), src.k()));
    return true;
}

/// Necessary conditions on a partial image with elements [0, depth] assigned.
/// Only prunes; leaves are re-verified in full.
bool partial_consistent(const Structure& src, const Structure& tgt,
                        std::span<const Element> image, int depth) {
    const Element limit = static_cast<Element>(depth);
    SubsetMask assigned;
    for (Element x = 0; x <= limit; ++x) assigned.insert(x);

    std::vector<Element> t(static_cast<std::size_t>(src.m()), 0);
    std::vector<Element> mapped(static_cast<std::size_t>(src.m()));
    do {
        std::transform(t.begin(), t.end(), mapped.begin(),
                       [&](Element x) { return image[static_cast<std::size_t>(x)]; });
        const SubsetMask value = eval_f(src, t);
        const SubsetMask rhs = eval_f(tgt, mapped);
        SubsetMask mapped_known;
        (value & assigned).for_each([&](Element z) {
            mapped_known.insert(image[static_cast<std::size_t>(z)]);
        });
        if (!mapped_known.is_subset_of(rhs)) return false;
        if (value.is_subset_of(assigned) && mapped_known != rhs) return false;
    } while (next_tuple(std::span<Element>(t), depth + 1));

    std::vector<Element> u(static_cast<std::size_t>(src.n()), 0);
    std::vector<Element> mapped_u(static_cast<std::size_t>(src.n()));
    do {
        const Element out = eval_g(src, u);
        if (out <= limit) {
            std::transform(u.begin(), u.end(), mapped_u.begin(),
                           [&](Element x) { return image[static_cast<std::size_t>(x)]; });
            if (image[static_cast<std::size_t>(out)] != eval_g(tgt, mapped_u)) return false;
        }
    } while (next_tuple(std::span<Element>(u), depth + 1));
    return true;
}

struct HomSearch {
    StructureRef source;
    StructureRef target;
    HomSearchMode mode;
    std::vector<Mapping> results;
    std::vector<Element> image;
    bool stop = false;

    bool leaf_accept() {
        Mapping map{source, target, image};
        if (!satisfies(map, /*inclusion_only=*/false)) return false;
        if (mode == HomSearchMode::iso) {
            std::vector<Element> inverse(image.size());
            std::vector<bool> seen(image.size(), false);
            for (std::size_t x = 0; x < image.size(); ++x) {
                const auto y = static_cast<std::size_t>(image[x]);
                if (seen[y]) return false;
                seen[y] = true;
                inverse[y] = static_cast<Element>(x);
            }
            Mapping inv{target, source, std::move(inverse)};
            if (!satisfies(inv, /*inclusion_only=*/false)) return false;
        }
        results.push_back(std::move(map));
        if (mode == HomSearchMode::first) stop = true;
        return true;
    }

    void descend(int depth) {
        if (stop) return;
        const int sk = source->k();
        if (depth == sk) {
            leaf_accept();
            return;
        }
        for (Element y = 0; y < target->k() && !stop; ++y) {
            if (mode == HomSearchMode::iso) {
                bool taken = false;
                for (int x = 0; x < depth; ++x)
                    if (image[static_cast<std::size_t>(x)] == y) taken = true;
                if (taken) continue;
            }
            image[static_cast<std::size_t>(depth)] = y;
            if (!partial_consistent(*source, *target, image, depth)) continue;
            descend(depth + 1);
        }
    }
};

std::uint64_t pow_capped(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && n > cap / base) return cap + 1;
        n *= base;
    }
    return n;
}

}  // namespace

Mapping identity_mapping(StructureRef s) {
    if (!s) throw DomainError("identity_mapping: null structure");
    std::vector<Element> image(static_cast<std::size_t>(s->k()));
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = static_cast<Element>(x);
    return Mapping{s, s, std::move(image)};
}

SubsetMask map_subset(const Mapping& map, SubsetMask a) {
    SubsetMask out;
    a.for_each([&](Element x) { out.insert(map(x)); });
    return out;
}

bool is_homomorphism(const Mapping& map) {
    validate_mapping(map);
    require_same_arities(*map.source, *map.target);
    return satisfies(map, /*inclusion_only=*/false);
}

bool is_inclusion_homomorphism(const Mapping& map) {
    validate_mapping(map);
    require_same_arities(*map.source, *map.target);
    return satisfies(map, /*inclusion_only=*/true);
}

Mapping compose(const Mapping& first, const Mapping& second) {
    validate_mapping(first);
    validate_mapping(second);
    if (!(*first.target == *second.source))
        throw DomainError("compose: first.target and second.source are different structures");
    std::vector<Element> image(first.image.size());
    for (std::size_t x = 0; x < image.size(); ++x)
        image[x] = second(first(static_cast<Element>(x)));
    return Mapping{first.source, second.target, std::move(image)};
}

std::vector<Mapping> enumerate_homomorphisms(StructureRef source, StructureRef target,
                                             HomSearchMode mode, std::uint64_t max_maps,
                                             const SweepOptions& opt) {
    if (!source || !target) throw DomainError("enumerate_homomorphisms: null structure");
    require_same_arities(*source, *target);
    if (mode == HomSearchMode::iso && source->k() != target->k()) return {};

    const std::uint64_t space =
        pow_capped(static_cast<std::uint64_t>(target->k()), source->k(), max_maps);
    if (space > max_maps)
        throw ResourceError("enumerate_homomorphisms: search space target_k^source_k exceeds cap " +
                            std::to_string(max_maps));

    // Below k=3 the search space is tiny; plain enumeration doubles as the
    // reference path for the backtracker.
    if (source->k() < 3) {
        std::vector<Mapping> results;
        std::vector<Element> image(static_cast<std::size_t>(source->k()), 0);
        do {
            Mapping map{source, target, image};
            if (!satisfies(map, /*inclusion_only=*/false)) continue;
            if (mode == HomSearchMode::iso) {
                std::vector<bool> seen(image.size(), false);
                bool bijective = static_cast<int>(image.size()) == target->k();
                for (Element y : image) {
                    if (bijective && seen[static_cast<std::size_t>(y)]) bijective = false;
                    if (bijective) seen[static_cast<std::size_t>(y)] = true;
                }
                if (!bijective) continue;
                std::vector<Element> inverse(image.size());
                for (std::size_t x = 0; x < image.size(); ++x)
                    inverse[static_cast<std::size_t>(image[x])] = static_cast<Element>(x);
                if (!satisfies(Mapping{target, source, inverse}, false)) continue;
            }
            results.push_back(std::move(map));
            if (mode == HomSearchMode::first) break;
        } while (next_tuple(std::span<Element>(image), target->k()));
        return results;
    }

    // The tree splits at the first assignment level; subtree results merge
    // in image[0] order, so the output is identical for any job count.
    // first mode stays sequential to preserve early-exit semantics.
    const int first_level = target->k();
    const int jobs = mode == HomSearchMode::first
                         ? 1
                         : std::min(detail::effective_jobs(opt.jobs, static_cast<std::size_t>(first_level)),
                                    first_level);
    if (jobs <= 1) {
        HomSearch search{source, target, mode, {},
                         std::vector<Element>(static_cast<std::size_t>(source->k()), 0), false};
        search.descend(0);
        return std::move(search.results);
    }

    std::vector<std::vector<Mapping>> parts(static_cast<std::size_t>(first_level));
    std::atomic<int> next_root{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (;;) {
                const int y = next_root.fetch_add(1);
                if (y >= first_level) break;
                HomSearch search{source, target, mode, {},
                                 std::vector<Element>(static_cast<std::size_t>(source->k()), 0),
                                 false};
                search.image[0] = static_cast<Element>(y);
                if (partial_consistent(*source, *target, search.image, 0)) search.descend(1);
                parts[static_cast<std::size_t>(y)] = std::move(search.results);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);

    std::vector<Mapping> results;
    for (auto& part : parts)
        for (auto& map : part) results.push_back(std::move(map));
    return results;
}

}  // namespace hyperforge
