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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hyperforge/errors.hpp"

namespace hyperforge {

/// Index of an element of the carrier set, in [0, k).
using Element = int;

/// Universe sizes are capped so a subset always fits one machine word and
/// union/intersection/subset tests are single instructions.
inline constexpr int kMaxUniverse = 64;

/// A subset of a universe [0, k) as a 64-bit characteristic word.
///
/// The mask itself does not know k; tables and structures enforce that all
/// set bits lie below their universe size. An all-zero mask is the empty set;
/// operations whose contract requires a member of P*(H) reject it explicitly.
class SubsetMask {
public:
    constexpr SubsetMask() = default;

    static constexpr SubsetMask from_raw(std::uint64_t bits) { return SubsetMask(bits); }

    static constexpr SubsetMask single(Element x) {
        check_range(x);
        return SubsetMask(std::uint64_t{1} << x);
    }

    static SubsetMask full(int k) {
        if (k <= 0 || k > kMaxUniverse) throw DomainError("SubsetMask::full: universe size out of range");
        return SubsetMask(k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
    }

    static SubsetMask of(std::initializer_list<Element> xs) {
        SubsetMask m;
        for (Element x : xs) m.insert(x);
        return m;
    }

    constexpr bool contains(Element x) const { return x >= 0 && x < 64 && ((bits_ >> x) & 1u); }
    constexpr void insert(Element x) {
        check_range(x);
        bits_ |= std::uint64_t{1} << x;
    }
    constexpr void erase(Element x) {
        check_range(x);
        bits_ &= ~(std::uint64_t{1} << x);
    }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr std::uint64_t raw() const { return bits_; }

    /// Lowest element; the mask must be non-empty.
    Element first() const {
        if (empty()) throw EmptySubsetError("SubsetMask::first on empty mask");
        return std::countr_zero(bits_);
    }

    /// Highest element; the mask must be non-empty.
    Element last() const {
        if (empty()) throw EmptySubsetError("SubsetMask::last on empty mask");
        return 63 - std::countl_zero(bits_);
    }

    constexpr bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }

    friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
    friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
    friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(SubsetMask a, SubsetMask b) { return a.bits_ != b.bits_; }
    constexpr SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
    constexpr SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }

    /// Visit members in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t w = bits_; w != 0; w &= w - 1) fn(Element(std::countr_zero(w)));
    }

    /// Members in ascending order.
    std::vector<Element> to_vector() const {
        std::vector<Element> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](Element x) { v.push_back(x); });
        return v;
    }

private:
    constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

    static constexpr void check_range(Element x) {
        if (x < 0 || x >= kMaxUniverse)
            throw DomainError("subset element " + std::to_string(x) + " outside [0, 64)");
    }

    std::uint64_t bits_ = 0;
};

}  // namespace hyperforge
