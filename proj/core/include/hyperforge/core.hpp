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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperforge/errors.hpp"
#include "hyperforge/subset_mask.hpp"

namespace hyperforge {

/// Hard cap on dense table length (k^arity entries).
inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 24;

/// Hard cap on operation arity; keeps (2*arity - 1)-tuples within fixed
/// sweep buffers.
inline constexpr int kMaxArity = 32;

/// k^arity with an overflow/size guard. Throws DomainError when the table
/// would exceed kMaxTableEntries.
std::size_t table_size(int k, int arity);

/// Row-major mixed-radix address of a tuple over [0, k).
/// Bijective onto [0, k^len); tuple_decode is the inverse.
std::size_t tuple_index(std::span<const Element> tuple, int k);

/// Inverse of tuple_index: writes the tuple for a flat address.
void tuple_decode(std::size_t index, int k, std::span<Element> out);
std::vector<Element> tuple_decode(std::size_t index, int k, int len);

/// Odometer step through tuples in row-major order; returns false after the
/// last tuple wraps back to all zeros.
bool next_tuple(std::span<Element> tuple, int k);

/// Dense table of an m-ary hyperoperation f : H^m -> P*(H).
/// Entries are stored in row-major tuple order and are all non-empty;
/// emptiness is rejected at construction, never at check time.
class HyperOpTable {
public:
    HyperOpTable(int k, int arity, std::vector<SubsetMask> table);

    /// Fill from a callback mapping each tuple to its subset value.
    template <typename Fn>
    static HyperOpTable build(int k, int arity, Fn&& fn) {
        std::vector<SubsetMask> t(table_size(k, arity));
        std::vector<Element> tuple(static_cast<std::size_t>(arity), 0);
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] = fn(std::span<const Element>(tuple));
            next_tuple(std::span<Element>(tuple), k);
        }
        return HyperOpTable(k, arity, std::move(t));
    }

    int k() const { return k_; }
    int arity() const { return arity_; }
    std::size_t size() const { return table_.size(); }

    SubsetMask at_flat(std::size_t i) const { return table_[i]; }
    SubsetMask operator()(std::span<const Element> tuple) const;

    std::span<const SubsetMask> entries() const { return table_; }

    friend bool operator==(const HyperOpTable&, const HyperOpTable&) = default;

private:
    int k_;
    int arity_;
    std::vector<SubsetMask> table_;
};

/// Dense table of a single-valued n-ary operation g : H^n -> H.
class OpTable {
public:
    OpTable(int k, int arity, std::vector<Element> table);

    template <typename Fn>
    static OpTable build(int k, int arity, Fn&& fn) {
        std::vector<Element> t(table_size(k, arity));
        std::vector<Element> tuple(static_cast<std::size_t>(arity), 0);
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] = fn(std::span<const Element>(tuple));
            next_tuple(std::span<Element>(tuple), k);
        }
        return OpTable(k, arity, std::move(t));
    }

    int k() const { return k_; }
    int arity() const { return arity_; }
    std::size_t size() const { return table_.size(); }

    Element at_flat(std::size_t i) const { return table_[i]; }
    Element operator()(std::span<const Element> tuple) const;

    std::span<const Element> entries() const { return table_; }

    friend bool operator==(const OpTable&, const OpTable&) = default;

private:
    int k_;
    int arity_;
    std::vector<Element> table_;
};

/// The central triple (H, f, g): a finite universe of k elements with an
/// m-ary hyperoperation f and an n-ary operation g over it.
///
/// Immutable after construction; safe to share read-only across workers.
class Structure {
public:
    Structure(HyperOpTable f, OpTable g,
              std::optional<bool> checked_semihyperring = std::nullopt);

    int k() const { return f_.k(); }
    int m() const { return f_.arity(); }
    int n() const { return g_.arity(); }

    const HyperOpTable& f() const { return f_; }
    const OpTable& g() const { return g_; }

    /// Cached verdict of the full axiom conjunction, when a factory ran the
    /// checks at construction time. Absent means "not checked", not "fails".
    std::optional<bool> checked_semihyperring() const { return checked_semihyperring_; }

    friend bool operator==(const Structure& a, const Structure& b) {
        return a.f_ == b.f_ && a.g_ == b.g_;
    }

private:
    HyperOpTable f_;
    OpTable g_;
    std::optional<bool> checked_semihyperring_;
};

/// f applied to an m-tuple of elements: pure table lookup.
SubsetMask eval_f(const Structure& s, std::span<const Element> tuple);

/// Subset extension of f: the union of f over the Cartesian product of the
/// argument subsets. Every argument must be non-empty; the result is non-empty.
SubsetMask eval_f_subsets(const Structure& s, std::span<const SubsetMask> args);

/// Subset extension with a single subset-valued slot: the union of f over
/// tuple with each member of a substituted at the slot. The checker sweeps
/// hit this shape almost exclusively; the slot digit is a fixed stride in
/// the flat index, so the union is a strided table scan.
SubsetMask eval_f_subset_slot(const Structure& s, std::span<const Element> tuple, int slot,
                              SubsetMask a);

/// g applied to an n-tuple of elements: pure table lookup.
Element eval_g(const Structure& s, std::span<const Element> tuple);

/// Elementwise image { g(prefix, a, suffix) : a in A }. The prefix, one slot
/// for A, and the suffix must together make up g's arity; A must be non-empty.
SubsetMask eval_g_subset(const Structure& s, std::span<const Element> prefix,
                         SubsetMask a, std::span<const Element> suffix);

}  // namespace hyperforge
