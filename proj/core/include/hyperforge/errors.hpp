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
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperforge {

/// Base class for all hyperforge errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arguments outside their domain: bad element index, arity mismatch,
/// empty subset where P*(H) is required, and similar caller mistakes.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A tuple of the wrong length for the operation's arity.
struct ArityError : DomainError {
    explicit ArityError(const std::string& what) : DomainError(what) {}
};

/// An empty subset passed where a non-empty one is required.
struct EmptySubsetError : DomainError {
    explicit EmptySubsetError(const std::string& what) : DomainError(what) {}
};

/// A documented precondition of an operation does not hold
/// (e.g. quotient by a relation that is not a congruence).
struct PreconditionError : DomainError {
    explicit PreconditionError(const std::string& what) : DomainError(what) {}
};

/// Structure-file or table validation failure. Carries the offending flat
/// table index and its decoded tuple when the failure is tied to an entry.
struct ValidationError : Error {
    std::optional<std::size_t> flat_index;
    std::vector<int> tuple;

    explicit ValidationError(const std::string& what) : Error(what) {}
    ValidationError(const std::string& what, std::size_t flat, std::vector<int> decoded)
        : Error(what), flat_index(flat), tuple(std::move(decoded)) {}
};

/// A configurable cap (subset sweep, partition sweep, search space) was exceeded.
struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error(what) {}
};

/// Internal consistency violation; indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace hyperforge
