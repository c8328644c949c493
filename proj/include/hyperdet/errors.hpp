/*
 * Copyright 2026 The hyperdet authors
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

#ifndef HYPERDET_ERRORS_HPP
#define HYPERDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperdet {

/// Base class of every exception thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape mismatch between two objects (matrix sizes, vector lengths, ...).
struct dimension_error : error {
    using error::error;
};

/// An operation was asked for a tensor format it does not support.
struct format_error : error {
    using error::error;
};

/// Invalid argument values (zero tensor, zero vector, out-of-range index,
/// parameter outside the operation's domain, size caps).
struct domain_error : error {
    using error::error;
};

/// Structural requirement violated (skew-symmetry, symmetry, ...).
struct structure_error : error {
    using error::error;
};

/// A mathematical precondition does not hold (singular pivot slice,
/// non-regular pencil, ...).
struct precondition_error : error {
    using error::error;
};

/// An internal identity that must hold by theory failed; signals a bug.
struct inconsistency_error : error {
    using error::error;
};

/// Malformed textual or JSON input.
struct parse_error : error {
    using error::error;
};

}  // namespace hyperdet

#endif
