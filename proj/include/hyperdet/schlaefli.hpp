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

#ifndef HYPERDET_SCHLAEFLI_HPP
#define HYPERDET_SCHLAEFLI_HPP

#include "hyperdet/resultant.hpp"
#include "hyperdet/tensor.hpp"

namespace hyperdet {

/// det(x0*A0 + ... + x_{a-1}*A_{a-1}) for an a x b x b tensor, the A_i being
/// its slices along axis 0: a homogeneous form of degree b in a variables.
Polynomial slice_determinant_poly(const MultiMatrix& a);

struct SchlaefliResult {
    Rational value;
    /// Set when the slice determinant vanishes identically, in which case
    /// value is 0 and no discriminant was taken.
    bool pencil_singular = false;
};

/// Hyperdeterminant of a 2 x b x b tensor as the binary discriminant of the
/// slice determinant. For b = 2 this equals cayley_2x2x2 exactly; for larger
/// b it is the canonical normalization of this module.
SchlaefliResult hyperdet_2bb(const MultiMatrix& a);

/// Cayley's closed quartic formula for the 2x2x2 hyperdeterminant
/// (the 12-term expansion).
Rational cayley_2x2x2(const MultiMatrix& a);

/// Symmetric 3x3 matrix C of the quadratic form det(x0*A0+x1*A1+x2*A2) of a
/// 3x2x2 tensor; det C = kConicDetVsBoundary * hyperdet_boundary(A).
ExactMatrix conic_matrix_3x2x2(const MultiMatrix& a);

/// det(conic_matrix_3x2x2) == (1/4) * hyperdet_boundary, pinned on the
/// diagonal-support family and asserted across random samples in tests.
inline const Rational kConicDetVsBoundary = Rational(1, 4);

}  // namespace hyperdet

#endif
