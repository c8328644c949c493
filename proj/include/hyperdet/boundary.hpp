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

#ifndef HYPERDET_BOUNDARY_HPP
#define HYPERDET_BOUNDARY_HPP

#include "hyperdet/degree.hpp"
#include "hyperdet/tensor.hpp"

namespace hyperdet {

/// All monomial exponent vectors of the given total degree, in descending
/// lexicographic order (x0^m first). This fixes every basis order below.
std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree);

/// Matrix of the multiplication map whose determinant is the boundary-format
/// hyperdeterminant. The largest axis is moved to the front (stable), the
/// remaining factors keep their order; factor_order (a permutation of 1..p
/// over those factors) decides the symmetric-power degrees m:
/// m[factor_order[0]] = 0 and each later factor accumulates the k's of the
/// earlier ones. Columns are indexed by (monomial tuple, dual basis vector of
/// the leading factor), rows by the target monomial tuple, both enumerated
/// product-order with the last factor fastest and monomials in
/// monomials_of_degree order.
ExactMatrix build_partial_A(const MultiMatrix& a, std::span<const int> factor_order);

/// Canonical factor order 1..p (factors as given).
ExactMatrix build_partial_A(const MultiMatrix& a);

/// The boundary-format hyperdeterminant Det(A) = det of build_partial_A
/// under the canonical factor order. Zero exactly on degenerate matrices.
Rational hyperdet_boundary(const MultiMatrix& a);

/// Closed 3x2x2 formula det(A01)det(A10) - det(A00)det(A11) on the 3x3
/// minors of the 3x4 flattening along axis 0 (column (j,k) removed for
/// minor A_jk). Equals hyperdet_boundary exactly (constant pinned below).
Rational cayley_3x2x2(const MultiMatrix& a);

/// cayley_3x2x2 == kCayley3x2x2VsBoundary * hyperdet_boundary (pinned once
/// on the diagonal-support family, asserted across random samples in tests).
inline const Rational kCayley3x2x2VsBoundary = 1;

/// Identity matrix of a boundary format: entry 1 when the index along the
/// largest axis equals the sum of the others, 0 elsewhere. For 2xkx(k+1)
/// its two slices are the shifted identity staircase blocks.
MultiMatrix identity_tensor(const Format& format);

}  // namespace hyperdet

#endif
