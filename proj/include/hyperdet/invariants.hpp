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

#ifndef HYPERDET_INVARIANTS_HPP
#define HYPERDET_INVARIANTS_HPP

#include "hyperdet/tensor.hpp"

namespace hyperdet {

/// Ranks of all flattenings; the first equations of the secant varieties.
std::vector<int> multilinear_rank(const MultiMatrix& a);

/// The 9x9 block matrix [[0, A2, -A1], [-A2, 0, A0], [A1, -A0, 0]] built
/// from the slices A_i of a 3x3x3 tensor along `axis`; skew-symmetric
/// exactly when the slices are symmetric.
ExactMatrix strassen_matrix(const MultiMatrix& a, int axis = 0);

/// Degree-9 invariant of 3x3x3 tensors: det of strassen_matrix. Vanishes
/// exactly on tensors of border rank <= 4; the three axes give the same
/// vanishing locus.
Rational strassen_invariant(const MultiMatrix& a, int axis = 0);

/// The nine pfaffians of the 8x8 principal submatrices of the skew matrix
/// attached to a plane cubic (via its symmetric 3x3x3 tensor). All vanish
/// exactly when the cubic is a sum of three cubes (closure); each is of
/// degree 4 in the coefficients of the cubic.
std::vector<Rational> aronhold_pfaffians(const Polynomial& cubic);

}  // namespace hyperdet

#endif
