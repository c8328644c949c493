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

#ifndef HYPERDET_RESULTANT_HPP
#define HYPERDET_RESULTANT_HPP

#include "hyperdet/exact_matrix.hpp"
#include "hyperdet/polynomial.hpp"

namespace hyperdet {

/// Sylvester matrix of two univariate polynomials at the given formal
/// degrees (>= the actual degrees; leading zeros allowed).
ExactMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, int deg_f, int deg_g);

/// Resultant as the Sylvester determinant, formal degrees as declared.
Rational sylvester_resultant(const Polynomial& f, const Polynomial& g, int deg_f, int deg_g);

/// Resultant at the actual degrees. Errors when both inputs are constant.
Rational sylvester_resultant(const Polynomial& f, const Polynomial& g);

/// Discriminant of a binary form of degree d >= 2, normalized as
///   Disc(f) = (-1)^(d(d-1)/2) * Res(df/dx0, df/dx1) / d^(d-2),
/// so that Disc(a*x0^2 + b*x0*x1 + c*x1^2) = b^2 - 4ac. Vanishes exactly
/// when f has a repeated root on the projective line.
Rational binary_discriminant(const Polynomial& f, int formal_degree);

/// Same, taking d from the actual total degree of f.
Rational binary_discriminant(const Polynomial& f);

}  // namespace hyperdet

#endif
