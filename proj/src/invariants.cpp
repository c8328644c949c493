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

#include "hyperdet/invariants.hpp"

#include "hyperdet/exact_matrix.hpp"

namespace hyperdet {

std::vector<int> multilinear_rank(const MultiMatrix& a) {
    std::vector<int> ranks(a.order());
    for (int i = 0; i < a.order(); ++i) ranks[i] = exact_rank(flattening(a, i));
    return ranks;
}

ExactMatrix strassen_matrix(const MultiMatrix& a, int axis) {
    if (a.format() != Format{3, 3, 3}) {
        throw format_error("strassen matrix requires format 3x3x3");
    }
    if (axis < 0 || axis > 2) throw domain_error("axis out of range");
    const ExactMatrix s0 = as_matrix(slice(a, axis, 0));
    const ExactMatrix s1 = as_matrix(slice(a, axis, 1));
    const ExactMatrix s2 = as_matrix(slice(a, axis, 2));

    ExactMatrix m(9, 9);
    auto put = [&](int bi, int bj, const ExactMatrix& block, int sign) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(3 * bi + i, 3 * bj + j) = Rational(sign) * block(i, j);
    };
    put(0, 1, s2, 1);
    put(0, 2, s1, -1);
    put(1, 0, s2, -1);
    put(1, 2, s0, 1);
    put(2, 0, s1, 1);
    put(2, 1, s0, -1);
    return m;
}

Rational strassen_invariant(const MultiMatrix& a, int axis) {
    return exact_determinant(strassen_matrix(a, axis));
}

std::vector<Rational> aronhold_pfaffians(const Polynomial& cubic) {
    if (cubic.nvars() != 3 || cubic.is_zero() || !cubic.is_homogeneous(3) ||
        cubic.total_degree() != 3) {
        throw format_error("expected a nonzero homogeneous cubic in 3 variables");
    }
    const MultiMatrix a = symmetric_embed(cubic);
    const ExactMatrix m = strassen_matrix(a, 0);
    std::vector<Rational> pfaffians;
    pfaffians.reserve(9);
    for (int r = 0; r < 9; ++r) {
        pfaffians.push_back(pfaffian(m.minor_matrix(r, r)));
    }
    return pfaffians;
}

}  // namespace hyperdet
