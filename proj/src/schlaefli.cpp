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

#include "hyperdet/schlaefli.hpp"

namespace hyperdet {

Polynomial slice_determinant_poly(const MultiMatrix& a) {
    if (a.order() != 3 || a.dim(1) != a.dim(2)) {
        throw format_error("slice determinant requires format a x b x b");
    }
    const int nslices = a.dim(0);
    const int b = a.dim(1);
    std::vector<std::vector<Polynomial>> pencil(b, std::vector<Polynomial>(b, Polynomial(nslices)));
    for (int j = 0; j < b; ++j) {
        for (int k = 0; k < b; ++k) {
            for (int i = 0; i < nslices; ++i) {
                const Rational& c = a.at({i, j, k});
                if (c != 0) {
                    std::vector<int> e(nslices, 0);
                    e[i] = 1;
                    pencil[j][k].add_term(e, c);
                }
            }
        }
    }
    return polynomial_determinant(pencil);
}

SchlaefliResult hyperdet_2bb(const MultiMatrix& a) {
    if (a.order() != 3 || a.dim(0) != 2 || a.dim(1) != a.dim(2) || a.dim(1) < 2) {
        throw format_error("hyperdet_2bb requires format 2 x b x b with b >= 2");
    }
    const Polynomial form = slice_determinant_poly(a);
    if (form.is_zero()) return {Rational(0), true};
    return {binary_discriminant(form, a.dim(1)), false};
}

Rational cayley_2x2x2(const MultiMatrix& a) {
    if (a.format() != Format{2, 2, 2}) {
        throw format_error("cayley_2x2x2 requires format 2x2x2");
    }
    auto e = [&](int i, int j, int k) { return a.at({i, j, k}); };
    const Rational diag1 = e(0, 0, 0) * e(1, 1, 1) - e(0, 1, 1) * e(1, 0, 0);
    const Rational diag2 = e(0, 1, 0) * e(1, 0, 1) - e(0, 0, 1) * e(1, 1, 0);
    const Rational front = e(0, 0, 0) * e(1, 0, 1) - e(0, 0, 1) * e(1, 0, 0);
    const Rational back = e(0, 1, 0) * e(1, 1, 1) - e(0, 1, 1) * e(1, 1, 0);
    return (diag1 + diag2) * (diag1 + diag2) - Rational(4) * front * back;
}

ExactMatrix conic_matrix_3x2x2(const MultiMatrix& a) {
    if (a.format() != Format{3, 2, 2}) {
        throw format_error("conic matrix requires format 3x2x2");
    }
    const Polynomial q = slice_determinant_poly(a);
    ExactMatrix c(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            std::vector<int> e(3, 0);
            e[i] += 1;
            e[j] += 1;
            Rational coeff = q.coefficient(e);
            if (i != j) coeff /= 2;
            c(i, j) = coeff;
            c(j, i) = coeff;
        }
    }
    return c;
}

}  // namespace hyperdet
