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

#include "hyperdet/resultant.hpp"

namespace hyperdet {

ExactMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, int deg_f, int deg_g) {
    if (deg_f < 0 || deg_g < 0) throw domain_error("negative formal degree");
    if (deg_f == 0 && deg_g == 0) {
        throw domain_error("resultant of two constants is undefined");
    }
    const auto cf = univariate_coefficients(f, deg_f);
    const auto cg = univariate_coefficients(g, deg_g);
    const int n = deg_f + deg_g;
    ExactMatrix s(n, n);
    for (int r = 0; r < deg_g; ++r) {
        for (int i = 0; i <= deg_f; ++i) s(r, r + i) = cf[deg_f - i];
    }
    for (int r = 0; r < deg_f; ++r) {
        for (int i = 0; i <= deg_g; ++i) s(deg_g + r, r + i) = cg[deg_g - i];
    }
    return s;
}

Rational sylvester_resultant(const Polynomial& f, const Polynomial& g, int deg_f, int deg_g) {
    return exact_determinant(sylvester_matrix(f, g, deg_f, deg_g));
}

Rational sylvester_resultant(const Polynomial& f, const Polynomial& g) {
    const int df = f.total_degree();
    const int dg = g.total_degree();
    if (df < 1 && dg < 1) throw domain_error("resultant of two constants is undefined");
    return sylvester_resultant(f, g, df < 0 ? 0 : df, dg < 0 ? 0 : dg);
}

namespace {

// Dehomogenize a binary form at x1 = 1 into a univariate polynomial in x0.
Polynomial dehomogenize(const Polynomial& f) {
    Polynomial u(1);
    for (const auto& [e, c] : f.terms()) u.add_term({e[0]}, c);
    return u;
}

}  // namespace

Rational binary_discriminant(const Polynomial& f, int formal_degree) {
    const int d = formal_degree;
    if (f.nvars() != 2) throw format_error("discriminant requires a form in exactly 2 variables");
    if (d < 2) throw format_error("discriminant requires degree >= 2");
    if (!f.is_homogeneous(d)) {
        throw format_error("discriminant requires a homogeneous form of the declared degree");
    }
    const Polynomial fx = dehomogenize(f.derivative(0));
    const Polynomial fy = dehomogenize(f.derivative(1));
    const Rational res = sylvester_resultant(fx, fy, d - 1, d - 1);
    const int sign = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    Rational disc = Rational(sign) * res / Rational(integer_pow(d, static_cast<unsigned long>(d - 2)));
    disc.canonicalize();
    return disc;
}

Rational binary_discriminant(const Polynomial& f) {
    return binary_discriminant(f, f.total_degree());
}

}  // namespace hyperdet
