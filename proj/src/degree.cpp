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

#include "hyperdet/degree.hpp"

#include <algorithm>
#include <numeric>

namespace hyperdet {

namespace {

void require_order2(const Format& format) {
    if (format.order() < 2) throw format_error("need at least two axes");
}

std::vector<int> k_vector(const Format& format) {
    std::vector<int> k(format.dims.size());
    for (size_t i = 0; i < k.size(); ++i) k[i] = format.dims[i] - 1;
    return k;
}

}  // namespace

FormatClass classify(const Format& format) {
    require_order2(format);
    const auto k = k_vector(format);
    const int max_k = *std::max_element(k.begin(), k.end());
    const int sum_rest = std::accumulate(k.begin(), k.end(), 0) - max_k;
    FormatClass result;
    result.format = format;
    result.exists = max_k <= sum_rest;
    result.boundary = max_k == sum_rest;
    result.N = result.exists ? hyperdet_degree(format) : Integer(0);
    return result;
}

Integer hyperdet_degree(const Format& format) {
    require_order2(format);
    const auto k = k_vector(format);
    const int nv = static_cast<int>(k.size());
    const int D = std::accumulate(k.begin(), k.end(), 0);

    // Elementary symmetric polynomials e_0..e_nv in z_0..z_{nv-1}.
    std::vector<Polynomial> e(nv + 1, Polynomial(nv));
    e[0] = Polynomial::constant(nv, 1);
    for (int v = 0; v < nv; ++v) {
        const Polynomial zv = Polynomial::variable(nv, v);
        for (int i = std::min(v + 1, nv); i >= 1; --i) {
            e[i] += e[i - 1] * zv;
        }
    }

    Polynomial p(nv);
    for (int i = 2; i <= nv; ++i) p += e[i] * Rational(i - 1);

    const Polynomial series = series_inverse_square(p, D);
    const Rational coeff = series.coefficient(k);
    if (coeff.get_den() != 1) throw inconsistency_error("generating function gave a non-integer");
    return coeff.get_num();
}

Integer boundary_degree(const Format& format) {
    require_order2(format);
    if (!is_boundary(format)) throw format_error("not a boundary format: " + format.str());
    auto k = k_vector(format);
    std::sort(k.begin(), k.end(), std::greater<int>());
    Integer n = factorial(static_cast<unsigned long>(k[0]) + 1);
    for (size_t i = 1; i < k.size(); ++i) n /= factorial(static_cast<unsigned long>(k[i]));
    return n;
}

Integer slice_degree(const Format& format, int axis) {
    require_order2(format);
    if (axis < 0 || axis >= format.order()) throw domain_error("axis out of range");
    const FormatClass fc = classify(format);
    if (!fc.exists) throw domain_error("hyperdeterminant does not exist for " + format.str());
    if (fc.N % format.dims[axis] != 0) {
        throw inconsistency_error("slice degree is not integral");
    }
    return fc.N / format.dims[axis];
}

}  // namespace hyperdet
