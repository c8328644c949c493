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

#include "hyperdet/boundary.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyperdet {

namespace {

constexpr long long kMaxPartialSize = 5040;

void collect_monomials(int nvars, int degree, int pos, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
    if (pos == nvars - 1) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current[pos] = e;
        collect_monomials(nvars, degree - e, pos + 1, current, out);
    }
}

/// Stable move-max-axis-to-front permutation of the input tensor.
MultiMatrix leading_axis_first(const MultiMatrix& a) {
    const auto& dims = a.format().dims;
    const int lead = static_cast<int>(std::max_element(dims.begin(), dims.end()) - dims.begin());
    if (lead == 0) return a;
    std::vector<int> order;
    order.push_back(lead);
    for (int i = 0; i < a.order(); ++i) {
        if (i != lead) order.push_back(i);
    }
    return transpose(a, order);
}

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    if (nvars < 1 || degree < 0) throw domain_error("invalid monomial enumeration request");
    std::vector<std::vector<int>> out;
    std::vector<int> current(nvars, 0);
    collect_monomials(nvars, degree, 0, current, out);
    return out;
}

ExactMatrix build_partial_A(const MultiMatrix& a, std::span<const int> factor_order) {
    if (!is_boundary(a.format())) {
        throw format_error("not a boundary format: " + a.format().str());
    }
    const MultiMatrix t = leading_axis_first(a);
    const int p = t.order() - 1;
    const int d0 = t.dim(0);

    if (static_cast<int>(factor_order.size()) != p) {
        throw dimension_error("factor order must list each of the factors 1..p once");
    }
    std::vector<bool> seen(p + 1, false);
    for (int f : factor_order) {
        if (f < 1 || f > p || seen[f]) throw domain_error("factor order is not a permutation of 1..p");
        seen[f] = true;
    }

    // Symmetric-power degrees: the first factor in the order gets m = 0,
    // each later one the sum of the k's of its predecessors.
    std::vector<int> m(p + 1, 0);
    int acc = 0;
    for (int f : factor_order) {
        m[f] = acc;
        acc += t.dim(f) - 1;
    }

    std::vector<std::vector<std::vector<int>>> source_mons(p + 1), target_mons(p + 1);
    std::vector<std::map<std::vector<int>, int>> target_pos(p + 1);
    long long n_source = d0, n_target = 1;
    for (int f = 1; f <= p; ++f) {
        source_mons[f] = monomials_of_degree(t.dim(f), m[f]);
        target_mons[f] = monomials_of_degree(t.dim(f), m[f] + 1);
        for (size_t i = 0; i < target_mons[f].size(); ++i) target_pos[f][target_mons[f][i]] = static_cast<int>(i);
        n_source *= static_cast<long long>(source_mons[f].size());
        n_target *= static_cast<long long>(target_mons[f].size());
    }
    if (n_source != n_target) throw inconsistency_error("source/target dimensions differ");
    if (n_source > kMaxPartialSize) {
        throw domain_error("boundary determinant size " + std::to_string(n_source) +
                           " exceeds the cap of " + std::to_string(kMaxPartialSize));
    }
    const int n = static_cast<int>(n_source);

    ExactMatrix matrix(n, n);
    std::vector<int> mon_choice(p, 0);  // index into source_mons[f] for f = 1..p
    std::vector<int> mon_dims(p);
    for (int f = 1; f <= p; ++f) mon_dims[f - 1] = static_cast<int>(source_mons[f].size());

    std::vector<int> j(p + 1, 0);       // tensor multi-index, j[0] = dual basis index
    std::vector<int> h;                 // target monomial scratch
    do {
        long long col_base = 0;
        for (int f = 1; f <= p; ++f) col_base = col_base * mon_dims[f - 1] + mon_choice[f - 1];
        col_base *= d0;
        for (int r = 0; r < d0; ++r) {
            const int col = static_cast<int>(col_base) + r;
            std::fill(j.begin(), j.end(), 0);
            j[0] = r;
            // run over the remaining axes of the tensor
            bool more = true;
            while (more) {
                const Rational& coeff = t.at(j);
                if (coeff != 0) {
                    long long row = 0;
                    for (int f = 1; f <= p; ++f) {
                        h = source_mons[f][mon_choice[f - 1]];
                        h[j[f]] += 1;
                        row = row * static_cast<long long>(target_mons[f].size()) + target_pos[f].at(h);
                    }
                    matrix(static_cast<int>(row), col) += coeff;
                }
                more = false;
                for (int f = p; f >= 1; --f) {
                    if (++j[f] < t.dim(f)) {
                        more = true;
                        break;
                    }
                    j[f] = 0;
                }
            }
        }
    } while (next_index(mon_dims, mon_choice));
    return matrix;
}

ExactMatrix build_partial_A(const MultiMatrix& a) {
    std::vector<int> order(a.order() - 1);
    std::iota(order.begin(), order.end(), 1);
    return build_partial_A(a, order);
}

Rational hyperdet_boundary(const MultiMatrix& a) {
    return exact_determinant(build_partial_A(a));
}

Rational cayley_3x2x2(const MultiMatrix& a) {
    if (a.format() != Format{3, 2, 2}) {
        throw format_error("cayley_3x2x2 requires format 3x2x2");
    }
    const ExactMatrix f = flattening(a, 0);  // 3x4, columns (j,k) = 00,01,10,11
    auto minor_det = [&](int drop_col) {
        ExactMatrix m(3, 3);
        for (int i = 0; i < 3; ++i) {
            for (int c = 0, tc = 0; c < 4; ++c) {
                if (c == drop_col) continue;
                m(i, tc++) = f(i, c);
            }
        }
        return exact_determinant(m);
    };
    return minor_det(1) * minor_det(2) - minor_det(0) * minor_det(3);
}

MultiMatrix identity_tensor(const Format& format) {
    if (!is_boundary(format)) {
        throw format_error("identity tensor requires a boundary format");
    }
    const auto& dims = format.dims;
    const int lead = static_cast<int>(std::max_element(dims.begin(), dims.end()) - dims.begin());
    MultiMatrix a{format};
    std::vector<int> idx(format.order(), 0);
    do {
        int rest = 0;
        for (int i = 0; i < format.order(); ++i) {
            if (i != lead) rest += idx[i];
        }
        if (idx[lead] == rest) a.at(idx) = 1;
    } while (next_index(format.dims, idx));
    return a;
}

}  // namespace hyperdet
