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

#ifndef HYPERDET_TEST_SUPPORT_HPP
#define HYPERDET_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "hyperdet/exact_matrix.hpp"
#include "hyperdet/polynomial.hpp"
#include "hyperdet/tensor.hpp"

namespace hyperdet::testing {

/// Canonicalized fraction; mpq_class(p, q) alone does not reduce and GMP
/// comparisons need lowest terms.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline MultiMatrix random_tensor(const Format& format, std::mt19937& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    MultiMatrix a{format};
    for (auto& e : a.entries()) e = dist(rng);
    return a;
}

inline ExactMatrix random_matrix(int rows, int cols, std::mt19937& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

inline ExactMatrix random_invertible(int n, std::mt19937& rng, int lo = -4, int hi = 4) {
    for (;;) {
        ExactMatrix m = random_matrix(n, n, rng, lo, hi);
        if (exact_determinant(m) != 0) return m;
    }
}

inline std::vector<Rational> random_vector(int n, std::mt19937& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Rational> v(n);
    bool nonzero = false;
    for (auto& e : v) {
        e = dist(rng);
        nonzero = nonzero || e != 0;
    }
    if (!nonzero) v[0] = 1;
    return v;
}

/// Pure tensor v_0 (x) v_1 (x) ... (x) v_p.
inline MultiMatrix rank_one(const Format& format, const std::vector<std::vector<Rational>>& vectors) {
    MultiMatrix a{format};
    std::vector<int> idx(format.order(), 0);
    do {
        Rational prod = 1;
        for (int i = 0; i < format.order(); ++i) prod *= vectors[i][idx[i]];
        a.at(idx) = prod;
    } while (next_index(format.dims, idx));
    return a;
}

inline MultiMatrix random_rank_one(const Format& format, std::mt19937& rng, int lo = -4, int hi = 4) {
    std::vector<std::vector<Rational>> vectors;
    for (int d : format.dims) vectors.push_back(random_vector(d, rng, lo, hi));
    return rank_one(format, vectors);
}

/// Cofactor-expansion determinant: the independent oracle for Bareiss.
inline Rational determinant_cofactor(const ExactMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m(0, 0);
    Rational total = 0;
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) != 0) {
            total += Rational(sign) * m(0, j) * determinant_cofactor(m.minor_matrix(0, j));
        }
        sign = -sign;
    }
    return total;
}

/// Plain rational Gaussian elimination; must agree with Bareiss exactly.
inline Rational determinant_gaussian(const ExactMatrix& input) {
    ExactMatrix m = input;
    const int n = m.rows();
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (m(i, k) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Univariate gcd degree over the rationals (Euclid). Coefficient lists are
/// ascending in the variable; returns the degree of gcd, -1 for gcd(0,0).
inline int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rational f = a.back() / b.back();
            const size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

/// Distinct projective roots of a binary form of formal degree d: square-free
/// dehomogenization and at most a simple root at infinity. Independent of the
/// discriminant route.
inline bool binary_form_squarefree(const Polynomial& f, int d) {
    if (f.is_zero()) return false;
    const auto c = binary_form_coefficients(f, d);
    int top = -1;
    for (int i = d; i >= 0; --i) {
        if (c[i] != 0) {
            top = i;
            break;
        }
    }
    if (d - top >= 2) return false;  // root at infinity with multiplicity >= 2
    std::vector<Rational> q(c.begin(), c.begin() + top + 1);
    std::vector<Rational> dq;
    for (int i = 1; i <= top; ++i) dq.push_back(Rational(i) * q[i]);
    if (dq.empty()) return top + (d - top) <= 1;
    return univariate_gcd_degree(q, dq) == 0;
}

/// Binary form lead * prod_i (x0 - r_i x1); disc = lead^(2d-2) prod (r_i-r_j)^2.
inline Polynomial binary_form_from_roots(const Rational& lead, const std::vector<Rational>& roots) {
    Polynomial f = Polynomial::constant(2, lead);
    for (const Rational& r : roots) {
        Polynomial factor(2);
        factor.add_term({1, 0}, 1);
        factor.add_term({0, 1}, -r);
        f *= factor;
    }
    return f;
}

/// Unit tensor with a single 1 at the given flat position.
inline MultiMatrix unit_tensor(const Format& format, size_t flat) {
    MultiMatrix u{format};
    u.entries()[flat] = 1;
    return u;
}

}  // namespace hyperdet::testing

#endif
