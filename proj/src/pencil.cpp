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

#include "hyperdet/pencil.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <tuple>

namespace hyperdet {

namespace {

void require_2kk(const MultiMatrix& a) {
    if (a.order() != 3 || a.dim(0) != 2 || a.dim(1) != a.dim(2)) {
        throw format_error("pencil operations require format 2 x k x k");
    }
}

// Characteristic binary form det(x0*A0 + x1*A1) of a matrix pair.
Polynomial pair_char_form(const ExactMatrix& a0, const ExactMatrix& a1) {
    const int k = a0.rows();
    std::vector<std::vector<Polynomial>> pencil(k, std::vector<Polynomial>(k, Polynomial(2)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (a0(i, j) != 0) pencil[i][j].add_term({1, 0}, a0(i, j));
            if (a1(i, j) != 0) pencil[i][j].add_term({0, 1}, a1(i, j));
        }
    }
    return polynomial_determinant(pencil);
}

Rational pencil_discriminant(const Polynomial& form, int k) {
    if (form.is_zero()) return 0;
    // A nonzero linear form always has one simple root.
    if (k < 2) return 1;
    return binary_discriminant(form, k);
}

// Roots of sum_i coeffs[i] t^i (leading coefficient nonzero) via the
// companion matrix.
std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg <= 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    const double lead = coeffs[deg].get_d();
    for (int i = 0; i < deg; ++i) {
        companion(i, deg - 1) = -coeffs[i].get_d() / lead;
        if (i > 0) companion(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    std::vector<std::complex<double>> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

Eigen::MatrixXcd to_complex(const ExactMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = std::complex<double>(m(i, j).get_d(), 0.0);
    return out;
}

Eigen::VectorXcd kernel_vector(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().col(m.cols() - 1);
}

}  // namespace

PencilReport analyze_pencil(const MultiMatrix& a, bool with_eigenvalues) {
    require_2kk(a);
    const int k = a.dim(1);
    PencilReport report;
    report.char_form = slice_determinant_poly(a);
    report.pencil_singular = report.char_form.is_zero();
    report.discriminant = pencil_discriminant(report.char_form, k);
    report.regular = !report.pencil_singular && report.discriminant != 0;
    if (with_eigenvalues && report.regular &&
        exact_determinant(as_matrix(slice(a, 0, 0))) != 0) {
        report.eigenvalues = weierstrass_eigenvalues(a);
    }
    return report;
}

std::vector<std::complex<double>> weierstrass_eigenvalues(const MultiMatrix& a) {
    require_2kk(a);
    const int k = a.dim(1);
    const ExactMatrix a0 = as_matrix(slice(a, 0, 0));
    if (exact_determinant(a0) == 0) {
        throw precondition_error("slice A0 is singular; eigenvalues need det(A0) != 0");
    }
    const Polynomial form = slice_determinant_poly(a);
    if (pencil_discriminant(form, k) == 0) {
        throw precondition_error("pencil is not regular (repeated root)");
    }
    // det(t*A0 - A1) = form(t, -1); leading coefficient det(A0) != 0.
    const auto binary = binary_form_coefficients(form, k);
    std::vector<Rational> coeffs(k + 1);
    for (int j = 0; j <= k; ++j) {
        coeffs[j] = (k - j) % 2 == 0 ? binary[j] : -binary[j];
    }
    return polynomial_roots(coeffs);
}

Diagonalization simultaneous_diagonalize(const ExactMatrix& a0, const ExactMatrix& a1, double tol) {
    const int k = a0.rows();
    if (!a0.is_square() || !a1.is_square() || a1.rows() != k) {
        throw dimension_error("expected two square matrices of equal size");
    }
    if (a0 != a0.transposed() || a1 != a1.transposed()) {
        throw structure_error("simultaneous diagonalization requires symmetric slices");
    }
    if (tol <= 0) throw domain_error("tolerance must be positive");

    const Polynomial form = pair_char_form(a0, a1);
    if (form.is_zero() || pencil_discriminant(form, k) == 0) {
        throw precondition_error("pencil is not regular: repeated eigenvalue");
    }
    if (exact_determinant(a0) == 0) {
        throw precondition_error("A0 is singular; shift the pencil (use A0 + c*A1) and retry");
    }

    // Finite roots of q(t) = det(A0 + t*A1) = form(1, t); with a regular
    // pencil a degree drop means one simple root at infinity (ker A1).
    const auto binary = binary_form_coefficients(form, k);
    std::vector<Rational> q(binary.rbegin(), binary.rend());  // q[j] = coeff of t^j
    while (!q.empty() && q.back() == 0) q.pop_back();
    const auto roots = polynomial_roots(q);

    const Eigen::MatrixXcd m0 = to_complex(a0);
    const Eigen::MatrixXcd m1 = to_complex(a1);
    Eigen::MatrixXcd c(k, k);
    int col = 0;
    for (const auto& root : roots) c.col(col++) = kernel_vector(m0 + root * m1);
    for (; col < k; ++col) c.col(col) = kernel_vector(m1);

    Diagonalization result;
    result.n = k;
    result.transform.resize(static_cast<size_t>(k) * k);
    result.d0.resize(k);
    result.d1.resize(k);
    const Eigen::MatrixXcd t0 = c.transpose() * m0 * c;
    const Eigen::MatrixXcd t1 = c.transpose() * m1 * c;
    double residual = 0.0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            result.transform[static_cast<size_t>(i) * k + j] = c(i, j);
            if (i != j) residual = std::max({residual, std::abs(t0(i, j)), std::abs(t1(i, j))});
        }
        result.d0[i] = t0(i, i);
        result.d1[i] = t1(i, i);
    }
    result.residual = residual;
    if (residual > tol) {
        throw inconsistency_error("diagonalization residual exceeds tolerance");
    }
    return result;
}

BlockDecomposition kronecker_blocks(long long b, long long c) {
    if (b < 2 || b >= c) throw domain_error("kronecker_blocks requires 2 <= b < c");
    const long long diff = c - b;
    const long long q = b / diff;
    const long long m = b - q * diff;
    const long long n = diff - m;
    if (n < 0 || m < 0 || b != n * q + m * (q + 1) || c != n * (q + 1) + m * (q + 2)) {
        throw inconsistency_error("kronecker block identities failed");
    }
    BlockDecomposition result;
    result.n = n;
    result.m = m;
    result.parameter = q;
    for (long long i = 0; i < n; ++i) result.blocks.push_back({2, q, q + 1});
    for (long long i = 0; i < m; ++i) result.blocks.push_back({2, q + 1, q + 2});
    return result;
}

std::vector<long long> kac_sequence(long long w, int jmax) {
    if (w < 2) throw domain_error("kac_sequence requires w >= 2");
    if (jmax < 1) throw domain_error("kac_sequence requires jmax >= 1");
    std::vector<long long> a{0, 1};
    a.reserve(jmax + 1);
    for (int j = 2; j <= jmax; ++j) {
        const long long next = w * a[j - 1] - a[j - 2];
        if (a[j - 1] > (1LL << 40)) throw domain_error("kac sequence overflow");
        a.push_back(next);
    }
    return a;
}

BlockDecomposition kac_blocks(long long w, long long s, long long t) {
    if (!(2 <= w && w <= s && s <= t)) throw domain_error("kac_blocks requires 2 <= w <= s <= t");
    if (t > 1000000) throw domain_error("kac_blocks inputs capped at 10^6");
    if (t * t - w * s * t + s * s < 1) {
        throw domain_error("kac inequality t^2 - w*s*t + s^2 >= 1 violated");
    }

    // a_j window [a_j, a_{j+1}, a_{j+2}]
    long long aj = 0, aj1 = 1, aj2 = w;
    struct Candidate {
        long long n, m, j;
    };
    std::vector<Candidate> found;
    for (long long j = 0; aj <= t; ++j) {
        // Solve s = n*a_j + m*a_{j+1}, t = n*a_{j+1} + m*a_{j+2}; the system
        // has determinant a_j*a_{j+2} - a_{j+1}^2 = -1.
        const long long n = t * aj1 - s * aj2;
        const long long m = s * aj1 - t * aj;
        if (n >= 0 && m >= 0 && n + m >= 1) {
            // Pure decompositions have two index representations; prefer
            // the (m, 0, j+1) form.
            if (n == 0) {
                found.push_back({m, 0, j + 1});
            } else {
                found.push_back({n, m, j});
            }
        }
        aj = aj1;
        aj1 = aj2;
        aj2 = w * aj1 - aj;
    }
    std::sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
        return std::tie(x.n, x.m, x.j) < std::tie(y.n, y.m, y.j);
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const Candidate& x, const Candidate& y) {
                                return x.n == y.n && x.m == y.m && x.j == y.j;
                            }),
                found.end());
    if (found.empty()) throw inconsistency_error("no kac block decomposition found");
    if (found.size() > 1) throw inconsistency_error("kac block decomposition is not unique");

    const auto [n, m, j] = found.front();
    const auto seq = kac_sequence(w, static_cast<int>(j) + 2);
    if (s != n * seq[j] + m * seq[j + 1] || t != n * seq[j + 1] + m * seq[j + 2]) {
        throw inconsistency_error("kac block identities failed");
    }
    BlockDecomposition result;
    result.n = n;
    result.m = m;
    result.parameter = j;
    for (long long i = 0; i < n; ++i) result.blocks.push_back({w, seq[j], seq[j + 1]});
    for (long long i = 0; i < m; ++i) result.blocks.push_back({w, seq[j + 1], seq[j + 2]});
    return result;
}

}  // namespace hyperdet
