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

#ifndef HYPERDET_PENCIL_HPP
#define HYPERDET_PENCIL_HPP

#include <array>
#include <complex>
#include <vector>

#include "hyperdet/schlaefli.hpp"
#include "hyperdet/tensor.hpp"

namespace hyperdet {

/// Analysis of a 2 x k x k pencil x0*A0 + x1*A1. Regularity (distinct
/// projective roots of the characteristic form) is decided exactly via the
/// binary discriminant; eigenvalues are double-precision reporting only.
struct PencilReport {
    Polynomial char_form;                          // det(x0*A0 + x1*A1), binary of degree k
    bool pencil_singular = false;                  // char_form identically zero
    bool regular = false;                          // discriminant != 0
    Rational discriminant = 0;
    /// Filled only when requested AND the pencil is regular with an
    /// invertible leading slice; empty otherwise.
    std::vector<std::complex<double>> eigenvalues;
};

PencilReport analyze_pencil(const MultiMatrix& a, bool with_eigenvalues = false);

/// Generalized eigenvalues of the pencil: the k roots of det(t*A0 - A1),
/// i.e. the t with A1 v = t A0 v. Requires det(A0) != 0 and a regular
/// pencil. Numeric (complex double).
std::vector<std::complex<double>> weierstrass_eigenvalues(const MultiMatrix& a);

/// Result of the simultaneous congruence diagonalization of a symmetric
/// regular pencil: C^t A_i C = D_i up to `residual` in max norm. Matrices
/// are row-major k x k complex; D0/D1 hold the diagonals.
struct Diagonalization {
    int n = 0;
    std::vector<std::complex<double>> transform;  // C, row-major
    std::vector<std::complex<double>> d0, d1;
    double residual = 0.0;
};

/// Columns of C are kernel vectors of A0 + lambda_i A1 at the (distinct)
/// roots lambda_i of det(A0 + t A1); a simple root at infinity contributes a
/// kernel vector of A1. Errors: non-symmetric input, non-regular pencil,
/// exactly singular A0 (remedy: replace A0 by A0 + c*A1 for rational c).
Diagonalization simultaneous_diagonalize(const ExactMatrix& a0, const ExactMatrix& a1,
                                         double tol = 1e-9);

/// Block counts of the canonical decomposition of generic 2 x b x c
/// (Kronecker) or w x s x t (Kac) tensors. Blocks are dimension triples;
/// the q = 0 Kronecker block is the empty 2x0x1 shape.
struct BlockDecomposition {
    long long n = 0;
    long long m = 0;
    long long parameter = 0;  // q for Kronecker, j for Kac
    std::vector<std::array<long long, 3>> blocks;
};

/// Unique (n, m, q) with b = n*q + m*(q+1), c = n*(q+1) + m*(q+2);
/// n blocks 2 x q x (q+1) and m blocks 2 x (q+1) x (q+2). Requires 2 <= b < c.
BlockDecomposition kronecker_blocks(long long b, long long c);

/// a_0 = 0, a_1 = 1, a_j = w*a_{j-1} - a_{j-2}; returns a_0..a_jmax.
std::vector<long long> kac_sequence(long long w, int jmax);

/// Unique (n, m, j) with s = n*a_j + m*a_{j+1}, t = n*a_{j+1} + m*a_{j+2};
/// n blocks w x a_j x a_{j+1} and m blocks w x a_{j+1} x a_{j+2}.
/// Requires 2 <= w <= s <= t and t^2 - w*s*t + s^2 >= 1.
BlockDecomposition kac_blocks(long long w, long long s, long long t);

}  // namespace hyperdet

#endif
