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

#ifndef HYPERDET_EXACT_MATRIX_HPP
#define HYPERDET_EXACT_MATRIX_HPP

#include <vector>

#include "hyperdet/rational.hpp"

namespace hyperdet {

/// Dense two-dimensional matrix of exact rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    ExactMatrix(int rows, int cols, std::vector<Rational> entries);

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Rational& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<Rational>& entries() const { return entries_; }

    ExactMatrix transposed() const;
    /// Copy with one row and one column removed.
    ExactMatrix minor_matrix(int drop_row, int drop_col) const;

    bool operator==(const ExactMatrix& other) const;
    bool operator!=(const ExactMatrix& other) const { return !(*this == other); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const Rational& s, const ExactMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational exact_determinant(const ExactMatrix& m);

/// Rank over the rationals by exact Gaussian elimination.
int exact_rank(const ExactMatrix& m);

/// Pfaffian of a skew-symmetric matrix of even order, by recursive
/// first-row expansion. pfaffian(m)^2 == exact_determinant(m).
Rational pfaffian(const ExactMatrix& m);

}  // namespace hyperdet

#endif
