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

#include "hyperdet/exact_matrix.hpp"

#include <utility>

namespace hyperdet {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
    if (entries_.size() != static_cast<size_t>(rows) * cols) {
        throw dimension_error("entry count does not match matrix shape");
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::minor_matrix(int drop_row, int drop_col) const {
    if (drop_row < 0 || drop_row >= rows_ || drop_col < 0 || drop_col >= cols_) {
        throw dimension_error("minor index out of range");
    }
    ExactMatrix m(rows_ - 1, cols_ - 1);
    for (int i = 0, ti = 0; i < rows_; ++i) {
        if (i == drop_row) continue;
        for (int j = 0, tj = 0; j < cols_; ++j) {
            if (j == drop_col) continue;
            m(ti, tj) = (*this)(i, j);
            ++tj;
        }
        ++ti;
    }
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix product shape mismatch");
    ExactMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
    return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw dimension_error("matrix sum shape mismatch");
    }
    ExactMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
    ExactMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

Rational exact_determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw dimension_error("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row; track the accumulated scale.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, m(i, j).get_den());
        for (int j = 0; j < n; ++j) {
            a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        }
        scale *= l;
    }

    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    Rational det(sign * a[n - 1][n - 1], scale);
    det.canonicalize();
    return det;
}

int exact_rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = col; j < cols; ++j) std::swap(a(rank, j), a(pivot, j));
        }
        for (int i = rank + 1; i < rows; ++i) {
            if (a(i, col) == 0) continue;
            Rational factor = a(i, col) / a(rank, col);
            for (int j = col; j < cols; ++j) a(i, j) -= factor * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

namespace {

Rational pfaffian_expand(const ExactMatrix& m, std::vector<int>& active) {
    if (active.empty()) return 1;
    const int i0 = active.front();
    Rational total = 0;
    int sign = 1;
    for (size_t l = 1; l < active.size(); ++l) {
        const int j = active[l];
        if (m(i0, j) != 0) {
            std::vector<int> rest;
            rest.reserve(active.size() - 2);
            for (size_t t = 1; t < active.size(); ++t) {
                if (t != l) rest.push_back(active[t]);
            }
            total += Rational(sign) * m(i0, j) * pfaffian_expand(m, rest);
        }
        sign = -sign;
    }
    return total;
}

}  // namespace

Rational pfaffian(const ExactMatrix& m) {
    if (!m.is_square()) throw structure_error("pfaffian of a non-square matrix");
    const int n = m.rows();
    if (n % 2 != 0) throw structure_error("pfaffian requires even order");
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (m(i, j) != -m(j, i)) throw structure_error("pfaffian requires a skew-symmetric matrix");
        }
    }
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    return pfaffian_expand(m, active);
}

}  // namespace hyperdet
