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

#ifndef HYPERDET_TENSOR_HPP
#define HYPERDET_TENSOR_HPP

#include <span>
#include <string>
#include <vector>

#include "hyperdet/exact_matrix.hpp"
#include "hyperdet/polynomial.hpp"
#include "hyperdet/rational.hpp"

namespace hyperdet {

/// Dimension vector (k_0+1) x ... x (k_p+1) of a multidimensional matrix.
struct Format {
    std::vector<int> dims;

    Format() = default;
    Format(std::initializer_list<int> d) : dims(d) { validate(); }
    explicit Format(std::vector<int> d) : dims(std::move(d)) { validate(); }

    /// Number of axes (p+1). Slicing may produce order-1 shapes (bare
    /// vectors); existence/degree questions require order >= 2.
    int order() const { return static_cast<int>(dims.size()); }
    long long entry_count() const;
    std::string str() const;

    bool operator==(const Format& other) const { return dims == other.dims; }
    bool operator!=(const Format& other) const { return !(*this == other); }

private:
    void validate() const;
};

/// True when max k_i equals the sum of the other k_i (with k_i = dims[i]-1).
bool is_boundary(const Format& format);

/// Multidimensional matrix of exact rationals. Entries are stored row-major
/// with the LAST index varying fastest; every index convention downstream
/// (flattenings, symmetric bases, signs) is anchored to this order.
class MultiMatrix {
public:
    MultiMatrix() = default;
    explicit MultiMatrix(Format format);
    MultiMatrix(Format format, std::vector<Rational> entries);

    const Format& format() const { return format_; }
    int order() const { return format_.order(); }
    int dim(int axis) const { return format_.dims[axis]; }
    long long size() const { return static_cast<long long>(entries_.size()); }

    const Rational& at(std::span<const int> index) const;
    Rational& at(std::span<const int> index);
    const Rational& at(std::initializer_list<int> index) const { return at(std::span<const int>(index.begin(), index.size())); }
    Rational& at(std::initializer_list<int> index) { return at(std::span<const int>(index.begin(), index.size())); }

    const std::vector<Rational>& entries() const { return entries_; }
    std::vector<Rational>& entries() { return entries_; }

    bool is_zero() const;

    bool operator==(const MultiMatrix& other) const;
    bool operator!=(const MultiMatrix& other) const { return !(*this == other); }

private:
    Format format_;
    std::vector<Rational> entries_;
};

/// Certificate candidate for degeneracy: one coordinate vector per axis.
struct PointTuple {
    std::vector<std::vector<Rational>> vectors;
};

/// Steps a row-major multi-index; returns false after the last one.
bool next_index(std::span<const int> dims, std::vector<int>& index);

/// Fixes `axis` to `index`, dropping that axis.
MultiMatrix slice(const MultiMatrix& a, int axis, int index);

/// Exchanges the two parallel slices j1, j2 along `axis`.
MultiMatrix swap_slices(const MultiMatrix& a, int axis, int j1, int j2);

/// Axis permutation: result axis i is input axis `axis_order[i]`.
MultiMatrix transpose(const MultiMatrix& a, std::span<const int> axis_order);

/// The dims[axis] x (prod of the others) matrix of the contraction map into
/// V_axis; columns run over the remaining axes in row-major order.
ExactMatrix flattening(const MultiMatrix& a, int axis);

/// Order-2 tensor viewed as a matrix (axis 0 = rows).
ExactMatrix as_matrix(const MultiMatrix& a);
MultiMatrix from_matrix(const ExactMatrix& m);

/// True iff every flattening has rank <= 1. Rejects the zero tensor.
bool is_decomposable(const MultiMatrix& a);

/// Change of basis g[i] on each axis i:
///   B[i0..ip] = sum_j g0[i0][j0] ... gp[ip][jp] A[j0..jp].
MultiMatrix multilinear_apply(const MultiMatrix& a, std::span<const ExactMatrix> g);

/// Convolution A*B contracting the last axis of A against the first axis of
/// B. Both inputs must have boundary format; the result does again.
MultiMatrix convolve(const MultiMatrix& a, const MultiMatrix& b);

/// True iff x certifies degeneracy: for every axis i, contracting A against
/// x^j on all axes j != i gives the zero vector.
bool kernel_check(const MultiMatrix& a, const PointTuple& x);

/// Symmetric tensor of a homogeneous form f of degree d in n+1 variables:
/// format (n+1)^d, entries coeff/multinomial so that A(x,...,x) = f(x).
MultiMatrix symmetric_embed(const Polynomial& f);

}  // namespace hyperdet

#endif
