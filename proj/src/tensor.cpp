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

#include "hyperdet/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperdet {

void Format::validate() const {
    if (dims.empty()) throw format_error("empty format");
    for (int d : dims) {
        if (d < 1) throw format_error("format dimensions must be >= 1");
    }
}

long long Format::entry_count() const {
    long long n = 1;
    for (int d : dims) n *= d;
    return n;
}

std::string Format::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) out << "x";
        out << dims[i];
    }
    return out.str();
}

bool is_boundary(const Format& format) {
    if (format.order() < 2) return false;
    int max_k = 0, sum_k = 0;
    for (int d : format.dims) {
        max_k = std::max(max_k, d - 1);
        sum_k += d - 1;
    }
    return max_k == sum_k - max_k;
}

MultiMatrix::MultiMatrix(Format format) : format_(std::move(format)) {
    entries_.assign(static_cast<size_t>(format_.entry_count()), Rational(0));
}

MultiMatrix::MultiMatrix(Format format, std::vector<Rational> entries)
    : format_(std::move(format)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(format_.entry_count())) {
        throw dimension_error("entry count does not match format");
    }
}

namespace {

size_t flat_offset(const Format& format, std::span<const int> index) {
    if (static_cast<int>(index.size()) != format.order()) {
        throw dimension_error("multi-index has wrong length");
    }
    size_t offset = 0;
    for (int i = 0; i < format.order(); ++i) {
        if (index[i] < 0 || index[i] >= format.dims[i]) {
            throw domain_error("multi-index out of range");
        }
        offset = offset * format.dims[i] + index[i];
    }
    return offset;
}

void check_axis(const MultiMatrix& a, int axis) {
    if (axis < 0 || axis >= a.order()) throw domain_error("axis out of range");
}

}  // namespace

const Rational& MultiMatrix::at(std::span<const int> index) const {
    return entries_[flat_offset(format_, index)];
}

Rational& MultiMatrix::at(std::span<const int> index) {
    return entries_[flat_offset(format_, index)];
}

bool MultiMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e == 0; });
}

bool MultiMatrix::operator==(const MultiMatrix& other) const {
    return format_ == other.format_ && entries_ == other.entries_;
}

bool next_index(std::span<const int> dims, std::vector<int>& index) {
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        if (++index[i] < dims[i]) return true;
        index[i] = 0;
    }
    return false;
}

MultiMatrix slice(const MultiMatrix& a, int axis, int index) {
    check_axis(a, axis);
    if (index < 0 || index >= a.dim(axis)) throw domain_error("slice index out of range");
    if (a.order() < 2) throw format_error("cannot slice an order-1 matrix");

    std::vector<int> new_dims;
    for (int i = 0; i < a.order(); ++i) {
        if (i != axis) new_dims.push_back(a.dim(i));
    }
    MultiMatrix result(Format{std::move(new_dims)});
    std::vector<int> out_idx(result.order(), 0);
    std::vector<int> in_idx(a.order());
    do {
        for (int i = 0, j = 0; i < a.order(); ++i) {
            in_idx[i] = (i == axis) ? index : out_idx[j++];
        }
        result.at(out_idx) = a.at(in_idx);
    } while (next_index(result.format().dims, out_idx));
    return result;
}

MultiMatrix swap_slices(const MultiMatrix& a, int axis, int j1, int j2) {
    check_axis(a, axis);
    if (j1 < 0 || j1 >= a.dim(axis) || j2 < 0 || j2 >= a.dim(axis)) {
        throw domain_error("slice index out of range");
    }
    if (j1 == j2) throw domain_error("swap requires two distinct slices");
    MultiMatrix result(a.format());
    std::vector<int> idx(a.order(), 0);
    std::vector<int> src(a.order());
    do {
        src = idx;
        if (src[axis] == j1) src[axis] = j2;
        else if (src[axis] == j2) src[axis] = j1;
        result.at(idx) = a.at(src);
    } while (next_index(a.format().dims, idx));
    return result;
}

MultiMatrix transpose(const MultiMatrix& a, std::span<const int> axis_order) {
    if (static_cast<int>(axis_order.size()) != a.order()) {
        throw dimension_error("axis order has wrong length");
    }
    std::vector<bool> seen(a.order(), false);
    std::vector<int> new_dims(a.order());
    for (int i = 0; i < a.order(); ++i) {
        const int ax = axis_order[i];
        check_axis(a, ax);
        if (seen[ax]) throw domain_error("axis order is not a permutation");
        seen[ax] = true;
        new_dims[i] = a.dim(ax);
    }
    MultiMatrix result(Format{std::move(new_dims)});
    std::vector<int> idx(a.order(), 0);
    std::vector<int> src(a.order());
    do {
        for (int i = 0; i < a.order(); ++i) src[axis_order[i]] = idx[i];
        result.at(idx) = a.at(src);
    } while (next_index(result.format().dims, idx));
    return result;
}

ExactMatrix flattening(const MultiMatrix& a, int axis) {
    check_axis(a, axis);
    const int rows = a.dim(axis);
    const long long cols = a.size() / rows;
    ExactMatrix m(rows, static_cast<int>(cols));
    std::vector<int> idx(a.order(), 0);
    do {
        long long col = 0;
        for (int i = 0; i < a.order(); ++i) {
            if (i != axis) col = col * a.dim(i) + idx[i];
        }
        m(idx[axis], static_cast<int>(col)) = a.at(idx);
    } while (next_index(a.format().dims, idx));
    return m;
}

ExactMatrix as_matrix(const MultiMatrix& a) {
    if (a.order() != 2) throw format_error("as_matrix requires an order-2 tensor");
    return ExactMatrix(a.dim(0), a.dim(1), a.entries());
}

MultiMatrix from_matrix(const ExactMatrix& m) {
    return MultiMatrix(Format{m.rows(), m.cols()}, m.entries());
}

bool is_decomposable(const MultiMatrix& a) {
    if (a.is_zero()) throw domain_error("decomposability is undefined for the zero tensor");
    for (int i = 0; i < a.order(); ++i) {
        if (exact_rank(flattening(a, i)) > 1) return false;
    }
    return true;
}

MultiMatrix multilinear_apply(const MultiMatrix& a, std::span<const ExactMatrix> g) {
    if (static_cast<int>(g.size()) != a.order()) {
        throw dimension_error("need one transformation per axis");
    }
    for (int i = 0; i < a.order(); ++i) {
        if (g[i].rows() != a.dim(i) || g[i].cols() != a.dim(i)) {
            throw dimension_error("transformation on axis " + std::to_string(i) + " has wrong shape");
        }
    }
    MultiMatrix current = a;
    std::vector<int> idx(a.order());
    std::vector<int> src(a.order());
    for (int axis = 0; axis < a.order(); ++axis) {
        MultiMatrix next(current.format());
        std::fill(idx.begin(), idx.end(), 0);
        do {
            Rational sum = 0;
            src = idx;
            for (int j = 0; j < current.dim(axis); ++j) {
                const Rational& w = g[axis](idx[axis], j);
                if (w == 0) continue;
                src[axis] = j;
                sum += w * current.at(src);
            }
            next.at(idx) = sum;
        } while (next_index(next.format().dims, idx));
        current = std::move(next);
    }
    return current;
}

MultiMatrix convolve(const MultiMatrix& a, const MultiMatrix& b) {
    if (!is_boundary(a.format()) || !is_boundary(b.format())) {
        throw format_error("convolution requires boundary-format inputs");
    }
    const int p = a.order() - 1;
    const int contracted = a.dim(p);
    if (contracted != b.dim(0)) {
        throw dimension_error("last dimension of A must equal first dimension of B");
    }
    std::vector<int> new_dims;
    for (int i = 0; i < p; ++i) new_dims.push_back(a.dim(i));
    for (int j = 1; j < b.order(); ++j) new_dims.push_back(b.dim(j));
    if (new_dims.empty()) throw format_error("convolution result would have no axes");

    MultiMatrix c(Format{std::move(new_dims)});
    std::vector<int> idx(c.order(), 0);
    std::vector<int> ai(a.order());
    std::vector<int> bi(b.order());
    do {
        Rational sum = 0;
        for (int h = 0; h < contracted; ++h) {
            for (int i = 0; i < p; ++i) ai[i] = idx[i];
            ai[p] = h;
            bi[0] = h;
            for (int j = 1; j < b.order(); ++j) bi[j] = idx[p + j - 1];
            sum += a.at(ai) * b.at(bi);
        }
        c.at(idx) = sum;
    } while (next_index(c.format().dims, idx));
    return c;
}

bool kernel_check(const MultiMatrix& a, const PointTuple& x) {
    if (static_cast<int>(x.vectors.size()) != a.order()) {
        throw dimension_error("certificate needs one vector per axis");
    }
    for (int i = 0; i < a.order(); ++i) {
        if (static_cast<int>(x.vectors[i].size()) != a.dim(i)) {
            throw dimension_error("certificate vector " + std::to_string(i) + " has wrong length");
        }
        bool nonzero = false;
        for (const Rational& v : x.vectors[i]) nonzero = nonzero || v != 0;
        if (!nonzero) throw domain_error("certificate vectors must be nonzero");
    }
    for (int free_axis = 0; free_axis < a.order(); ++free_axis) {
        std::vector<Rational> contraction(a.dim(free_axis), Rational(0));
        std::vector<int> idx(a.order(), 0);
        do {
            Rational weight = a.at(idx);
            if (weight != 0) {
                for (int i = 0; i < a.order(); ++i) {
                    if (i != free_axis) weight *= x.vectors[i][idx[i]];
                }
                contraction[idx[free_axis]] += weight;
            }
        } while (next_index(a.format().dims, idx));
        for (const Rational& v : contraction) {
            if (v != 0) return false;
        }
    }
    return true;
}

MultiMatrix symmetric_embed(const Polynomial& f) {
    if (f.is_zero()) throw domain_error("cannot embed the zero polynomial");
    const int d = f.total_degree();
    if (d < 1) throw domain_error("cannot embed a constant");
    if (!f.is_homogeneous(d)) throw format_error("symmetric embedding requires a homogeneous form");
    const int n1 = f.nvars();

    MultiMatrix a(Format{std::vector<int>(d, n1)});
    std::vector<int> idx(d, 0);
    std::vector<int> expo(n1);
    do {
        std::fill(expo.begin(), expo.end(), 0);
        for (int pos = 0; pos < d; ++pos) expo[idx[pos]] += 1;
        Rational c = f.coefficient(expo);
        if (c != 0) {
            Integer multinomial = factorial(d);
            for (int e : expo) multinomial /= factorial(e);
            a.at(idx) = c / Rational(multinomial);
        }
    } while (next_index(a.format().dims, idx));
    return a;
}

}  // namespace hyperdet
