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

#include "hyperdet/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hyperdet {

namespace {

int vector_degree(const std::vector<int>& exponents) {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

void check_same_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) {
        throw dimension_error("polynomials live in different variable counts");
    }
}

}  // namespace

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = vector_degree(a);
    const int db = vector_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw domain_error("negative variable count");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw domain_error("variable index out of range");
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(std::vector<int> exponents, const Rational& coefficient) {
    for (int e : exponents) {
        if (e < 0) throw domain_error("negative exponent");
    }
    Polynomial p(static_cast<int>(exponents.size()));
    p.add_term(exponents, coefficient);
    return p;
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rational& coefficient) {
    if (static_cast<int>(exponents.size()) != nvars_) {
        throw dimension_error("exponent vector length does not match variable count");
    }
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // grlex order: the last term has maximal degree
    return vector_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_) {
        if (vector_degree(e) != d) return false;
    }
    return true;
}

Rational Polynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(std::vector<int>(nvars_, 0));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) {
        throw dimension_error("evaluation point has wrong length");
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < nvars_; ++v) {
            for (int i = 0; i < e[v]; ++i) term *= point[v];
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw domain_error("variable index out of range");
    Polynomial result(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        result.add_term(d, c * e[var]);
    }
    return result;
}

Polynomial Polynomial::truncated(int max_total_degree) const {
    Polynomial result(nvars_);
    for (const auto& [e, c] : terms_) {
        if (vector_degree(e) <= max_total_degree) result.add_term(e, c);
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial result(nvars_);
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, -c);
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_nvars(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_nvars(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_nvars(a, b);
    Polynomial result(a.nvars());
    std::vector<int> e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.nvars(); ++v) e[v] = ea[v] + eb[v];
            result.add_term(e, ca * cb);
        }
    }
    return result;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print leading (highest grlex) terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool is_const = vector_degree(e) == 0;
        if (magnitude != 1 || is_const) {
            out << magnitude.get_str();
            if (!is_const) out << "*";
        }
        bool started = false;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (started) out << "*";
            out << "x" << v;
            if (e[v] > 1) out << "^" << e[v];
            started = true;
        }
    }
    return out.str();
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_total_degree) {
    check_same_nvars(a, b);
    Polynomial result(a.nvars());
    std::vector<int> e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        const int da = vector_degree(ea);
        if (da > max_total_degree) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + vector_degree(eb) > max_total_degree) continue;
            for (int v = 0; v < a.nvars(); ++v) e[v] = ea[v] + eb[v];
            result.add_term(e, ca * cb);
        }
    }
    return result;
}

std::vector<Rational> univariate_coefficients(const Polynomial& f, int formal_degree) {
    if (f.nvars() != 1) throw dimension_error("expected a univariate polynomial");
    if (formal_degree < f.total_degree()) {
        throw domain_error("formal degree below actual degree");
    }
    std::vector<Rational> coeffs(formal_degree + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) coeffs[e[0]] = c;
    return coeffs;
}

std::vector<Rational> binary_form_coefficients(const Polynomial& f, int formal_degree) {
    if (f.nvars() != 2) throw dimension_error("expected a binary form");
    if (!f.is_homogeneous(formal_degree) && !f.is_zero()) {
        throw format_error("polynomial is not homogeneous of the requested degree");
    }
    std::vector<Rational> coeffs(formal_degree + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) coeffs[e[0]] = c;
    return coeffs;
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Polynomial::constant(0, 1);
    const int nvars = m[0][0].nvars();
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) {
            throw dimension_error("polynomial determinant of a non-square matrix");
        }
    }
    if (n > 20) throw domain_error("polynomial determinant limited to order 20");

    // Expand along rows, memoizing on the set of still-active columns.
    std::unordered_map<std::uint32_t, Polynomial> memo;
    auto det = [&](auto&& self, std::uint32_t cols) -> Polynomial {
        if (cols == 0) return Polynomial::constant(nvars, 1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        const int row = n - __builtin_popcount(cols);
        Polynomial acc(nvars);
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            if (!m[row][j].is_zero()) {
                Polynomial sub = self(self, cols & ~(1u << j));
                sub *= m[row][j];
                if (sign < 0) sub *= Rational(-1);
                acc += sub;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return det(det, (n == 32 ? ~0u : (1u << n) - 1u));
}

Polynomial series_inverse_square(const Polynomial& p, int max_total_degree) {
    if (p.constant_term() != 0) {
        throw domain_error("series 1/(1-p)^2 requires zero constant term");
    }
    if (max_total_degree < 0) throw domain_error("negative truncation degree");
    Polynomial result = Polynomial::constant(p.nvars(), 1);
    Polynomial power = Polynomial::constant(p.nvars(), 1);
    for (int j = 1; j <= max_total_degree; ++j) {
        power = multiply_truncated(power, p, max_total_degree);
        if (power.is_zero()) break;
        result += power * Rational(j + 1);
    }
    return result;
}

}  // namespace hyperdet
