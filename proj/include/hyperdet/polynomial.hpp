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

#ifndef HYPERDET_POLYNOMIAL_HPP
#define HYPERDET_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hyperdet/rational.hpp"

namespace hyperdet {

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken lexicographically. This is the canonical term order of the
/// whole library; downstream basis enumerations depend on it.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables x0..x{n-1}. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<std::vector<int>, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial(std::vector<int> exponents, const Rational& coefficient);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// True when every stored term has total degree exactly d (vacuously
    /// true for the zero polynomial).
    bool is_homogeneous(int d) const;

    Rational coefficient(const std::vector<int>& exponents) const;
    Rational constant_term() const;
    Rational evaluate(std::span<const Rational> point) const;

    Polynomial derivative(int var) const;
    /// Drops every term of total degree greater than max_total_degree.
    Polynomial truncated(int max_total_degree) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Human-readable rendering, e.g. "x0^2*x1 - 3*x2". Terms in descending
    /// graded-lex order.
    std::string str() const;

    void add_term(const std::vector<int>& exponents, const Rational& coefficient);

private:
    int nvars_ = 0;
    TermMap terms_;
};

/// Product truncated at the given total degree; used by series expansions.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_total_degree);

/// Coefficient list of a univariate polynomial, index i = coefficient of x^i,
/// padded with zeros up to formal_degree (must be >= the actual degree).
std::vector<Rational> univariate_coefficients(const Polynomial& f, int formal_degree);

/// Coefficient list of a binary form of formal degree d: index i holds the
/// coefficient of x0^i * x1^(d-i).
std::vector<Rational> binary_form_coefficients(const Polynomial& f, int formal_degree);

/// Determinant of a square matrix of polynomials (cofactor expansion with
/// column-subset memoization). Exact; intended for small matrices.
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m);

/// Truncation of the power series 1/(1-p)^2 = sum_j (j+1) p^j to total degree
/// max_total_degree. Requires p to have zero constant term.
Polynomial series_inverse_square(const Polynomial& p, int max_total_degree);

}  // namespace hyperdet

#endif
