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

#ifndef HYPERDET_RATIONAL_HPP
#define HYPERDET_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hyperdet/errors.hpp"

namespace hyperdet {

// All exact arithmetic runs over the rationals. GMP keeps values in lowest
// terms with a positive denominator, which is exactly the representation
// invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (arbitrary precision). Throws parse_error on
/// malformed text or a zero denominator.
inline Rational rational_from_string(std::string_view text) {
    Rational value;
    try {
        value = Rational(std::string(text));
    } catch (const std::invalid_argument&) {
        throw parse_error("invalid rational literal: '" + std::string(text) + "'");
    }
    if (value.get_den() == 0) {
        throw parse_error("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    value.canonicalize();
    return value;
}

/// Exact decimal string, "p" or "p/q".
inline std::string to_string(const Rational& value) {
    return value.get_str();
}

inline Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

inline Integer integer_pow(const Integer& base, unsigned long exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

inline Rational rational_pow(const Rational& base, unsigned long exponent) {
    Rational result = 1;
    for (unsigned long i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace hyperdet

#endif
