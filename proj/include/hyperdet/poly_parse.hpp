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

#ifndef HYPERDET_POLY_PARSE_HPP
#define HYPERDET_POLY_PARSE_HPP

#include <string_view>

#include "hyperdet/polynomial.hpp"

namespace hyperdet {

/// Parses an integer-coefficient polynomial expression in the variables
/// x0..x{nvars-1} with +, -, *, ^ and parentheses, e.g.
/// "x0^3 + x1^3 + x2^3 - 3*x0*x1*x2". Throws parse_error on bad input.
Polynomial parse_polynomial(std::string_view text, int nvars);

}  // namespace hyperdet

#endif
