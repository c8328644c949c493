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

#ifndef HYPERDET_DEGREE_HPP
#define HYPERDET_DEGREE_HPP

#include "hyperdet/tensor.hpp"

namespace hyperdet {

/// Existence/boundary classification of a format, with the degree N of the
/// hyperdeterminant (N = 0 when it does not exist and Det is set to 1).
struct FormatClass {
    Format format;
    bool exists = false;
    bool boundary = false;
    Integer N = 0;
};

FormatClass classify(const Format& format);

/// Degree of the hyperdeterminant from the generating function
///   sum N(k) z^k = 1 / (1 - sum_{i>=2} (i-1) e_i(z))^2,
/// e_i the elementary symmetric functions. Returns 0 for formats whose
/// dual variety is not a hypersurface.
Integer hyperdet_degree(const Format& format);

/// Closed form (k0+1)!/(k1!...kp!) for boundary formats.
Integer boundary_degree(const Format& format);

/// Homogeneity degree N/dims[axis] of the hyperdeterminant in each slice
/// along `axis`; requires the hyperdeterminant to exist.
Integer slice_degree(const Format& format, int axis);

}  // namespace hyperdet

#endif
