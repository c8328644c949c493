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

#ifndef HYPERDET_TENSOR_IO_HPP
#define HYPERDET_TENSOR_IO_HPP

#include <json.hpp>

#include <string>

#include "hyperdet/tensor.hpp"

namespace hyperdet {

/// Tensor document: {"format": [d0,...,dp], "entries": [...]} with entries
/// either JSON integers or exact "p/q" strings, row-major, last axis
/// fastest. Round-trips bit-exactly.
nlohmann::json tensor_to_json(const MultiMatrix& a);
MultiMatrix tensor_from_json(const nlohmann::json& doc);

MultiMatrix read_tensor_file(const std::string& path);
void write_tensor_file(const std::string& path, const MultiMatrix& a);

/// Certificate document: {"vectors": [[...], ...]}, one vector per axis.
PointTuple point_tuple_from_json(const nlohmann::json& doc);
PointTuple read_point_tuple_file(const std::string& path);

/// One entry in document form (int when it fits, string otherwise).
nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value);

}  // namespace hyperdet

#endif
