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

#include "hyperdet/tensor_io.hpp"

#include <fstream>

namespace hyperdet {

using nlohmann::json;

json rational_to_json(const Rational& value) {
    if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
        return json(value.get_num().get_si());
    }
    return json(value.get_str());
}

Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) {
            return Rational(Integer(std::to_string(value.get<unsigned long long>())));
        }
        return Rational(Integer(std::to_string(value.get<long long>())));
    }
    if (value.is_string()) {
        return rational_from_string(value.get<std::string>());
    }
    throw parse_error("entries must be integers or 'p/q' strings");
}

json tensor_to_json(const MultiMatrix& a) {
    json doc;
    doc["format"] = a.format().dims;
    json entries = json::array();
    for (const Rational& e : a.entries()) entries.push_back(rational_to_json(e));
    doc["entries"] = std::move(entries);
    return doc;
}

MultiMatrix tensor_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("format") || !doc.contains("entries")) {
        throw parse_error("tensor document needs 'format' and 'entries'");
    }
    const json& fmt = doc["format"];
    if (!fmt.is_array() || fmt.empty()) throw parse_error("'format' must be a non-empty array");
    std::vector<int> dims;
    for (const json& d : fmt) {
        if (!d.is_number_integer()) throw parse_error("'format' entries must be integers");
        const long long v = d.get<long long>();
        if (v < 1 || v > 1000) throw parse_error("format dimensions must be in 1..1000");
        dims.push_back(static_cast<int>(v));
    }
    Format format{std::move(dims)};

    const json& raw = doc["entries"];
    if (!raw.is_array()) throw parse_error("'entries' must be an array");
    if (static_cast<long long>(raw.size()) != format.entry_count()) {
        throw parse_error("expected " + std::to_string(format.entry_count()) + " entries, got " +
                          std::to_string(raw.size()));
    }
    std::vector<Rational> entries;
    entries.reserve(raw.size());
    for (const json& e : raw) entries.push_back(rational_from_json(e));
    return MultiMatrix(std::move(format), std::move(entries));
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw parse_error("invalid JSON in '" + path + "': " + e.what());
    }
    return doc;
}

}  // namespace

MultiMatrix read_tensor_file(const std::string& path) {
    return tensor_from_json(parse_file(path));
}

void write_tensor_file(const std::string& path, const MultiMatrix& a) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << tensor_to_json(a).dump(2) << "\n";
}

PointTuple point_tuple_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array()) {
        throw parse_error("certificate document needs a 'vectors' array");
    }
    PointTuple x;
    for (const json& vec : doc["vectors"]) {
        if (!vec.is_array() || vec.empty()) throw parse_error("each certificate vector must be a non-empty array");
        std::vector<Rational> v;
        for (const json& e : vec) v.push_back(rational_from_json(e));
        x.vectors.push_back(std::move(v));
    }
    return x;
}

PointTuple read_point_tuple_file(const std::string& path) {
    return point_tuple_from_json(parse_file(path));
}

}  // namespace hyperdet
