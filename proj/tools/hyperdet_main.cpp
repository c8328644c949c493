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

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include "hyperdet/boundary.hpp"
#include "hyperdet/degree.hpp"
#include "hyperdet/invariants.hpp"
#include "hyperdet/pencil.hpp"
#include "hyperdet/poly_parse.hpp"
#include "hyperdet/schlaefli.hpp"
#include "hyperdet/tensor_io.hpp"

namespace {

using hyperdet::Format;
using hyperdet::MultiMatrix;
using hyperdet::Rational;
using nlohmann::json;

// Exit codes: 0 success, 1 usage, 2 unsupported format, 3 invalid input,
// 4 cross-check failure.
constexpr int kExitUsage = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitCrossCheck = 4;

struct exit_request {
    int code;
    std::string message;
};

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

Format parse_format_args(const std::vector<long long>& dims) {
    if (dims.size() < 2) throw exit_request{kExitUnsupported, "need at least two dimensions"};
    std::vector<int> d;
    for (long long v : dims) {
        if (v < 1 || v > 1000) {
            throw exit_request{kExitUnsupported, "dimensions must be in 1..1000"};
        }
        d.push_back(static_cast<int>(v));
    }
    return Format{std::move(d)};
}

MultiMatrix load_tensor(const std::string& path) {
    try {
        return hyperdet::read_tensor_file(path);
    } catch (const hyperdet::error& e) {
        throw exit_request{kExitInvalid, e.what()};
    }
}

struct DetMethod {
    std::string name;
    Rational value;
    bool pencil_singular = false;
};

// Every Det route applicable to the format, each normalized to the
// boundary-format reference (pinned constants from the library headers).
std::vector<DetMethod> det_methods(const MultiMatrix& a, const std::string& selector) {
    const Format& f = a.format();
    const bool boundary = hyperdet::is_boundary(f);
    const bool is222 = f == Format{2, 2, 2};
    const bool is322 = f == Format{3, 2, 2};
    const bool is2bb = f.order() == 3 && f.dims[0] == 2 && f.dims[1] == f.dims[2] && f.dims[1] >= 2;

    std::vector<DetMethod> out;
    auto want = [&](const std::string& kind) { return selector == "auto" || selector == kind; };
    if (boundary && want("boundary")) {
        out.push_back({"boundary", hyperdet::hyperdet_boundary(a)});
    }
    if (is322 && want("cayley")) {
        out.push_back({"cayley3x2x2",
                       hyperdet::cayley_3x2x2(a) / hyperdet::kCayley3x2x2VsBoundary});
    }
    if (is222 && want("cayley")) {
        out.push_back({"cayley2x2x2", hyperdet::cayley_2x2x2(a)});
    }
    if (is2bb && want("schlaefli")) {
        const auto r = hyperdet::hyperdet_2bb(a);
        out.push_back({"schlaefli-disc", r.value, r.pencil_singular});
    }
    if (is322 && want("schlaefli")) {
        const Rational det_c = hyperdet::exact_determinant(hyperdet::conic_matrix_3x2x2(a));
        out.push_back({"schlaefli-conic", det_c / hyperdet::kConicDetVsBoundary});
    }
    return out;
}

json det_report(const MultiMatrix& a, const std::string& selector) {
    const auto methods = det_methods(a, selector);
    if (methods.empty()) {
        throw exit_request{kExitUnsupported,
                           "no Det method applies to format " + a.format().str() +
                               (selector == "auto" ? "" : " with --method " + selector)};
    }
    for (const auto& m : methods) {
        if (m.value != methods.front().value) {
            throw exit_request{kExitCrossCheck,
                               "method disagreement: " + methods.front().name + " -> " +
                                   hyperdet::to_string(methods.front().value) + " but " + m.name +
                                   " -> " + hyperdet::to_string(m.value)};
        }
    }
    json doc;
    doc["format"] = a.format().dims;
    json names = json::array();
    bool singular = false;
    for (const auto& m : methods) {
        names.push_back(m.name);
        singular = singular || m.pencil_singular;
    }
    doc["methods"] = std::move(names);
    doc["value"] = hyperdet::to_string(methods.front().value);
    doc["degenerate"] = methods.front().value == 0;
    if (singular) doc["pencil_singular"] = true;
    return doc;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact hyperdeterminants and invariants of multidimensional matrices"};
    app.require_subcommand(1);

    // degree
    auto* degree_cmd = app.add_subcommand("degree", "Existence, boundary flag and degree of the hyperdeterminant");
    std::vector<long long> degree_dims;
    degree_cmd->add_option("dims", degree_dims, "format dimensions, e.g. 3 2 2")->required()->expected(-2);

    // det
    auto* det_cmd = app.add_subcommand("det", "Hyperdeterminant of a tensor file, cross-checked across methods");
    std::string det_file, det_method = "auto";
    det_cmd->add_option("file", det_file, "tensor JSON document")->required();
    det_cmd->add_option("--method", det_method, "auto|boundary|schlaefli|cayley")
        ->check(CLI::IsMember({"auto", "boundary", "schlaefli", "cayley"}));

    // check-degenerate
    auto* degen_cmd = app.add_subcommand("check-degenerate", "Degeneracy via kernel certificate or Det = 0");
    std::string degen_file, degen_cert;
    degen_cmd->add_option("file", degen_file, "tensor JSON document")->required();
    degen_cmd->add_option("--certificate", degen_cert, "point-tuple JSON document");

    // pencil
    auto* pencil_cmd = app.add_subcommand("pencil", "Characteristic form and regularity of a 2 x k x k pencil");
    std::string pencil_file;
    bool pencil_eigs = false;
    pencil_cmd->add_option("file", pencil_file, "tensor JSON document")->required();
    pencil_cmd->add_flag("--eigenvalues", pencil_eigs, "also report approximate generalized eigenvalues");

    // blocks
    auto* blocks_cmd = app.add_subcommand("blocks", "Kronecker / Kac block decomposition parameters");
    std::vector<long long> kron_args, kac_args;
    blocks_cmd->add_option("--kronecker", kron_args, "b c")->expected(2);
    blocks_cmd->add_option("--kac", kac_args, "w s t")->expected(3);

    // strassen
    auto* strassen_cmd = app.add_subcommand("strassen", "Degree-9 invariant of a 3x3x3 tensor");
    std::string strassen_file;
    long long strassen_axis = 0;
    strassen_cmd->add_option("file", strassen_file, "tensor JSON document")->required();
    strassen_cmd->add_option("--axis", strassen_axis, "slice axis (0, 1 or 2)");

    // aronhold
    auto* aron_cmd = app.add_subcommand("aronhold", "Pfaffian system of a plane cubic (sum-of-three-cubes test)");
    std::string aron_expr;
    aron_cmd->add_option("cubic", aron_expr, "cubic in x0,x1,x2, e.g. \"x0^3+x1^3+x2^3\"")->required();

    // flatten
    auto* flatten_cmd = app.add_subcommand("flatten", "Flattening matrix and its rank");
    std::string flatten_file;
    long long flatten_axis = 0;
    flatten_cmd->add_option("file", flatten_file, "tensor JSON document")->required();
    flatten_cmd->add_option("--axis", flatten_axis, "axis of the flattening")->required();

    // convolve
    auto* conv_cmd = app.add_subcommand("convolve", "Convolution A*B of two boundary-format tensors");
    std::string conv_a, conv_b, conv_out;
    conv_cmd->add_option("fileA", conv_a, "tensor JSON document")->required();
    conv_cmd->add_option("fileB", conv_b, "tensor JSON document")->required();
    conv_cmd->add_option("-o,--output", conv_out, "write result to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*degree_cmd) {
            const Format format = parse_format_args(degree_dims);
            const auto fc = hyperdet::classify(format);
            json doc;
            doc["format"] = format.dims;
            doc["exists"] = fc.exists;
            doc["boundary"] = fc.boundary;
            doc["N"] = fc.N.get_str();
            if (fc.exists) {
                json slice_degrees = json::array();
                for (int axis = 0; axis < format.order(); ++axis) {
                    slice_degrees.push_back(hyperdet::slice_degree(format, axis).get_str());
                }
                doc["slice_degrees"] = std::move(slice_degrees);
            }
            emit(doc);
        } else if (*det_cmd) {
            emit(det_report(load_tensor(det_file), det_method));
        } else if (*degen_cmd) {
            const MultiMatrix a = load_tensor(degen_file);
            json doc;
            doc["format"] = a.format().dims;
            if (!degen_cert.empty()) {
                hyperdet::PointTuple x;
                try {
                    x = hyperdet::read_point_tuple_file(degen_cert);
                } catch (const hyperdet::error& e) {
                    throw exit_request{kExitInvalid, e.what()};
                }
                doc["method"] = "kernel-certificate";
                doc["certified_degenerate"] = hyperdet::kernel_check(a, x);
            } else {
                json det = det_report(a, "auto");
                doc["method"] = "determinant";
                doc["det"] = det["value"];
                doc["degenerate"] = det["degenerate"];
            }
            emit(doc);
        } else if (*pencil_cmd) {
            const MultiMatrix a = load_tensor(pencil_file);
            if (a.order() != 3 || a.dim(0) != 2 || a.dim(1) != a.dim(2)) {
                throw exit_request{kExitUnsupported, "pencil needs format 2 x k x k"};
            }
            const auto report = hyperdet::analyze_pencil(a, pencil_eigs);
            json doc;
            doc["format"] = a.format().dims;
            const int k = a.dim(1);
            json coeffs = json::array();
            // coefficient of x0^(k-i) x1^i at position i
            const auto binary = hyperdet::binary_form_coefficients(report.char_form, k);
            for (int i = k; i >= 0; --i) coeffs.push_back(hyperdet::to_string(binary[i]));
            doc["char_form"] = {{"degree", k}, {"coefficients", std::move(coeffs)}};
            doc["pencil_singular"] = report.pencil_singular;
            doc["regular"] = report.regular;
            doc["discriminant"] = hyperdet::to_string(report.discriminant);
            if (pencil_eigs) {
                json eigs = json::array();
                for (const auto& z : report.eigenvalues) eigs.push_back({z.real(), z.imag()});
                doc["eigenvalues_approx"] = std::move(eigs);
            }
            emit(doc);
        } else if (*blocks_cmd) {
            if (kron_args.empty() == kac_args.empty()) {
                throw exit_request{kExitUsage, "blocks needs exactly one of --kronecker or --kac"};
            }
            hyperdet::BlockDecomposition d;
            json doc;
            if (!kron_args.empty()) {
                d = hyperdet::kronecker_blocks(kron_args[0], kron_args[1]);
                doc["type"] = "kronecker";
                doc["q"] = d.parameter;
            } else {
                d = hyperdet::kac_blocks(kac_args[0], kac_args[1], kac_args[2]);
                doc["type"] = "kac";
                doc["w"] = kac_args[0];
                doc["j"] = d.parameter;
            }
            doc["n"] = d.n;
            doc["m"] = d.m;
            json blocks = json::array();
            for (const auto& b : d.blocks) blocks.push_back({b[0], b[1], b[2]});
            doc["blocks"] = std::move(blocks);
            emit(doc);
        } else if (*strassen_cmd) {
            const MultiMatrix a = load_tensor(strassen_file);
            if (a.format() != Format{3, 3, 3}) {
                throw exit_request{kExitUnsupported, "strassen needs format 3x3x3"};
            }
            if (strassen_axis < 0 || strassen_axis > 2) {
                throw exit_request{kExitUsage, "--axis must be 0, 1 or 2"};
            }
            json doc;
            doc["format"] = a.format().dims;
            doc["axis"] = strassen_axis;
            doc["value"] = hyperdet::to_string(
                hyperdet::strassen_invariant(a, static_cast<int>(strassen_axis)));
            doc["multilinear_rank"] = hyperdet::multilinear_rank(a);
            emit(doc);
        } else if (*aron_cmd) {
            hyperdet::Polynomial cubic;
            try {
                cubic = hyperdet::parse_polynomial(aron_expr, 3);
            } catch (const hyperdet::parse_error& e) {
                throw exit_request{kExitInvalid, e.what()};
            }
            std::vector<Rational> pfaffians;
            try {
                pfaffians = hyperdet::aronhold_pfaffians(cubic);
            } catch (const hyperdet::format_error& e) {
                throw exit_request{kExitUnsupported, e.what()};
            }
            json doc;
            json values = json::array();
            bool all_vanish = true;
            for (const auto& v : pfaffians) {
                values.push_back(hyperdet::to_string(v));
                all_vanish = all_vanish && v == 0;
            }
            doc["pfaffians"] = std::move(values);
            doc["all_vanish"] = all_vanish;
            emit(doc);
        } else if (*flatten_cmd) {
            const MultiMatrix a = load_tensor(flatten_file);
            if (flatten_axis < 0 || flatten_axis >= a.order()) {
                throw exit_request{kExitUsage, "--axis out of range"};
            }
            const auto m = hyperdet::flattening(a, static_cast<int>(flatten_axis));
            json doc;
            doc["axis"] = flatten_axis;
            doc["rows"] = m.rows();
            doc["cols"] = m.cols();
            json entries = json::array();
            for (const auto& e : m.entries()) entries.push_back(hyperdet::rational_to_json(e));
            doc["entries"] = std::move(entries);
            doc["rank"] = hyperdet::exact_rank(m);
            emit(doc);
        } else if (*conv_cmd) {
            const MultiMatrix a = load_tensor(conv_a);
            const MultiMatrix b = load_tensor(conv_b);
            const MultiMatrix c = hyperdet::convolve(a, b);
            if (conv_out.empty()) {
                emit(hyperdet::tensor_to_json(c));
            } else {
                hyperdet::write_tensor_file(conv_out, c);
            }
        }
    } catch (const exit_request& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const hyperdet::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const hyperdet::format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const hyperdet::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
