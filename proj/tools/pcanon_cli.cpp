/*
   Copyright 2026 The pcanon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "pcanon/pcanon.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

/// Carries a failed status out of the command handlers.
struct Failure {
    pcanon_status status;
    std::string message;
};

void check(pcanon_status s) {
    if (s != PCANON_OK) throw Failure{s, pcanon_last_error_message()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using ContextPtr = std::unique_ptr<pcanon_context, Deleter<pcanon_context, pcanon_context_free>>;
using DocumentPtr = std::unique_ptr<pcanon_document, Deleter<pcanon_document, pcanon_document_free>>;
using MatrixPtr = std::unique_ptr<pcanon_matrix, Deleter<pcanon_matrix, pcanon_matrix_free>>;
using PolyPtr = std::unique_ptr<pcanon_poly, Deleter<pcanon_poly, pcanon_poly_free>>;
using PcfPtr = std::unique_ptr<pcanon_pcf, Deleter<pcanon_pcf, pcanon_pcf_free>>;
using ExpmPtr = std::unique_ptr<pcanon_expm, Deleter<pcanon_expm, pcanon_expm_free>>;
using LrsPtr = std::unique_ptr<pcanon_lrs, Deleter<pcanon_lrs, pcanon_lrs_free>>;

struct Options {
    bool json = false;
    bool pretty = false;
    bool numeric = false;
    double tol = 1e-8;
    std::string input;
};

pcanon_format format_of(const Options& o) { return o.json ? PCANON_FORMAT_JSON : PCANON_FORMAT_PRETTY; }

void emit(char* text) {
    std::string s(text);
    pcanon_string_free(text);
    if (s.empty() || s.back() != '\n') s += '\n';
    std::cout << s;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw Failure{PCANON_PARSE_ERROR, "cannot open input file " + path};
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ContextPtr make_context(const Options& o) {
    pcanon_context* raw = nullptr;
    check(pcanon_context_new(&raw));
    ContextPtr ctx(raw);
    check(pcanon_context_set_tolerance(ctx.get(), o.tol));
    check(pcanon_context_set_numeric(ctx.get(), o.numeric ? 1 : 0));
    return ctx;
}

DocumentPtr load_document(const std::string& text) {
    pcanon_document* raw = nullptr;
    check(pcanon_document_parse(text.c_str(), &raw));
    return DocumentPtr(raw);
}

MatrixPtr first_matrix(const pcanon_document* doc) {
    if (pcanon_document_matrix_count(doc) == 0)
        throw Failure{PCANON_PARSE_ERROR, "the input document has no \"matrix\""};
    pcanon_matrix* raw = nullptr;
    check(pcanon_document_matrix(doc, 0, &raw));
    return MatrixPtr(raw);
}

std::vector<long long> parse_branches(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Failure{PCANON_PARSE_ERROR, "bad branch integer \"" + item + "\""};
        }
    }
    return out;
}

bool looks_like_array(const std::string& s) {
    const auto pos = s.find_first_not_of(" \t\n");
    return pos != std::string::npos && s[pos] == '[';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P-canonical forms, Kronecker minimal polynomials, C-finite sequence products and closed-form\n"
                 "matrix exponentials and logarithms.\n"
                 "Input documents are JSON: {\"field\": \"Q\"|\"C\"|\"Fp\", \"p\": 5, \"matrix\": [[...]]}, with\n"
                 "\"matrices\", \"poly\", \"polys\" or \"sequence\": {\"poly\": [...], \"initial\": [...]} as\n"
                 "payloads. Polynomials are coefficient arrays in ascending order (constant first).\n"
                 "Rationals are integers or \"num/den\" strings, complex numbers [re, im] or {\"re\":..,\"im\":..}."};
    app.require_subcommand(1);
    Options o;
    auto* fmt = app.add_option_group("format");
    fmt->add_flag("--json", o.json, "Emit JSON (lossless)");
    fmt->add_flag("--pretty", o.pretty, "Emit plain text (default)");
    fmt->require_option(0, 1);
    app.add_flag("--numeric", o.numeric, "Allow exact inputs that do not split to fall back to complex arithmetic");
    app.add_option("--tol", o.tol, "Numeric tolerance")->default_val(1e-8)->check(CLI::PositiveNumber);

    auto input_option = [&o](CLI::App* sub) {
        sub->add_option("input", o.input, "Input document path (stdin when omitted or '-')");
        sub->fallthrough();
    };

    auto* pcf = app.add_subcommand("pcf", "P-canonical form of a matrix");
    input_option(pcf);
    bool gamma = false, real = false;
    pcf->add_flag("--gamma", gamma, "Use the power basis k^i instead of C(k,i)");
    pcf->add_flag("--real", real, "Merge conjugate eigenvalue pairs into cos/sin terms");

    auto* power = app.add_subcommand("power", "A^k evaluated from the P-canonical form");
    input_option(power);
    std::uint64_t k = 0;
    power->add_option("--k", k, "Exponent")->required();

    auto* expm = app.add_subcommand("expm", "Closed-form e^{tA}");
    input_option(expm);
    std::vector<double> t_value;
    bool expm_real = false;
    expm->add_option("--t", t_value, "Evaluate at t (real, or two values re im)")->expected(1, 2);
    expm->add_flag("--real", expm_real, "Real cos/sin form for real matrices");

    auto* logm = app.add_subcommand("logm", "Matrix logarithm with branch control");
    input_option(logm);
    std::string branch_text;
    bool principal = false, log_form = false;
    auto* br = logm->add_option("--branch", branch_text, "Branch integers k1,k2,... per eigenvalue in (re, im) order");
    logm->add_flag("--principal", principal, "Principal logarithm (default)")->excludes(br);
    logm->add_flag("--form", log_form, "Print the P-canonical form of the logarithm");

    auto* kron = app.add_subcommand("kron-minpoly", "Minimal polynomial of a Kronecker product");
    input_option(kron);
    bool direct = false;
    kron->add_flag("--direct", direct, "Compute from the explicit Kronecker product");

    auto* lrs_product = app.add_subcommand("lrs-product", "P with L(P_1)...L(P_m) = L(P)");
    std::vector<std::string> poly_args;
    std::uint64_t characteristic = 0;
    lrs_product->add_option("polys", poly_args, "Coefficient arrays (ascending), or one input document path");
    lrs_product->add_option("--char", characteristic, "Field characteristic for coefficient arrays (0 or a prime)");
    lrs_product->fallthrough();

    auto* lrs_eval = app.add_subcommand("lrs-eval", "Terms of a linear recurrence sequence");
    input_option(lrs_eval);
    std::uint64_t n = 0;
    std::size_t terms = 0;
    auto* n_opt = lrs_eval->add_option("--n", n, "Index of the term to print");
    lrs_eval->add_option("--terms", terms, "Print the first N terms instead")->excludes(n_opt);

    auto* wedge = app.add_subcommand("wedge", "The operation s^t of the given characteristic");
    std::uint64_t ws = 0, wt = 0, horizon = 0;
    bool lambda_zero = false, lambda_nonzero = false;
    wedge->add_option("s", ws, "First argument")->required();
    wedge->add_option("t", wt, "Second argument")->required();
    wedge->add_option("--char", characteristic, "Characteristic (0 or a prime)");
    wedge->add_option("--oracle", horizon, "Compute as a sequence-space dimension over this many terms");
    auto* lz = wedge->add_flag("--lambda-zero", lambda_zero, "Print t ^_lambda s with lambda = 0 (arguments t s)");
    wedge->add_flag("--lambda-nonzero", lambda_nonzero, "Print t ^_lambda s with lambda != 0")->excludes(lz);
    wedge->fallthrough();

    // CLI11 splits "[a,b,c]" values into separate items; a leading space
    // keeps each coefficient array whole (JSON ignores it).
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        std::string a = argv[i];
        if (!a.empty() && a.front() == '[') a.insert(a.begin(), ' ');
        args.push_back(std::move(a));
    }

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        const ContextPtr ctx = make_context(o);
        const pcanon_format f = format_of(o);
        char* out = nullptr;

        if (pcf->parsed() || power->parsed()) {
            const DocumentPtr doc = load_document(read_input(o.input));
            const MatrixPtr a = first_matrix(doc.get());
            pcanon_pcf* raw = nullptr;
            check(pcanon_pcf_build(ctx.get(), a.get(), &raw));
            PcfPtr form(raw);
            if (power->parsed()) {
                pcanon_matrix* m = nullptr;
                check(pcanon_pcf_eval(form.get(), k, &m));
                MatrixPtr result(m);
                check(pcanon_matrix_render(result.get(), f, &out));
            } else if (real) {
                check(pcanon_pcf_render_real(ctx.get(), form.get(), a.get(), f, &out));
            } else {
                if (gamma) {
                    pcanon_pcf* g = nullptr;
                    check(pcanon_pcf_to_gamma(form.get(), &g));
                    form.reset(g);
                }
                check(pcanon_pcf_render(form.get(), a.get(), f, &out));
            }
        } else if (expm->parsed()) {
            const DocumentPtr doc = load_document(read_input(o.input));
            const MatrixPtr a = first_matrix(doc.get());
            pcanon_expm* raw = nullptr;
            check(pcanon_expm_build(ctx.get(), a.get(), expm_real ? 1 : 0, &raw));
            ExpmPtr e(raw);
            if (!t_value.empty()) {
                pcanon_matrix* m = nullptr;
                check(pcanon_expm_eval(e.get(), t_value[0], t_value.size() > 1 ? t_value[1] : 0.0, &m));
                MatrixPtr result(m);
                check(pcanon_matrix_render(result.get(), f, &out));
            } else {
                check(pcanon_expm_render(e.get(), a.get(), f, &out));
            }
        } else if (logm->parsed()) {
            const DocumentPtr doc = load_document(read_input(o.input));
            const MatrixPtr a = first_matrix(doc.get());
            const std::vector<long long> ks = branch_text.empty() ? std::vector<long long>{} : parse_branches(branch_text);
            const pcanon_branch branch{branch_text.empty() ? 1 : 0, ks.data(), ks.size()};
            if (log_form) {
                // logarithms are complex anyway, so non-split input may go numeric
                check(pcanon_context_set_numeric(ctx.get(), 1));
                pcanon_pcf* raw = nullptr;
                check(pcanon_pcf_build(ctx.get(), a.get(), &raw));
                PcfPtr form(raw);
                pcanon_pcf* lraw = nullptr;
                check(pcanon_pcf_log(ctx.get(), form.get(), &branch, &lraw));
                PcfPtr log(lraw);
                check(pcanon_pcf_render(log.get(), nullptr, f, &out));
            } else {
                pcanon_matrix* m = nullptr;
                check(pcanon_logm(ctx.get(), a.get(), &branch, &m));
                MatrixPtr result(m);
                check(pcanon_matrix_render(result.get(), f, &out));
            }
        } else if (kron->parsed()) {
            const DocumentPtr doc = load_document(read_input(o.input));
            std::vector<MatrixPtr> owned;
            std::vector<const pcanon_matrix*> mats;
            for (std::size_t i = 0; i < pcanon_document_matrix_count(doc.get()); ++i) {
                pcanon_matrix* m = nullptr;
                check(pcanon_document_matrix(doc.get(), i, &m));
                owned.emplace_back(m);
                mats.push_back(m);
            }
            pcanon_poly* p = nullptr;
            check(pcanon_kron_minpoly(ctx.get(), mats.data(), mats.size(), direct ? 1 : 0, &p));
            PolyPtr result(p);
            check(pcanon_poly_render(result.get(), f, &out));
        } else if (lrs_product->parsed()) {
            std::vector<PolyPtr> owned;
            if (!poly_args.empty() && looks_like_array(poly_args.front())) {
                for (const auto& arg : poly_args) {
                    pcanon_poly* p = nullptr;
                    check(pcanon_poly_from_array(arg.c_str(), characteristic, &p));
                    owned.emplace_back(p);
                }
            } else {
                if (poly_args.size() > 1) throw Failure{PCANON_PARSE_ERROR, "expected coefficient arrays or one document"};
                const DocumentPtr doc = load_document(read_input(poly_args.empty() ? "" : poly_args.front()));
                for (std::size_t i = 0; i < pcanon_document_poly_count(doc.get()); ++i) {
                    pcanon_poly* p = nullptr;
                    check(pcanon_document_poly(doc.get(), i, &p));
                    owned.emplace_back(p);
                }
            }
            std::vector<const pcanon_poly*> polys;
            for (const auto& p : owned) polys.push_back(p.get());
            pcanon_poly* p = nullptr;
            check(pcanon_lrs_product_poly(ctx.get(), polys.data(), polys.size(), &p));
            PolyPtr result(p);
            check(pcanon_poly_render(result.get(), f, &out));
        } else if (lrs_eval->parsed()) {
            const DocumentPtr doc = load_document(read_input(o.input));
            pcanon_lrs* raw = nullptr;
            check(pcanon_document_sequence(doc.get(), &raw));
            LrsPtr s(raw);
            if (terms > 0)
                check(pcanon_lrs_render(s.get(), terms, f, &out));
            else
                check(pcanon_lrs_eval(s.get(), n, f, &out));
        } else if (wedge->parsed()) {
            std::uint64_t value = 0;
            if (lambda_zero || lambda_nonzero)
                check(pcanon_wedge_lambda(ws, wt, lambda_zero ? 1 : 0, &value));
            else if (horizon > 0)
                check(pcanon_wedge_oracle(ws, wt, characteristic, horizon, &value));
            else
                check(pcanon_wedge(ws, wt, characteristic, &value));
            std::cout << value << "\n";
            return 0;
        }
        if (out) emit(out);
        return 0;
    } catch (const Failure& e) {
        std::cerr << "error: " << pcanon_status_name(e.status) << ": " << e.message << "\n";
        return e.status == PCANON_PARSE_ERROR ? kExitParse : kExitDomain;
    }
}
