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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "pcanon/pcanon.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    pcanon_string_free(s);
    return out;
}

pcanon_matrix* matrix(const char* doc_text) {
    pcanon_document* doc = nullptr;
    REQUIRE(pcanon_document_parse(doc_text, &doc) == PCANON_OK);
    pcanon_matrix* m = nullptr;
    REQUIRE(pcanon_document_matrix(doc, 0, &m) == PCANON_OK);
    pcanon_document_free(doc);
    return m;
}

}  // namespace

TEST_CASE("status names and errors") {
    CHECK(std::string(pcanon_status_name(PCANON_OK)) == "Ok");
    CHECK(std::string(pcanon_status_name(PCANON_NON_SPLIT_FIELD)) == "NonSplitField");
    CHECK(std::string(pcanon_status_name(PCANON_PARSE_ERROR)) == "ParseError");
    pcanon_document* doc = nullptr;
    CHECK(pcanon_document_parse("[[1, 2]]", &doc) == PCANON_PARSE_ERROR);
    CHECK(doc == nullptr);
    CHECK(std::strlen(pcanon_last_error_message()) > 0);
    CHECK(pcanon_version() != nullptr);
}

TEST_CASE("wedge") {
    uint64_t v = 0;
    CHECK(pcanon_wedge(3, 4, 0, &v) == PCANON_OK);
    CHECK(v == 6);
    CHECK(pcanon_wedge(2, 2, 2, &v) == PCANON_OK);
    CHECK(v == 2);
    CHECK(pcanon_wedge(2, 2, 4, &v) == PCANON_NOT_PRIME);
    CHECK(pcanon_wedge_oracle(5, 4, 3, 32, &v) == PCANON_OK);
    uint64_t w = 0;
    CHECK(pcanon_wedge(5, 4, 3, &w) == PCANON_OK);
    CHECK(v == w);
}

TEST_CASE("P-canonical form, power and minimal polynomial") {
    pcanon_context* ctx = nullptr;
    REQUIRE(pcanon_context_new(&ctx) == PCANON_OK);
    pcanon_matrix* a = matrix("[[2,4,2,3],[0,2,4,2],[0,0,2,4],[0,0,0,2]]");
    size_t n = 0;
    CHECK(pcanon_matrix_order(a, &n) == PCANON_OK);
    CHECK(n == 4);

    pcanon_pcf* f = nullptr;
    REQUIRE(pcanon_pcf_build(ctx, a, &f) == PCANON_OK);
    char* text = nullptr;
    REQUIRE(pcanon_pcf_render(f, a, PCANON_FORMAT_PRETTY, &text) == PCANON_OK);
    CHECK(take(text).find("a[0,3](k) = 2^(k+3)*C(k,3) + 2^(k+2)*C(k,2) + 3*2^(k-1)*C(k,1)") != std::string::npos);

    pcanon_matrix* via_form = nullptr;
    pcanon_matrix* direct = nullptr;
    REQUIRE(pcanon_pcf_eval(f, 9, &via_form) == PCANON_OK);
    REQUIRE(pcanon_matrix_power(a, 9, &direct) == PCANON_OK);
    char* s1 = nullptr;
    char* s2 = nullptr;
    REQUIRE(pcanon_matrix_render(via_form, PCANON_FORMAT_JSON, &s1) == PCANON_OK);
    REQUIRE(pcanon_matrix_render(direct, PCANON_FORMAT_JSON, &s2) == PCANON_OK);
    CHECK(take(s1) == take(s2));

    pcanon_poly* mp = nullptr;
    REQUIRE(pcanon_matrix_minpoly(ctx, a, &mp) == PCANON_OK);
    REQUIRE(pcanon_poly_render(mp, PCANON_FORMAT_PRETTY, &text) == PCANON_OK);
    CHECK(take(text) == "X^4 - 8*X^3 + 24*X^2 - 32*X + 16");

    // JSON round trip through the handle API.
    REQUIRE(pcanon_pcf_render(f, nullptr, PCANON_FORMAT_JSON, &text) == PCANON_OK);
    const std::string json = take(text);
    pcanon_pcf* back = nullptr;
    REQUIRE(pcanon_pcf_from_json(json.c_str(), &back) == PCANON_OK);
    REQUIRE(pcanon_pcf_render(back, nullptr, PCANON_FORMAT_JSON, &text) == PCANON_OK);
    CHECK(take(text) == json);

    pcanon_poly_free(mp);
    pcanon_matrix_free(via_form);
    pcanon_matrix_free(direct);
    pcanon_pcf_free(back);
    pcanon_pcf_free(f);
    pcanon_matrix_free(a);
    pcanon_context_free(ctx);
}

TEST_CASE("logarithm errors and branches") {
    pcanon_context* ctx = nullptr;
    REQUIRE(pcanon_context_new(&ctx) == PCANON_OK);
    pcanon_matrix* singular = matrix("[[1,1],[1,1]]");
    pcanon_matrix* out = nullptr;
    const pcanon_branch principal{1, nullptr, 0};
    CHECK(pcanon_logm(ctx, singular, &principal, &out) == PCANON_SINGULAR_MATRIX);
    CHECK(out == nullptr);

    pcanon_matrix* minus2 = matrix("[[1,3],[-3,-5]]");
    CHECK(pcanon_logm(ctx, minus2, &principal, &out) == PCANON_PRINCIPAL_UNDEFINED);
    const long long two[] = {0, 0};
    const pcanon_branch wrong{0, two, 2};
    CHECK(pcanon_logm(ctx, minus2, &wrong, &out) == PCANON_BRANCH_ARITY);
    const pcanon_branch one{0, two, 1};
    REQUIRE(pcanon_logm(ctx, minus2, &one, &out) == PCANON_OK);

    pcanon_expm* e = nullptr;
    REQUIRE(pcanon_expm_build(ctx, out, 0, &e) == PCANON_OK);
    pcanon_matrix* back = nullptr;
    REQUIRE(pcanon_expm_eval(e, 1.0, 0.0, &back) == PCANON_OK);
    char* text = nullptr;
    REQUIRE(pcanon_matrix_render(back, PCANON_FORMAT_PRETTY, &text) == PCANON_OK);
    CHECK(!take(text).empty());

    pcanon_matrix_free(back);
    pcanon_expm_free(e);
    pcanon_matrix_free(out);
    pcanon_matrix_free(minus2);
    pcanon_matrix_free(singular);
    pcanon_context_free(ctx);
}

TEST_CASE("non-split input needs the numeric fallback") {
    pcanon_context* ctx = nullptr;
    REQUIRE(pcanon_context_new(&ctx) == PCANON_OK);
    pcanon_matrix* rot = matrix("[[0,-1],[1,0]]");
    pcanon_pcf* f = nullptr;
    CHECK(pcanon_pcf_build(ctx, rot, &f) == PCANON_NON_SPLIT_FIELD);
    CHECK(pcanon_context_set_numeric(ctx, 1) == PCANON_OK);
    REQUIRE(pcanon_pcf_build(ctx, rot, &f) == PCANON_OK);
    char* text = nullptr;
    REQUIRE(pcanon_pcf_render_real(ctx, f, nullptr, PCANON_FORMAT_PRETTY, &text) == PCANON_OK);
    const std::string real = take(text);
    CHECK(real.find("cos") != std::string::npos);
    CHECK(real.find("sin") != std::string::npos);
    pcanon_pcf_free(f);
    pcanon_matrix_free(rot);
    pcanon_context_free(ctx);
}

TEST_CASE("Kronecker minimal polynomial and sequence products") {
    pcanon_context* ctx = nullptr;
    REQUIRE(pcanon_context_new(&ctx) == PCANON_OK);
    pcanon_matrix* j2 = matrix("[[1,1],[0,1]]");
    pcanon_matrix* j3 = matrix("[[1,1,0],[0,1,1],[0,0,1]]");
    const pcanon_matrix* mats[] = {j2, j3};
    char* text = nullptr;
    for (int direct : {0, 1}) {
        pcanon_poly* p = nullptr;
        REQUIRE(pcanon_kron_minpoly(ctx, mats, 2, direct, &p) == PCANON_OK);
        int deg = -1;
        CHECK(pcanon_poly_degree(p, &deg) == PCANON_OK);
        CHECK(deg == 4);
        pcanon_poly_free(p);
    }

    pcanon_poly* fib = nullptr;
    REQUIRE(pcanon_poly_from_array("[-1, -1, 1]", 0, &fib) == PCANON_OK);
    const pcanon_poly* polys[] = {fib, fib};
    pcanon_poly* prod = nullptr;
    REQUIRE(pcanon_lrs_product_poly(ctx, polys, 2, &prod) == PCANON_OK);
    REQUIRE(pcanon_poly_render(prod, PCANON_FORMAT_PRETTY, &text) == PCANON_OK);
    CHECK(take(text) == "X^3 - 2*X^2 - 2*X + 1");

    pcanon_document* doc = nullptr;
    REQUIRE(pcanon_document_parse(R"({"sequence": {"poly": [-1, -1, 1], "initial": [0, 1]}})", &doc) == PCANON_OK);
    pcanon_lrs* s = nullptr;
    REQUIRE(pcanon_document_sequence(doc, &s) == PCANON_OK);
    REQUIRE(pcanon_lrs_eval(s, 30, PCANON_FORMAT_PRETTY, &text) == PCANON_OK);
    CHECK(take(text) == "832040");

    pcanon_lrs_free(s);
    pcanon_document_free(doc);
    pcanon_poly_free(prod);
    pcanon_poly_free(fib);
    pcanon_matrix_free(j3);
    pcanon_matrix_free(j2);
    pcanon_context_free(ctx);
}
