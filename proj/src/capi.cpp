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

#include "pcanon/pcanon.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "pcanon/io.hpp"
#include "pcanon/kronmin.hpp"

using namespace pcanon;

struct pcanon_context {
    Tolerance tol;
    bool numeric = false;
};
struct pcanon_document {
    io::InputDocument doc;
};
struct pcanon_matrix {
    Matrix m;
};
struct pcanon_poly {
    Poly p;
};
struct pcanon_pcf {
    PCanonicalForm f;
};
struct pcanon_expm {
    std::variant<ClosedFormExp, RealClosedForm> e;
};
struct pcanon_lrs {
    LinRecSeq s;
};

namespace {

thread_local std::string last_error;

pcanon_status status_of(ErrorCode code) { return static_cast<pcanon_status>(static_cast<int>(code) + 1); }

template <typename F>
pcanon_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return PCANON_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PCANON_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PCANON_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw Error(ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Tolerance tol_of(const pcanon_context* ctx) { return ctx ? ctx->tol : Tolerance{}; }
bool numeric_of(const pcanon_context* ctx) { return ctx && ctx->numeric; }

/// Runs `op` and, when the context allows it, retries over C after a
/// NonSplitField failure on exact input.
template <typename F>
auto with_numeric_fallback(const pcanon_context* ctx, const Matrix& m, F&& op) {
    try {
        return op(m);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NonSplitField || !numeric_of(ctx) || !m.field().exact() ||
            m.field().kind() == Field::Kind::Prime)
            throw;
    }
    return op(m.to_field(Field::complex()));
}


LogBranchSpec branch_of(const pcanon_branch* b) {
    if (!b || b->principal) return LogBranchSpec::principal_branch();
    if (b->count > 0) need(b->k, "branch array");
    return LogBranchSpec::explicit_branches(std::vector<long long>(b->k, b->k + b->count));
}

}  // namespace

extern "C" {

const char* pcanon_version(void) { return "1.0.0"; }

const char* pcanon_status_name(pcanon_status status) {
    if (status == PCANON_OK) return "Ok";
    if (status == PCANON_INTERNAL) return "Internal";
    const int code = static_cast<int>(status) - 1;
    if (code < 0 || code > static_cast<int>(ErrorCode::ParseError)) return "Unknown";
    return error_name(static_cast<ErrorCode>(code)).data();
}

const char* pcanon_last_error_message(void) { return last_error.c_str(); }

void pcanon_string_free(char* s) { std::free(s); }

pcanon_status pcanon_context_new(pcanon_context** out) {
    return guarded([&] {
        need(out, "output");
        *out = new pcanon_context();
    });
}

void pcanon_context_free(pcanon_context* ctx) { delete ctx; }

pcanon_status pcanon_context_set_tolerance(pcanon_context* ctx, double tol) {
    return guarded([&] {
        need(ctx, "context");
        if (!(tol > 0.0) || tol >= 1.0) throw Error(ErrorCode::InvalidArgument, "tolerance must lie in (0, 1)");
        ctx->tol.value = tol;
    });
}

pcanon_status pcanon_context_set_numeric(pcanon_context* ctx, int enabled) {
    return guarded([&] {
        need(ctx, "context");
        ctx->numeric = enabled != 0;
    });
}

pcanon_status pcanon_document_parse(const char* text, pcanon_document** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "output");
        *out = new pcanon_document{io::parse_input(text)};
    });
}

void pcanon_document_free(pcanon_document* doc) { delete doc; }

uint64_t pcanon_document_characteristic(const pcanon_document* doc) {
    return doc ? doc->doc.field.characteristic() : 0;
}

size_t pcanon_document_matrix_count(const pcanon_document* doc) { return doc ? doc->doc.matrices.size() : 0; }

pcanon_status pcanon_document_matrix(const pcanon_document* doc, size_t i, pcanon_matrix** out) {
    return guarded([&] {
        need(doc, "document");
        need(out, "output");
        if (i >= doc->doc.matrices.size()) throw Error(ErrorCode::EmptyInput, "the document holds no such matrix");
        *out = new pcanon_matrix{doc->doc.matrices[i]};
    });
}

size_t pcanon_document_poly_count(const pcanon_document* doc) { return doc ? doc->doc.polys.size() : 0; }

pcanon_status pcanon_document_poly(const pcanon_document* doc, size_t i, pcanon_poly** out) {
    return guarded([&] {
        need(doc, "document");
        need(out, "output");
        if (i >= doc->doc.polys.size()) throw Error(ErrorCode::EmptyInput, "the document holds no such polynomial");
        *out = new pcanon_poly{doc->doc.polys[i]};
    });
}

pcanon_status pcanon_document_sequence(const pcanon_document* doc, pcanon_lrs** out) {
    return guarded([&] {
        need(doc, "document");
        need(out, "output");
        if (!doc->doc.sequence) throw Error(ErrorCode::EmptyInput, "the document holds no sequence");
        *out = new pcanon_lrs{*doc->doc.sequence};
    });
}

pcanon_status pcanon_matrix_from_json(const char* text, pcanon_matrix** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "output");
        const io::json j = io::parse_json(text);
        try {
            *out = new pcanon_matrix{io::matrix_from_json(j)};
        } catch (const io::json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    });
}

pcanon_status pcanon_matrix_order(const pcanon_matrix* m, size_t* out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "output");
        *out = m->m.order();
    });
}

pcanon_status pcanon_matrix_power(const pcanon_matrix* m, uint64_t k, pcanon_matrix** out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "output");
        *out = new pcanon_matrix{m->m.pow(k)};
    });
}

pcanon_status pcanon_matrix_minpoly(const pcanon_context* ctx, const pcanon_matrix* m, pcanon_poly** out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "output");
        *out = new pcanon_poly{minpoly(m->m, tol_of(ctx))};
    });
}

pcanon_status pcanon_matrix_render(const pcanon_matrix* m, pcanon_format fmt, char** out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "output");
        *out = copy_string(fmt == PCANON_FORMAT_JSON ? io::dump(io::to_json(m->m)) : io::pretty(m->m));
    });
}

void pcanon_matrix_free(pcanon_matrix* m) { delete m; }

pcanon_status pcanon_poly_from_array(const char* text, uint64_t characteristic, pcanon_poly** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "output");
        const Field f = characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
        *out = new pcanon_poly{io::parse_poly_array(text, f)};
    });
}

pcanon_status pcanon_poly_degree(const pcanon_poly* p, int* out) {
    return guarded([&] {
        need(p, "polynomial");
        need(out, "output");
        *out = p->p.degree();
    });
}

pcanon_status pcanon_poly_render(const pcanon_poly* p, pcanon_format fmt, char** out) {
    return guarded([&] {
        need(p, "polynomial");
        need(out, "output");
        *out = copy_string(fmt == PCANON_FORMAT_JSON ? io::dump(io::to_json(p->p)) : io::pretty(p->p));
    });
}

void pcanon_poly_free(pcanon_poly* p) { delete p; }

pcanon_status pcanon_pcf_build(const pcanon_context* ctx, const pcanon_matrix* m, pcanon_pcf** out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "output");
        const Tolerance tol = tol_of(ctx);
        *out = new pcanon_pcf{with_numeric_fallback(ctx, m->m, [tol](const Matrix& a) { return pcf_build(a, tol); })};
    });
}

pcanon_status pcanon_pcf_from_json(const char* text, pcanon_pcf** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "output");
        const io::json j = io::parse_json(text);
        try {
            *out = new pcanon_pcf{io::pcf_from_json(j)};
        } catch (const io::json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    });
}

pcanon_status pcanon_pcf_to_gamma(const pcanon_pcf* f, pcanon_pcf** out) {
    return guarded([&] {
        need(f, "form");
        need(out, "output");
        *out = new pcanon_pcf{pcf_to_gamma(f->f)};
    });
}

pcanon_status pcanon_pcf_eval(const pcanon_pcf* f, uint64_t k, pcanon_matrix** out) {
    return guarded([&] {
        need(f, "form");
        need(out, "output");
        *out = new pcanon_matrix{pcf_eval(f->f, k)};
    });
}

pcanon_status pcanon_pcf_minpoly(const pcanon_pcf* f, pcanon_poly** out) {
    return guarded([&] {
        need(f, "form");
        need(out, "output");
        *out = new pcanon_poly{pcf_minpoly(pcf_to_lambda(f->f))};
    });
}

pcanon_status pcanon_pcf_log(const pcanon_context* ctx, const pcanon_pcf* f, const pcanon_branch* branch,
                             pcanon_pcf** out) {
    return guarded([&] {
        need(f, "form");
        need(out, "output");
        *out = new pcanon_pcf{log_pcf(f->f, branch_of(branch), tol_of(ctx))};
    });
}

pcanon_status pcanon_pcf_render(const pcanon_pcf* f, const pcanon_matrix* source, pcanon_format fmt, char** out) {
    return guarded([&] {
        need(f, "form");
        need(out, "output");
        *out = copy_string(fmt == PCANON_FORMAT_JSON ? io::dump(io::to_json(f->f))
                                                     : io::pretty(f->f, source ? &source->m : nullptr));
    });
}

pcanon_status pcanon_pcf_render_real(const pcanon_context* ctx, const pcanon_pcf* f, const pcanon_matrix* source,
                                     pcanon_format fmt, char** out) {
    return guarded([&] {
        need(f, "form");
        need(out, "output");
        const RealPCF r = pcf_realify(f->f, tol_of(ctx));
        *out = copy_string(fmt == PCANON_FORMAT_JSON ? io::dump(io::to_json(r))
                                                     : io::pretty(r, source ? &source->m : nullptr));
    });
}

void pcanon_pcf_free(pcanon_pcf* f) { delete f; }

pcanon_status pcanon_expm_build(const pcanon_context* ctx, const pcanon_matrix* m, int real, pcanon_expm** out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "output");
        if (real)
            *out = new pcanon_expm{expm_real(m->m, tol_of(ctx))};
        else
            *out = new pcanon_expm{expm_closed(m->m, tol_of(ctx))};
    });
}

pcanon_status pcanon_expm_eval(const pcanon_expm* e, double t_re, double t_im, pcanon_matrix** out) {
    return guarded([&] {
        need(e, "exponential");
        need(out, "output");
        if (const auto* c = std::get_if<ClosedFormExp>(&e->e)) {
            *out = new pcanon_matrix{closedform_eval(*c, Complex(t_re, t_im))};
            return;
        }
        if (t_im != 0.0) throw Error(ErrorCode::NotReal, "the real closed form takes a real t");
        *out = new pcanon_matrix{realclosedform_eval(std::get<RealClosedForm>(e->e), t_re)};
    });
}

pcanon_status pcanon_expm_render(const pcanon_expm* e, const pcanon_matrix* source, pcanon_format fmt, char** out) {
    return guarded([&] {
        need(e, "exponential");
        need(out, "output");
        const Matrix* src = source ? &source->m : nullptr;
        *out = copy_string(std::visit(
            [&](const auto& form) { return fmt == PCANON_FORMAT_JSON ? io::dump(io::to_json(form)) : io::pretty(form, src); },
            e->e));
    });
}

void pcanon_expm_free(pcanon_expm* e) { delete e; }

pcanon_status pcanon_logm(const pcanon_context* ctx, const pcanon_matrix* m, const pcanon_branch* branch,
                          pcanon_matrix** out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "output");
        *out = new pcanon_matrix{logm(m->m, branch_of(branch), tol_of(ctx))};
    });
}

pcanon_status pcanon_kron_minpoly(const pcanon_context* ctx, const pcanon_matrix* const* mats, size_t count, int direct,
                                  pcanon_poly** out) {
    return guarded([&] {
        need(out, "output");
        if (count == 0) throw Error(ErrorCode::EmptyInput, "no matrices given");
        need(mats, "matrix array");
        std::vector<Matrix> ms;
        for (size_t i = 0; i < count; ++i) {
            need(mats[i], "matrix");
            ms.push_back(mats[i]->m);
        }
        const Tolerance tol = tol_of(ctx);
        if (direct) {
            *out = new pcanon_poly{kron_minpoly_direct(ms, tol)};
            return;
        }
        const auto symbolic = [&](const std::vector<Matrix>& xs) {
            std::vector<EigSpec> specs;
            for (const auto& x : xs) specs.push_back(eigspec_of(x, tol));
            return kron_minpoly_symbolic(specs, WedgeContext::of(xs.front().field()), tol);
        };
        try {
            *out = new pcanon_poly{symbolic(ms)};
            return;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonSplitField || !numeric_of(ctx) ||
                ms.front().field().kind() != Field::Kind::Rational)
                throw;
        }
        for (auto& x : ms) x = x.to_field(Field::complex());
        *out = new pcanon_poly{symbolic(ms)};
    });
}

pcanon_status pcanon_lrs_product_poly(const pcanon_context* ctx, const pcanon_poly* const* polys, size_t count,
                                      pcanon_poly** out) {
    return guarded([&] {
        need(out, "output");
        if (count == 0) throw Error(ErrorCode::EmptyInput, "no polynomials given");
        need(polys, "polynomial array");
        std::vector<Poly> ps;
        for (size_t i = 0; i < count; ++i) {
            need(polys[i], "polynomial");
            ps.push_back(polys[i]->p);
        }
        *out = new pcanon_poly{lrs_product_poly(ps, WedgeContext::of(ps.front().field()), tol_of(ctx))};
    });
}

pcanon_status pcanon_lrs_eval(const pcanon_lrs* s, uint64_t n, pcanon_format fmt, char** out) {
    return guarded([&] {
        need(s, "sequence");
        need(out, "output");
        const Scalar v = lrs_eval(s->s, n);
        *out = copy_string(fmt == PCANON_FORMAT_JSON ? io::dump(io::to_json(v)) : io::pretty(v));
    });
}

pcanon_status pcanon_lrs_render(const pcanon_lrs* s, size_t terms, pcanon_format fmt, char** out) {
    return guarded([&] {
        need(s, "sequence");
        need(out, "output");
        if (fmt == PCANON_FORMAT_PRETTY) {
            *out = copy_string(io::pretty(s->s, terms));
            return;
        }
        io::json j = io::to_json(s->s);
        io::json t = io::json::array();
        for (const auto& x : s->s.terms(terms)) t.push_back(io::to_json(x));
        j["terms"] = std::move(t);
        *out = copy_string(io::dump(j));
    });
}

void pcanon_lrs_free(pcanon_lrs* s) { delete s; }

pcanon_status pcanon_wedge(uint64_t s, uint64_t t, uint64_t characteristic, uint64_t* out) {
    return guarded([&] {
        need(out, "output");
        *out = wedge(s, t, WedgeContext::of(characteristic));
    });
}

pcanon_status pcanon_wedge_lambda(uint64_t t, uint64_t s, int lambda_is_zero, uint64_t* out) {
    return guarded([&] {
        need(out, "output");
        *out = wedge_lambda(t, s, lambda_is_zero != 0);
    });
}

pcanon_status pcanon_wedge_oracle(uint64_t s, uint64_t t, uint64_t characteristic, uint64_t horizon, uint64_t* out) {
    return guarded([&] {
        need(out, "output");
        *out = wedge_oracle_dim(s, t, WedgeContext::of(characteristic), horizon);
    });
}

}  // extern "C"
