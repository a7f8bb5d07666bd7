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

#include "pcanon/kronmin.hpp"

#include <algorithm>

namespace pcanon {

EigSpec eigspec_from_poly(const Poly& minimal, Tolerance tol) {
    const FactoredPoly fp = poly_factor(minimal, tol);
    if (!fp.split())
        throw Error(ErrorCode::NonSplitField, "minimal polynomial does not split over " + minimal.field().name());
    EigSpec spec;
    spec.field = minimal.field();
    for (const auto& r : fp.roots) {
        if (r.value.is_zero())
            spec.zero_index = r.multiplicity;
        else
            spec.nonzero.push_back({r.value, r.multiplicity});
    }
    return spec;
}

EigSpec eigspec_of(const Matrix& a, Tolerance tol) {
    const FactoredPoly fp = factored_minpoly(a, tol);
    if (!fp.split()) throw Error(ErrorCode::NonSplitField, "minimal polynomial does not split over " + a.field().name());
    EigSpec spec;
    spec.field = a.field();
    for (const auto& r : fp.roots) {
        if (r.value.is_zero())
            spec.zero_index = r.multiplicity;
        else
            spec.nonzero.push_back({r.value, r.multiplicity});
    }
    return spec;
}

namespace {

void check_specs(std::span<const EigSpec> specs, WedgeContext ctx) {
    if (specs.empty()) throw Error(ErrorCode::EmptyInput, "no Kronecker factors given");
    for (const auto& s : specs) {
        if (!(s.field == specs.front().field)) throw Error(ErrorCode::MixedFields, "Kronecker factors over different fields");
        if (!(WedgeContext::of(s.field) == ctx))
            throw Error(ErrorCode::CharacteristicMismatch, "wedge characteristic differs from the field characteristic");
    }
}

bool same_product(const Scalar& a, const Scalar& b, Tolerance tol) {
    if (a.field().exact()) return a == b;
    return std::abs(a.complex() - b.complex()) <= tol.around(std::abs(a.complex()));
}

}  // namespace

ProductClassTable product_classes(std::span<const EigSpec> specs, WedgeContext ctx, Tolerance tol) {
    check_specs(specs, ctx);
    ProductClassTable table;
    if (std::any_of(specs.begin(), specs.end(), [](const EigSpec& s) { return s.nilpotent(); })) return table;
    const Field f = specs.front().field;
    std::vector<std::size_t> pick(specs.size(), 0);
    std::vector<std::uint64_t> indices(specs.size());
    while (true) {
        Scalar product = Scalar::one(f);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            product *= specs[i].nonzero[pick[i]].value;
            indices[i] = specs[i].nonzero[pick[i]].index;
        }
        const std::uint64_t w = wedge_fold(indices, ctx);
        auto hit = std::find_if(table.begin(), table.end(),
                                [&](const ProductClass& c) { return same_product(c.product, product, tol); });
        if (hit == table.end())
            table.push_back({product, w});
        else
            hit->exponent = std::max(hit->exponent, w);
        // odometer over the tuples
        std::size_t pos = 0;
        while (pos < specs.size() && ++pick[pos] == specs[pos].nonzero.size()) pick[pos++] = 0;
        if (pos == specs.size()) break;
    }
    std::sort(table.begin(), table.end(),
              [](const ProductClass& a, const ProductClass& b) { return canonical_less(a.product, b.product); });
    return table;
}

std::uint64_t kron_nilpotent_exponent(std::span<const EigSpec> specs) {
    std::uint64_t rho = 0;
    bool any_nilpotent = false;
    std::uint64_t min_nilpotent = 0;
    for (const auto& s : specs) {
        if (s.nilpotent()) {
            min_nilpotent = any_nilpotent ? std::min(min_nilpotent, s.zero_index) : s.zero_index;
            any_nilpotent = true;
        }
        rho = std::max(rho, s.zero_index);
    }
    return any_nilpotent ? min_nilpotent : rho;
}

Poly kron_minpoly_symbolic(std::span<const EigSpec> specs, WedgeContext ctx, Tolerance tol) {
    const ProductClassTable table = product_classes(specs, ctx, tol);
    const Field f = specs.front().field;
    Poly m = Poly::monomial(Scalar::one(f), kron_nilpotent_exponent(specs));
    for (const auto& cls : table) m *= Poly::linear(cls.product).pow(static_cast<unsigned>(cls.exponent));
    return m;
}

Poly kron_minpoly_direct(std::span<const Matrix> mats, Tolerance tol) {
    if (mats.empty()) throw Error(ErrorCode::EmptyInput, "no Kronecker factors given");
    std::size_t order = 1;
    for (const auto& m : mats) {
        order *= m.order();
        if (order > 4096) throw Error(ErrorCode::OrderTooLarge, "Kronecker product order exceeds 4096");
    }
    Matrix k = mats.front();
    for (std::size_t i = 1; i < mats.size(); ++i) k = kron(k, mats[i]);
    return minpoly(k, tol);
}

Poly lrs_product_poly(std::span<const Poly> polys, WedgeContext ctx, Tolerance tol) {
    if (polys.empty()) throw Error(ErrorCode::EmptyInput, "no polynomials given");
    for (const auto& p : polys) {
        if (p.degree() < 1) throw Error(ErrorCode::DegreeZero, "recurrence polynomials need degree >= 1");
        if (!p.is_monic()) throw Error(ErrorCode::NonMonic, "recurrence polynomials must be monic");
        if (!(p.field() == polys.front().field())) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    }
    if (!(WedgeContext::of(polys.front().field()) == ctx))
        throw Error(ErrorCode::CharacteristicMismatch, "wedge characteristic differs from the field characteristic");
    std::vector<EigSpec> specs;
    bool split = true;
    for (const auto& p : polys) {
        try {
            specs.push_back(eigspec_from_poly(p, tol));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonSplitField) throw;
            split = false;
            break;
        }
    }
    if (split) return kron_minpoly_symbolic(specs, ctx, tol);
    std::vector<Matrix> comps;
    for (const auto& p : polys) comps.push_back(companion(p));
    return kron_minpoly_direct(comps, tol);
}

}  // namespace pcanon
