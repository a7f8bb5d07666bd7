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

#include "pcanon/lrs.hpp"

#include <algorithm>

namespace pcanon {

LinRecSeq::LinRecSeq(Poly char_poly, std::vector<Scalar> initial) : poly_(std::move(char_poly)), init_(std::move(initial)) {
    if (poly_.degree() < 1) throw Error(ErrorCode::DegreeZero, "characteristic polynomial needs degree >= 1");
    if (!poly_.is_monic()) throw Error(ErrorCode::NonMonic, "characteristic polynomial must be monic");
    if (init_.size() != static_cast<std::size_t>(poly_.degree()))
        throw Error(ErrorCode::DimensionMismatch, "need exactly deg(P) initial terms");
    for (const auto& s : init_)
        if (!(s.field() == poly_.field())) throw Error(ErrorCode::MixedFields, "initial term outside " + poly_.field().name());
}

std::vector<Scalar> LinRecSeq::terms(std::size_t count) const {
    const std::size_t d = init_.size();
    std::vector<Scalar> out(init_.begin(), init_.begin() + static_cast<long>(std::min(count, d)));
    const auto& c = poly_.coeffs();
    while (out.size() < count) {
        const std::size_t n = out.size();
        Scalar acc = Scalar::zero(poly_.field());
        for (std::size_t i = 0; i < d; ++i)
            if (!c[i].is_zero()) acc -= c[i] * out[n - d + i];
        out.push_back(acc);
    }
    return out;
}

Scalar lrs_eval(const LinRecSeq& s, std::uint64_t n) { return s.terms(static_cast<std::size_t>(n) + 1).back(); }

bool annihilates(const Poly& p, std::span<const Scalar> prefix) {
    const auto d = static_cast<std::size_t>(std::max(p.degree(), 0));
    const auto& c = p.coeffs();
    for (std::size_t n = 0; n + d < prefix.size(); ++n) {
        Scalar acc = Scalar::zero(p.field());
        for (std::size_t i = 0; i <= d; ++i) acc += c[i] * prefix[n + i];
        if (!acc.is_zero()) return false;
    }
    return true;
}

LinRecSeq lrs_mul(std::span<const LinRecSeq> xs, const Poly& p) {
    if (xs.empty()) throw Error(ErrorCode::EmptyInput, "no sequences to multiply");
    const auto d = static_cast<std::size_t>(std::max(p.degree(), 1));
    const std::size_t window = 3 * d;
    std::vector<Scalar> prod = xs.front().terms(window);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const auto t = xs[i].terms(window);
        for (std::size_t k = 0; k < window; ++k) prod[k] *= t[k];
    }
    if (!annihilates(p, prod))
        throw Error(ErrorCode::AnnihilatorMismatch, "the polynomial does not annihilate the termwise product");
    prod.resize(d);
    return LinRecSeq(p, std::move(prod));
}

Poly lrs_min_annihilator(std::span<const Scalar> prefix) {
    if (prefix.empty()) throw Error(ErrorCode::InsufficientData, "empty prefix");
    const Field f = prefix.front().field();
    if (std::all_of(prefix.begin(), prefix.end(), [](const Scalar& s) { return s.is_zero(); }))
        return Poly::constant(Scalar::one(f));
    const std::size_t len = prefix.size();
    for (std::size_t d = 1; d + 1 <= len / 2; ++d) {
        // unknowns c_0..c_{d-1}: sum_i c_i a_{n+i} = -a_{n+d}, n + d < len
        const std::size_t eqs = len - d;
        std::vector<std::vector<Scalar>> rows(eqs, std::vector<Scalar>(d + 1, Scalar::zero(f)));
        for (std::size_t n = 0; n < eqs; ++n) {
            for (std::size_t i = 0; i < d; ++i) rows[n][i] = prefix[n + i];
            rows[n][d] = -prefix[n + d];
        }
        std::size_t rank = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t col = 0; col < d && rank < eqs; ++col) {
            auto piv = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                                    [col](const auto& r) { return !r[col].is_zero(); });
            if (piv == rows.end()) continue;
            std::iter_swap(rows.begin() + static_cast<long>(rank), piv);
            const Scalar inv = rows[rank][col].inverse();
            for (auto& x : rows[rank]) x *= inv;
            for (std::size_t r = 0; r < eqs; ++r) {
                if (r == rank || rows[r][col].is_zero()) continue;
                const Scalar c = rows[r][col];
                for (std::size_t k = col; k <= d; ++k) rows[r][k] -= c * rows[rank][k];
            }
            pivots.push_back(col);
            ++rank;
        }
        bool consistent = true;
        for (std::size_t r = rank; r < eqs; ++r)
            if (!rows[r][d].is_zero()) consistent = false;
        if (!consistent) continue;
        std::vector<Scalar> c(d + 1, Scalar::zero(f));
        for (std::size_t r = 0; r < rank; ++r) c[pivots[r]] = rows[r][d];
        c[d] = Scalar::one(f);
        return Poly(f, std::move(c));
    }
    throw Error(ErrorCode::InsufficientData, "no annihilator of degree <= len/2 - 1");
}

}  // namespace pcanon
