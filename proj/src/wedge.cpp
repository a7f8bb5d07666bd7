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

#include "pcanon/wedge.hpp"

#include <algorithm>
#include <vector>

namespace pcanon {

WedgeContext WedgeContext::prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return WedgeContext(p);
}

WedgeContext WedgeContext::of(std::uint64_t characteristic) {
    return characteristic == 0 ? characteristic_zero() : prime(characteristic);
}

WedgeContext WedgeContext::of(const Field& f) { return WedgeContext(f.characteristic()); }

namespace {

bool adds_without_carry(std::uint64_t i, std::uint64_t j, std::uint64_t p) {
    while (i && j) {
        if (i % p + j % p >= p) return false;
        i /= p;
        j /= p;
    }
    return true;
}

}  // namespace

std::uint64_t wedge(std::uint64_t s, std::uint64_t t, WedgeContext ctx) {
    if (s == 0 || t == 0) return 0;
    const std::uint64_t p = ctx.characteristic();
    if (p == 0) return s + t - 1;
    std::uint64_t best = 0;
    for (std::uint64_t i = 0; i < s; ++i)
        for (std::uint64_t j = t; j-- > 0;) {
            if (i + j + 1 <= best) break;
            if (adds_without_carry(i, j, p)) {
                best = i + j + 1;
                break;
            }
        }
    return best;
}

std::uint64_t wedge_fold(std::span<const std::uint64_t> indices, WedgeContext ctx) {
    if (indices.empty()) return 0;
    std::uint64_t acc = indices.front();
    for (std::size_t k = 1; k < indices.size(); ++k) acc = wedge(acc, indices[k], ctx);
    return acc;
}

std::uint64_t wedge_lambda(std::uint64_t t, std::uint64_t s, bool lambda_is_zero) noexcept {
    if (lambda_is_zero) return std::min(t, s);
    return s != 0 ? t : 0;
}

std::uint64_t wedge_oracle_dim(std::uint64_t s, std::uint64_t t, WedgeContext ctx, std::uint64_t horizon) {
    if (horizon < s + t + 2) throw Error(ErrorCode::HorizonTooSmall, "horizon must be at least s + t + 2");
    const Field f = ctx.characteristic() == 0 ? Field::rationals() : Field::prime(ctx.characteristic());
    std::vector<std::vector<Scalar>> rows;
    for (std::uint64_t a = 0; a < s; ++a)
        for (std::uint64_t b = 0; b < t; ++b) {
            std::vector<Scalar> row;
            row.reserve(horizon);
            for (std::uint64_t k = 0; k < horizon; ++k) row.push_back(Scalar::from_integer(f, binomial(k, a) * binomial(k, b)));
            rows.push_back(std::move(row));
        }
    // Gaussian elimination for the rank
    std::uint64_t rank = 0;
    for (std::uint64_t col = 0; col < horizon && rank < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                                  [col](const auto& r) { return !r[col].is_zero(); });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<long>(rank), pivot);
        const auto& prow = rows[rank];
        const Scalar inv = prow[col].inverse();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const Scalar c = rows[r][col] * inv;
            for (std::uint64_t k = col; k < horizon; ++k) rows[r][k] -= c * prow[k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace pcanon
