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

#ifndef PCANON_WEDGE_HPP
#define PCANON_WEDGE_HPP

#include <cstdint>
#include <span>

#include "pcanon/scalar.hpp"

namespace pcanon {

/// The only field datum the wedge operations depend on.
class WedgeContext {
   public:
    static WedgeContext characteristic_zero() noexcept { return WedgeContext(0); }
    /// NotPrime unless p is prime.
    static WedgeContext prime(std::uint64_t p);
    /// 0 -> characteristic zero, otherwise a prime.
    static WedgeContext of(std::uint64_t characteristic);
    static WedgeContext of(const Field& f);

    std::uint64_t characteristic() const noexcept { return p_; }
    bool operator==(const WedgeContext&) const = default;

   private:
    explicit WedgeContext(std::uint64_t p) noexcept : p_(p) {}
    std::uint64_t p_;
};

/// s ^ t: the largest i + j + 1 with C(i+j, i) != 0 in the field, i < s,
/// j < t; 0 when either argument is 0. Characteristic p uses Kummer's
/// no-carry criterion.
std::uint64_t wedge(std::uint64_t s, std::uint64_t t, WedgeContext ctx);

/// Left fold t_1 ^ t_2 ^ ... ^ t_m. An empty list folds to 0.
std::uint64_t wedge_fold(std::span<const std::uint64_t> indices, WedgeContext ctx);

/// t ^_lambda s = min(t, s) if lambda = 0, t if lambda != 0 and s != 0, else 0.
std::uint64_t wedge_lambda(std::uint64_t t, std::uint64_t s, bool lambda_is_zero) noexcept;

/// Dimension of span{Lambda_a * Lambda_b : a < s, b < t}, computed as the
/// rank of the termwise products over the first `horizon` indices.
/// HorizonTooSmall unless horizon >= s + t + 2.
std::uint64_t wedge_oracle_dim(std::uint64_t s, std::uint64_t t, WedgeContext ctx, std::uint64_t horizon);

}  // namespace pcanon

#endif
