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

#ifndef PCANON_LRS_HPP
#define PCANON_LRS_HPP

#include <span>
#include <vector>

#include "pcanon/poly.hpp"

namespace pcanon {

/// C-finite sequence: monic characteristic polynomial X^d + sum c_i X^i and
/// the first d terms; a_n = -sum_{i<d} c_i a_{n-d+i} for n >= d.
class LinRecSeq {
   public:
    LinRecSeq(Poly char_poly, std::vector<Scalar> initial);

    const Poly& char_poly() const noexcept { return poly_; }
    const std::vector<Scalar>& initial() const noexcept { return init_; }
    std::size_t order() const noexcept { return init_.size(); }

    /// The first `count` terms.
    std::vector<Scalar> terms(std::size_t count) const;

   private:
    Poly poly_;
    std::vector<Scalar> init_;
};

Scalar lrs_eval(const LinRecSeq& s, std::uint64_t n);

/// Termwise product of the factors as an element of L(p). Re-verifies the
/// recurrence over 3 deg(p) terms (AnnihilatorMismatch on failure).
LinRecSeq lrs_mul(std::span<const LinRecSeq> xs, const Poly& p);

/// Minimal monic annihilator of a finite prefix from the Hankel systems;
/// InsufficientData when none of degree <= len/2 - 1 exists.
Poly lrs_min_annihilator(std::span<const Scalar> prefix);

/// True when p annihilates every window of the prefix.
bool annihilates(const Poly& p, std::span<const Scalar> prefix);

}  // namespace pcanon

#endif
