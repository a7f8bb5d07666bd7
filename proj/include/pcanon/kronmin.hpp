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

#ifndef PCANON_KRONMIN_HPP
#define PCANON_KRONMIN_HPP

#include <span>
#include <vector>

#include "pcanon/matrix.hpp"
#include "pcanon/wedge.hpp"

namespace pcanon {

/// Factored minimal polynomial X^{zero_index} * prod (X - lambda)^{index}.
struct EigSpec {
    struct Eigen {
        Scalar value;  ///< nonzero
        std::uint64_t index;
    };
    Field field = Field::rationals();
    std::uint64_t zero_index = 0;
    std::vector<Eigen> nonzero;

    /// True when the nonzero part Q of the minimal polynomial is 1.
    bool nilpotent() const noexcept { return nonzero.empty(); }
};

/// NonSplitField if p does not split over its field.
EigSpec eigspec_from_poly(const Poly& minimal, Tolerance tol = {});
EigSpec eigspec_of(const Matrix& a, Tolerance tol = {});

/// Product value -> largest folded wedge over the tuples in its class.
struct ProductClass {
    Scalar product;
    std::uint64_t exponent;
};
using ProductClassTable = std::vector<ProductClass>;

/// Groups all tuples of nonzero eigenvalues by their product (exact
/// equality, or the clustering tolerance on C).
ProductClassTable product_classes(std::span<const EigSpec> specs, WedgeContext ctx, Tolerance tol = {});

/// Exponent of X in the minimal polynomial of the Kronecker product.
std::uint64_t kron_nilpotent_exponent(std::span<const EigSpec> specs);

/// Minimal polynomial of A_1 (x) ... (x) A_m from the factored minimal
/// polynomials of the factors alone.
Poly kron_minpoly_symbolic(std::span<const EigSpec> specs, WedgeContext ctx, Tolerance tol = {});

/// minpoly of the explicit Kronecker product; OrderTooLarge above 4096.
Poly kron_minpoly_direct(std::span<const Matrix> mats, Tolerance tol = {});

/// P with L(P_1) ... L(P_m) = L(P): symbolic when every P_i splits over the
/// field, otherwise the direct minimal polynomial of the Kronecker product
/// of companion matrices.
Poly lrs_product_poly(std::span<const Poly> polys, WedgeContext ctx, Tolerance tol = {});

}  // namespace pcanon

#endif
