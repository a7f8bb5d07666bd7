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

#ifndef PCANON_PCF_HPP
#define PCANON_PCF_HPP

#include <vector>

#include "pcanon/matrix.hpp"

namespace pcanon {

/// Sequence basis of the geometric part: Lambda_i = (C(k, i))_k or the
/// power basis Gamma^i = (k^i)_k (characteristic zero only).
enum class Basis { Lambda, Gamma };

/// A^k = sum_{i = k < t0} V_i  +  sum_j lambda_j^k sum_i C_{j,i} b_i(k)
/// where b_i is Lambda_i or Gamma^i. Uniquely determined by A: eigenvalues
/// distinct and nonzero, trailing coefficient matrices nonzero.
struct PCanonicalForm {
    struct Term {
        Scalar eigenvalue;
        std::vector<Matrix> coeffs;
    };
    std::size_t order = 0;
    Field field = Field::rationals();
    Basis basis = Basis::Lambda;
    std::vector<Matrix> nilpotent;  ///< V_0 .. V_{t0-1}
    std::vector<Term> geometric;    ///< canonical eigenvalue order

    std::size_t nilpotent_index() const noexcept { return nilpotent.size(); }
};

/// Conjugate pairs mu = r e^{i theta}, conj(mu) merged into
/// r^k (cos(k theta) P_i + sin(k theta) Q_i) terms; all matrices real
/// (stored over C with zero imaginary parts).
struct RealPCF {
    struct RealTerm {
        double eigenvalue;
        std::vector<Matrix> coeffs;
    };
    struct SpiralTerm {
        double radius;
        double angle;  ///< in (0, pi)
        std::vector<Matrix> cos_coeffs;
        std::vector<Matrix> sin_coeffs;
    };
    std::size_t order = 0;
    Basis basis = Basis::Lambda;
    std::vector<Matrix> nilpotent;
    std::vector<RealTerm> real;
    std::vector<SpiralTerm> spiral;
};

PCanonicalForm pcf_build(const Matrix& a, Tolerance tol = {});
/// A^k from the form; 0^0 = 1 and C(k, i) = 0 for k < i.
Matrix pcf_eval(const PCanonicalForm& f, std::uint64_t k);
/// Lambda -> Gamma via Stirling numbers of the first kind.
PCanonicalForm pcf_to_gamma(const PCanonicalForm& f);
/// Gamma -> Lambda via Stirling numbers of the second kind.
PCanonicalForm pcf_to_lambda(const PCanonicalForm& f);
/// X^{t0} prod (X - lambda_j)^{t_j}, indices read off the stored lengths.
Poly pcf_minpoly(const PCanonicalForm& f);

RealPCF pcf_realify(const PCanonicalForm& f, Tolerance tol = {});
Matrix realpcf_eval(const RealPCF& f, std::uint64_t k);

}  // namespace pcanon

#endif
