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

#ifndef PCANON_MATFUN_HPP
#define PCANON_MATFUN_HPP

#include <vector>

#include "pcanon/pcf.hpp"

namespace pcanon {

// All results live over C. Rational inputs go through the exact spectral
// decomposition first and are converted once; they fall back to the numeric
// path only when the minimal polynomial does not split over Q.

/// Spectral data over C with components sorted by (real, imag).
/// NumericFieldUnsupported for prime fields.
SpectralData complex_spectral(const Matrix& a, Tolerance tol = {});

/// e^{tA} = sum_i M_i t^i + sum_j e^{lambda_j t} sum_i M_{j,i} t^i.
struct ClosedFormExp {
    struct ExpTerm {
        Complex lambda;
        std::vector<Matrix> coeffs;  ///< M_{j,0} .. M_{j,t_j-1}
    };
    std::size_t order = 0;
    std::vector<Matrix> polynomial_part;  ///< M_0 .. M_{t0-1}
    std::vector<ExpTerm> exponential;
};

/// M_i = A^i pi_0 / i!, M_{j,i} = (A - lambda_j I)^i pi_j / i!.
ClosedFormExp expm_closed(const Matrix& a, Tolerance tol = {});
Matrix closedform_eval(const ClosedFormExp& e, Complex t);

/// Branch selection for logarithms. Explicit branches give one integer per
/// nonzero eigenvalue in (real, imag) order: z = Log|lambda| + i(Arg lambda + 2 pi k)
/// with Arg in (-pi, pi].
struct LogBranchSpec {
    bool principal = true;
    std::vector<long long> k;

    static LogBranchSpec principal_branch() { return {}; }
    static LogBranchSpec explicit_branches(std::vector<long long> ks) { return {false, std::move(ks)}; }
};

/// Logarithms z_j of the eigenvalues under the branch. Raises
/// PrincipalUndefined and BranchArity.
std::vector<Complex> branch_logs(const std::vector<Complex>& eigenvalues, const LogBranchSpec& branch, Tolerance tol = {});

/// L = sum z_j pi_j + sum_j sum_{i>=1} (-1)^{i-1}/i lambda_j^{-i} (A - lambda_j I)^i pi_j,
/// so that e^L = A and L has eigenvalues z_j.
Matrix logm(const Matrix& a, const LogBranchSpec& branch, Tolerance tol = {});

/// P-canonical form of the logarithm from the Gamma-basis form of A:
/// Gamma coefficient C'_{j,i} becomes i! z_j^{-i} C'_{j,i} on Lambda_i of z_j,
/// or the nilpotent slot i when z_j = 0. Lambda-basis input is converted.
PCanonicalForm log_pcf(const PCanonicalForm& f, const LogBranchSpec& branch, Tolerance tol = {});

/// Real variant of ClosedFormExp: conjugate pairs mu, conj(mu) become
/// sum_i Cc_i Re(f_i(t mu)) + Cs_i Im(f_i(t mu)) with f_i(z) = z^i e^z / i!.
struct RealClosedForm {
    struct RealTerm {
        double lambda;
        std::vector<Matrix> coeffs;  ///< on e^{lambda t} t^i
    };
    struct PairTerm {
        Complex mu;  ///< Im(mu) > 0
        std::vector<Matrix> cos_coeffs;
        std::vector<Matrix> sin_coeffs;
    };
    std::size_t order = 0;
    std::vector<Matrix> polynomial_part;
    std::vector<RealTerm> real;
    std::vector<PairTerm> pairs;
};

/// NotReal unless every entry of A is real.
RealClosedForm expm_real(const Matrix& a, Tolerance tol = {});
Matrix realclosedform_eval(const RealClosedForm& e, double t);

/// Complex form with each spiral term split back into mu and conj(mu).
PCanonicalForm realpcf_to_complex(const RealPCF& f);

/// Logarithm of a real form. Branch integers: one per real term, then one
/// per spiral term; a spiral's k selects w = Log mu + 2 pi i k and its
/// partner gets conj(w), which keeps the logarithm real.
PCanonicalForm logm_real_pcf(const RealPCF& f, const LogBranchSpec& branch, Tolerance tol = {});

}  // namespace pcanon

#endif
