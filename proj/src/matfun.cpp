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

#include "pcanon/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pcanon {

namespace {

const Field kC = Field::complex();

Scalar cs(Complex z) { return Scalar(z); }

bool complex_less(const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

SpectralData to_complex(SpectralData sd) {
    if (sd.zero_projection) sd.zero_projection = sd.zero_projection->to_field(kC);
    for (auto& c : sd.components) {
        c.eigenvalue = convert(c.eigenvalue, kC);
        c.projection = c.projection.to_field(kC);
    }
    std::stable_sort(sd.components.begin(), sd.components.end(), [](const auto& x, const auto& y) {
        return complex_less(x.eigenvalue.complex(), y.eigenvalue.complex());
    });
    return sd;
}

double inverse_factorial(std::size_t i) {
    double f = 1.0;
    for (std::size_t m = 2; m <= i; ++m) f *= static_cast<double>(m);
    return 1.0 / f;
}

PCanonicalForm complex_form(const PCanonicalForm& f) {
    if (f.field.kind() == Field::Kind::Prime)
        throw Error(ErrorCode::NumericFieldUnsupported, "logarithms need characteristic zero");
    PCanonicalForm out = f.basis == Basis::Gamma ? f : pcf_to_gamma(f);
    if (out.field.kind() == Field::Kind::Rational) {
        out.field = kC;
        for (auto& v : out.nilpotent) v = v.to_field(kC);
        for (auto& t : out.geometric) {
            t.eigenvalue = convert(t.eigenvalue, kC);
            for (auto& c : t.coeffs) c = c.to_field(kC);
        }
    }
    return out;
}

PCanonicalForm log_from_logs(const PCanonicalForm& g, const std::vector<Complex>& z, Tolerance tol) {
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b)
            if (std::abs(z[a] - z[b]) <= tol.around(std::abs(z[a])))
                throw Error(ErrorCode::ZeroLogClash, "two eigenvalues share a logarithm under this branch");
    PCanonicalForm out;
    out.order = g.order;
    out.field = kC;
    out.basis = Basis::Lambda;
    for (std::size_t j = 0; j < g.geometric.size(); ++j) {
        const auto& coeffs = g.geometric[j].coeffs;
        const bool zero = std::abs(z[j]) <= tol.value;
        std::vector<Matrix> mapped;
        double fact = 1.0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i > 0) fact *= static_cast<double>(i);
            const Complex w = zero ? Complex(fact) : fact * std::pow(z[j], -static_cast<double>(i));
            mapped.push_back(coeffs[i] * cs(w));
        }
        if (zero) {
            out.nilpotent = std::move(mapped);
        } else {
            out.geometric.push_back({cs(z[j]), std::move(mapped)});
        }
    }
    std::stable_sort(out.geometric.begin(), out.geometric.end(), [](const auto& x, const auto& y) {
        return complex_less(x.eigenvalue.complex(), y.eigenvalue.complex());
    });
    return out;
}

void require_nonsingular(const SpectralData& sd) {
    if (sd.nilpotent_index > 0) throw Error(ErrorCode::SingularMatrix, "the matrix has eigenvalue 0");
}

}  // namespace

SpectralData complex_spectral(const Matrix& a, Tolerance tol) {
    switch (a.field().kind()) {
        case Field::Kind::Prime:
            throw Error(ErrorCode::NumericFieldUnsupported, "matrix functions need a characteristic-zero field");
        case Field::Kind::Rational:
            try {
                return to_complex(spectral_projections(a, tol));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NonSplitField) throw;
            }
            return to_complex(spectral_projections(a.to_field(kC), tol));
        case Field::Kind::Complex: break;
    }
    return to_complex(spectral_projections(a, tol));
}

ClosedFormExp expm_closed(const Matrix& a, Tolerance tol) {
    const SpectralData sd = complex_spectral(a, tol);
    const Matrix ac = a.to_field(kC);
    const std::size_t n = a.order();
    ClosedFormExp out;
    out.order = n;
    if (sd.zero_projection) {
        Matrix v = *sd.zero_projection;
        for (std::size_t i = 0; i < sd.nilpotent_index; ++i) {
            out.polynomial_part.push_back(v * Scalar::from_complex(inverse_factorial(i)));
            v = ac * v;
        }
    }
    const Matrix id = Matrix::identity(kC, n);
    for (const auto& comp : sd.components) {
        ClosedFormExp::ExpTerm term{comp.eigenvalue.complex(), {}};
        const Matrix shifted = ac - id * comp.eigenvalue;
        Matrix v = comp.projection;
        for (std::size_t i = 0; i < comp.index; ++i) {
            term.coeffs.push_back(v * Scalar::from_complex(inverse_factorial(i)));
            v = shifted * v;
        }
        out.exponential.push_back(std::move(term));
    }
    return out;
}

Matrix closedform_eval(const ClosedFormExp& e, Complex t) {
    Matrix acc(kC, e.order);
    Complex tp = 1.0;
    for (const auto& m : e.polynomial_part) {
        acc += m * cs(tp);
        tp *= t;
    }
    for (const auto& term : e.exponential) {
        Matrix part(kC, e.order);
        tp = 1.0;
        for (const auto& m : term.coeffs) {
            part += m * cs(tp);
            tp *= t;
        }
        acc += part * cs(std::exp(term.lambda * t));
    }
    return acc;
}

std::vector<Complex> branch_logs(const std::vector<Complex>& eigenvalues, const LogBranchSpec& branch, Tolerance tol) {
    if (!branch.principal && branch.k.size() != eigenvalues.size())
        throw Error(ErrorCode::BranchArity, "expected " + std::to_string(eigenvalues.size()) + " branch integers, got " +
                                                std::to_string(branch.k.size()));
    std::vector<Complex> z;
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
        const Complex lambda = eigenvalues[j];
        if (std::abs(lambda) <= tol.value) throw Error(ErrorCode::SingularMatrix, "the matrix has eigenvalue 0");
        const bool on_negative_axis = lambda.real() < 0 && std::abs(lambda.imag()) <= tol.around(std::abs(lambda));
        if (branch.principal && on_negative_axis)
            throw Error(ErrorCode::PrincipalUndefined, "eigenvalue on the closed negative real axis");
        // a signed zero imaginary part must not flip Arg to -pi
        const double arg = on_negative_axis ? std::numbers::pi : std::arg(lambda);
        const double k = branch.principal ? 0.0 : static_cast<double>(branch.k[j]);
        z.emplace_back(std::log(std::abs(lambda)), arg + 2.0 * std::numbers::pi * k);
    }
    return z;
}

Matrix logm(const Matrix& a, const LogBranchSpec& branch, Tolerance tol) {
    const SpectralData sd = complex_spectral(a, tol);
    require_nonsingular(sd);
    std::vector<Complex> eig;
    for (const auto& c : sd.components) eig.push_back(c.eigenvalue.complex());
    const std::vector<Complex> z = branch_logs(eig, branch, tol);
    const Matrix ac = a.to_field(kC);
    const std::size_t n = a.order();
    const Matrix id = Matrix::identity(kC, n);
    Matrix out(kC, n);
    for (std::size_t j = 0; j < sd.components.size(); ++j) {
        const auto& comp = sd.components[j];
        out += comp.projection * cs(z[j]);
        const Matrix step = (ac - id * comp.eigenvalue) * comp.eigenvalue.inverse();
        Matrix v = comp.projection;
        for (std::size_t i = 1; i < comp.index; ++i) {
            v = step * v;
            const double w = (i % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(i);
            out += v * Scalar::from_complex(w);
        }
    }
    return out;
}

PCanonicalForm log_pcf(const PCanonicalForm& f, const LogBranchSpec& branch, Tolerance tol) {
    const PCanonicalForm g = complex_form(f);
    if (!g.nilpotent.empty()) throw Error(ErrorCode::SingularMatrix, "the source form has a nilpotent part");
    std::vector<Complex> eig;
    for (const auto& t : g.geometric) eig.push_back(t.eigenvalue.complex());
    return log_from_logs(g, branch_logs(eig, branch, tol), tol);
}

RealClosedForm expm_real(const Matrix& a, Tolerance tol) {
    if (a.field().kind() == Field::Kind::Prime)
        throw Error(ErrorCode::NumericFieldUnsupported, "matrix functions need a characteristic-zero field");
    if (a.field().kind() == Field::Kind::Complex && imag_part(a).max_norm() != 0.0)
        throw Error(ErrorCode::NotReal, "the matrix has non-real entries");
    const ClosedFormExp e = expm_closed(a, tol);
    RealClosedForm out;
    out.order = e.order;
    for (const auto& m : e.polynomial_part) out.polynomial_part.push_back(real_part(m));
    std::vector<bool> used(e.exponential.size(), false);
    for (std::size_t j = 0; j < e.exponential.size(); ++j) {
        if (used[j]) continue;
        const auto& term = e.exponential[j];
        const Complex mu = term.lambda;
        used[j] = true;
        if (std::abs(mu.imag()) <= tol.around(std::abs(mu))) {
            RealClosedForm::RealTerm rt{mu.real(), {}};
            for (const auto& m : term.coeffs) rt.coeffs.push_back(real_part(m));
            out.real.push_back(std::move(rt));
            continue;
        }
        std::size_t partner = e.exponential.size();
        for (std::size_t o = 0; o < e.exponential.size(); ++o)
            if (!used[o] && std::abs(e.exponential[o].lambda - std::conj(mu)) <= tol.around(std::abs(mu))) partner = o;
        if (partner == e.exponential.size())
            throw Error(ErrorCode::NotConjugateSymmetric, "eigenvalue without a conjugate partner");
        used[partner] = true;
        const auto& upper = mu.imag() > 0 ? term : e.exponential[partner];
        // C f + conj(C f) = 2 Re(C) Re(f) - 2 Im(C) Im(f), with C = M_i / mu^i
        RealClosedForm::PairTerm pt{upper.lambda, {}, {}};
        for (std::size_t i = 0; i < upper.coeffs.size(); ++i) {
            const Matrix c = upper.coeffs[i] * cs(std::pow(upper.lambda, -static_cast<double>(i)) /
                                                   inverse_factorial(i));
            pt.cos_coeffs.push_back(real_part(c) * Scalar::from_complex(2.0));
            pt.sin_coeffs.push_back(imag_part(c) * Scalar::from_complex(-2.0));
        }
        out.pairs.push_back(std::move(pt));
    }
    return out;
}

Matrix realclosedform_eval(const RealClosedForm& e, double t) {
    Matrix acc(kC, e.order);
    double tp = 1.0;
    for (const auto& m : e.polynomial_part) {
        acc += m * Scalar::from_complex(tp);
        tp *= t;
    }
    for (const auto& term : e.real) {
        const double g = std::exp(term.lambda * t);
        tp = 1.0;
        for (const auto& m : term.coeffs) {
            acc += m * Scalar::from_complex(g * tp);
            tp *= t;
        }
    }
    for (const auto& term : e.pairs) {
        const Complex z = t * term.mu;
        Complex zi = 1.0;  // z^i by products, so that 0^0 = 1
        for (std::size_t i = 0; i < term.cos_coeffs.size(); ++i) {
            const Complex fi = zi * inverse_factorial(i) * std::exp(z);
            acc += term.cos_coeffs[i] * Scalar::from_complex(fi.real());
            acc += term.sin_coeffs[i] * Scalar::from_complex(fi.imag());
            zi *= z;
        }
    }
    return acc;
}

PCanonicalForm realpcf_to_complex(const RealPCF& f) {
    PCanonicalForm out;
    out.order = f.order;
    out.field = kC;
    out.basis = f.basis;
    out.nilpotent = f.nilpotent;
    for (const auto& t : f.real) out.geometric.push_back({Scalar::from_complex(t.eigenvalue), t.coeffs});
    const Scalar half_i(Complex(0.0, 0.5));
    const Scalar half = Scalar::from_complex(0.5);
    for (const auto& s : f.spiral) {
        const Complex mu = std::polar(s.radius, s.angle);
        std::vector<Matrix> upper, lower;
        for (std::size_t i = 0; i < s.cos_coeffs.size(); ++i) {
            // C = (P - iQ) / 2 on mu, conj(C) on conj(mu)
            upper.push_back(s.cos_coeffs[i] * half - s.sin_coeffs[i] * half_i);
            lower.push_back(s.cos_coeffs[i] * half + s.sin_coeffs[i] * half_i);
        }
        out.geometric.push_back({Scalar(mu), std::move(upper)});
        out.geometric.push_back({Scalar(std::conj(mu)), std::move(lower)});
    }
    std::stable_sort(out.geometric.begin(), out.geometric.end(), [](const auto& x, const auto& y) {
        return complex_less(x.eigenvalue.complex(), y.eigenvalue.complex());
    });
    return out;
}

PCanonicalForm logm_real_pcf(const RealPCF& f, const LogBranchSpec& branch, Tolerance tol) {
    if (!f.nilpotent.empty()) throw Error(ErrorCode::SingularMatrix, "the source form has a nilpotent part");
    const std::size_t terms = f.real.size() + f.spiral.size();
    if (!branch.principal && branch.k.size() != terms)
        throw Error(ErrorCode::BranchArity,
                    "expected " + std::to_string(terms) + " branch integers, got " + std::to_string(branch.k.size()));
    // branch integers per eigenvalue of the complex form, conjugates mirrored
    std::vector<std::pair<Complex, long long>> chosen;
    for (std::size_t j = 0; j < f.real.size(); ++j)
        chosen.emplace_back(Complex(f.real[j].eigenvalue), branch.principal ? 0 : branch.k[j]);
    for (std::size_t s = 0; s < f.spiral.size(); ++s) {
        const long long k = branch.principal ? 0 : branch.k[f.real.size() + s];
        const Complex mu = std::polar(f.spiral[s].radius, f.spiral[s].angle);
        chosen.emplace_back(mu, k);
        chosen.emplace_back(std::conj(mu), -k);
    }
    const PCanonicalForm g = complex_form(realpcf_to_complex(f));
    std::vector<Complex> eig;
    std::vector<long long> ks;
    for (const auto& t : g.geometric) {
        const Complex lambda = t.eigenvalue.complex();
        eig.push_back(lambda);
        const auto it = std::min_element(chosen.begin(), chosen.end(), [&](const auto& x, const auto& y) {
            return std::abs(x.first - lambda) < std::abs(y.first - lambda);
        });
        ks.push_back(it->second);
    }
    const LogBranchSpec resolved = branch.principal ? branch : LogBranchSpec::explicit_branches(ks);
    return log_from_logs(g, branch_logs(eig, resolved, tol), tol);
}

}  // namespace pcanon
