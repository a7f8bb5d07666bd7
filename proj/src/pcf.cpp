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

#include "pcanon/pcf.hpp"

#include <cmath>

namespace pcanon {

namespace {

bool negligible(const Matrix& m, const Matrix& reference, Tolerance tol) {
    if (m.field().exact()) return m.is_zero();
    return m.max_norm() <= tol.value * std::max(1.0, reference.max_norm());
}

void trim_trailing(std::vector<Matrix>& coeffs, const Matrix& reference, Tolerance tol) {
    while (!coeffs.empty() && negligible(coeffs.back(), reference, tol)) coeffs.pop_back();
}

Scalar basis_value(Basis basis, const Field& f, std::uint64_t k, std::size_t i) {
    if (basis == Basis::Lambda) return Scalar::from_integer(f, binomial(k, i));
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), k, i);  // 0^0 = 1
    return Scalar::from_integer(f, p);
}

double basis_value_real(Basis basis, std::uint64_t k, std::size_t i) {
    if (basis == Basis::Lambda) return binomial(k, i).get_d();
    return std::pow(static_cast<double>(k), static_cast<double>(i));
}

}  // namespace

PCanonicalForm pcf_build(const Matrix& a, Tolerance tol) {
    const SpectralData sd = spectral_projections(a, tol);
    const Field f = a.field();
    const std::size_t n = a.order();
    const Matrix id = Matrix::identity(f, n);
    PCanonicalForm out;
    out.order = n;
    out.field = f;
    out.basis = Basis::Lambda;
    if (sd.zero_projection) {
        Matrix v = *sd.zero_projection;
        for (std::size_t i = 0; i < sd.nilpotent_index; ++i) {
            out.nilpotent.push_back(v);
            v = a * v;
        }
        trim_trailing(out.nilpotent, *sd.zero_projection, tol);
    }
    for (const auto& comp : sd.components) {
        PCanonicalForm::Term term{comp.eigenvalue, {}};
        const Matrix step = (a - id * comp.eigenvalue) * comp.eigenvalue.inverse();
        Matrix c = comp.projection;
        for (std::size_t i = 0; i < comp.index; ++i) {
            term.coeffs.push_back(c);
            c = step * c;
        }
        trim_trailing(term.coeffs, comp.projection, tol);
        out.geometric.push_back(std::move(term));
    }
    return out;
}

Matrix pcf_eval(const PCanonicalForm& f, std::uint64_t k) {
    Matrix acc(f.field, f.order);
    if (k < f.nilpotent.size()) acc += f.nilpotent[k];
    for (const auto& term : f.geometric) {
        Matrix part(f.field, f.order);
        for (std::size_t i = 0; i < term.coeffs.size(); ++i) {
            const Scalar b = basis_value(f.basis, f.field, k, i);
            if (!b.is_zero()) part += term.coeffs[i] * b;
        }
        acc += part * term.eigenvalue.pow(static_cast<long long>(k));
    }
    return acc;
}

PCanonicalForm pcf_to_gamma(const PCanonicalForm& f) {
    if (f.basis == Basis::Gamma) return f;
    if (f.field.characteristic() != 0)
        throw Error(ErrorCode::CharPositive, "the power basis needs characteristic zero");
    PCanonicalForm out = f;
    out.basis = Basis::Gamma;
    for (auto& term : out.geometric) {
        const auto& c = term.coeffs;
        std::vector<Matrix> g;
        for (std::size_t m = 0; m < c.size(); ++m) {
            Matrix acc(f.field, f.order);
            Integer fact = 1;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i > 0) fact *= static_cast<unsigned long>(i);
                if (i < m) continue;
                const Rational w(stirling_first(static_cast<unsigned>(i), static_cast<unsigned>(m)), fact);
                if (sgn(w) != 0) acc += c[i] * Scalar::from_rational(f.field, w);
            }
            g.push_back(std::move(acc));
        }
        term.coeffs = std::move(g);
    }
    return out;
}

PCanonicalForm pcf_to_lambda(const PCanonicalForm& f) {
    if (f.basis == Basis::Lambda) return f;
    PCanonicalForm out = f;
    out.basis = Basis::Lambda;
    for (auto& term : out.geometric) {
        const auto& g = term.coeffs;
        std::vector<Matrix> c;
        Integer fact = 1;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i > 0) fact *= static_cast<unsigned long>(i);
            Matrix acc(f.field, f.order);
            for (std::size_t m = i; m < g.size(); ++m) {
                const Integer w = stirling_second(static_cast<unsigned>(m), static_cast<unsigned>(i)) * fact;
                if (w != 0) acc += g[m] * Scalar::from_integer(f.field, w);
            }
            c.push_back(std::move(acc));
        }
        term.coeffs = std::move(c);
    }
    return out;
}

Poly pcf_minpoly(const PCanonicalForm& f) {
    Poly m = Poly::monomial(Scalar::one(f.field), f.nilpotent.size());
    for (const auto& term : f.geometric)
        m *= Poly::linear(term.eigenvalue).pow(static_cast<unsigned>(term.coeffs.size()));
    return m;
}

namespace {

bool is_real_matrix(const Matrix& m, Tolerance tol) {
    return imag_part(m).max_norm() <= tol.value * std::max(1.0, m.max_norm());
}

std::vector<Matrix> real_parts(const std::vector<Matrix>& ms, Tolerance tol) {
    std::vector<Matrix> out;
    for (const auto& m : ms) {
        if (!is_real_matrix(m, tol))
            throw Error(ErrorCode::NotConjugateSymmetric, "coefficient of a real eigenvalue is not real");
        out.push_back(real_part(m));
    }
    return out;
}

}  // namespace

RealPCF pcf_realify(const PCanonicalForm& form, Tolerance tol) {
    if (form.field.kind() == Field::Kind::Prime)
        throw Error(ErrorCode::NumericFieldUnsupported, "realification needs a complex form");
    PCanonicalForm f = form;
    if (f.field.kind() == Field::Kind::Rational) {
        f.field = Field::complex();
        for (auto& v : f.nilpotent) v = v.to_field(f.field);
        for (auto& t : f.geometric) {
            t.eigenvalue = convert(t.eigenvalue, f.field);
            for (auto& c : t.coeffs) c = c.to_field(f.field);
        }
    }
    RealPCF out;
    out.order = f.order;
    out.basis = f.basis;
    out.nilpotent = real_parts(f.nilpotent, tol);
    std::vector<bool> used(f.geometric.size(), false);
    for (std::size_t j = 0; j < f.geometric.size(); ++j) {
        if (used[j]) continue;
        const auto& term = f.geometric[j];
        const Complex mu = term.eigenvalue.complex();
        if (std::abs(mu.imag()) <= tol.around(std::abs(mu))) {
            out.real.push_back({mu.real(), real_parts(term.coeffs, tol)});
            used[j] = true;
            continue;
        }
        std::size_t partner = f.geometric.size();
        for (std::size_t o = 0; o < f.geometric.size(); ++o)
            if (!used[o] && o != j &&
                std::abs(f.geometric[o].eigenvalue.complex() - std::conj(mu)) <= tol.around(std::abs(mu)))
                partner = o;
        if (partner == f.geometric.size() || f.geometric[partner].coeffs.size() != term.coeffs.size())
            throw Error(ErrorCode::NotConjugateSymmetric, "eigenvalue " + term.eigenvalue.to_string() + " has no conjugate partner");
        for (std::size_t i = 0; i < term.coeffs.size(); ++i) {
            const Matrix& c = term.coeffs[i];
            if (max_abs_diff(conj(c), f.geometric[partner].coeffs[i]) > tol.value * std::max(1.0, c.max_norm()))
                throw Error(ErrorCode::NotConjugateSymmetric, "conjugate eigenvalues carry non-conjugate coefficients");
        }
        used[j] = used[partner] = true;
        // keep the member with positive imaginary part
        const auto& upper = mu.imag() > 0 ? term : f.geometric[partner];
        const Complex z = upper.eigenvalue.complex();
        RealPCF::SpiralTerm spiral{std::abs(z), std::arg(z), {}, {}};
        const Scalar two = Scalar::from_complex(2.0);
        for (const auto& c : upper.coeffs) {
            spiral.cos_coeffs.push_back(real_part(c) * two);
            spiral.sin_coeffs.push_back(imag_part(c) * Scalar::from_complex(-2.0));
        }
        out.spiral.push_back(std::move(spiral));
    }
    return out;
}

Matrix realpcf_eval(const RealPCF& f, std::uint64_t k) {
    const Field c = Field::complex();
    Matrix acc(c, f.order);
    if (k < f.nilpotent.size()) acc += f.nilpotent[k];
    const double kd = static_cast<double>(k);
    for (const auto& term : f.real) {
        const double lk = std::pow(term.eigenvalue, kd);
        for (std::size_t i = 0; i < term.coeffs.size(); ++i)
            acc += term.coeffs[i] * Scalar::from_complex(lk * basis_value_real(f.basis, k, i));
    }
    for (const auto& term : f.spiral) {
        const double rk = std::pow(term.radius, kd);
        const double cs = rk * std::cos(kd * term.angle);
        const double sn = rk * std::sin(kd * term.angle);
        for (std::size_t i = 0; i < term.cos_coeffs.size(); ++i) {
            const double b = basis_value_real(f.basis, k, i);
            acc += term.cos_coeffs[i] * Scalar::from_complex(cs * b);
            acc += term.sin_coeffs[i] * Scalar::from_complex(sn * b);
        }
    }
    return acc;
}

}  // namespace pcanon
