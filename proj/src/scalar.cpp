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

#include "pcanon/scalar.hpp"

#include <cmath>
#include <sstream>

namespace pcanon {

namespace {

[[noreturn]] void mixed(const char* op) {
    throw Error(ErrorCode::MixedFields, std::string("field mismatch in ") + op);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

std::uint64_t reduce(const Integer& n, std::uint64_t p) {
    Integer r = n % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 32) || !is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime modulus");
    return Field(Kind::Prime, p);
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rational: return "Q";
        case Kind::Prime: return "F" + std::to_string(p_);
        case Kind::Complex: return "C";
    }
    return "?";
}

Scalar Scalar::from_int(const Field& f, long long n) {
    switch (f.kind()) {
        case Field::Kind::Rational: return Scalar(Rational(Integer(static_cast<long>(n))));
        case Field::Kind::Prime: {
            const auto p = static_cast<long long>(f.modulus());
            long long r = n % p;
            if (r < 0) r += p;
            return Scalar(ModP{static_cast<std::uint64_t>(r), f.modulus()});
        }
        case Field::Kind::Complex: return Scalar(Complex(static_cast<double>(n), 0.0));
    }
    return {};
}

Scalar Scalar::from_integer(const Field& f, const Integer& n) { return from_rational(f, Rational(n)); }

Scalar Scalar::from_rational(const Field& f, const Rational& q) {
    switch (f.kind()) {
        case Field::Kind::Rational: return Scalar(q);
        case Field::Kind::Prime: {
            Rational c = q;
            c.canonicalize();
            const auto p = f.modulus();
            const auto num = reduce(c.get_num(), p);
            const auto den = reduce(c.get_den(), p);
            return Scalar(ModP{num * mod_inverse(den, p) % p, p});
        }
        case Field::Kind::Complex: return Scalar(Complex(q.get_d(), 0.0));
    }
    return {};
}

Field Scalar::field() const {
    switch (v_.index()) {
        case 0: return Field::rationals();
        case 1: return Field(Field::Kind::Prime, std::get<ModP>(v_).p);
        default: return Field::complex();
    }
}

bool Scalar::is_zero() const noexcept {
    switch (v_.index()) {
        case 0: return sgn(std::get<Rational>(v_)) == 0;
        case 1: return std::get<ModP>(v_).value == 0;
        default: return std::get<Complex>(v_) == Complex(0.0, 0.0);
    }
}

bool Scalar::is_one() const noexcept {
    switch (v_.index()) {
        case 0: return std::get<Rational>(v_) == 1;
        case 1: return std::get<ModP>(v_).value == 1 % std::get<ModP>(v_).p;
        default: return std::get<Complex>(v_) == Complex(1.0, 0.0);
    }
}

bool Scalar::near_zero(double tol) const noexcept {
    if (v_.index() == 2) return std::abs(std::get<Complex>(v_)) <= tol;
    return is_zero();
}

const Rational& Scalar::rational() const {
    if (auto* q = std::get_if<Rational>(&v_)) return *q;
    throw Error(ErrorCode::MixedFields, "scalar is not rational");
}

std::uint64_t Scalar::residue() const {
    if (auto* m = std::get_if<ModP>(&v_)) return m->value;
    throw Error(ErrorCode::MixedFields, "scalar is not in a prime field");
}

const Complex& Scalar::complex() const {
    if (auto* z = std::get_if<Complex>(&v_)) return *z;
    throw Error(ErrorCode::MixedFields, "scalar is not complex");
}

Complex Scalar::to_complex() const {
    switch (v_.index()) {
        case 0: return {std::get<Rational>(v_).get_d(), 0.0};
        case 1: throw Error(ErrorCode::NumericFieldUnsupported, "F_p has no embedding into C");
        default: return std::get<Complex>(v_);
    }
}

double Scalar::magnitude() const {
    switch (v_.index()) {
        case 0: return std::abs(std::get<Rational>(v_).get_d());
        case 1: return static_cast<double>(std::get<ModP>(v_).value);
        default: return std::abs(std::get<Complex>(v_));
    }
}

Scalar Scalar::operator-() const {
    switch (v_.index()) {
        case 0: return Scalar(Rational(-std::get<Rational>(v_)));
        case 1: {
            const auto& m = std::get<ModP>(v_);
            return Scalar(ModP{(m.p - m.value) % m.p, m.p});
        }
        default: return Scalar(-std::get<Complex>(v_));
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (v_.index() != rhs.v_.index()) mixed("+");
    switch (v_.index()) {
        case 0: std::get<Rational>(v_) += std::get<Rational>(rhs.v_); break;
        case 1: {
            auto& a = std::get<ModP>(v_);
            const auto& b = std::get<ModP>(rhs.v_);
            if (a.p != b.p) mixed("+");
            a.value = (a.value + b.value) % a.p;
            break;
        }
        default: std::get<Complex>(v_) += std::get<Complex>(rhs.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (v_.index() != rhs.v_.index()) mixed("*");
    switch (v_.index()) {
        case 0: std::get<Rational>(v_) *= std::get<Rational>(rhs.v_); break;
        case 1: {
            auto& a = std::get<ModP>(v_);
            const auto& b = std::get<ModP>(rhs.v_);
            if (a.p != b.p) mixed("*");
            a.value = a.value * b.value % a.p;
            break;
        }
        default: std::get<Complex>(v_) *= std::get<Complex>(rhs.v_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (v_.index() != rhs.v_.index()) mixed("/");
    return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    switch (v_.index()) {
        case 0: return Scalar(Rational(1 / std::get<Rational>(v_)));
        case 1: {
            const auto& m = std::get<ModP>(v_);
            return Scalar(ModP{mod_inverse(m.value, m.p), m.p});
        }
        default: return Scalar(1.0 / std::get<Complex>(v_));
    }
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar r = Scalar::one(field());
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::string Scalar::to_string() const {
    switch (v_.index()) {
        case 0: return std::get<Rational>(v_).get_str();
        case 1: return std::to_string(std::get<ModP>(v_).value);
        default: {
            const auto z = std::get<Complex>(v_);
            std::ostringstream os;
            os.precision(12);
            if (z.imag() == 0.0) {
                os << z.real();
            } else if (z.real() == 0.0) {
                os << z.imag() << "i";
            } else {
                os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
            }
            return os.str();
        }
    }
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    if (a.value().index() != b.value().index()) mixed("ordering");
    switch (a.value().index()) {
        case 0: {
            const auto& x = a.rational();
            const auto& y = b.rational();
            if (x.get_num() != y.get_num()) return x.get_num() < y.get_num();
            return x.get_den() < y.get_den();
        }
        case 1: return a.residue() < b.residue();
        default: {
            const auto& x = a.complex();
            const auto& y = b.complex();
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        }
    }
}

Scalar convert(const Scalar& s, const Field& target) {
    const Field src = s.field();
    if (src == target) return s;
    if (src.kind() == Field::Kind::Rational) return Scalar::from_rational(target, s.rational());
    throw Error(ErrorCode::MixedFields, "cannot convert " + src.name() + " to " + target.name());
}

Integer binomial(std::uint64_t k, std::uint64_t i) {
    if (i > k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), k, i);
    return r;
}

}  // namespace pcanon
