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

#ifndef PCANON_SCALAR_HPP
#define PCANON_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include "pcanon/error.hpp"

namespace pcanon {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Numeric tolerance shared by root clustering and numeric rank decisions.
/// Exact fields ignore it.
struct Tolerance {
    double value = 1e-8;

    /// Clustering radius around a root of modulus |z|.
    double around(double magnitude) const noexcept { return value * (magnitude > 1.0 ? magnitude : 1.0); }
};

/// Descriptor of one of the three supported fields.
class Field {
   public:
    enum class Kind { Rational, Prime, Complex };

    static Field rationals() noexcept { return Field(Kind::Rational, 0); }
    static Field complex() noexcept { return Field(Kind::Complex, 0); }
    /// Throws NotPrime unless p is a prime below 2^32.
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool exact() const noexcept { return kind_ != Kind::Complex; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

   private:
    friend class Scalar;
    Field(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

struct ModP {
    std::uint64_t value = 0;
    std::uint64_t p = 2;
    bool operator==(const ModP&) const = default;
};

/// An element of Q, F_p or C. Arithmetic between different fields throws
/// MixedFields; nothing is ever coerced implicitly.
class Scalar {
   public:
    using Value = std::variant<Rational, ModP, Complex>;

    Scalar() : v_(Rational(0)) {}
    explicit Scalar(const Rational& q) : v_(q) { std::get<Rational>(v_).canonicalize(); }
    explicit Scalar(const ModP& m) : v_(m) {}
    explicit Scalar(const Complex& z) : v_(z) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long n);
    static Scalar from_integer(const Field& f, const Integer& n);
    /// Q -> exact; F_p -> num * den^-1 (DivisionByZero if p | den); C -> nearest double.
    static Scalar from_rational(const Field& f, const Rational& q);
    static Scalar from_complex(double re, double im = 0.0) { return Scalar(Complex(re, im)); }

    Field field() const;
    const Value& value() const noexcept { return v_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Exact fields: is_zero(). C: |z| <= tol.
    bool near_zero(double tol) const noexcept;

    const Rational& rational() const;
    std::uint64_t residue() const;
    const Complex& complex() const;
    /// Q and C only; F_p has no embedding into C.
    Complex to_complex() const;
    double magnitude() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;
    Scalar pow(long long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Structural equality; complex values compare bitwise-exactly.
    friend bool operator==(const Scalar& a, const Scalar& b) noexcept { return a.v_ == b.v_; }

    std::string to_string() const;

   private:
    Value v_;
};

/// Deterministic total order used for eigenvalue listings: Q by
/// (numerator, denominator), F_p by residue, C by (real, imag).
bool canonical_less(const Scalar& a, const Scalar& b);

/// Q -> F_p, Q -> C, identity conversions. Anything else throws MixedFields.
Scalar convert(const Scalar& s, const Field& target);

/// Binomial coefficient C(k, i) as an exact integer; 0 when i > k.
Integer binomial(std::uint64_t k, std::uint64_t i);

}  // namespace pcanon

#endif
