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

#ifndef PCANON_POLY_HPP
#define PCANON_POLY_HPP

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "pcanon/scalar.hpp"

namespace pcanon {

/// Dense univariate polynomial, coefficients in ascending degree. The
/// coefficient vector never has a trailing exact zero.
class Poly {
   public:
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, std::size_t degree);
    /// X - root
    static Poly linear(const Scalar& root);
    static Poly from_ints(Field f, std::initializer_list<long long> ascending);

    const Field& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }
    const Scalar& lead() const;

    Poly monic() const;
    Poly derivative() const;
    Scalar operator()(const Scalar& x) const;
    Poly pow(unsigned e) const;
    /// p(X + shift)
    Poly taylor_shift(const Scalar& shift) const;
    Poly to_field(const Field& target) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Scalar& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.field_ == b.field_ && a.c_ == b.c_; }

   private:
    void trim();
    Field field_;
    std::vector<Scalar> c_;
};

/// Quotient and remainder; DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws InvalidArgument when the remainder is nonzero
/// (exact fields) .
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd over Q or F_p. NumericFieldUnsupported on C.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

/// Root-with-multiplicity view of a polynomial.
struct FactoredPoly {
    struct Root {
        Scalar value;
        std::size_t multiplicity;
    };
    Field field;
    std::vector<Root> roots;  ///< canonical order, pairwise distinct
    Poly remainder;           ///< product of the non-split factors (1 when split)

    bool split() const noexcept { return remainder.degree() == 0; }
    std::optional<std::size_t> multiplicity_of(const Scalar& r) const;
    Poly reassemble() const;
};

/// Factors a monic polynomial into linear factors over its field, with any
/// nonlinear irreducible part returned as the remainder.
FactoredPoly poly_factor(const Poly& p, Tolerance tol = {});

/// Signed Stirling numbers of the first kind; 0 outside 0 <= m <= i.
Integer stirling_first(unsigned i, unsigned m);
/// Stirling numbers of the second kind; 0 outside 0 <= m <= i.
Integer stirling_second(unsigned i, unsigned m);

}  // namespace pcanon

#endif
