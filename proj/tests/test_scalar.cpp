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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcanon/poly.hpp"
#include "support.hpp"

using namespace pcanon;
using fixture::error_of;
using fixture::q;
using fixture::qpoly;

namespace {

Poly from_roots(const Field& f, const std::vector<Scalar>& roots) {
    Poly p = Poly::constant(Scalar::one(f));
    for (const auto& r : roots) p *= Poly::linear(r);
    return p;
}

double max_coeff_gap(const Poly& a, const Poly& b) {
    double scale = 1.0, gap = 0.0;
    const int deg = std::max(a.degree(), b.degree());
    for (int i = 0; i <= deg; ++i) {
        const Complex x = a.coeff(static_cast<std::size_t>(i)).to_complex();
        const Complex y = b.coeff(static_cast<std::size_t>(i)).to_complex();
        scale = std::max(scale, std::abs(y));
        gap = std::max(gap, std::abs(x - y));
    }
    return gap / scale;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    const Scalar a = q(6, -4);
    CHECK(a.rational().get_num() == -3);
    CHECK(a.rational().get_den() == 2);
    CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
    CHECK(error_of([] { (void)(q(1) / q(0)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("prime field residues and construction") {
    const Field f5 = Field::prime(5);
    const Scalar x = Scalar::from_int(f5, -7);
    CHECK(x.residue() == 3);
    CHECK((x * x.inverse()).is_one());
    CHECK(Scalar::from_rational(f5, Rational(1, 2)).residue() == 3);
    CHECK(error_of([] { (void)Field::prime(6); }) == ErrorCode::NotPrime);
    CHECK(error_of([&] { (void)Scalar::from_rational(f5, Rational(1, 5)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("mixed field arithmetic is rejected") {
    const Scalar a = q(1);
    const Scalar b = Scalar::from_int(Field::prime(3), 1);
    CHECK(error_of([&] { (void)(a + b); }) == ErrorCode::MixedFields);
    CHECK(error_of([&] { (void)(a * fixture::c(1.0)); }) == ErrorCode::MixedFields);
}

TEST_CASE("binomial and canonical order") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(canonical_less(q(-1), q(1, 2)));
    CHECK(canonical_less(fixture::c(1.0, -1.0), fixture::c(1.0, 1.0)));
}

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
    CHECK(poly_gcd(qpoly({0, 1}), qpoly({1, 1})).is_one());
    const Poly a = qpoly({-1, 1}).pow(2) * qpoly({-2, 1});
    const Poly b = qpoly({-1, 1}) * qpoly({-3, 1});
    CHECK(poly_gcd(a, b) == qpoly({-1, 1}));
    CHECK(error_of([] {
              (void)poly_gcd(Poly::from_ints(Field::complex(), {1, 1}), Poly::from_ints(Field::complex(), {1}));
          }) == ErrorCode::NumericFieldUnsupported);
    CHECK(error_of([] { (void)poly_gcd(qpoly({1, 1}), Poly::from_ints(Field::prime(3), {1, 1})); }) ==
          ErrorCode::MixedFields);
}

TEST_CASE("gcd(ab, ac) = a gcd(b, c) on random polynomials") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3), deg(1, 3);
    auto random_monic = [&](const Field& f) {
        std::vector<Scalar> c;
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) c.push_back(Scalar::from_int(f, coef(rng)));
        c.push_back(Scalar::one(f));
        return Poly(f, c);
    };
    for (const Field& f : {Field::rationals(), Field::prime(5), Field::prime(7)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Poly a = random_monic(f), b = random_monic(f), c = random_monic(f);
            CHECK(poly_gcd(a * b, a * c) == (a * poly_gcd(b, c)).monic());
        }
    }
}

TEST_CASE("factor examples over Q") {
    const FactoredPoly f1 = poly_factor(qpoly({2, -3, 1}));
    REQUIRE(f1.roots.size() == 2);
    CHECK(f1.roots[0].value == q(1));
    CHECK(f1.roots[1].value == q(2));
    CHECK(f1.split());

    const FactoredPoly f2 = poly_factor(qpoly({1, 0, 1}));
    CHECK(f2.roots.empty());
    CHECK(f2.remainder == qpoly({1, 0, 1}));

    const FactoredPoly f3 = poly_factor(qpoly({1, -2, -2, 1}));
    REQUIRE(f3.roots.size() == 1);
    CHECK(f3.roots[0].value == q(-1));
    CHECK(f3.roots[0].multiplicity == 1);
    CHECK(f3.remainder == qpoly({1, -3, 1}));

    CHECK(error_of([] { (void)poly_factor(Poly(Field::rationals())); }) == ErrorCode::ZeroPolynomial);
    CHECK(error_of([] { (void)poly_factor(qpoly({1, 2})); }) == ErrorCode::NonMonic);
}

TEST_CASE("factor over a prime field") {
    const Field f3 = Field::prime(3);
    // (X - 1)^2 (X^2 + 1): X^2 + 1 is irreducible mod 3
    const Poly p = Poly::from_ints(f3, {-1, 1}).pow(2) * Poly::from_ints(f3, {1, 0, 1});
    const FactoredPoly f = poly_factor(p);
    REQUIRE(f.roots.size() == 1);
    CHECK(f.roots[0].multiplicity == 2);
    CHECK(f.remainder == Poly::from_ints(f3, {1, 0, 1}));
    CHECK(f.reassemble() == p);
}

TEST_CASE("factor round trip on 200 random polynomials") {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3), count(0, 5), tail(0, 2), mult(1, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int kind = trial % 3;
        if (kind == 0) {
            // rational roots times an arbitrary monic tail, degree <= 8
            std::vector<Scalar> roots;
            const int n = count(rng);
            for (int i = 0; i < n; ++i) roots.push_back(q(num(rng), den(rng)));
            Poly p = from_roots(Field::rationals(), roots);
            std::vector<Scalar> t;
            const int td = tail(rng);
            for (int i = 0; i < td; ++i) t.push_back(q(num(rng)));
            t.push_back(q(1));
            p *= Poly(Field::rationals(), t);
            const FactoredPoly f = poly_factor(p);
            CHECK(f.reassemble() == p);
        } else if (kind == 1) {
            const Field f7 = Field::prime(7);
            std::vector<Scalar> c;
            const int d = 1 + count(rng);
            for (int i = 0; i < d; ++i) c.push_back(Scalar::from_int(f7, num(rng)));
            c.push_back(Scalar::one(f7));
            const Poly p(f7, c);
            CHECK(poly_factor(p).reassemble() == p);
        } else {
            // well separated complex roots on a half-integer grid, some repeated
            std::vector<Scalar> roots;
            std::vector<std::pair<int, int>> used;
            const int n = 1 + count(rng) % 4;
            std::size_t degree = 0;
            for (int i = 0; i < n && degree < 8; ++i) {
                const std::pair<int, int> g{num(rng), num(rng)};
                if (std::find(used.begin(), used.end(), g) != used.end()) continue;
                used.push_back(g);
                const int m = mult(rng);
                for (int k = 0; k < m; ++k) roots.push_back(fixture::c(g.first / 2.0, g.second / 2.0));
                degree += static_cast<std::size_t>(m);
            }
            const Poly p = from_roots(Field::complex(), roots);
            const FactoredPoly f = poly_factor(p);
            CHECK(max_coeff_gap(f.reassemble(), p) <= 1e-8);
            std::size_t total = 0;
            for (const auto& r : f.roots) total += r.multiplicity;
            CHECK(total == static_cast<std::size_t>(p.degree()));
        }
    }
}

TEST_CASE("Durand-Kerner recovers clustered roots of (X-1)^3 (X-2)") {
    const Field f = Field::complex();
    const Poly p = Poly::from_ints(f, {-1, 1}).pow(3) * Poly::from_ints(f, {-2, 1});
    const FactoredPoly r = poly_factor(p);
    REQUIRE(r.roots.size() == 2);
    CHECK(std::abs(r.roots[0].value.complex() - Complex(1.0, 0.0)) < 1e-6);
    CHECK(r.roots[0].multiplicity == 3);
    CHECK(std::abs(r.roots[1].value.complex() - Complex(2.0, 0.0)) < 1e-6);
    CHECK(r.roots[1].multiplicity == 1);
}

TEST_CASE("Stirling numbers of the first kind") {
    CHECK(stirling_first(1, 1) == 1);
    CHECK(stirling_first(3, 1) == 2);
    CHECK(stirling_first(3, 2) == -3);
    CHECK(stirling_first(3, 3) == 1);
    CHECK(stirling_first(4, 1) == -6);
    CHECK(stirling_first(3, 5) == 0);
    // s(i, 1) / i! = (-1)^{i-1} / i
    for (unsigned i = 1; i <= 8; ++i) {
        mpz_class fact = 1;
        for (unsigned r = 2; r <= i; ++r) fact *= r;
        Rational lhs(stirling_first(i, 1), fact);
        lhs.canonicalize();
        CHECK(lhs == Rational((i % 2 == 1) ? 1 : -1, i));
    }
}

TEST_CASE("sum_m s(i,m)/i! k^m = C(k,i) for i <= 8, k <= 20") {
    for (unsigned i = 0; i <= 8; ++i) {
        mpz_class fact = 1;
        for (unsigned r = 2; r <= i; ++r) fact *= r;
        const auto expanded = oracle::binomial_poly(i);
        for (unsigned m = 0; m <= i; ++m) {
            Rational s(stirling_first(i, m), fact);
            s.canonicalize();
            CHECK(s == expanded[m]);
        }
        for (unsigned k = 0; k <= 20; ++k) {
            Rational sum = 0;
            mpz_class km = 1;
            for (unsigned m = 0; m <= i; ++m) {
                Rational term(stirling_first(i, m) * km, fact);
                term.canonicalize();
                sum += term;
                km *= k;
            }
            CHECK(sum == Rational(binomial(k, i)));
        }
    }
}

TEST_CASE("Stirling numbers of the second kind invert the first kind") {
    for (unsigned i = 0; i <= 8; ++i)
        for (unsigned j = 0; j <= 8; ++j) {
            mpz_class acc = 0;
            for (unsigned m = 0; m <= 8; ++m) acc += stirling_second(i, m) * stirling_first(m, j);
            CHECK(acc == (i == j ? 1 : 0));
        }
}

TEST_CASE("polynomial helpers") {
    const Poly p = qpoly({1, 2, 3});
    CHECK(p.derivative() == qpoly({2, 6}));
    CHECK(p(q(2)) == q(17));
    CHECK(p.taylor_shift(q(1)) == qpoly({6, 8, 3}));
    const auto [quo, rem] = divmod(qpoly({-1, 0, 1}), qpoly({-1, 1}));
    CHECK(quo == qpoly({1, 1}));
    CHECK(rem.is_zero());
    CHECK(error_of([&] { (void)divmod(p, Poly(Field::rationals())); }) == ErrorCode::DivisionByZero);
    CHECK(poly_lcm(qpoly({-1, 1}), qpoly({-1, 0, 1})) == qpoly({-1, 0, 1}));
}
