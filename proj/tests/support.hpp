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

// Golden matrices and small helpers shared by the unit test binaries.

#ifndef PCANON_TESTS_SUPPORT_HPP
#define PCANON_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "pcanon/error.hpp"
#include "pcanon/matrix.hpp"

namespace fixture {

using pcanon::Complex;
using pcanon::ErrorCode;
using pcanon::Field;
using pcanon::Matrix;
using pcanon::Poly;
using pcanon::Scalar;

/// Code of the pcanon::Error raised by f, or nothing when f returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const pcanon::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline Field Q() { return Field::rationals(); }
inline Field C() { return Field::complex(); }

inline Scalar q(long num, long den = 1) { return Scalar(pcanon::Rational(num, den)); }
inline Scalar c(double re, double im = 0.0) { return Scalar::from_complex(re, im); }

inline Poly qpoly(std::initializer_list<long long> ascending) { return Poly::from_ints(Q(), ascending); }

/// Upper-triangular Toeplitz [2, 4, 2, 3].
inline Matrix semicirculant_2423() {
    const std::vector<Scalar> row{q(2), q(4), q(2), q(3)};
    return Matrix::semicirculant(row);
}

/// 4x4 matrix with minimal polynomial X^2 (X - 2)(X + 2).
inline Matrix mixed_4x4() {
    return Matrix::from_ints(Q(), {{1, 1, 1, 0}, {1, 1, 1, -1}, {0, 0, -1, 1}, {0, 0, 1, -1}});
}

/// [[1, 3], [-3, -5]], a single Jordan block at -2.
inline Matrix block_minus2() { return Matrix::from_ints(Q(), {{1, 3}, {-3, -5}}); }

/// 3x3 real matrix with eigenvalues 2 e^{+-i pi/6} and x.
inline Matrix spiral_3x3(double x = 0.0) {
    const double r3 = std::sqrt(3.0);
    const std::vector<std::vector<double>> e{
        {2 * r3 - x - 10, 2 * r3 - 2 * x - 23, r3 - x - 5},
        {4, r3 + 9, 2},
        {-2 * r3 + 2 * x + 2, -4 * r3 + 4 * x + 5, -r3 + 2 * x + 1},
    };
    Matrix m(C(), 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = c(e[i][j]);
    return m;
}

inline Matrix rotation() { return Matrix::from_ints(C(), {{0, -1}, {1, 0}}); }

inline Matrix jordan(std::size_t s, const Scalar& lambda) { return Matrix::jordan_block(s, lambda); }

/// Entrywise check |a - b| <= tol * max(1, |b|).
inline bool near_rel(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace fixture

#endif
