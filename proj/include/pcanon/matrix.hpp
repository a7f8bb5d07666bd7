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

#ifndef PCANON_MATRIX_HPP
#define PCANON_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "pcanon/poly.hpp"

namespace pcanon {

/// Dense square matrix over a single field, row-major.
class Matrix {
   public:
    Matrix(Field f, std::size_t order);

    static Matrix identity(Field f, std::size_t order);
    static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix diagonal(std::span<const Scalar> diag);
    /// J_s(lambda): lambda on the diagonal, ones on the superdiagonal.
    static Matrix jordan_block(std::size_t s, const Scalar& lambda);
    /// Upper-triangular Toeplitz matrix with the given first row.
    static Matrix semicirculant(std::span<const Scalar> first_row);

    std::size_t order() const noexcept { return n_; }
    const Field& field() const noexcept { return field_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::span<const Scalar> data() const noexcept { return a_; }

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;
    /// Largest entry modulus (exact fields: of the rational value).
    double max_norm() const;
    bool near(const Matrix& other, double tol) const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.a_ == b.a_;
    }

    Matrix pow(std::uint64_t k) const;
    Matrix to_field(const Field& target) const;
    std::vector<Scalar> apply(std::span<const Scalar> v) const;

   private:
    std::size_t n_;
    Field field_;
    std::vector<Scalar> a_;
};

Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Entrywise helpers for complex matrices.
Matrix real_part(const Matrix& a);
Matrix imag_part(const Matrix& a);
Matrix conj(const Matrix& a);
/// Largest entrywise modulus of a - b (both converted to C).
double max_abs_diff(const Matrix& a, const Matrix& b);
/// p(A) by Horner's rule.
Matrix eval_poly(const Poly& p, const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);
/// Frobenius companion: ones on the subdiagonal, last column holds the
/// negated coefficients c_0..c_{n-1} of the monic p.
Matrix companion(const Poly& p);

/// Monic minimal polynomial. Exact fields: Krylov sequences of the standard
/// basis vectors and their lcm. C: Schur eigenvalues clustered into
/// multiple eigenvalues, with indices from numeric rank tests.
Poly minpoly(const Matrix& a, Tolerance tol = {});
/// Minimal polynomial in root/multiplicity form; the remainder is
/// nontrivial when it does not split over the matrix's field.
FactoredPoly factored_minpoly(const Matrix& a, Tolerance tol = {});
/// Monic characteristic polynomial, Berkowitz (division free).
Poly char_poly(const Matrix& a);

/// Numeric rank of a complex matrix: singular values above
/// tol * max(1, max-norm) count.
std::size_t numeric_rank(const Matrix& a, Tolerance tol = {});

struct SpectralData {
    struct Component {
        Scalar eigenvalue;  ///< nonzero
        std::size_t index;  ///< multiplicity in the minimal polynomial
        Matrix projection;
    };
    std::size_t nilpotent_index = 0;     ///< t0; 0 when A is nonsingular
    std::optional<Matrix> zero_projection;  ///< present iff t0 > 0
    std::vector<Component> components;   ///< canonical eigenvalue order
};

/// Spectral projections. Exact fields: partial-fraction decomposition of the
/// minimal polynomial. C: reordered Schur form and a Sylvester solve.
/// NonSplitField on exact fields whose minimal
/// polynomial has a nonlinear irreducible factor.
SpectralData spectral_projections(const Matrix& a, Tolerance tol = {});

}  // namespace pcanon

#endif
