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

#include "pcanon/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace pcanon {

Matrix::Matrix(Field f, std::size_t order) : n_(order), field_(f), a_(order * order, Scalar::zero(f)) {
    if (order == 0) throw Error(ErrorCode::InvalidArgument, "matrix order must be at least 1");
}

Matrix Matrix::identity(Field f, std::size_t order) {
    Matrix m(f, order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(f, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (!(rows[i][j].field() == f)) throw Error(ErrorCode::MixedFields, "matrix entry outside " + f.name());
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Scalar>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (auto v : row) r.back().push_back(Scalar::from_int(f, v));
    }
    return from_rows(f, r);
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
    if (diag.empty()) throw Error(ErrorCode::InvalidArgument, "empty diagonal");
    Matrix m(diag.front().field(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::jordan_block(std::size_t s, const Scalar& lambda) {
    Matrix m(lambda.field(), s);
    for (std::size_t i = 0; i < s; ++i) {
        m(i, i) = lambda;
        if (i + 1 < s) m(i, i + 1) = Scalar::one(lambda.field());
    }
    return m;
}

Matrix Matrix::semicirculant(std::span<const Scalar> first_row) {
    if (first_row.empty()) throw Error(ErrorCode::InvalidArgument, "empty first row");
    const std::size_t n = first_row.size();
    Matrix m(first_row.front().field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = first_row[j - i];
    return m;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i == j ? !a_[i * n_ + j].is_one() : !a_[i * n_ + j].is_zero()) return false;
    return true;
}

double Matrix::max_norm() const {
    double m = 0.0;
    for (const auto& s : a_) m = std::max(m, s.magnitude());
    return m;
}

bool Matrix::near(const Matrix& other, double tol) const {
    if (n_ != other.n_) return false;
    if (field_.exact() && other.field_.exact()) return *this == other;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (std::abs(a_[i].to_complex() - other.a_[i].to_complex()) > tol) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& s : r.a_) s = -s;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (n_ != rhs.n_) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
    if (!(field_ == rhs.field_)) throw Error(ErrorCode::MixedFields, "matrix fields differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (n_ != rhs.n_) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
    if (!(field_ == rhs.field_)) throw Error(ErrorCode::MixedFields, "matrix fields differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
    if (!(a.field_ == b.field_)) throw Error(ErrorCode::MixedFields, "matrix fields differ");
    const std::size_t n = a.n_;
    Matrix r(a.field_, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& aik = a.a_[i * n + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& bkj = b.a_[k * n + j];
                if (!bkj.is_zero()) r.a_[i * n + j] += aik * bkj;
            }
        }
    return r;
}

Matrix Matrix::pow(std::uint64_t k) const {
    Matrix r = identity(field_, n_);
    Matrix b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Matrix Matrix::to_field(const Field& target) const {
    Matrix r(target, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = convert(a_[i], target);
    return r;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix order");
    std::vector<Scalar> out(n_, Scalar::zero(field_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Scalar& x = a_[i * n_ + j];
            if (!x.is_zero() && !v[j].is_zero()) out[i] += x * v[j];
        }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::MixedFields, "matrix fields differ");
    const std::size_t n = a.order() + b.order();
    Matrix r(a.field(), n);
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.order(); ++i)
        for (std::size_t j = 0; j < b.order(); ++j) r(a.order() + i, a.order() + j) = b(i, j);
    return r;
}

namespace {

template <class Fn>
Matrix complex_map(const Matrix& a, Fn fn) {
    Matrix r(Field::complex(), a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) r(i, j) = Scalar(fn(a(i, j).to_complex()));
    return r;
}

}  // namespace

Matrix real_part(const Matrix& a) {
    return complex_map(a, [](Complex z) { return Complex(z.real(), 0.0); });
}

Matrix imag_part(const Matrix& a) {
    return complex_map(a, [](Complex z) { return Complex(z.imag(), 0.0); });
}

Matrix conj(const Matrix& a) {
    return complex_map(a, [](Complex z) { return std::conj(z); });
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) m = std::max(m, std::abs(a(i, j).to_complex() - b(i, j).to_complex()));
    return m;
}

Matrix eval_poly(const Poly& p, const Matrix& a) {
    if (!(p.field() == a.field())) throw Error(ErrorCode::MixedFields, "polynomial and matrix fields differ");
    Matrix acc(a.field(), a.order());
    const Matrix id = Matrix::identity(a.field(), a.order());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + id * *it;
    return acc;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::MixedFields, "Kronecker factors over different fields");
    const std::size_t na = a.order(), nb = b.order();
    Matrix r(a.field(), na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = x * b(k, l);
        }
    return r;
}

Matrix companion(const Poly& p) {
    if (p.degree() < 1) throw Error(ErrorCode::DegreeZero, "companion matrix needs degree >= 1");
    if (!p.is_monic()) throw Error(ErrorCode::NonMonic, "companion matrix needs a monic polynomial");
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix c(p.field(), n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Scalar::one(p.field());
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[i];
    return c;
}

Poly char_poly(const Matrix& a) {
    const Field f = a.field();
    const std::size_t n = a.order();
    std::vector<Scalar> p{Scalar::one(f)};  // descending
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t r = k - 1;
        std::vector<Scalar> t(k + 1, Scalar::zero(f));
        t[0] = Scalar::one(f);
        t[1] = -a(r, r);
        std::vector<Scalar> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t j = 2; j <= k; ++j) {
            Scalar dot = Scalar::zero(f);
            for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
            t[j] = -dot;
            std::vector<Scalar> w(r, Scalar::zero(f));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t l = 0; l < r; ++l) w[i] += a(i, l) * v[l];
            v = std::move(w);
        }
        std::vector<Scalar> next(k + 1, Scalar::zero(f));
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j < k && j <= i; ++j) next[i] += t[i - j] * p[j];
        p = std::move(next);
    }
    std::reverse(p.begin(), p.end());
    return Poly(f, std::move(p));
}

std::size_t numeric_rank(const Matrix& a, Tolerance tol) {
    const std::size_t n = a.order();
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_complex();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const double threshold = tol.value * std::max(1.0, a.max_norm());
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > threshold) ++rank;
    return rank;
}

namespace {

// Annihilator of e_i under A: the first linear dependence of its Krylov
// sequence, found by incremental elimination.
Poly local_annihilator(const Matrix& a, std::size_t i) {
    const Field f = a.field();
    const std::size_t n = a.order();
    struct Row {
        std::vector<Scalar> vec;
        std::vector<Scalar> comb;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[i] = Scalar::one(f);
    for (std::size_t m = 0; m <= n; ++m) {
        std::vector<Scalar> w = v;
        std::vector<Scalar> comb(m + 1, Scalar::zero(f));
        comb[m] = Scalar::one(f);
        for (const auto& row : rows) {
            const Scalar c = w[row.pivot];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!row.vec[j].is_zero()) w[j] -= c * row.vec[j];
            for (std::size_t j = 0; j < row.comb.size(); ++j)
                if (!row.comb[j].is_zero()) comb[j] -= c * row.comb[j];
        }
        auto nz = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (nz == w.end()) return Poly(f, std::move(comb));
        const auto pivot = static_cast<std::size_t>(nz - w.begin());
        const Scalar inv = w[pivot].inverse();
        for (auto& x : w) x *= inv;
        for (auto& x : comb) x *= inv;
        for (auto& row : rows) row.comb.resize(m + 2, Scalar::zero(f));
        comb.resize(m + 2, Scalar::zero(f));
        rows.push_back({std::move(w), std::move(comb), pivot});
        v = a.apply(v);
    }
    throw Error(ErrorCode::InvalidArgument, "Krylov sequence failed to terminate");
}

struct NumericIndex {
    Scalar eigenvalue;
    std::size_t index;
};

Eigen::MatrixXcd to_eigen(const Matrix& a) {
    const auto n = static_cast<Eigen::Index>(a.order());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
    return m;
}

struct Cluster {
    Complex centre;
    std::size_t mult;
};

// Single-linkage groups of the eigenvalues at radius r * max(1, |z|), each
// represented by its centroid. A perturbed m-fold eigenvalue spreads like
// eps^(1/m) but its centroid stays accurate to working precision.
std::vector<Cluster> cluster_at(const std::vector<Complex>& eigs, double r) {
    const std::size_t n = eigs.size();
    std::vector<std::size_t> group(n);
    for (std::size_t i = 0; i < n; ++i) group[i] = i;
    auto find = [&](std::size_t i) {
        while (group[i] != i) i = group[i] = group[group[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double scale = std::max({1.0, std::abs(eigs[i]), std::abs(eigs[j])});
            if (std::abs(eigs[i] - eigs[j]) <= r * scale) group[find(i)] = find(j);
        }
    std::vector<Cluster> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t g = find(i);
        if (slot[g] == n) {
            slot[g] = out.size();
            out.push_back({0.0, 0});
        }
        out[slot[g]].centre += eigs[i];
        ++out[slot[g]].mult;
    }
    for (auto& c : out) c.centre /= static_cast<double>(c.mult);
    return out;
}

// Eigenvalues from a complex Schur decomposition, clustered at the widest
// radius whose clusters all pass the generalized-eigenspace rank test
// nullity((A - cI)^m) = m. Wider radii absorb the spread of defective
// eigenvalues; a failed test means distinct eigenvalues were merged.
std::vector<NumericIndex> numeric_indices(const Matrix& a, Tolerance tol) {
    const std::size_t n = a.order();
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), false);
    std::vector<Complex> eigs;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) eigs.push_back(solver.eigenvalues()(i));
    bool real_input = true;
    for (const auto& x : a.data()) real_input = real_input && x.to_complex().imag() == 0.0;

    const Matrix id = Matrix::identity(a.field(), n);
    auto shifted_by = [&](Complex c) { return a - id * Scalar(c); };
    std::vector<Cluster> clusters;
    for (double r : {std::cbrt(tol.value), std::sqrt(tol.value), std::pow(tol.value, 2.0 / 3.0), tol.value}) {
        clusters = cluster_at(eigs, r);
        bool consistent = true;
        for (const auto& c : clusters) {
            if (c.mult == 1) continue;
            if (n - numeric_rank(shifted_by(c.centre).pow(c.mult), tol) != c.mult) {
                consistent = false;
                break;
            }
        }
        if (consistent) break;
    }

    std::vector<NumericIndex> out;
    for (auto& c : clusters) {
        if (std::abs(c.centre) <= tol.value) c.centre = 0.0;
        if (real_input && std::abs(c.centre.imag()) <= tol.around(std::abs(c.centre))) c.centre.imag(0.0);
        const Matrix shifted = shifted_by(c.centre);
        Matrix power = shifted;
        std::size_t index = c.mult;
        for (std::size_t k = 1; k <= c.mult; ++k) {
            if (n - numeric_rank(power, tol) >= c.mult) {
                index = k;
                break;
            }
            power = power * shifted;
        }
        out.push_back({Scalar(c.centre), index});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x.eigenvalue, y.eigenvalue); });
    return out;
}

// Spectral projection for the eigenvalues of T nearest to `root`: reorder
// the Schur form so they lead, then decouple the blocks by a Sylvester
// solve. Backward stable, unlike evaluating partial fractions at A.
Matrix schur_projection(const Eigen::ComplexSchur<Eigen::MatrixXcd>& schur, const std::vector<Complex>& roots,
                        std::size_t which) {
    Eigen::MatrixXcd t = schur.matrixT();
    Eigen::MatrixXcd u = schur.matrixU();
    const Eigen::Index n = t.rows();
    auto selected = [&](Complex z) {
        std::size_t best = 0;
        for (std::size_t r = 1; r < roots.size(); ++r)
            if (std::abs(z - roots[r]) < std::abs(z - roots[best])) best = r;
        return best == which;
    };
    // Bubble each selected diagonal entry up with unitary 2x2 swaps.
    Eigen::Index p = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!selected(t(i, i))) continue;
        for (Eigen::Index k = i - 1; k >= p; --k) {
            const Complex a = t(k, k), d = t(k + 1, k + 1);
            Eigen::Vector2cd v(t(k, k + 1), d - a);
            Eigen::Matrix2cd q;
            if (v.norm() == 0.0) {
                q << 0.0, 1.0, 1.0, 0.0;
            } else {
                v.normalize();
                q << v(0), -std::conj(v(1)), v(1), std::conj(v(0));
            }
            t.middleRows(k, 2) = q.adjoint() * t.middleRows(k, 2);
            t.middleCols(k, 2) = t.middleCols(k, 2) * q;
            u.middleCols(k, 2) = u.middleCols(k, 2) * q;
            t(k + 1, k) = 0.0;
        }
        ++p;
    }
    const Eigen::Index m = n - p;
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(p, m);
    const Eigen::MatrixXcd t11 = t.topLeftCorner(p, p);
    for (Eigen::Index j = 0; j < m; ++j) {
        Eigen::VectorXcd rhs = -t.block(0, p + j, p, 1);
        for (Eigen::Index l = 0; l < j; ++l) rhs += r.col(l) * t(p + l, p + j);
        Eigen::MatrixXcd shifted = t11;
        shifted.diagonal().array() -= t(p + j, p + j);
        r.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
    }
    Eigen::MatrixXcd core = Eigen::MatrixXcd::Zero(n, n);
    core.topLeftCorner(p, p).setIdentity();
    core.topRightCorner(p, m) = -r;
    const Eigen::MatrixXcd proj = u * core * u.adjoint();
    Matrix out(Field::complex(), static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(proj(i, j));
    return out;
}

}  // namespace

FactoredPoly factored_minpoly(const Matrix& a, Tolerance tol) {
    if (a.field().exact()) return poly_factor(minpoly(a, tol), tol);
    FactoredPoly out{a.field(), {}, Poly::constant(Scalar::one(a.field()))};
    for (const auto& ni : numeric_indices(a, tol)) out.roots.push_back({ni.eigenvalue, ni.index});
    return out;
}

Poly minpoly(const Matrix& a, Tolerance tol) {
    const Field f = a.field();
    if (!f.exact()) return factored_minpoly(a, tol).reassemble();
    Poly m = Poly::constant(Scalar::one(f));
    for (std::size_t i = 0; i < a.order(); ++i) {
        m = poly_lcm(m, local_annihilator(a, i));
        if (m.degree() == static_cast<int>(a.order())) break;
    }
    return m;
}

SpectralData spectral_projections(const Matrix& a, Tolerance tol) {
    const Field f = a.field();
    const std::size_t n = a.order();
    const FactoredPoly fm = factored_minpoly(a, tol);
    if (!fm.split())
        throw Error(ErrorCode::NonSplitField, "minimal polynomial does not split over " + f.name());
    const Matrix id = Matrix::identity(f, n);

    SpectralData out;
    auto record = [&out](const Scalar& value, std::size_t t, Matrix proj) {
        if (value.is_zero()) {
            out.nilpotent_index = t;
            out.zero_projection = std::move(proj);
        } else {
            out.components.push_back({value, t, std::move(proj)});
        }
    };
    if (!f.exact()) {
        const Eigen::ComplexSchur<Eigen::MatrixXcd> schur(to_eigen(a));
        std::vector<Complex> roots;
        for (const auto& r : fm.roots) roots.push_back(r.value.to_complex());
        for (std::size_t idx = 0; idx < fm.roots.size(); ++idx)
            record(fm.roots[idx].value, fm.roots[idx].multiplicity, schur_projection(schur, roots, idx));
        return out;
    }

    std::vector<Matrix> factor_powers;  // (A - rho I)^t for every root
    for (const auto& r : fm.roots) factor_powers.push_back((a - id * r.value).pow(r.multiplicity));

    for (std::size_t idx = 0; idx < fm.roots.size(); ++idx) {
        const auto& root = fm.roots[idx];
        const std::size_t t = root.multiplicity;
        Poly cofactor = Poly::constant(Scalar::one(f));
        Matrix cofactor_at_a = id;
        for (std::size_t o = 0; o < fm.roots.size(); ++o) {
            if (o == idx) continue;
            cofactor *= Poly::linear(fm.roots[o].value).pow(static_cast<unsigned>(fm.roots[o].multiplicity));
            cofactor_at_a = cofactor_at_a * factor_powers[o];
        }
        // 1/cofactor as a power series in Y = X - rho, truncated at Y^t
        const Poly shifted = cofactor.taylor_shift(root.value);
        std::vector<Scalar> u(t, Scalar::zero(f));
        const Scalar inv0 = shifted.coeff(0).inverse();
        u[0] = inv0;
        for (std::size_t k = 1; k < t; ++k) {
            Scalar acc = Scalar::zero(f);
            for (std::size_t j = 1; j <= k; ++j) acc += shifted.coeff(j) * u[k - j];
            u[k] = -acc * inv0;
        }
        const Matrix b = a - id * root.value;
        Matrix series(f, n);
        for (std::size_t k = t; k-- > 0;) series = series * b + id * u[k];
        record(root.value, t, series * cofactor_at_a);
    }
    return out;
}

}  // namespace pcanon
