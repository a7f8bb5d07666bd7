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

#include "pcanon/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace pcanon {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.field() == field_)) throw Error(ErrorCode::MixedFields, "polynomial coefficient outside " + field_.name());
    trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
    v[degree] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::linear(const Scalar& root) {
    return Poly(root.field(), {-root, Scalar::one(root.field())});
}

Poly Poly::from_ints(Field f, std::initializer_list<long long> ascending) {
    std::vector<Scalar> v;
    for (auto n : ascending) v.push_back(Scalar::from_int(f, n));
    return Poly(f, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::lead() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const Scalar inv = lead().inverse();
    Poly r = *this;
    for (auto& c : r.c_) c *= inv;
    r.c_.back() = Scalar::one(field_);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Scalar> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar::from_int(field_, static_cast<long long>(i)));
    return Poly(field_, std::move(d));
}

Scalar Poly::operator()(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(Scalar::one(field_));
    Poly b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly Poly::taylor_shift(const Scalar& shift) const {
    // Horner in the ring of polynomials: p(X + s)
    Poly r(field_);
    const Poly x_plus_s(field_, {shift, Scalar::one(field_)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= x_plus_s;
        r += Poly::constant(*it);
    }
    return r;
}

Poly Poly::to_field(const Field& target) const {
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(convert(c, target));
    return Poly(target, std::move(v));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (!(field_ == rhs.field_)) throw Error(ErrorCode::MixedFields, "polynomial field mismatch");
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
    if (!(field_ == rhs.field_)) throw Error(ErrorCode::MixedFields, "polynomial field mismatch");
    if (is_zero() || rhs.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Scalar> r(c_.size() + rhs.c_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::MixedFields, "polynomial field mismatch");
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const Field f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Scalar> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<Scalar> quo(rem.size() - db, Scalar::zero(f));
    const Scalar inv = b.lead().inverse();
    for (std::size_t i = rem.size(); i-- > db;) {
        const Scalar q = rem[i] * inv;
        quo[i - db] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
        rem[i] = Scalar::zero(f);
    }
    rem.resize(db);
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (a.field().exact() && !r.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::MixedFields, "gcd of polynomials over different fields");
    if (!a.field().exact()) throw Error(ErrorCode::NumericFieldUnsupported, "gcd is defined over exact fields only");
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0) is undefined");
    Poly x = a.monic();
    Poly y = b.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return exact_div((a * b).monic(), poly_gcd(a, b));
}

std::optional<std::size_t> FactoredPoly::multiplicity_of(const Scalar& r) const {
    for (const auto& root : roots)
        if (root.value == r) return root.multiplicity;
    return std::nullopt;
}

Poly FactoredPoly::reassemble() const {
    Poly p = remainder;
    for (const auto& r : roots) p *= Poly::linear(r.value).pow(static_cast<unsigned>(r.multiplicity));
    return p;
}

// ---------------------------------------------------------------------------
// Exact factorization over Q

namespace {

void factor_integer(Integer n, std::map<Integer, unsigned>& out) {
    if (n < 0) n = -n;
    if (n < 2) return;
    for (unsigned long d = 2; d < 100000; ++d) {
        if (Integer(d) * d > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[Integer(d)];
            n /= d;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    // Pollard-Brent for the large cofactor
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, g = 1;
        while (g == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x - y;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) {
            factor_integer(g, out);
            factor_integer(n / g, out);
            return;
        }
    }
}

std::vector<Integer> divisors(const Integer& n) {
    std::map<Integer, unsigned> fac;
    factor_integer(n, fac);
    std::vector<Integer> ds{1};
    for (const auto& [prime, e] : fac) {
        const std::size_t base = ds.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

// Squarefree decomposition (Yun). Returns a[i] with p = prod a[i]^(i+1).
std::vector<Poly> yun(const Poly& p) {
    std::vector<Poly> out;
    const Poly dp = p.derivative();
    Poly b = poly_gcd(p, dp);
    Poly c = exact_div(p, b);
    Poly d = exact_div(dp, b) - c.derivative();
    while (c.degree() > 0) {
        Poly a = poly_gcd(c, d);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
        out.push_back(a);
    }
    return out;
}

std::vector<Rational> rational_roots(const Poly& f) {
    // f squarefree, monic, f(0) != 0
    Integer den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<Integer> g;
    for (const auto& c : f.coeffs()) g.push_back(Integer(c.rational() * den));
    const auto num_candidates = divisors(g.front());
    const auto den_candidates = divisors(g.back());
    std::vector<Rational> roots;
    Poly rest = f;
    for (const auto& q : den_candidates) {
        for (const auto& a : num_candidates) {
            Integer gg;
            mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
            if (gg != 1) continue;
            for (int sign : {1, -1}) {
                if (rest.degree() <= 0) return roots;
                Rational r(Integer(a * sign), q);
                r.canonicalize();
                const Scalar x(r);
                if (rest(x).is_zero()) {
                    roots.push_back(r);
                    rest = exact_div(rest, Poly::linear(x));
                }
            }
        }
    }
    return roots;
}

FactoredPoly factor_rational(const Poly& p) {
    const Field f = p.field();
    FactoredPoly out{f, {}, Poly::constant(Scalar::one(f))};
    std::size_t zeros = 0;
    while (zeros < p.coeffs().size() && p.coeffs()[zeros].is_zero()) ++zeros;
    Poly rest = zeros ? Poly(f, std::vector<Scalar>(p.coeffs().begin() + static_cast<long>(zeros), p.coeffs().end())) : p;
    if (zeros) out.roots.push_back({Scalar::zero(f), zeros});
    if (rest.degree() > 0) {
        const auto parts = yun(rest);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Poly part = parts[i];
            if (part.degree() <= 0) continue;
            for (const auto& r : rational_roots(part)) {
                out.roots.push_back({Scalar(r), i + 1});
                part = exact_div(part, Poly::linear(Scalar(r)));
            }
            out.remainder *= part.pow(static_cast<unsigned>(i + 1));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// F_p: exhaustive root scan

FactoredPoly factor_prime(const Poly& p) {
    const Field f = p.field();
    const std::uint64_t mod = f.modulus();
    if (mod > 1000000) throw Error(ErrorCode::InvalidArgument, "root scan supports p <= 10^6");
    FactoredPoly out{f, {}, Poly::constant(Scalar::one(f))};
    Poly rest = p;
    std::vector<std::uint64_t> raw;
    auto refresh = [&] {
        raw.clear();
        for (const auto& c : rest.coeffs()) raw.push_back(c.residue());
    };
    refresh();
    for (std::uint64_t x = 0; x < mod && rest.degree() > 0; ++x) {
        std::uint64_t acc = 0;
        for (auto it = raw.rbegin(); it != raw.rend(); ++it) acc = (acc * x + *it) % mod;
        if (acc != 0) continue;
        const Scalar root(ModP{x, mod});
        const Poly lin = Poly::linear(root);
        std::size_t mult = 0;
        while (rest.degree() > 0 && rest(root).is_zero()) {
            rest = exact_div(rest, lin);
            ++mult;
        }
        out.roots.push_back({root, mult});
        refresh();
    }
    out.remainder = rest;
    return out;
}

// ---------------------------------------------------------------------------
// C: Durand-Kerner on the squarefree part, multiplicities by assignment

using CVec = std::vector<Complex>;

Complex horner(const CVec& c, Complex x) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double inf_norm(const CVec& c) {
    double m = 0.0;
    for (const auto& z : c) m = std::max(m, std::abs(z));
    return m;
}

void trim_small(CVec& c, double threshold) {
    while (!c.empty() && std::abs(c.back()) <= threshold) c.pop_back();
}

CVec cdivmod(CVec a, const CVec& b, CVec* quotient) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        if (quotient) quotient->clear();
        return a;
    }
    CVec q(a.size() - db, 0.0);
    for (std::size_t i = a.size(); i-- > db;) {
        const Complex c = a[i] / b.back();
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    a.resize(db);
    if (quotient) *quotient = std::move(q);
    return a;
}

CVec normalize(CVec c) {
    const double n = inf_norm(c);
    if (n > 0)
        for (auto& z : c) z /= n;
    return c;
}

// Numeric gcd; remainders below rel * |dividend| count as zero.
CVec numeric_gcd(CVec a, CVec b, double rel) {
    a = normalize(a);
    b = normalize(b);
    while (!b.empty()) {
        CVec r = cdivmod(a, b, nullptr);
        trim_small(r, rel * std::max(1.0, inf_norm(a)));
        a = std::move(b);
        b = normalize(std::move(r));
    }
    return a;
}

CVec durand_kerner(const CVec& monic_coeffs) {
    const std::size_t n = monic_coeffs.size() - 1;
    double radius = 1.0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, 1.0 + std::abs(monic_coeffs[i]));
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    CVec z(n);
    const double two_pi = 2.0 * std::acos(-1.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double angle = two_pi * (static_cast<double>(j) + 0.25 + jitter(rng)) / static_cast<double>(n) + 0.4;
        z[j] = std::polar(radius * (1.0 + jitter(rng)), angle);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            Complex denom = 1.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) denom *= (z[j] - z[k]);
            if (denom == Complex(0.0, 0.0)) denom = 1e-300;
            const Complex step = horner(monic_coeffs, z[j]) / denom;
            z[j] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[j])));
        }
        if (max_step < 1e-12) break;
    }
    return z;
}

FactoredPoly factor_complex(const Poly& p, Tolerance tol) {
    const Field f = p.field();
    FactoredPoly out{f, {}, Poly::constant(Scalar::one(f))};
    CVec c;
    bool real_coeffs = true;
    for (const auto& s : p.coeffs()) {
        c.push_back(s.complex());
        if (s.complex().imag() != 0.0) real_coeffs = false;
    }
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == Complex(0.0, 0.0)) ++zeros;
    c.erase(c.begin(), c.begin() + static_cast<long>(zeros));

    struct Cluster {
        Complex root;
        std::size_t mult;
        Complex sum;
    };
    std::vector<Cluster> clusters;
    if (zeros) clusters.push_back({0.0, zeros, 0.0});

    if (c.size() > 1) {
        const std::size_t n = c.size() - 1;
        CVec dc(n);
        for (std::size_t i = 1; i <= n; ++i) dc[i - 1] = c[i] * static_cast<double>(i);
        CVec g = numeric_gcd(c, dc, 1e-9);
        CVec sq;
        cdivmod(c, g, &sq);
        for (auto& z : sq) z /= sq.back();
        CVec simple = durand_kerner(sq);
        // Newton polish on the squarefree part
        CVec dsq(sq.size() - 1);
        for (std::size_t i = 1; i < sq.size(); ++i) dsq[i - 1] = sq[i] * static_cast<double>(i);
        for (auto& r : simple) {
            for (int it = 0; it < 8; ++it) {
                const Complex d = horner(dsq, r);
                if (d == Complex(0.0, 0.0)) break;
                const Complex step = horner(sq, r) / d;
                const Complex next = r - step;
                if (std::abs(horner(sq, next)) > std::abs(horner(sq, r))) break;
                r = next;
                if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(r))) break;
            }
        }
        const CVec all = durand_kerner(c);
        std::vector<Cluster> found;
        for (const auto& r : simple) found.push_back({r, 0, 0.0});
        for (const auto& r : all) {
            std::size_t best = 0;
            for (std::size_t j = 1; j < found.size(); ++j)
                if (std::abs(found[j].root - r) < std::abs(found[best].root - r)) best = j;
            ++found[best].mult;
            found[best].sum += r;
        }
        for (auto& cl : found) {
            if (cl.mult == 0) continue;
            // the centroid of a split multiple root is far better conditioned
            // than any single member
            if (cl.mult > 1) cl.root = cl.sum / static_cast<double>(cl.mult);
            bool merged = false;
            for (auto& other : clusters) {
                if (std::abs(other.root - cl.root) <= tol.around(std::abs(cl.root))) {
                    other.root = (other.root * static_cast<double>(other.mult) + cl.root * static_cast<double>(cl.mult)) /
                                 static_cast<double>(other.mult + cl.mult);
                    other.mult += cl.mult;
                    merged = true;
                    break;
                }
            }
            if (!merged) clusters.push_back(cl);
        }
    }
    for (auto& cl : clusters) {
        // a root of multiplicity m is a simple root of the (m-1)-th derivative
        if (cl.mult > 1 && cl.root != Complex(0.0, 0.0)) {
            CVec d = c;
            for (std::size_t k = 1; k < cl.mult && d.size() > 1; ++k) {
                CVec next(d.size() - 1);
                for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * static_cast<double>(i);
                d = std::move(next);
            }
            CVec dd(d.size() > 1 ? d.size() - 1 : 1, 0.0);
            for (std::size_t i = 1; i < d.size(); ++i) dd[i - 1] = d[i] * static_cast<double>(i);
            for (int it = 0; it < 20; ++it) {
                const Complex slope = horner(dd, cl.root);
                if (slope == Complex(0.0, 0.0)) break;
                const Complex next = cl.root - horner(d, cl.root) / slope;
                if (std::abs(horner(d, next)) >= std::abs(horner(d, cl.root))) break;
                cl.root = next;
            }
        }
        if (std::abs(cl.root) <= tol.value) cl.root = 0.0;
        if (real_coeffs && std::abs(cl.root.imag()) <= tol.around(std::abs(cl.root))) cl.root.imag(0.0);
        out.roots.push_back({Scalar(cl.root), cl.mult});
    }
    return out;
}

}  // namespace

FactoredPoly poly_factor(const Poly& p, Tolerance tol) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    if (!p.is_monic()) throw Error(ErrorCode::NonMonic, "poly_factor expects a monic polynomial");
    FactoredPoly out{p.field(), {}, Poly(p.field())};
    switch (p.field().kind()) {
        case Field::Kind::Rational: out = factor_rational(p); break;
        case Field::Kind::Prime: out = factor_prime(p); break;
        case Field::Kind::Complex: out = factor_complex(p, tol); break;
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.value, b.value); });
    return out;
}

Integer stirling_first(unsigned i, unsigned m) {
    if (m > i) return 0;
    std::vector<Integer> row{1};  // s(0, .)
    for (unsigned n = 0; n < i; ++n) {
        std::vector<Integer> next(n + 2, 0);
        for (unsigned k = 0; k <= n + 1; ++k) {
            Integer v = 0;
            if (k >= 1) v += row[k - 1];
            if (k <= n) v -= Integer(n) * row[k];
            next[k] = v;
        }
        row = std::move(next);
    }
    return row[m];
}

Integer stirling_second(unsigned i, unsigned m) {
    if (m > i) return 0;
    std::vector<Integer> row{1};
    for (unsigned n = 0; n < i; ++n) {
        std::vector<Integer> next(n + 2, 0);
        for (unsigned k = 0; k <= n + 1; ++k) {
            Integer v = 0;
            if (k >= 1) v += row[k - 1];
            if (k <= n) v += Integer(k) * row[k];
            next[k] = v;
        }
        row = std::move(next);
    }
    return row[m];
}

}  // namespace pcanon
