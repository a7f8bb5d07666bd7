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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pcanon/io.hpp"
#include "pcanon/kronmin.hpp"
#include "pcanon/matfun.hpp"
#include "pcanon/pcf.hpp"
#include "pcanon/wedge.hpp"
#include "support.hpp"

using namespace pcanon;
using fixture::q;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Pinned tolerances and limits.
constexpr double kTolExpLog = 1e-9;        // criterion 2: exp(A'(0)) = A
constexpr double kTolClosedForm = 1e-9;    // criterion 6: e^{ktA} entries
constexpr double kTolSpiral = 1e-9;        // criterion 7: e21(k)
constexpr double kTolSpiralLog = 1e-8;     // criterion 7: log eigenvalues, exp(log) = E
constexpr double kTolPrintedLog = 1e-12;   // criterion 8: printed C'(0) entries
constexpr double kTolLogPowers = 1e-9;     // criterion 8: C'(0)^k
constexpr double kTolJordanLog = 1e-12;    // criterion 9: first row of log J_5(3)
constexpr double kTolJordanExp = 1e-8;     // criterion 9: exp(log J_5(3)) = J_5(3)
constexpr double kTolSemigroup = 1e-9;     // criterion 10
constexpr double kLimitCriterion1 = 1.0;   // seconds
constexpr double kLimitCriterion3 = 5.0;
constexpr double kLimitSuite = 60.0;

struct Report {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
    void note(const std::string& text) { notes.push_back(text); }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double rel_diff(const Matrix& a, const oracle::CMat& b) {
    return oracle::cdiff(oracle::to_c(a), b) / std::max(1.0, oracle::cnorm(b));
}

Complex entry(const Matrix& m, std::size_t i, std::size_t j) { return m(i, j).to_complex(); }

std::vector<Matrix> golden_exact() {
    return {fixture::semicirculant_2423(),
            fixture::mixed_4x4(),
            fixture::block_minus2(),
            fixture::jordan(3, q(1)),
            fixture::jordan(3, q(0)),
            Matrix::identity(Field::rationals(), 2),
            direct_sum(fixture::jordan(2, q(1, 2)), fixture::jordan(1, q(4))),
            Matrix::from_ints(Field::prime(5), {{1, 1, 0}, {0, 1, 1}, {0, 0, 3}}),
            fixture::jordan(4, Scalar::from_int(Field::prime(3), 2))};
}

std::vector<Matrix> golden_numeric() {
    return {fixture::spiral_3x3(), fixture::spiral_3x3(3.0), fixture::rotation(),
            fixture::mixed_4x4().to_field(Field::complex())};
}

std::vector<Matrix> golden_char0() {
    std::vector<Matrix> out;
    for (const Matrix& a : golden_exact())
        if (a.field().kind() != Field::Kind::Prime) out.push_back(a);
    for (const Matrix& a : golden_numeric()) out.push_back(a);
    return out;
}

std::vector<Matrix> constructed(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, 6);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(oracle::from_q(oracle::random_similar(rng, static_cast<std::size_t>(order(rng))).a));
    return out;
}

bool same_form(const PCanonicalForm& a, const PCanonicalForm& b) {
    if (a.basis != b.basis || a.nilpotent != b.nilpotent || a.geometric.size() != b.geometric.size()) return false;
    for (std::size_t j = 0; j < a.geometric.size(); ++j)
        if (a.geometric[j].eigenvalue != b.geometric[j].eigenvalue || a.geometric[j].coeffs != b.geometric[j].coeffs)
            return false;
    return true;
}

// 1. P-canonical form of the semicirculant [2, 4, 2, 3].
Report criterion1() {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    const Matrix a = fixture::semicirculant_2423();
    const PCanonicalForm f = pcf_build(a);
    r.check(f.nilpotent.empty() && f.geometric.size() == 1, "one geometric term at 2");
    if (!r.ok) return r;
    const auto& term = f.geometric[0];
    r.check(term.eigenvalue == q(2), "eigenvalue 2");
    r.check(term.coeffs.size() == 4, "index 4");
    if (!r.ok) return r;
    // a_0 = 2^k, a_1 = 2 * 2^k C(k,1), a_2 = 4 * 2^k C(k,2) + 2^k C(k,1),
    // a_3 = 8 * 2^k C(k,3) + 4 * 2^k C(k,2) + 3/2 * 2^k C(k,1)
    const std::vector<std::vector<Scalar>> expected{
        {q(1), q(0), q(0), q(0)}, {q(0), q(2), q(1), q(3, 2)}, {q(0), q(0), q(4), q(4)}, {q(0), q(0), q(0), q(8)}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t col = 0; col < 4; ++col)
            r.check(term.coeffs[i](0, col) == expected[i][col],
                    "a_" + std::to_string(col) + " coefficient on C(k," + std::to_string(i) + ")");
    for (std::uint64_t k = 0; k <= 16; ++k) r.check(pcf_eval(f, k) == a.pow(k), "A^" + std::to_string(k));
    const double elapsed = seconds_since(start);
    r.check(elapsed < kLimitCriterion1, "runtime " + fmt(elapsed) + " s");
    r.note("runtime " + fmt(elapsed) + " s");
    return r;
}

// 2. Exponential and logarithm of the semicirculant [2, 4, 2, 3].
Report criterion2() {
    Report r;
    const Matrix a = fixture::semicirculant_2423();
    const ClosedFormExp e = expm_closed(a);
    r.check(e.polynomial_part.empty() && e.exponential.size() == 1, "one exponential term");
    if (!r.ok) return r;
    r.check(e.exponential[0].lambda == Complex(2, 0), "exponent 2");
    const auto& m = e.exponential[0].coeffs;
    // b_2(t) = (8 t^2 + 2 t) e^{2t}
    r.check(m.size() == 4 && entry(m[0], 0, 2) == Complex(0, 0) && entry(m[1], 0, 2) == Complex(2, 0) &&
                entry(m[2], 0, 2) == Complex(8, 0) && entry(m[3], 0, 2) == Complex(0, 0),
            "b_2 coefficients (0, 2, 8)");

    const double ln2 = std::log(2.0);
    const Matrix l = logm(a, LogBranchSpec::principal_branch());
    const PCanonicalForm lf = log_pcf(pcf_build(a), LogBranchSpec::principal_branch());
    r.check(lf.nilpotent.empty() && lf.geometric.size() == 1, "log form has one term");
    if (!r.ok) return r;
    r.check(std::abs(lf.geometric[0].eigenvalue.complex() - ln2) < 1e-15, "log eigenvalue ln 2");
    const auto& c = lf.geometric[0].coeffs;
    r.check(c.size() == 4, "log index 4");
    if (!r.ok) return r;

    // The listed triple is the k^i (power basis) expansion of a_3:
    // 2^k (4/3 k^3 - 2 k^2 + 13/6 k).
    const PCanonicalForm g = pcf_to_gamma(pcf_build(a));
    const std::vector<Scalar> gamma{q(13, 6), q(-2), q(4, 3)};
    for (std::size_t i = 1; i <= 3; ++i)
        r.check(g.geometric[0].coeffs[i](0, 3) == gamma[i - 1], "power-basis coefficient of a_3 on k^" + std::to_string(i));

    // Binomial-basis coefficients of c_3 on ln2^{k-i} C(k,i), from the
    // independent series L = ln2 I + N - N^2/2 + N^3/3 with N = A/2 - I:
    // L^k first row last entry = 13/6 C(k,1) ln2^{k-1} - 4 C(k,2) ln2^{k-2} + 8 C(k,3) ln2^{k-3}.
    const std::vector<double> lambda_c3{13.0 / 6.0, -4.0, 8.0};
    const std::vector<double> printed_c3{13.0 / 6.0, -2.0, 4.0 / 3.0};
    bool printed_reading_holds = true;
    for (std::size_t i = 1; i <= 3; ++i) {
        const Complex coeff = entry(c[i], 0, 3) * std::pow(ln2, static_cast<double>(i));
        r.check(std::abs(coeff - lambda_c3[i - 1]) < 1e-12, "c_3 coefficient on C(k," + std::to_string(i) + ")");
        printed_reading_holds = printed_reading_holds && std::abs(coeff - printed_c3[i - 1]) < 1e-6;
    }
    // Each binomial-basis coefficient equals i! times the listed value.
    const std::vector<double> factorial{1.0, 2.0, 6.0};
    for (std::size_t i = 0; i < 3; ++i)
        r.check(std::abs(lambda_c3[i] - factorial[i] * printed_c3[i]) < 1e-15, "i! relation");
    r.note(std::string("c_3 = (4/3, -2, 13/6) read literally on ln2^{k-i} C(k,i): ") +
           (printed_reading_holds ? "holds" : "refuted; the oracle gives (8, -4, 13/6) = i! * (4/3, -2, 13/6)"));

    const oracle::CMat lc = oracle::to_c(l);
    for (unsigned k = 1; k <= 8; ++k) {
        const oracle::CMat lk = oracle::cpow(lc, k);
        r.check(rel_diff(pcf_eval(lf, k), lk) < 1e-12, "log form at k=" + std::to_string(k) + " against L^k");
    }
    const double err = max_abs_diff(closedform_eval(expm_closed(l), 1.0), a);
    const double err_series = oracle::cdiff(oracle::expm_series(lc, 1.0), oracle::to_c(a));
    r.check(err <= kTolExpLog, "exp(A'(0)) = A, error " + fmt(err));
    r.check(err_series <= kTolExpLog, "series exp(A'(0)) = A, error " + fmt(err_series));
    r.note("exp(A'(0)) - A: " + fmt(err) + " (closed form), " + fmt(err_series) + " (series)");
    return r;
}

// 3. Kronecker products of unipotent Jordan blocks over Q.
Report criterion3() {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    const Field f = Field::rationals();
    const WedgeContext ctx = WedgeContext::characteristic_zero();
    for (std::size_t s = 1; s <= 6; ++s)
        for (std::size_t t = 1; t <= 6; ++t) {
            const std::vector<Matrix> mats{fixture::jordan(s, q(1)), fixture::jordan(t, q(1))};
            const std::vector<EigSpec> specs{eigspec_of(mats[0]), eigspec_of(mats[1])};
            const Poly symbolic = kron_minpoly_symbolic(specs, ctx);
            const Poly expected = Poly::linear(Scalar::one(f)).pow(static_cast<unsigned>(s + t - 1));
            const std::string tag = "s=" + std::to_string(s) + " t=" + std::to_string(t);
            r.check(symbolic == expected, tag + ": (X-1)^(s+t-1)");
            r.check(kron_minpoly_direct(mats) == symbolic, tag + ": direct");
        }
    const double elapsed = seconds_since(start);
    r.check(elapsed < kLimitCriterion3, "runtime " + fmt(elapsed) + " s");
    r.note("runtime " + fmt(elapsed) + " s");
    return r;
}

// 4. Characteristic p.
Report criterion4() {
    Report r;
    for (std::uint64_t p : {2, 3, 5}) {
        const Field f = Field::prime(p);
        const WedgeContext ctx = WedgeContext::prime(p);
        for (std::size_t s = 1; s <= 6; ++s)
            for (std::size_t t = 1; t <= 6; ++t) {
                const std::vector<Matrix> mats{fixture::jordan(s, Scalar::one(f)), fixture::jordan(t, Scalar::one(f))};
                const std::vector<EigSpec> specs{eigspec_of(mats[0]), eigspec_of(mats[1])};
                r.check(kron_minpoly_symbolic(specs, ctx) == kron_minpoly_direct(mats),
                        "p=" + std::to_string(p) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
            }
        // a mixed pair: J_3(2) and J_4(1) where 2 is a unit
        if (p != 2) {
            const std::vector<Matrix> mats{fixture::jordan(3, Scalar::from_int(f, 2)), fixture::jordan(4, Scalar::one(f))};
            const std::vector<EigSpec> specs{eigspec_of(mats[0]), eigspec_of(mats[1])};
            r.check(kron_minpoly_symbolic(specs, ctx) == kron_minpoly_direct(mats), "p=" + std::to_string(p) + " J3(2) x J4(1)");
        }
        for (std::uint64_t s = 1; s <= 12; ++s)
            for (std::uint64_t t = 1; t <= 12; ++t) {
                const std::uint64_t w = wedge(s, t, ctx);
                const std::string tag = "p=" + std::to_string(p) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
                r.check(w == wedge_oracle_dim(s, t, ctx, 32), tag + ": rank oracle");
                r.check(w == oracle::wedge_bruteforce(s, t, p), tag + ": brute force");
            }
    }
    return r;
}

// 5. Products of linear recurrence sequences.
Report criterion5() {
    Report r;
    const WedgeContext ctx = WedgeContext::characteristic_zero();
    const Poly fib = fixture::qpoly({-1, -1, 1});
    const std::vector<Poly> pair{fib, fib};
    const Poly p = lrs_product_poly(pair, ctx);
    r.check(p == fixture::qpoly({1, -2, -2, 1}), "X^3 - 2X^2 - 2X + 1");

    const LinRecSeq fs(fib, {q(0), q(1)});
    const std::vector<Scalar> ft = fs.terms(30);
    std::vector<Scalar> squares;
    for (const Scalar& x : ft) squares.push_back(x * x);
    r.check(annihilates(p, squares), "Fibonacci squares satisfy the product recurrence");
    r.check(lrs_min_annihilator(squares) == p, "minimal annihilator of the 30-term prefix");

    const std::vector<Poly> mixed{fib, fixture::qpoly({-2, 1})};
    const Poly pm = lrs_product_poly(mixed, ctx);
    r.check(pm == fixture::qpoly({-4, -2, 1}), "X^2 - 2X - 4");
    const LinRecSeq geo(fixture::qpoly({-2, 1}), {q(1)});
    const std::vector<LinRecSeq> factors{fs, geo};
    const LinRecSeq prod = lrs_mul(factors, pm);
    const std::vector<Scalar> terms = prod.terms(30);
    const std::vector<Scalar> head{q(0), q(2), q(4), q(16), q(48)};
    r.check(std::equal(head.begin(), head.end(), terms.begin()), "prefix 0, 2, 4, 16, 48");
    r.check(annihilates(pm, terms), "F_n 2^n satisfies X^2 - 2X - 4");
    return r;
}

// 6. Mixed 4x4 example: non-geometric part and e^{ktA}.
Report criterion6() {
    Report r;
    const Matrix a = fixture::mixed_4x4();
    const PCanonicalForm f = pcf_build(a);
    const Matrix i_minus_a0 = Matrix::from_rows(Field::rationals(), {{q(1, 2), q(-1, 2), q(-1, 4), q(0)},
                                                                      {q(-1, 2), q(1, 2), q(0), q(-1, 4)},
                                                                      {q(0), q(0), q(1, 2), q(1, 2)},
                                                                      {q(0), q(0), q(1, 2), q(1, 2)}});
    const Matrix a_minus_a1 = Matrix::from_rows(Field::rationals(), {{q(0), q(0), q(1, 4), q(1, 4)},
                                                                      {q(0), q(0), q(-1, 4), q(-1, 4)},
                                                                      {q(0), q(0), q(0), q(0)},
                                                                      {q(0), q(0), q(0), q(0)}});
    r.check(f.nilpotent.size() == 2, "nilpotent index 2");
    if (!r.ok) return r;
    r.check(f.nilpotent[0] == i_minus_a0, "V_0 = I - A(0)");
    r.check(f.nilpotent[1] == a_minus_a1, "V_1 = A - A(1)");

    // Symbolic: entry (1,1) = 1/2 + e^{2s}/2, entry (1,3) = -1/4 + s/4 + 5/16 e^{2s} - 1/16 e^{-2s}, s = kt.
    const ClosedFormExp e = expm_closed(a);
    r.check(e.polynomial_part.size() == 2 && e.exponential.size() == 2, "closed-form shape");
    if (!r.ok) return r;
    const auto& pp = e.polynomial_part;
    const auto& neg = e.exponential[0];
    const auto& pos = e.exponential[1];
    r.check(neg.lambda == Complex(-2, 0) && pos.lambda == Complex(2, 0), "exponents -2 and 2");
    r.check(neg.coeffs.size() == 1 && pos.coeffs.size() == 1, "no polynomial factors on the exponentials");
    if (!r.ok) return r;
    r.check(entry(pp[0], 0, 0) == Complex(0.5, 0) && entry(pp[1], 0, 0) == Complex(0, 0) &&
                entry(pos.coeffs[0], 0, 0) == Complex(0.5, 0) && entry(neg.coeffs[0], 0, 0) == Complex(0, 0),
            "entry (1,1) = (e^{2kt} + 1)/2");
    r.check(entry(pp[0], 0, 2) == Complex(-0.25, 0) && entry(pp[1], 0, 2) == Complex(0.25, 0) &&
                entry(pos.coeffs[0], 0, 2) == Complex(5.0 / 16, 0) && entry(neg.coeffs[0], 0, 2) == Complex(-1.0 / 16, 0),
            "entry (1,3) = (5e^{2kt} - e^{-2kt} + 4kt - 4)/16");

    double worst = 0.0;
    const oracle::CMat ac = oracle::to_c(a);
    for (double k : {1.0, 2.0})
        for (double t : {0.3, 1.0}) {
            const double s = k * t;
            const Matrix m = closedform_eval(e, s);
            const oracle::CMat series = oracle::expm_series(ac, s);
            const Complex e11 = (std::exp(2 * s) + 1) / 2;
            const Complex e13 = (5 * std::exp(2 * s) - std::exp(-2 * s) + 4 * s - 4) / 16;
            for (const auto& [got, want] : {std::pair{entry(m, 0, 0), e11}, std::pair{entry(m, 0, 2), e13},
                                            std::pair{series[0][0], e11}, std::pair{series[0][2], e13}}) {
                const double err = std::abs(got - want) / std::max(1.0, std::abs(want));
                worst = std::max(worst, err);
                r.check(err <= kTolClosedForm, "k=" + fmt(k) + " t=" + fmt(t) + " error " + fmt(err));
            }
            const double whole = rel_diff(m, series);
            worst = std::max(worst, whole);
            r.check(whole <= kTolClosedForm, "k=" + fmt(k) + " t=" + fmt(t) + " full matrix against the series");
        }
    r.note("largest relative error " + fmt(worst));
    return r;
}

// 7. The 3x3 spiral family.
Report criterion7() {
    Report r;
    const RealPCF rf = pcf_realify(pcf_build(fixture::spiral_3x3()));
    r.check(rf.spiral.size() == 1, "one spiral term");
    if (!r.ok) return r;
    r.check(std::abs(rf.spiral[0].radius - 2.0) < 1e-12, "radius 2");
    r.check(std::abs(rf.spiral[0].angle - kPi / 6) < 1e-12, "angle pi/6");
    double worst = 0.0;
    for (std::uint64_t k = 1; k <= 12; ++k) {
        const double kd = static_cast<double>(k);
        const double want = std::ldexp(std::sin(kd * kPi / 6), static_cast<int>(k) + 2);
        const double err = std::abs(entry(realpcf_eval(rf, k), 1, 0) - want);
        worst = std::max(worst, err);
        r.check(err <= kTolSpiral, "e21(" + std::to_string(k) + ") error " + fmt(err));
    }
    r.note("e21 largest absolute error " + fmt(worst));

    const Matrix e = fixture::spiral_3x3(3.0);
    const Matrix l = logm(e, LogBranchSpec::principal_branch());
    std::vector<Complex> eig = oracle::eigenvalues(oracle::to_c(l));
    const Complex w(std::log(2.0), kPi / 6);
    for (const Complex& want : {w, std::conj(w), Complex(std::log(3.0), 0)}) {
        double best = 1e300;
        for (const Complex& z : eig) best = std::min(best, std::abs(z - want));
        r.check(best <= kTolSpiralLog, "log eigenvalue near " + fmt(want.real()) + "+" + fmt(want.imag()) + "i");
    }
    const double err = max_abs_diff(closedform_eval(expm_closed(l), 1.0), e);
    const double err_series = oracle::cdiff(oracle::expm_series(oracle::to_c(l), 1.0), oracle::to_c(e));
    r.check(err <= kTolSpiralLog, "exp(log E) = E, error " + fmt(err));
    r.check(err_series <= kTolSpiralLog, "series exp(log E) = E, error " + fmt(err_series));

    // Coefficient (3,1) on (ln2 + i pi/6)^k of the logarithm's form.
    const PCanonicalForm lf = log_pcf(pcf_build(e), LogBranchSpec::principal_branch());
    const Complex g31 = entry(lf.geometric[1].coeffs[0], 2, 0);
    const bool matches_f31 = std::abs(g31 - Complex(-1, -1)) < 1e-9;
    r.check(matches_f31 || std::abs(g31 - Complex(-2, -1)) < 1e-9, "g31 coefficient is one of the listed values");
    r.note(std::string("g31 coefficient on (ln2 + i pi/6)^k: ") +
           (matches_f31 ? "(-1-i), matching f31 of the exponential; the listed (-2-i) is refuted"
                        : "(-2-i), the listed value"));
    return r;
}

// 8. The block at -2.
Report criterion8() {
    Report r;
    const Matrix c = fixture::block_minus2();
    const LogBranchSpec branch = LogBranchSpec::explicit_branches({0});
    const Complex z(std::log(2.0), kPi);
    const Matrix l = logm(c, branch);
    const Complex printed[2][2] = {{-1.5 + z, -1.5}, {1.5, 1.5 + z}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r.check(std::abs(entry(l, i, j) - printed[i][j]) <= kTolPrintedLog,
                    "C'(0) entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    // Symbolic slots: the diagonal carries exactly ln2 + i pi over the rational part.
    const PCanonicalForm lf = log_pcf(pcf_build(c), branch);
    r.check(lf.geometric.size() == 1 && std::abs(lf.geometric[0].eigenvalue.complex() - z) < 1e-15, "log eigenvalue ln2 + i pi");

    double worst = 0.0;
    const oracle::CMat lc = oracle::to_c(l);
    for (unsigned k = 1; k <= 8; ++k) {
        const Matrix form = pcf_eval(lf, k);
        const oracle::CMat direct = oracle::cpow(lc, k);
        const Complex zk1 = std::pow(z, static_cast<double>(k - 1));
        const double s = 1.5 * k;
        const Complex closed[2][2] = {{zk1 * (-s + z), zk1 * -s}, {zk1 * s, zk1 * (s + z)}};
        const double scale = std::max(1.0, oracle::cnorm(direct));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const double e1 = std::abs(entry(form, i, j) - direct[i][j]) / scale;
                const double e2 = std::abs(closed[i][j] - direct[i][j]) / scale;
                worst = std::max({worst, e1, e2});
                r.check(e1 <= kTolLogPowers, "form at k=" + std::to_string(k));
                r.check(e2 <= kTolLogPowers, "closed expression at k=" + std::to_string(k));
            }
    }
    r.note("largest error relative to |C'(0)^k| " + fmt(worst));
    return r;
}

// 9. Logarithm of J_5(3).
Report criterion9() {
    Report r;
    const Matrix j = fixture::jordan(5, q(3));
    const Matrix l = logm(j, LogBranchSpec::principal_branch());
    const std::vector<double> row{std::log(3.0), 1.0 / 3, -1.0 / 18, 1.0 / 81, -1.0 / 324};
    for (std::size_t i = 0; i < 5; ++i)
        r.check(std::abs(entry(l, 0, i) - row[i]) <= kTolJordanLog, "first row entry " + std::to_string(i + 1));
    const double err = max_abs_diff(closedform_eval(expm_closed(l), 1.0), j);
    const double err_series = oracle::cdiff(oracle::expm_series(oracle::to_c(l), 1.0), oracle::to_c(j));
    r.check(err <= kTolJordanExp, "exp(log J) = J, error " + fmt(err));
    r.check(err_series <= kTolJordanExp, "series exp(log J) = J, error " + fmt(err_series));
    return r;
}

// 10. Property suites.
Report criterion10() {
    Report r;
    const std::vector<Matrix> random50 = constructed(50, 2026);
    for (std::size_t n = 0; n < random50.size(); ++n) {
        const Matrix& a = random50[n];
        const SpectralData sd = spectral_projections(a);
        std::vector<Matrix> projections;
        if (sd.zero_projection) projections.push_back(*sd.zero_projection);
        for (const auto& comp : sd.components) projections.push_back(comp.projection);
        Matrix sum(a.field(), a.order());
        for (const auto& p : projections) sum += p;
        const std::string tag = "constructed #" + std::to_string(n);
        r.check(sum.is_identity(), tag + ": sum of projections");
        for (std::size_t i = 0; i < projections.size(); ++i) {
            r.check(a * projections[i] == projections[i] * a, tag + ": commutes");
            for (std::size_t k = 0; k < projections.size(); ++k) {
                const Matrix prod = projections[i] * projections[k];
                r.check(i == k ? prod == projections[i] : prod.is_zero(), tag + ": orthogonality");
            }
        }
    }

    std::vector<Matrix> all = golden_exact();
    for (const Matrix& a : golden_numeric()) all.push_back(a);
    all.insert(all.end(), random50.begin(), random50.end());
    for (const Matrix& a : all) {
        const Poly m = minpoly(a), pm = pcf_minpoly(pcf_build(a));
        if (a.field().exact()) {
            r.check(m == pm, "pcf_minpoly = minpoly on " + io::pretty(a));
        } else {
            bool close = m.degree() == pm.degree();
            for (int i = 0; close && i <= m.degree(); ++i) {
                const auto ui = static_cast<std::size_t>(i);
                close = std::abs(m.coeff(ui).complex() - pm.coeff(ui).complex()) <= 1e-9 * std::max(1.0, std::abs(m.coeff(ui).complex()));
            }
            r.check(close, "pcf_minpoly = minpoly on " + io::pretty(a));
        }
    }

    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const Matrix& a : golden_char0()) {
        const ClosedFormExp e = expm_closed(a);
        for (int trial = 0; trial < 10; ++trial) {
            const double s = u(rng), t = u(rng);
            const Matrix lhs = closedform_eval(e, s + t);
            const Matrix rhs = closedform_eval(e, s) * closedform_eval(e, t);
            r.check(max_abs_diff(lhs, rhs) <= kTolSemigroup * std::max(1.0, lhs.max_norm()), "semigroup");
        }
        const Matrix id = Matrix::identity(Field::complex(), a.order());
        std::vector<double> errors;
        for (double h : {1e-3, 1e-4, 1e-5}) {
            Matrix d = closedform_eval(e, h) - id;
            d *= Scalar::from_complex(1.0 / h);
            errors.push_back(max_abs_diff(d, a));
        }
        if (errors[0] > 1e-9) {
            const double ratio1 = errors[0] / errors[1], ratio2 = errors[1] / errors[2];
            r.check(ratio1 > 5.0 && ratio1 < 20.0, "first-order derivative error, ratio " + fmt(ratio1));
            r.check(ratio2 > 5.0 && ratio2 < 20.0, "first-order derivative error, ratio " + fmt(ratio2));
        } else {
            r.check(errors[2] <= 1e-9, "derivative of a linear exponential");
        }
    }

    for (unsigned i = 0; i <= 8; ++i)
        for (unsigned j = 0; j <= 8; ++j) {
            Integer acc = 0;
            for (unsigned m = 0; m <= 8; ++m) acc += stirling_first(i, m) * stirling_second(m, j);
            r.check(acc == (i == j ? 1 : 0), "Stirling inversion");
        }
    for (unsigned i = 0; i <= 8; ++i)
        for (unsigned k = 0; k <= 20; ++k) {
            Rational sum = 0;
            Integer kp = 1, fact = 1;
            for (unsigned m = 1; m <= i; ++m) fact *= m;
            for (unsigned m = 0; m <= i; ++m) {
                sum += Rational(stirling_first(i, m) * kp, fact);
                kp *= k;
            }
            sum.canonicalize();
            r.check(sum == Rational(binomial(k, i)), "binomial expansion");
        }
    std::vector<Matrix> exact0;
    for (const Matrix& a : golden_exact())
        if (a.field().kind() == Field::Kind::Rational) exact0.push_back(a);
    exact0.insert(exact0.end(), random50.begin(), random50.end());
    for (const Matrix& a : exact0) {
        const PCanonicalForm f = pcf_build(a);
        r.check(same_form(pcf_to_lambda(pcf_to_gamma(f)), f), "basis round trip");
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Report()>>> criteria{
        {"P-canonical form of [2,4,2,3]", criterion1},
        {"exponential and logarithm of [2,4,2,3]", criterion2},
        {"Kronecker products of unipotent Jordan blocks over Q", criterion3},
        {"characteristic-p wedge and Kronecker products", criterion4},
        {"products of linear recurrence sequences", criterion5},
        {"mixed 4x4 example and e^{ktA}", criterion6},
        {"3x3 spiral family, numeric path", criterion7},
        {"logarithm of the block at -2", criterion8},
        {"logarithm of J_5(3)", criterion9},
        {"property suites", criterion10},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Report r;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.check(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(t0);
        std::printf("%s criterion %zu: %s (%.2f s)\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), elapsed);
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
        for (std::size_t k = 0; k < r.failures.size() && k < 10; ++k) std::printf("    failed: %s\n", r.failures[k].c_str());
        if (r.failures.size() > 10) std::printf("    ... %zu more\n", r.failures.size() - 10);
        failed += r.ok ? 0 : 1;
    }
    const double total = seconds_since(start);
    const bool in_time = total < kLimitSuite;
    std::printf("%s total runtime %.2f s (limit %.0f s)\n", in_time ? "PASS" : "FAIL", total, kLimitSuite);
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 && in_time ? 0 : 1;
}
