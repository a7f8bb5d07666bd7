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

#include "pcanon/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace pcanon::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
    return obj.at(key);
}

void put_field(json& obj, const Field& f) {
    switch (f.kind()) {
        case Field::Kind::Rational: obj["field"] = "Q"; break;
        case Field::Kind::Complex: obj["field"] = "C"; break;
        case Field::Kind::Prime:
            obj["field"] = "Fp";
            obj["p"] = f.modulus();
            break;
    }
}

const char* basis_name(Basis b) { return b == Basis::Lambda ? "lambda" : "gamma"; }

Basis basis_from(const json& j) {
    const auto s = j.get<std::string>();
    if (s == "lambda") return Basis::Lambda;
    if (s == "gamma") return Basis::Gamma;
    parse_fail("unknown basis \"" + s + "\"");
}

json rows_of(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json real_rows_of(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j).to_complex().real());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_rows(const json& rows, const Field& f) {
    if (!rows.is_array() || rows.empty()) parse_fail("a matrix must be a non-empty array of rows");
    const std::size_t n = rows.size();
    std::vector<std::vector<Scalar>> out;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) parse_fail("a matrix must be square");
        std::vector<Scalar> r;
        for (const auto& x : row) r.push_back(scalar_from_json(x, f));
        out.push_back(std::move(r));
    }
    return Matrix::from_rows(f, out);
}

Matrix real_matrix_from_rows(const json& rows) {
    if (!rows.is_array() || rows.empty()) parse_fail("a matrix must be a non-empty array of rows");
    const std::size_t n = rows.size();
    Matrix m(Field::complex(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) parse_fail("a matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows[i][j].is_number()) parse_fail("real matrix entries must be numbers");
            m(i, j) = Scalar::from_complex(rows[i][j].get<double>());
        }
    }
    return m;
}

template <typename F>
json list_of(const std::vector<Matrix>& ms, F&& enc) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(enc(m));
    return out;
}

std::vector<Matrix> matrices_from(const json& j, const std::function<Matrix(const json&)>& dec) {
    if (!j.is_array()) parse_fail("expected an array of matrices");
    std::vector<Matrix> out;
    for (const auto& x : j) out.push_back(dec(x));
    return out;
}

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && j.contains("re")) {
        const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
        return {j.at("re").get<double>(), im};
    }
    if (j.is_string()) {
        try {
            const Rational q(j.get<std::string>());
            return {q.get_d(), 0.0};
        } catch (const std::invalid_argument&) {
        }
        try {
            std::size_t used = 0;
            const std::string s = j.get<std::string>();
            const double v = std::stod(s, &used);
            if (used == s.size()) return {v, 0.0};
        } catch (const std::exception&) {
        }
    }
    parse_fail("cannot read a complex number from " + j.dump());
}

Rational rational_from_string(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) parse_fail("empty number");
    const auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            if (s.front() == '+') s.erase(0, 1);
            Rational q(s);
            if (q.get_den() == 0) parse_fail("zero denominator in \"" + s + "\"");
            q.canonicalize();
            return q;
        }
        // exact decimal: digits before and after the point
        const std::string frac = s.substr(dot + 1);
        std::string whole = s.substr(0, dot);
        if (frac.find_first_not_of("0123456789") != std::string::npos) parse_fail("bad decimal \"" + s + "\"");
        bool neg = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.erase(0, 1);
        Integer num(whole.empty() ? std::string("0") : whole);
        Integer den = 1;
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rational q(neg ? Integer(-num) : num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        parse_fail("cannot read a rational from \"" + s + "\"");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// encoding

json to_json(const Scalar& s) {
    switch (s.field().kind()) {
        case Field::Kind::Rational: return s.rational().get_str();
        case Field::Kind::Prime: return s.residue();
        case Field::Kind::Complex: return complex_pair(s.complex());
    }
    return nullptr;
}

json to_json(const Poly& p) {
    json out = {{"type", "poly"}};
    put_field(out, p.field());
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_json(x));
    out["coeffs"] = std::move(c);
    return out;
}

json to_json(const Matrix& m) {
    json out = {{"type", "matrix"}};
    put_field(out, m.field());
    out["rows"] = rows_of(m);
    return out;
}

json to_json(const FactoredPoly& f) {
    json out = {{"type", "factored_poly"}};
    put_field(out, f.field);
    json roots = json::array();
    for (const auto& r : f.roots) roots.push_back({{"value", to_json(r.value)}, {"multiplicity", r.multiplicity}});
    out["roots"] = std::move(roots);
    json rem = json::array();
    for (const auto& x : f.remainder.coeffs()) rem.push_back(to_json(x));
    out["remainder"] = std::move(rem);
    return out;
}

json to_json(const SpectralData& sd, const Field& field) {
    json out = {{"type", "spectral"}};
    put_field(out, field);
    out["nilpotent_index"] = sd.nilpotent_index;
    out["zero_projection"] = sd.zero_projection ? rows_of(*sd.zero_projection) : json(nullptr);
    json comps = json::array();
    for (const auto& c : sd.components)
        comps.push_back({{"eigenvalue", to_json(c.eigenvalue)}, {"index", c.index}, {"projection", rows_of(c.projection)}});
    out["components"] = std::move(comps);
    return out;
}

json to_json(const PCanonicalForm& f) {
    json out = {{"type", "pcf"}};
    put_field(out, f.field);
    out["order"] = f.order;
    out["basis"] = basis_name(f.basis);
    out["nilpotent"] = list_of(f.nilpotent, rows_of);
    json geo = json::array();
    for (const auto& t : f.geometric)
        geo.push_back({{"eigenvalue", to_json(t.eigenvalue)}, {"coeffs", list_of(t.coeffs, rows_of)}});
    out["geometric"] = std::move(geo);
    return out;
}

json to_json(const RealPCF& f) {
    json out = {{"type", "real_pcf"}, {"order", f.order}, {"basis", basis_name(f.basis)}};
    out["nilpotent"] = list_of(f.nilpotent, real_rows_of);
    json real = json::array();
    for (const auto& t : f.real) real.push_back({{"eigenvalue", t.eigenvalue}, {"coeffs", list_of(t.coeffs, real_rows_of)}});
    out["real"] = std::move(real);
    json spiral = json::array();
    for (const auto& t : f.spiral)
        spiral.push_back({{"radius", t.radius},
                          {"angle", t.angle},
                          {"cos_coeffs", list_of(t.cos_coeffs, real_rows_of)},
                          {"sin_coeffs", list_of(t.sin_coeffs, real_rows_of)}});
    out["spiral"] = std::move(spiral);
    return out;
}

json to_json(const ClosedFormExp& e) {
    json out = {{"type", "expm"}, {"order", e.order}};
    out["polynomial_part"] = list_of(e.polynomial_part, rows_of);
    json terms = json::array();
    for (const auto& t : e.exponential)
        terms.push_back({{"lambda", complex_pair(t.lambda)}, {"coeffs", list_of(t.coeffs, rows_of)}});
    out["exponential"] = std::move(terms);
    return out;
}

json to_json(const RealClosedForm& e) {
    json out = {{"type", "expm_real"}, {"order", e.order}};
    out["polynomial_part"] = list_of(e.polynomial_part, real_rows_of);
    json real = json::array();
    for (const auto& t : e.real) real.push_back({{"lambda", t.lambda}, {"coeffs", list_of(t.coeffs, real_rows_of)}});
    out["real"] = std::move(real);
    json pairs = json::array();
    for (const auto& t : e.pairs)
        pairs.push_back({{"mu", complex_pair(t.mu)},
                         {"cos_coeffs", list_of(t.cos_coeffs, real_rows_of)},
                         {"sin_coeffs", list_of(t.sin_coeffs, real_rows_of)}});
    out["pairs"] = std::move(pairs);
    return out;
}

json to_json(const LinRecSeq& s) {
    json out = {{"type", "lrs"}};
    put_field(out, s.char_poly().field());
    json c = json::array();
    for (const auto& x : s.char_poly().coeffs()) c.push_back(to_json(x));
    out["poly"] = std::move(c);
    json init = json::array();
    for (const auto& x : s.initial()) init.push_back(to_json(x));
    out["initial"] = std::move(init);
    return out;
}

std::string dump(const json& j) { return j.dump(); }

// ---------------------------------------------------------------------------
// decoding

Field field_from_json(const json& obj) {
    if (!obj.is_object() || !obj.contains("field")) return Field::rationals();
    const json& d = obj.at("field");
    if (!d.is_string()) parse_fail("field descriptor must be a string");
    const std::string name = d.get<std::string>();
    if (name == "Q") return Field::rationals();
    if (name == "C") return Field::complex();
    std::uint64_t p = 0;
    if (name == "Fp") {
        if (!obj.contains("p") || !obj.at("p").is_number_unsigned()) parse_fail("field Fp needs a positive integer \"p\"");
        p = obj.at("p").get<std::uint64_t>();
    } else if (name.size() > 1 && name[0] == 'F' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        p = std::stoull(name.substr(1));
    } else {
        parse_fail("unknown field \"" + name + "\"");
    }
    return Field::prime(p);
}

Scalar scalar_from_json(const json& j, const Field& f) {
    switch (f.kind()) {
        case Field::Kind::Complex: return Scalar(complex_from(j));
        case Field::Kind::Rational:
            if (j.is_number_integer()) return Scalar::from_integer(f, Integer(j.dump()));
            if (j.is_number_float()) {
                const double v = j.get<double>();
                if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15)
                    return Scalar::from_int(f, static_cast<long long>(v));
                parse_fail("non-integer rational " + j.dump() + " must be written as a \"num/den\" string");
            }
            if (j.is_string()) return Scalar(rational_from_string(j.get<std::string>()));
            parse_fail("cannot read a rational from " + j.dump());
        case Field::Kind::Prime: {
            Rational q;
            if (j.is_number_integer())
                q = Rational(Integer(j.dump()));
            else if (j.is_string())
                q = rational_from_string(j.get<std::string>());
            else
                parse_fail("prime-field entries must be integers, got " + j.dump());
            return Scalar::from_rational(f, q);
        }
    }
    parse_fail("unsupported field");
}

Poly poly_from_json(const json& j) {
    const Field f = field_from_json(j);
    const json& c = require(j, "coeffs");
    if (!c.is_array()) parse_fail("coeffs must be an array");
    std::vector<Scalar> cs;
    for (const auto& x : c) cs.push_back(scalar_from_json(x, f));
    return Poly(f, std::move(cs));
}

Matrix matrix_from_json(const json& j) { return matrix_from_rows(require(j, "rows"), field_from_json(j)); }

FactoredPoly factored_from_json(const json& j) {
    const Field f = field_from_json(j);
    FactoredPoly out{f, {}, Poly(f)};
    for (const auto& r : require(j, "roots"))
        out.roots.push_back({scalar_from_json(require(r, "value"), f), require(r, "multiplicity").get<std::size_t>()});
    std::vector<Scalar> cs;
    for (const auto& x : require(j, "remainder")) cs.push_back(scalar_from_json(x, f));
    out.remainder = Poly(f, std::move(cs));
    return out;
}

SpectralData spectral_from_json(const json& j) {
    const Field f = field_from_json(j);
    SpectralData sd;
    sd.nilpotent_index = require(j, "nilpotent_index").get<std::size_t>();
    const json& z = require(j, "zero_projection");
    if (!z.is_null()) sd.zero_projection = matrix_from_rows(z, f);
    for (const auto& c : require(j, "components"))
        sd.components.push_back({scalar_from_json(require(c, "eigenvalue"), f), require(c, "index").get<std::size_t>(),
                                 matrix_from_rows(require(c, "projection"), f)});
    return sd;
}

PCanonicalForm pcf_from_json(const json& j) {
    PCanonicalForm f;
    f.field = field_from_json(j);
    f.order = require(j, "order").get<std::size_t>();
    f.basis = basis_from(require(j, "basis"));
    const Field field = f.field;
    const auto dec = [&field](const json& x) { return matrix_from_rows(x, field); };
    f.nilpotent = matrices_from(require(j, "nilpotent"), dec);
    for (const auto& t : require(j, "geometric"))
        f.geometric.push_back({scalar_from_json(require(t, "eigenvalue"), field), matrices_from(require(t, "coeffs"), dec)});
    return f;
}

RealPCF realpcf_from_json(const json& j) {
    RealPCF f;
    f.order = require(j, "order").get<std::size_t>();
    f.basis = basis_from(require(j, "basis"));
    f.nilpotent = matrices_from(require(j, "nilpotent"), real_matrix_from_rows);
    for (const auto& t : require(j, "real"))
        f.real.push_back({require(t, "eigenvalue").get<double>(), matrices_from(require(t, "coeffs"), real_matrix_from_rows)});
    for (const auto& t : require(j, "spiral"))
        f.spiral.push_back({require(t, "radius").get<double>(), require(t, "angle").get<double>(),
                            matrices_from(require(t, "cos_coeffs"), real_matrix_from_rows),
                            matrices_from(require(t, "sin_coeffs"), real_matrix_from_rows)});
    return f;
}

ClosedFormExp expm_from_json(const json& j) {
    ClosedFormExp e;
    e.order = require(j, "order").get<std::size_t>();
    const auto dec = [](const json& x) { return matrix_from_rows(x, Field::complex()); };
    e.polynomial_part = matrices_from(require(j, "polynomial_part"), dec);
    for (const auto& t : require(j, "exponential"))
        e.exponential.push_back({complex_from(require(t, "lambda")), matrices_from(require(t, "coeffs"), dec)});
    return e;
}

RealClosedForm expm_real_from_json(const json& j) {
    RealClosedForm e;
    e.order = require(j, "order").get<std::size_t>();
    e.polynomial_part = matrices_from(require(j, "polynomial_part"), real_matrix_from_rows);
    for (const auto& t : require(j, "real"))
        e.real.push_back({require(t, "lambda").get<double>(), matrices_from(require(t, "coeffs"), real_matrix_from_rows)});
    for (const auto& t : require(j, "pairs"))
        e.pairs.push_back({complex_from(require(t, "mu")), matrices_from(require(t, "cos_coeffs"), real_matrix_from_rows),
                           matrices_from(require(t, "sin_coeffs"), real_matrix_from_rows)});
    return e;
}

LinRecSeq lrs_from_json(const json& j) {
    const Field f = field_from_json(j);
    std::vector<Scalar> c, init;
    const json& p = require(j, "poly");
    const json& i = require(j, "initial");
    if (!p.is_array() || !i.is_array()) parse_fail("sequence needs \"poly\" and \"initial\" arrays");
    for (const auto& x : p) c.push_back(scalar_from_json(x, f));
    for (const auto& x : i) init.push_back(scalar_from_json(x, f));
    return LinRecSeq(Poly(f, std::move(c)), std::move(init));
}

// ---------------------------------------------------------------------------
// input documents

std::string normalize_minus(std::string text) {
    static const std::string minus = "\xE2\x88\x92";
    for (std::size_t pos = text.find(minus); pos != std::string::npos; pos = text.find(minus, pos)) text.replace(pos, minus.size(), "-");
    return text;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(normalize_minus(text));
    } catch (const json::parse_error& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
}

Poly parse_poly_array(const std::string& text, const Field& f) {
    const json j = parse_json(text);
    if (!j.is_array() || j.empty()) parse_fail("a polynomial must be a non-empty ascending coefficient array");
    std::vector<Scalar> cs;
    for (const auto& x : j) cs.push_back(scalar_from_json(x, f));
    return Poly(f, std::move(cs));
}

InputDocument parse_input(const std::string& text) {
    json j = parse_json(text);
    InputDocument doc;
    if (j.is_array()) {
        const bool nested = !j.empty() && j.front().is_array();
        j = json{{nested ? "matrix" : "poly", j}};
    }
    if (!j.is_object()) parse_fail("input must be a JSON object or array");
    try {
        doc.field = field_from_json(j);
        const Field f = doc.field;
        const auto poly_of = [&f](const json& c) {
            if (c.is_object()) return poly_from_json(c);
            if (!c.is_array() || c.empty()) parse_fail("a polynomial must be a non-empty ascending coefficient array");
            std::vector<Scalar> cs;
            for (const auto& x : c) cs.push_back(scalar_from_json(x, f));
            return Poly(f, std::move(cs));
        };
        if (j.contains("matrix")) doc.matrix = matrix_from_rows(j.at("matrix"), f);
        if (j.contains("rows")) doc.matrix = matrix_from_rows(j.at("rows"), f);
        if (j.contains("matrices")) {
            if (!j.at("matrices").is_array()) parse_fail("\"matrices\" must be an array");
            for (const auto& m : j.at("matrices")) doc.matrices.push_back(matrix_from_rows(m, f));
        }
        if (j.contains("poly")) doc.poly = poly_of(j.at("poly"));
        if (j.contains("coeffs")) doc.poly = poly_of(j.at("coeffs"));
        if (j.contains("polys")) {
            if (!j.at("polys").is_array()) parse_fail("\"polys\" must be an array");
            for (const auto& p : j.at("polys")) doc.polys.push_back(poly_of(p));
        }
        if (j.contains("sequence")) {
            json s = j.at("sequence");
            if (!s.is_object()) parse_fail("\"sequence\" must be an object");
            if (!s.contains("field")) put_field(s, f);
            doc.sequence = lrs_from_json(s);
        }
        if (j.contains("options")) doc.options = j.at("options");
    } catch (const json::exception& e) {
        parse_fail(std::string("malformed document: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotPrime) parse_fail(e.what());
        throw;
    }
    if (!doc.matrix && !j.contains("matrices") && !doc.poly && !j.contains("polys") && !doc.sequence)
        parse_fail("the input document has no payload");
    if (doc.matrix) doc.matrices.insert(doc.matrices.begin(), *doc.matrix);
    if (doc.poly) doc.polys.insert(doc.polys.begin(), *doc.poly);
    return doc;
}

// ---------------------------------------------------------------------------
// pretty printing

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string complex_text(Complex z) {
    const double scale = std::max(std::abs(z.real()), std::abs(z.imag()));
    const double re = std::abs(z.real()) <= 1e-14 * scale ? 0.0 : z.real();
    const double im = std::abs(z.imag()) <= 1e-14 * scale ? 0.0 : z.imag();
    if (im == 0.0) return num(re);
    const std::string imag = (std::abs(im) == 1.0 ? std::string(im < 0 ? "-" : "") : num(im)) + "i";
    if (re == 0.0) return imag;
    return "(" + num(re) + (im < 0 ? "" : "+") + imag + ")";
}

/// Sign and magnitude text of a coefficient, for "a + b" / "a - b" joins.
struct Signed {
    bool negative;
    std::string magnitude;
    bool unit;  ///< magnitude is 1
};

Signed split_sign(const Scalar& s) {
    switch (s.field().kind()) {
        case Field::Kind::Rational: {
            const Rational q = abs(s.rational());
            return {sgn(s.rational()) < 0, q.get_str(), q == 1};
        }
        case Field::Kind::Prime: return {false, std::to_string(s.residue()), s.residue() == 1};
        case Field::Kind::Complex: {
            const Complex z = s.complex();
            const double scale = std::abs(z);
            if (std::abs(z.imag()) <= 1e-14 * scale)
                return {z.real() < 0, num(std::abs(z.real())), std::abs(std::abs(z.real()) - 1.0) <= 1e-14};
            if (std::abs(z.real()) <= 1e-14 * scale && z.imag() < 0) return {true, complex_text(-z), false};
            return {false, complex_text(z), false};
        }
    }
    return {false, s.to_string(), false};
}

/// Joins signed terms; each term is (coefficient, suffix factor text).
class SumBuilder {
   public:
    void add(const Signed& c, const std::string& factor) {
        std::string body;
        if (factor.empty())
            body = c.magnitude;
        else if (c.unit)
            body = factor;
        else
            body = c.magnitude + "*" + factor;
        add_raw(c.negative, body);
    }
    void add_raw(bool negative, const std::string& body) {
        if (out_.empty())
            out_ = (negative ? "-" : "") + body;
        else
            out_ += (negative ? " - " : " + ") + body;
        ++count_;
    }
    bool empty() const { return out_.empty(); }
    std::size_t count() const { return count_; }
    std::string str(const char* when_empty = "0") const { return out_.empty() ? when_empty : out_; }

   private:
    std::string out_;
    std::size_t count_ = 0;
};

bool wrap_needed(const std::string& s) {
    return s.find_first_of("+-/ *") != std::string::npos && !(s.front() == '(' && s.back() == ')');
}

std::string base_text(const Scalar& s) {
    const std::string t = pretty(s);
    return wrap_needed(t) ? "(" + t + ")" : t;
}

std::string pi_fraction(double angle) {
    const double turns = angle / std::numbers::pi;
    for (int q = 1; q <= 24; ++q) {
        const double p = std::round(turns * q);
        if (std::abs(turns * q - p) < 1e-9) {
            const long long pi = static_cast<long long>(p);
            if (pi == 0) return "0";
            std::string out = pi == 1 ? "pi" : (pi == -1 ? "-pi" : std::to_string(pi) + "*pi");
            if (q != 1) out += "/" + std::to_string(q);
            return out;
        }
    }
    return num(angle);
}

/// Names coefficient matrices: I, A, or M1, M2, ... listed afterwards.
class MatrixNames {
   public:
    explicit MatrixNames(const Matrix* source) : source_(source) {}

    std::string name(const Matrix& m) {
        if (same(m, Matrix::identity(m.field(), m.order()))) return "I";
        if (source_ && source_->order() == m.order() && same(m, source_->to_field(m.field()))) return "A";
        for (std::size_t i = 0; i < named_.size(); ++i)
            if (same(m, named_[i])) return "M" + std::to_string(i + 1);
        named_.push_back(m);
        return "M" + std::to_string(named_.size());
    }

    std::string listing() const {
        std::string out;
        for (std::size_t i = 0; i < named_.size(); ++i) out += "M" + std::to_string(i + 1) + " =\n" + pretty(named_[i]);
        return out;
    }

   private:
    static bool same(const Matrix& a, const Matrix& b) {
        if (a.field().exact() || b.field().exact()) return a == b;
        return max_abs_diff(a, b) <= 1e-12 * std::max(1.0, std::max(a.max_norm(), b.max_norm()));
    }
    const Matrix* source_;
    std::vector<Matrix> named_;
};

bool negligible(const Scalar& s, double scale) {
    if (s.field().exact()) return s.is_zero();
    return std::abs(s.complex()) <= 1e-12 * std::max(1.0, scale);
}

std::string basis_factor(Basis b, std::size_t i) {
    if (i == 0) return "";
    if (b == Basis::Lambda) return "C(k," + std::to_string(i) + ")";
    return i == 1 ? "k" : "k^" + std::to_string(i);
}

std::string join_factors(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

/// c * lambda^k with integer lambda (|lambda| >= 2) folded into lambda^(k+e).
std::pair<Scalar, std::string> fold_power(const Scalar& c, const Scalar& lambda) {
    const Field f = lambda.field();
    if (f.kind() == Field::Kind::Rational && lambda.rational().get_den() == 1 && abs(lambda.rational()) >= 2) {
        const Integer base = lambda.rational().get_num();
        Integer n = c.rational().get_num();
        Integer d = c.rational().get_den();
        long e = 0;
        const Integer b = abs(base);
        while (n != 0 && n % b == 0) {
            n /= b;
            ++e;
        }
        while (d % b == 0) {
            d /= b;
            --e;
        }
        Rational rest(n, d);
        if (base < 0 && (e % 2 != 0)) rest = -rest;  // |b|^e = sign * base^e
        rest.canonicalize();
        const std::string bt = base < 0 ? "(" + base.get_str() + ")" : base.get_str();
        const std::string exponent = e == 0 ? "k" : "(k" + std::string(e > 0 ? "+" : "-") + std::to_string(std::labs(e)) + ")";
        return {Scalar(rest), bt + "^" + exponent};
    }
    return {c, base_text(lambda) + "^k"};
}

std::string pcf_entry(const PCanonicalForm& f, std::size_t r, std::size_t c) {
    SumBuilder sum;
    double scale = 0.0;
    for (const auto& t : f.geometric)
        for (const auto& m : t.coeffs) scale = std::max(scale, m(r, c).magnitude());
    for (std::size_t i = 0; i < f.nilpotent.size(); ++i) {
        const Scalar& v = f.nilpotent[i](r, c);
        if (!negligible(v, scale)) sum.add(split_sign(v), "[k=" + std::to_string(i) + "]");
    }
    for (const auto& t : f.geometric) {
        for (std::size_t i = t.coeffs.size(); i-- > 0;) {
            const Scalar& v = t.coeffs[i](r, c);
            if (negligible(v, scale)) continue;
            const auto [rest, power] = fold_power(v, t.eigenvalue);
            sum.add(split_sign(rest), join_factors({power, basis_factor(f.basis, i)}));
        }
    }
    return sum.str();
}

std::string header(const char* what, std::size_t order, const std::string& field, Basis b) {
    return std::string(what) + ": order " + std::to_string(order) + " over " + field + ", " +
           (b == Basis::Lambda ? "Lambda basis C(k,i)" : "Gamma basis k^i") + "\n";
}

/// Polynomial in t with scalar coefficients, descending powers.
std::string t_poly(const std::vector<Complex>& coeffs, double scale) {
    SumBuilder sum;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (std::abs(coeffs[i]) <= 1e-12 * std::max(1.0, scale)) continue;
        const std::string power = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        sum.add(split_sign(Scalar(coeffs[i])), power);
    }
    return sum.str("");
}

std::string exp_factor(Complex lambda) {
    const std::string l = complex_text(lambda);
    if (l == "1") return "e^(t)";
    if (l == "-1") return "e^(-t)";
    return "e^(" + l + "*t)";
}

std::string times_poly(const std::string& poly, const std::string& factor) {
    const bool compound = poly.find(" + ") != std::string::npos || poly.find(" - ") != std::string::npos;
    if (poly == "1") return factor;
    if (poly == "-1") return "-" + factor;
    return (compound ? "(" + poly + ")" : poly) + "*" + factor;
}

/// X^{t0} prod (X - lambda_j)^{t_j} without multiplying out.
std::string minpoly_text(const PCanonicalForm& f) {
    const PCanonicalForm l = pcf_to_lambda(f);
    FactoredPoly fp{l.field, {}, Poly::constant(Scalar::one(l.field))};
    if (!l.nilpotent.empty()) fp.roots.push_back({Scalar::zero(l.field), l.nilpotent.size()});
    for (const auto& t : l.geometric) fp.roots.push_back({t.eigenvalue, t.coeffs.size()});
    return pretty(fp);
}

}  // namespace

std::string pretty(const Scalar& s) {
    switch (s.field().kind()) {
        case Field::Kind::Rational: return s.rational().get_str();
        case Field::Kind::Prime: return std::to_string(s.residue());
        case Field::Kind::Complex: return complex_text(s.complex());
    }
    return s.to_string();
}

std::string pretty(const Poly& p) {
    if (p.is_zero()) return "0";
    SumBuilder sum;
    for (int i = p.degree(); i >= 0; --i) {
        const Scalar& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.field().exact() ? c.is_zero() : c.complex() == Complex(0.0, 0.0)) continue;
        const std::string power = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
        Signed sc = split_sign(c);
        if (i == 0) sc.unit = false;
        sum.add(sc, power);
    }
    return sum.str();
}

std::string pretty(const Matrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (const auto& x : m.data()) {
        cells.push_back(pretty(x));
        width = std::max(width, cells.back().size());
    }
    std::string out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.order(); ++j) {
            const std::string& c = cells[i * m.order() + j];
            out += " " + std::string(width - c.size(), ' ') + c;
        }
        out += " ]\n";
    }
    return out;
}

std::string pretty(const FactoredPoly& f) {
    std::string out;
    for (const auto& r : f.roots) {
        std::string t = r.value.is_zero() ? "X" : "(" + pretty(Poly::linear(r.value)) + ")";
        if (r.multiplicity > 1) t += "^" + std::to_string(r.multiplicity);
        out += (out.empty() ? "" : "*") + t;
    }
    if (f.remainder.degree() > 0) out += (out.empty() ? "" : "*") + std::string("(") + pretty(f.remainder) + ")";
    return out.empty() ? "1" : out;
}

std::string pretty(const PCanonicalForm& f, const Matrix* source) {
    std::string out = header("P-canonical form", f.order, f.field.name(), f.basis);
    out += "minimal polynomial: " + minpoly_text(f) + "\n";
    MatrixNames names(source);
    SumBuilder sum;
    for (std::size_t i = 0; i < f.nilpotent.size(); ++i)
        if (!f.nilpotent[i].is_zero()) sum.add_raw(false, "[k=" + std::to_string(i) + "]*" + names.name(f.nilpotent[i]));
    for (const auto& t : f.geometric) {
        for (std::size_t i = t.coeffs.size(); i-- > 0;) {
            if (t.coeffs[i].field().exact() ? t.coeffs[i].is_zero() : t.coeffs[i].max_norm() == 0.0) continue;
            sum.add_raw(false, join_factors({names.name(t.coeffs[i]), base_text(t.eigenvalue) + "^k",
                                             basis_factor(f.basis, i)}));
        }
    }
    out += "A^k = " + sum.str() + "\n";
    out += names.listing();
    out += "entries:\n";
    for (std::size_t r = 0; r < f.order; ++r)
        for (std::size_t c = 0; c < f.order; ++c) {
            const std::string e = pcf_entry(f, r, c);
            if (e != "0") out += "a[" + std::to_string(r) + "," + std::to_string(c) + "](k) = " + e + "\n";
        }
    return out;
}

std::string pretty(const RealPCF& f, const Matrix* source) {
    std::string out = header("real P-canonical form", f.order, "R", f.basis);
    MatrixNames names(source);
    SumBuilder sum;
    for (std::size_t i = 0; i < f.nilpotent.size(); ++i)
        if (f.nilpotent[i].max_norm() != 0.0) sum.add_raw(false, "[k=" + std::to_string(i) + "]*" + names.name(f.nilpotent[i]));
    for (const auto& t : f.real)
        for (std::size_t i = t.coeffs.size(); i-- > 0;) {
            const std::string l = num(t.eigenvalue);
            sum.add_raw(false, join_factors({names.name(t.coeffs[i]), (t.eigenvalue < 0 ? "(" + l + ")" : l) + "^k",
                                             basis_factor(f.basis, i)}));
        }
    for (const auto& t : f.spiral) {
        const std::string radius = num(t.radius) + "^k";
        const std::string angle = pi_fraction(t.angle);
        for (std::size_t i = t.cos_coeffs.size(); i-- > 0;) {
            if (t.cos_coeffs[i].max_norm() != 0.0)
                sum.add_raw(false, join_factors({names.name(t.cos_coeffs[i]), radius, "cos(k*" + angle + ")",
                                                 basis_factor(f.basis, i)}));
            if (t.sin_coeffs[i].max_norm() != 0.0)
                sum.add_raw(false, join_factors({names.name(t.sin_coeffs[i]), radius, "sin(k*" + angle + ")",
                                                 basis_factor(f.basis, i)}));
        }
    }
    out += "A^k = " + sum.str() + "\n";
    out += names.listing();
    return out;
}

std::string pretty(const ClosedFormExp& e, const Matrix* source) {
    std::string out = "closed-form exponential: order " + std::to_string(e.order) + "\n";
    MatrixNames names(source);
    SumBuilder sum;
    const auto tpow = [](std::size_t i) { return i == 0 ? std::string() : (i == 1 ? std::string("t") : "t^" + std::to_string(i)); };
    for (std::size_t i = 0; i < e.polynomial_part.size(); ++i)
        if (e.polynomial_part[i].max_norm() != 0.0) sum.add_raw(false, join_factors({tpow(i), names.name(e.polynomial_part[i])}));
    for (const auto& t : e.exponential)
        for (std::size_t i = 0; i < t.coeffs.size(); ++i)
            if (t.coeffs[i].max_norm() != 0.0)
                sum.add_raw(false, join_factors({exp_factor(t.lambda), tpow(i), names.name(t.coeffs[i])}));
    out += "e^(tA) = " + sum.str() + "\n";
    out += names.listing();
    out += "entries:\n";
    for (std::size_t r = 0; r < e.order; ++r)
        for (std::size_t c = 0; c < e.order; ++c) {
            double scale = 0.0;
            for (const auto& m : e.polynomial_part) scale = std::max(scale, m(r, c).magnitude());
            for (const auto& t : e.exponential)
                for (const auto& m : t.coeffs) scale = std::max(scale, m(r, c).magnitude());
            SumBuilder entry;
            std::vector<Complex> p;
            for (const auto& m : e.polynomial_part) p.push_back(m(r, c).complex());
            const std::string poly = t_poly(p, scale);
            if (!poly.empty()) entry.add_raw(false, poly);
            for (const auto& t : e.exponential) {
                std::vector<Complex> q;
                for (const auto& m : t.coeffs) q.push_back(m(r, c).complex());
                const std::string tp = t_poly(q, scale);
                if (tp.empty()) continue;
                std::string term = times_poly(tp, exp_factor(t.lambda));
                const bool neg = term.front() == '-';
                entry.add_raw(neg, neg ? term.substr(1) : term);
            }
            if (!entry.empty()) out += "b[" + std::to_string(r) + "," + std::to_string(c) + "](t) = " + entry.str() + "\n";
        }
    return out;
}

std::string pretty(const RealClosedForm& e, const Matrix* source) {
    std::string out = "real closed-form exponential: order " + std::to_string(e.order) + ", f_i(z) = z^i e^z / i!\n";
    MatrixNames names(source);
    SumBuilder sum;
    const auto tpow = [](std::size_t i) { return i == 0 ? std::string() : (i == 1 ? std::string("t") : "t^" + std::to_string(i)); };
    for (std::size_t i = 0; i < e.polynomial_part.size(); ++i)
        if (e.polynomial_part[i].max_norm() != 0.0) sum.add_raw(false, join_factors({tpow(i), names.name(e.polynomial_part[i])}));
    for (const auto& t : e.real)
        for (std::size_t i = 0; i < t.coeffs.size(); ++i)
            if (t.coeffs[i].max_norm() != 0.0)
                sum.add_raw(false, join_factors({exp_factor(t.lambda), tpow(i), names.name(t.coeffs[i])}));
    for (const auto& t : e.pairs) {
        const std::string mu = complex_text(t.mu);
        for (std::size_t i = 0; i < t.cos_coeffs.size(); ++i) {
            const std::string f = "f_" + std::to_string(i) + "(" + mu + "*t)";
            if (t.cos_coeffs[i].max_norm() != 0.0) sum.add_raw(false, names.name(t.cos_coeffs[i]) + "*Re(" + f + ")");
            if (t.sin_coeffs[i].max_norm() != 0.0) sum.add_raw(false, names.name(t.sin_coeffs[i]) + "*Im(" + f + ")");
        }
    }
    out += "e^(tA) = " + sum.str() + "\n";
    out += names.listing();
    return out;
}

std::string pretty(const LinRecSeq& s, std::size_t terms) {
    std::string out = "characteristic polynomial: " + pretty(s.char_poly()) + "\nterms:";
    for (const auto& x : s.terms(terms)) out += " " + pretty(x);
    return out + "\n";
}

}  // namespace pcanon::io
