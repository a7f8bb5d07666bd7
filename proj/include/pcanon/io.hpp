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

#ifndef PCANON_IO_HPP
#define PCANON_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pcanon/lrs.hpp"
#include "pcanon/matfun.hpp"

namespace pcanon::io {

using json = nlohmann::json;

// JSON encoding. Rationals are "num/den" strings (or "num"), prime-field
// elements integers, complex numbers [re, im] pairs. Every object carries a
// "type" tag; round trips are byte-identical.

json to_json(const Scalar& s);
json to_json(const Poly& p);
json to_json(const Matrix& m);
json to_json(const FactoredPoly& f);
json to_json(const SpectralData& sd, const Field& field);
json to_json(const PCanonicalForm& f);
json to_json(const RealPCF& f);
json to_json(const ClosedFormExp& e);
json to_json(const RealClosedForm& e);
json to_json(const LinRecSeq& s);

Field field_from_json(const json& obj);
Scalar scalar_from_json(const json& j, const Field& f);
Poly poly_from_json(const json& j);
Matrix matrix_from_json(const json& j);
FactoredPoly factored_from_json(const json& j);
SpectralData spectral_from_json(const json& j);
PCanonicalForm pcf_from_json(const json& j);
RealPCF realpcf_from_json(const json& j);
ClosedFormExp expm_from_json(const json& j);
RealClosedForm expm_real_from_json(const json& j);
LinRecSeq lrs_from_json(const json& j);

/// Canonical text form of a JSON value.
std::string dump(const json& j);

/// Parsed CLI input: a field descriptor plus one payload.
struct InputDocument {
    Field field = Field::rationals();
    std::optional<Matrix> matrix;
    std::vector<Matrix> matrices;
    std::optional<Poly> poly;
    std::vector<Poly> polys;
    std::optional<LinRecSeq> sequence;
    json options = json::object();
};

/// Replaces U+2212 MINUS SIGN by '-' so pasted formulas parse.
std::string normalize_minus(std::string text);

/// Parses raw text into JSON, raising ParseError on malformed input.
json parse_json(const std::string& text);

/// Accepts {"field": ..., "matrix"|"matrices"|"poly"|"polys"|"sequence": ...,
/// "options": {...}} or a bare array (matrix if nested, polynomial if flat).
/// Field descriptors: "Q", "C", "Fp" with "p", or the shorthand "F5".
/// Malformed documents raise ParseError.
InputDocument parse_input(const std::string& text);

/// Ascending coefficient array over the field.
Poly parse_poly_array(const std::string& text, const Field& f);

// Plain-text rendering: ASCII only, C(k,i) for binomials, carets for powers.

std::string pretty(const Scalar& s);
std::string pretty(const Poly& p);
std::string pretty(const Matrix& m);
std::string pretty(const FactoredPoly& f);
/// `source` lets the renderer name coefficient matrices equal to A.
std::string pretty(const PCanonicalForm& f, const Matrix* source = nullptr);
std::string pretty(const RealPCF& f, const Matrix* source = nullptr);
std::string pretty(const ClosedFormExp& e, const Matrix* source = nullptr);
std::string pretty(const RealClosedForm& e, const Matrix* source = nullptr);
std::string pretty(const LinRecSeq& s, std::size_t terms);

}  // namespace pcanon::io

#endif
