/*
 * Copyright 2026 The qcpc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclic.hpp"
#include "error.hpp"
#include "field.hpp"
#include "qc_module.hpp"
#include "text_format.hpp"

// Basis documents:
//   {"ell": 2, "m": 17,
//    "field": {"p": 2, "m": 1, "modulus": "X"},
//    "rows": [["X^8+X^7+X^6+X^4+X^2+X+1", "X^14+X^13+X^12+X^11+X^8+1"]]}
// Cyclic code documents:
//   {"m": 3, "field": {...}, "generator": "X+1"}
// Polynomials use the text formats of text_format.hpp.

namespace qcpc {

using Json = nlohmann::json;

namespace detail {

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("bad value for '") + key + "': " + e.what());
    }
}

inline std::vector<std::vector<Poly>> rows_from_json(const Json& j, const Field& f, std::size_t ell) {
    const auto& rows = j.at("rows");
    if (!rows.is_array()) throw Error(ErrorKind::Parse, "'rows' must be an array");
    std::vector<std::vector<Poly>> out;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != ell) throw Error(ErrorKind::Parse, "each row needs exactly ell entries");
        std::vector<Poly> r;
        for (const auto& e : row) {
            if (!e.is_string()) throw Error(ErrorKind::Parse, "row entries must be polynomial strings");
            r.push_back(parse_poly(f, e.get<std::string>()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline Json rows_to_json(const std::vector<std::vector<Poly>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_string(e));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

inline Json field_to_json(const Field& f) {
    return Json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", format_prime_poly(f.modulus())}};
}

inline Field field_from_json(const Json& j) {
    const auto p = detail::get_field<std::uint32_t>(j, "p");
    const int m = j.contains("m") ? detail::get_field<int>(j, "m") : 1;
    if (j.contains("modulus")) return Field(p, m, parse_prime_poly(detail::get_field<std::string>(j, "modulus"), p));
    return Field(p, m);
}

inline Json to_json(const GeneratingMatrix& g) {
    return Json{{"ell", g.ell()}, {"m", g.m()}, {"field", field_to_json(g.field())}, {"rows", detail::rows_to_json(g.rows())}};
}

inline Json to_json(const RgbPotBasis& b) {
    return Json{{"ell", b.ell()}, {"m", b.m()}, {"field", field_to_json(b.field())}, {"rows", detail::rows_to_json(b.entries())}};
}

inline Json to_json(const CyclicCode& c) {
    return Json{{"m", c.length()}, {"field", field_to_json(c.field())}, {"generator", to_string(c.generator())}};
}

inline GeneratingMatrix generating_matrix_from_json(const Json& j) {
    const auto ell = detail::get_field<std::size_t>(j, "ell");
    const auto m = detail::get_field<std::size_t>(j, "m");
    if (!j.contains("field")) throw Error(ErrorKind::Parse, "missing key 'field'");
    const Field f = field_from_json(j.at("field"));
    if (!j.contains("rows")) throw Error(ErrorKind::Parse, "missing key 'rows'");
    return GeneratingMatrix(f, ell, m, detail::rows_from_json(j, f, ell));
}

/// A square document read verbatim as a basis (no reduction).
inline RgbPotBasis basis_from_json(const Json& j) {
    const auto g = generating_matrix_from_json(j);
    if (g.rows().size() != g.ell()) throw Error(ErrorKind::ShapeMismatch, "basis document needs exactly ell rows");
    return RgbPotBasis(g.field(), g.m(), g.rows());
}

inline CyclicCode cyclic_code_from_json(const Json& j) {
    const auto m = detail::get_field<std::size_t>(j, "m");
    if (!j.contains("field")) throw Error(ErrorKind::Parse, "missing key 'field'");
    const Field f = field_from_json(j.at("field"));
    return CyclicCode(m, parse_poly(f, detail::get_field<std::string>(j, "generator")));
}

inline Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
inline std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

} // namespace qcpc
