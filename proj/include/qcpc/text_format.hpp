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

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"

// Polynomial text formats:
//   sparse  "X^8+X^4+X^3+X^2+1", "2*X^3+X-1", "3X^2"
//   dense   "1,0,1,1,1,0,0,0,1"  (ascending coefficients)
// A coefficient is the index of a field element, i.e. the integer whose
// base-p digits are the element's coefficient vector; over GF(p) that is the
// residue itself. The printer always emits the sparse form.

namespace qcpc {
namespace detail {

struct Term {
    bool negative = false;
    std::uint64_t coeff = 1;
    std::size_t exponent = 0;
};

inline std::uint64_t parse_uint(std::string_view s, std::size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw Error(ErrorKind::Parse, "expected a number at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        const auto digit = static_cast<std::uint64_t>(s[pos] - '0');
        if (v > (UINT64_MAX - digit) / 10) throw Error(ErrorKind::Parse, "number too large");
        v = v * 10 + digit;
        ++pos;
    }
    return v;
}

inline std::vector<Term> parse_terms(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial");
    if (s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);

    std::vector<Term> terms;
    const bool sparse = s.find_first_of("Xx^") != std::string::npos;
    if (!sparse) {
        std::size_t pos = 0;
        std::size_t exponent = 0;
        while (true) {
            Term t;
            t.coeff = parse_uint(s, pos);
            t.exponent = exponent++;
            terms.push_back(t);
            if (pos == s.size()) break;
            if (s[pos] != ',') throw Error(ErrorKind::Parse, "expected ',' in dense polynomial '" + s + "'");
            ++pos;
        }
        return terms;
    }

    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        Term t;
        if (s[pos] == '+' || s[pos] == '-') {
            t.negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw Error(ErrorKind::Parse, "expected '+' or '-' in '" + s + "'");
        }
        first = false;
        bool has_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            t.coeff = parse_uint(s, pos);
            has_coeff = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos < s.size() && (s[pos] == 'X' || s[pos] == 'x')) {
            ++pos;
            t.exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                t.exponent = static_cast<std::size_t>(parse_uint(s, pos));
            }
        } else if (!has_coeff) {
            throw Error(ErrorKind::Parse, "malformed term in '" + s + "'");
        }
        terms.push_back(t);
    }
    return terms;
}

inline std::string format_terms(const std::map<std::size_t, std::string, std::greater<>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += c;
            continue;
        }
        if (c != "1") out += c + "*";
        out += 'X';
        if (k > 1) out += '^' + std::to_string(k);
    }
    return out;
}

} // namespace detail

/// Parses a polynomial over GF(p) into ascending, trimmed coefficients.
inline std::vector<std::uint32_t> parse_prime_poly(std::string_view text, std::uint32_t p) {
    std::vector<std::uint32_t> out;
    for (const auto& t : detail::parse_terms(text)) {
        if (t.exponent >= out.size()) out.resize(t.exponent + 1, 0);
        const auto c = static_cast<std::uint32_t>(t.coeff % p);
        out[t.exponent] = (out[t.exponent] + (t.negative ? (p - c) % p : c)) % p;
    }
    detail::gfp::trim(out);
    return out;
}

inline std::string format_prime_poly(const std::vector<std::uint32_t>& coeffs) {
    std::map<std::size_t, std::string, std::greater<>> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) terms[k] = std::to_string(coeffs[k]);
    return detail::format_terms(terms);
}

inline Poly parse_poly(const Field& field, std::string_view text) {
    std::vector<Field::Elem> coeffs;
    for (const auto& t : detail::parse_terms(text)) {
        if (t.coeff >= field.order_wide())
            throw Error(ErrorKind::Parse, "coefficient " + std::to_string(t.coeff) + " is not a field element index");
        if (t.exponent >= coeffs.size()) coeffs.resize(t.exponent + 1, field.zero());
        auto c = field.from_index(t.coeff);
        if (t.negative) c = field.neg(c);
        coeffs[t.exponent] = field.add(coeffs[t.exponent], c);
    }
    return Poly(field, std::move(coeffs));
}

inline std::string to_string(const Poly& poly) {
    std::map<std::size_t, std::string, std::greater<>> terms;
    const auto& c = poly.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!Field::is_zero(c[k])) terms[k] = poly.field().to_string(c[k]);
    return detail::format_terms(terms);
}

} // namespace qcpc
