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

#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "qc_module.hpp"

namespace qcpc {

/// Shape of the product A (x) B, with A an ell_A-quasi-cyclic code of
/// co-index m_A and B cyclic of length m_B, plus the Bezout pair
/// a*ell_A*m_A + b*m_B = 1.
struct ProductParams {
    std::int64_t ell_a = 1;
    std::int64_t m_a = 1;
    std::int64_t m_b = 1;
    std::int64_t a = 1;
    std::int64_t b = 0;

    std::int64_t row_length() const noexcept { return ell_a * m_a; }
    std::int64_t co_index() const noexcept { return m_a * m_b; }
    std::int64_t length() const noexcept { return ell_a * m_a * m_b; }

    void validate() const {
        if (ell_a < 1 || m_a < 1 || m_b < 1) throw Error(ErrorKind::ParamMismatch, "product dimensions must be positive");
        if (std::gcd(row_length(), m_b) != 1) throw Error(ErrorKind::NotCoprime, "gcd(ell_A m_A, m_B) != 1");
        if (static_cast<__int128>(a) * row_length() + static_cast<__int128>(b) * m_b != 1)
            throw Error(ErrorKind::ParamMismatch, "a ell_A m_A + b m_B != 1");
    }

    friend bool operator==(const ProductParams&, const ProductParams&) = default;
};

/// Canonical pair: a is the least positive inverse of ell_A m_A modulo m_B
/// (a = 1 when m_B = 1) and b follows.
inline ProductParams bezout_pair(std::int64_t ell_a, std::int64_t m_a, std::int64_t m_b) {
    if (ell_a < 1 || m_a < 1 || m_b < 1) throw Error(ErrorKind::ParamMismatch, "product dimensions must be positive");
    const std::int64_t n = ell_a * m_a;
    if (std::gcd(n, m_b) != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(m_b) + ") != 1");
    // Extended Euclid on (n mod m_b, m_b).
    std::int64_t r0 = m_b, r1 = residue(n, m_b), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    std::int64_t a = m_b == 1 ? 1 : residue(s0, m_b);
    if (a == 0) a = m_b;
    ProductParams p{ell_a, m_a, m_b, a, (1 - a * n) / m_b};
    p.validate();
    return p;
}

/// f(i, j) = i a ell_A m_A ell_A + j b m_B  mod ell_A m_A m_B.
inline std::int64_t map_f(std::int64_t i, std::int64_t j, const ProductParams& p) {
    if (i < 0 || i >= p.m_b || j < 0 || j >= p.row_length())
        throw Error(ErrorKind::IndexOutOfRange, "(i, j) outside [m_B) x [ell_A m_A)");
    const __int128 n = p.length();
    const __int128 v = static_cast<__int128>(i) * p.a % n * p.row_length() % n * p.ell_a + static_cast<__int128>(j) * p.b % n * p.m_b;
    return static_cast<std::int64_t>(((v % n) + n) % n);
}

/// g(i, j) = i a ell_A m_A + j b m_B  mod m_A m_B.
inline std::int64_t map_g(std::int64_t i, std::int64_t j, const ProductParams& p) {
    if (i < 0 || i >= p.m_b || j < 0 || j >= p.m_a)
        throw Error(ErrorKind::IndexOutOfRange, "(i, j) outside [m_B) x [m_A)");
    const __int128 n = p.co_index();
    const __int128 v = static_cast<__int128>(i) * p.a % n * p.row_length() + static_cast<__int128>(j) * p.b % n * p.m_b;
    return static_cast<std::int64_t>(((v % n) + n) % n);
}

/// m_B x (ell_A m_A) array: row i is a codeword of A, column j one of B.
class CodewordMatrix {
public:
    CodewordMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Field::Elem& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
    void set(std::size_t i, std::size_t j, Field::Elem v) { data_.at(i * cols_ + j) = std::move(v); }

    friend bool operator==(const CodewordMatrix& a, const CodewordMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Field::Elem> data_;
};

namespace detail {

inline void check_shape(const CodewordMatrix& M, const ProductParams& p) {
    p.validate();
    if (static_cast<std::int64_t>(M.rows()) != p.m_b || static_cast<std::int64_t>(M.cols()) != p.row_length())
        throw Error(ErrorKind::DimensionMismatch, "codeword matrix shape differs from m_B x ell_A m_A");
}

} // namespace detail

/// c(X) = sum_{i,j} m_{i,j} X^{f(i,j)}.
inline Poly matrix_to_univariate(const CodewordMatrix& M, const ProductParams& p) {
    detail::check_shape(M, p);
    const auto& f = M.field();
    std::vector<Field::Elem> out(static_cast<std::size_t>(p.length()), f.zero());
    for (std::int64_t i = 0; i < p.m_b; ++i)
        for (std::int64_t j = 0; j < p.row_length(); ++j)
            out[static_cast<std::size_t>(map_f(i, j, p))] = M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return Poly(f, std::move(out));
}

/// Inverse of matrix_to_univariate.
inline CodewordMatrix univariate_to_matrix(const Poly& c, const ProductParams& p) {
    p.validate();
    if (c.degree() >= p.length()) throw Error(ErrorKind::DegreeOverflow, "degree >= ell_A m_A m_B");
    CodewordMatrix M(c.field(), static_cast<std::size_t>(p.m_b), static_cast<std::size_t>(p.row_length()));
    for (std::int64_t i = 0; i < p.m_b; ++i)
        for (std::int64_t j = 0; j < p.row_length(); ++j)
            M.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), c.coeff(static_cast<std::size_t>(map_f(i, j, p))));
    return M;
}

/// The ell_A components of the serialized codeword, computed per component
/// through g(i, j) and the twist X^{-h a m_A}.
inline PolyVector matrix_to_components(const CodewordMatrix& M, const ProductParams& p) {
    detail::check_shape(M, p);
    const auto& f = M.field();
    const std::int64_t n = p.co_index();
    std::vector<Poly> comps;
    for (std::int64_t h = 0; h < p.ell_a; ++h) {
        std::vector<Field::Elem> acc(static_cast<std::size_t>(n), f.zero());
        const std::int64_t twist = residue(-(h * residue(p.a * p.m_a, n)), n);
        for (std::int64_t i = 0; i < p.m_b; ++i) {
            for (std::int64_t j = 0; j < p.m_a; ++j) {
                const auto& v = M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j * p.ell_a + h));
                if (Field::is_zero(v)) continue;
                const auto e = static_cast<std::size_t>((map_g(i, j, p) + twist) % n);
                acc[e] = f.add(acc[e], v);
            }
        }
        comps.emplace_back(f, std::move(acc));
    }
    return PolyVector(std::move(comps), static_cast<std::size_t>(n));
}

inline CodewordMatrix components_to_matrix(const PolyVector& c, const ProductParams& p) {
    if (static_cast<std::int64_t>(c.size()) != p.ell_a || static_cast<std::int64_t>(c.m()) != p.co_index())
        throw Error(ErrorKind::DimensionMismatch, "vector shape differs from ell_A x m_A m_B");
    return univariate_to_matrix(vector_to_univariate(c), p);
}

/// Coordinates in which a product basis is expressed. `codeword` components
/// are the c_h(X) of the serialized product codeword; `shifted` components are
/// c_h(X) X^{h a m_A}, i.e. the diag(1, X^{-a m_A}, ...) factor left out.
enum class Frame { codeword, shifted };

namespace detail {

inline void check_product_inputs(const Field& fa, std::size_t ell, std::size_t m, const CyclicCode& B,
                                 const ProductParams& p) {
    p.validate();
    if (static_cast<std::int64_t>(ell) != p.ell_a || static_cast<std::int64_t>(m) != p.m_a)
        throw Error(ErrorKind::ParamMismatch, "row code shape differs from (ell_A, m_A)");
    if (static_cast<std::int64_t>(B.length()) != p.m_b) throw Error(ErrorKind::ParamMismatch, "column code length differs from m_B");
    if (!(fa == B.field())) throw Error(ErrorKind::FieldMismatch, "row and column codes over different fields");
}

inline std::int64_t twist_exponent(std::int64_t h, const ProductParams& p, Frame frame) {
    if (frame == Frame::shifted) return 0;
    return residue(-(h * residue(p.a * p.m_a, p.co_index())), p.co_index());
}

} // namespace detail

/// Generating rows of A (x) B as an ell_A-quasi-cyclic code of co-index
/// m_A m_B: entry (i, j) = g^B(X^{a ell_A m_A}) g^A_{i,j}(X^{b m_B}) X^{-j a m_A},
/// everything reduced mod X^{m_A m_B} - 1. The (X^{m_A m_B} - 1) I rows stay
/// implicit.
inline GeneratingMatrix unreduced_product_basis(const RgbPotBasis& A, const CyclicCode& B, const ProductParams& p,
                                                Frame frame = Frame::codeword) {
    detail::check_product_inputs(A.field(), A.ell(), A.m(), B, p);
    const auto& f = A.field();
    const std::int64_t n = p.co_index();
    const auto un = static_cast<std::size_t>(n);
    const Poly gb = modular_substitute(B.generator(), p.a * p.row_length(), n);
    GeneratingMatrix out(f, A.ell(), un);
    for (std::size_t i = 0; i < A.ell(); ++i) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < A.ell(); ++j) {
            const Poly ga = modular_substitute(A.entry(i, j), p.b * p.m_b, n);
            const auto tw = static_cast<std::size_t>(detail::twist_exponent(static_cast<std::int64_t>(j), p, frame));
            row.push_back((gb * ga).mod_xn_minus_one(un).shifted(tw).mod_xn_minus_one(un));
        }
        out.add_row(std::move(row));
    }
    return out;
}

/// 1-level code with basis row (g, g f_1, ..., g f_{ell-1}) mod X^m - 1,
/// g | X^m - 1, remaining diagonal entries X^m - 1.
class OneLevelCode {
public:
    OneLevelCode(Poly g, std::vector<Poly> multipliers, std::size_t m)
        : g_(g.monic()), multipliers_(std::move(multipliers)), m_(m) {
        if (g_.is_zero() || !divides(g_, Poly::xn_minus_one(g_.field(), m_)))
            throw Error(ErrorKind::NotADivisor, "g does not divide X^m - 1");
        for (auto& f : multipliers_) {
            if (!(f.field() == g_.field())) throw Error(ErrorKind::FieldMismatch, "multiplier over a different field");
            f = f.mod_xn_minus_one(m_);
        }
    }

    const Field& field() const noexcept { return g_.field(); }
    const Poly& g() const noexcept { return g_; }
    const std::vector<Poly>& multipliers() const noexcept { return multipliers_; }
    std::size_t ell() const noexcept { return multipliers_.size() + 1; }
    std::size_t m() const noexcept { return m_; }

    /// Entry g_{0,j} of the basis row.
    Poly entry(std::size_t j) const {
        if (j == 0) return g_;
        return (g_ * multipliers_.at(j - 1)).mod_xn_minus_one(m_);
    }

    RgbPotBasis basis() const {
        const auto& f = field();
        const std::size_t ell = this->ell();
        std::vector<std::vector<Poly>> rows(ell, std::vector<Poly>(ell, Poly(f)));
        for (std::size_t j = 0; j < ell; ++j) rows[0][j] = entry(j);
        for (std::size_t i = 1; i < ell; ++i) rows[i][i] = Poly::xn_minus_one(f, m_);
        return RgbPotBasis(f, m_, std::move(rows));
    }

private:
    Poly g_;
    std::vector<Poly> multipliers_;
    std::size_t m_;
};

/// Reads (g, f_1, ..., f_{ell-1}) off a reduced basis of level 1.
inline OneLevelCode one_level_from_basis(const RgbPotBasis& b) {
    std::size_t r = 0;
    try {
        r = level(b);
    } catch (const Error&) {
        throw Error(ErrorKind::NotOneLevel, "diagonal pattern is not a prefix");
    }
    if (r != 1) throw Error(ErrorKind::NotOneLevel, "code has level " + std::to_string(r));
    const Poly& g = b.diagonal(0);
    std::vector<Poly> fs;
    for (std::size_t j = 1; j < b.ell(); ++j) {
        auto [q, rem] = divmod(b.entry(0, j), g);
        if (!rem.is_zero()) throw Error(ErrorKind::NotOneLevel, "g_{0,j} is not a multiple of g_{0,0}");
        fs.push_back(std::move(q));
    }
    return OneLevelCode(g, std::move(fs), b.m());
}

/// Closed-form reduced basis of A (x) B for 1-level A:
///   g = gcd(X^{m_A m_B} - 1, g^A(X^{b m_B}) g^B(X^{a ell_A m_A})),
///   row = (g, g f_1(X^{b m_B}) X^{-a m_A}, ..., g f_{ell-1}(X^{b m_B}) X^{-(ell-1) a m_A}).
inline OneLevelCode one_level_product_rgb(const OneLevelCode& A, const CyclicCode& B, const ProductParams& p,
                                          Frame frame = Frame::codeword) {
    detail::check_product_inputs(A.field(), A.ell(), A.m(), B, p);
    const auto& f = A.field();
    const std::int64_t n = p.co_index();
    const auto un = static_cast<std::size_t>(n);
    if (A.g() == Poly::xn_minus_one(f, A.m())) throw Error(ErrorKind::NotOneLevel, "row code is the zero code");
    const std::int64_t y = p.b * p.m_b;
    const Poly xn1 = Poly::xn_minus_one(f, un);
    const Poly ga = modular_substitute(A.g(), y, n);
    const Poly gb = modular_substitute(B.generator(), p.a * p.row_length(), n);
    const Poly g = gcd(xn1, (ga * gb).mod_xn_minus_one(un));
    std::vector<Poly> fs;
    for (std::size_t j = 1; j < A.ell(); ++j) {
        const auto tw = static_cast<std::size_t>(detail::twist_exponent(static_cast<std::int64_t>(j), p, frame));
        fs.push_back(modular_substitute(A.multipliers()[j - 1], y, n).shifted(tw).mod_xn_minus_one(un));
    }
    return OneLevelCode(g, std::move(fs), un);
}

/// Reduced basis of A (x) B via the unreduced generating rows.
inline RgbPotBasis product_rgb(const RgbPotBasis& A, const CyclicCode& B, const ProductParams& p,
                               Frame frame = Frame::codeword) {
    return rgb_pot_reduce(unreduced_product_basis(A, B, p, frame));
}

} // namespace qcpc
