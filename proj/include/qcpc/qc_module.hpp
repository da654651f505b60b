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
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace qcpc {

/// A codeword (c_0(X), ..., c_{ell-1}(X)) of an ell-quasi-cyclic code of
/// co-index m; every component has degree < m.
class PolyVector {
public:
    PolyVector(std::vector<Poly> components, std::size_t m) : components_(std::move(components)), m_(m) {
        if (components_.empty()) throw Error(ErrorKind::ShapeMismatch, "vector needs at least one component");
        for (const auto& c : components_) {
            if (!(c.field() == components_.front().field()))
                throw Error(ErrorKind::FieldMismatch, "components over different fields");
            if (c.degree() >= static_cast<int>(m_)) throw Error(ErrorKind::DegreeOverflow, "component degree >= m");
        }
    }

    static PolyVector zero(const Field& f, std::size_t ell, std::size_t m) {
        return PolyVector(std::vector<Poly>(ell, Poly(f)), m);
    }

    const Field& field() const noexcept { return components_.front().field(); }
    std::size_t size() const noexcept { return components_.size(); }
    std::size_t m() const noexcept { return m_; }
    const Poly& operator[](std::size_t i) const { return components_.at(i); }
    const std::vector<Poly>& components() const noexcept { return components_; }

    bool is_zero() const {
        for (const auto& c : components_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyVector& a, const PolyVector& b) {
        return a.m_ == b.m_ && a.components_ == b.components_;
    }

private:
    std::vector<Poly> components_;
    std::size_t m_;
};

/// Explicit rows a_i of a generating set of a submodule of F_q[X]^ell. The
/// rows (X^m - 1) e_j are always implied and never stored.
class GeneratingMatrix {
public:
    GeneratingMatrix(Field field, std::size_t ell, std::size_t m, std::vector<std::vector<Poly>> rows = {})
        : field_(std::move(field)), ell_(ell), m_(m), rows_(std::move(rows)) {
        if (ell_ == 0 || m_ == 0) throw Error(ErrorKind::ShapeMismatch, "ell and m must be positive");
        for (const auto& row : rows_) {
            if (row.size() != ell_) throw Error(ErrorKind::ShapeMismatch, "row length differs from ell");
            for (const auto& e : row)
                if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "entry over a different field");
        }
    }

    const Field& field() const noexcept { return field_; }
    std::size_t ell() const noexcept { return ell_; }
    std::size_t m() const noexcept { return m_; }
    const std::vector<std::vector<Poly>>& rows() const noexcept { return rows_; }

    void add_row(std::vector<Poly> row) {
        if (row.size() != ell_) throw Error(ErrorKind::ShapeMismatch, "row length differs from ell");
        rows_.push_back(std::move(row));
    }

private:
    Field field_;
    std::size_t ell_;
    std::size_t m_;
    std::vector<std::vector<Poly>> rows_;
};

/// Upper-triangular ell x ell basis in RGB/POT form (position 0 most
/// significant). Construction only checks the shape; use is_rgb_pot to
/// validate the reduction conditions.
class RgbPotBasis {
public:
    RgbPotBasis(Field field, std::size_t m, std::vector<std::vector<Poly>> entries)
        : field_(std::move(field)), m_(m), entries_(std::move(entries)) {
        const std::size_t ell = entries_.size();
        if (ell == 0 || m_ == 0) throw Error(ErrorKind::ShapeMismatch, "empty basis");
        for (const auto& row : entries_) {
            if (row.size() != ell) throw Error(ErrorKind::ShapeMismatch, "basis must be square");
            for (const auto& e : row)
                if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "entry over a different field");
        }
    }

    const Field& field() const noexcept { return field_; }
    std::size_t ell() const noexcept { return entries_.size(); }
    std::size_t m() const noexcept { return m_; }
    const Poly& entry(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
    const Poly& diagonal(std::size_t i) const { return entry(i, i); }
    const std::vector<Poly>& row(std::size_t i) const { return entries_.at(i); }
    const std::vector<std::vector<Poly>>& entries() const noexcept { return entries_; }

    GeneratingMatrix to_generating_matrix() const { return GeneratingMatrix(field_, ell(), m_, entries_); }

    friend bool operator==(const RgbPotBasis& a, const RgbPotBasis& b) {
        return a.field_ == b.field_ && a.m_ == b.m_ && a.entries_ == b.entries_;
    }

private:
    Field field_;
    std::size_t m_;
    std::vector<std::vector<Poly>> entries_;
};

namespace detail {

using Row = std::vector<Poly>;

inline Row combine(const Poly& a, const Row& x, const Poly& b, const Row& y) {
    Row out;
    out.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out.push_back(a * x[j] + b * y[j]);
    return out;
}

inline void reduce_tail(Row& r, std::size_t from, std::size_t m) {
    for (std::size_t j = from; j < r.size(); ++j) r[j] = r[j].mod_xn_minus_one(m);
}

inline bool row_is_zero(const Row& r) {
    for (const auto& e : r)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace detail

/// Reduced Gröbner basis in POT order of the module generated by the rows of
/// gen together with (X^m - 1) e_j for every j.
///
/// Column by column, the implicit row (X^m - 1) e_c is merged with every row
/// that is nonzero at c through unimodular 2x2 steps built from the extended
/// gcd; the complementary row of each step (zero at c) moves on to the next
/// column. Entries right of the active column are kept reduced mod X^m - 1,
/// which only subtracts multiples of implicit rows not yet consumed.
/// Afterwards diagonals are made monic and off-diagonal entries reduced
/// modulo the diagonal below them.
inline RgbPotBasis rgb_pot_reduce(const GeneratingMatrix& gen) {
    using detail::Row;
    const auto& f = gen.field();
    const std::size_t ell = gen.ell();
    const std::size_t m = gen.m();
    const Poly xm1 = Poly::xn_minus_one(f, m);

    std::vector<Row> active;
    for (auto row : gen.rows()) {
        detail::reduce_tail(row, 0, m);
        if (!detail::row_is_zero(row)) active.push_back(std::move(row));
    }

    std::vector<Row> pivots;
    for (std::size_t c = 0; c < ell; ++c) {
        Row pivot(ell, Poly(f));
        pivot[c] = xm1;
        std::vector<Row> next;
        for (auto& row : active) {
            if (row[c].is_zero()) {
                next.push_back(std::move(row));
                continue;
            }
            const auto [g, s, t] = egcd(pivot[c], row[c]);
            const Poly pivot_co = pivot[c] / g;
            const Poly row_co = row[c] / g;
            Row merged = detail::combine(s, pivot, t, row);
            Row rest = detail::combine(row_co, pivot, -pivot_co, row);
            merged[c] = g;
            rest[c] = Poly(f);
            detail::reduce_tail(merged, c + 1, m);
            detail::reduce_tail(rest, c + 1, m);
            pivot = std::move(merged);
            if (!detail::row_is_zero(rest)) next.push_back(std::move(rest));
        }
        pivots.push_back(std::move(pivot));
        active = std::move(next);
    }

    for (std::size_t i = 0; i < ell; ++i) {
        auto& row = pivots[i];
        const auto inv = f.inv(row[i].leading());
        for (auto& e : row) e = e.scaled(inv);
        if (row[i] == xm1)
            for (std::size_t j = i + 1; j < ell; ++j) row[j] = Poly(f);
    }
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = i + 1; j < ell; ++j) {
            auto [q, r] = divmod(pivots[i][j], pivots[j][j]);
            if (q.is_zero()) continue;
            for (std::size_t k = j; k < ell; ++k) pivots[i][k] -= q * pivots[j][k];
            pivots[i][j] = std::move(r);
        }
    }
    return RgbPotBasis(f, m, std::move(pivots));
}

enum class RgbCondition {
    LowerTriangleZero = 1,    ///< g_{i,j} = 0 for j < i
    OffDiagonalDegree = 2,    ///< deg g_{j,i} < deg g_{i,i} for j < i
    DiagonalDivides = 3,      ///< g_{i,i} | X^m - 1
    FullDiagonalRowZero = 4,  ///< g_{i,i} = X^m - 1 implies g_{i,j} = 0 for j > i
    DiagonalMonic = 5,
};

struct RgbViolation {
    RgbCondition condition;
    std::size_t row;
    std::size_t col;
};

struct RgbReport {
    bool ok = true;
    std::vector<RgbViolation> violations;
};

inline RgbReport is_rgb_pot(const RgbPotBasis& b) {
    RgbReport report;
    const auto& f = b.field();
    const std::size_t ell = b.ell();
    const Poly xm1 = Poly::xn_minus_one(f, b.m());
    auto flag = [&](RgbCondition c, std::size_t i, std::size_t j) {
        report.ok = false;
        report.violations.push_back({c, i, j});
    };
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (!b.entry(i, j).is_zero()) flag(RgbCondition::LowerTriangleZero, i, j);
        const Poly& d = b.diagonal(i);
        for (std::size_t j = 0; j < i; ++j)
            if (!d.is_zero() && b.entry(j, i).degree() >= d.degree()) flag(RgbCondition::OffDiagonalDegree, j, i);
        if (d.is_zero() || !divides(d, xm1)) flag(RgbCondition::DiagonalDivides, i, i);
        if (d == xm1)
            for (std::size_t j = i + 1; j < ell; ++j)
                if (!b.entry(i, j).is_zero()) flag(RgbCondition::FullDiagonalRowZero, i, j);
        if (!d.is_monic()) flag(RgbCondition::DiagonalMonic, i, i);
    }
    return report;
}

/// k = ell*m - sum deg g_{i,i}.
inline std::size_t dimension(const RgbPotBasis& b) {
    long long k = static_cast<long long>(b.ell() * b.m());
    for (std::size_t i = 0; i < b.ell(); ++i) {
        if (b.diagonal(i).is_zero()) throw Error(ErrorKind::InvalidArgument, "zero diagonal entry");
        k -= b.diagonal(i).degree();
    }
    return static_cast<std::size_t>(k);
}

/// Number of diagonal entries different from X^m - 1; these must form a
/// prefix of the diagonal.
inline std::size_t level(const RgbPotBasis& b) {
    const Poly xm1 = Poly::xn_minus_one(b.field(), b.m());
    std::size_t r = 0;
    while (r < b.ell() && !(b.diagonal(r) == xm1)) ++r;
    for (std::size_t i = r; i < b.ell(); ++i)
        if (!(b.diagonal(i) == xm1))
            throw Error(ErrorKind::NonPrefixPattern, "diagonal entry " + std::to_string(i) + " follows an X^m - 1 entry");
    return r;
}

/// c(X) = i(X) G(X) with each component reduced mod X^m - 1.
inline PolyVector encode(const RgbPotBasis& b, const PolyVector& message) {
    const std::size_t ell = b.ell(), m = b.m();
    if (message.size() != ell) throw Error(ErrorKind::ShapeMismatch, "message length differs from ell");
    std::vector<Poly> c(ell, Poly(b.field()));
    for (std::size_t j = 0; j < ell; ++j) {
        const Poly& mj = message[j];
        if (mj.is_zero()) continue;
        if (mj.degree() >= static_cast<int>(m) - b.diagonal(j).degree())
            throw Error(ErrorKind::MessageDegreeTooLarge, "message component " + std::to_string(j) + " too long");
        for (std::size_t h = j; h < ell; ++h) c[h] += mj * b.entry(j, h);
    }
    for (auto& e : c) e = e.mod_xn_minus_one(m);
    return PolyVector(std::move(c), m);
}

/// Sequential POT normal form: v lies in the code iff dividing component by
/// component through the diagonal leaves nothing behind.
inline bool contains(const RgbPotBasis& b, const PolyVector& v) {
    if (v.size() != b.ell()) throw Error(ErrorKind::ShapeMismatch, "vector length differs from ell");
    std::vector<Poly> r = v.components();
    for (std::size_t i = 0; i < b.ell(); ++i) {
        auto [q, rem] = divmod(r[i], b.diagonal(i));
        if (!rem.is_zero()) return false;
        if (q.is_zero()) continue;
        for (std::size_t h = i; h < b.ell(); ++h) r[h] -= q * b.entry(i, h);
    }
    return true;
}

/// sum_i c_i(X^ell) X^i.
inline Poly vector_to_univariate(const PolyVector& c) {
    const std::size_t ell = c.size(), m = c.m();
    const auto& f = c.field();
    std::vector<Field::Elem> out(ell * m, f.zero());
    for (std::size_t i = 0; i < ell; ++i) {
        const auto& coeffs = c[i].coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) out[k * ell + i] = coeffs[k];
    }
    return Poly(f, std::move(out));
}

/// Inverse of vector_to_univariate: coefficient y lands in component y mod ell
/// at position (y - h)/ell.
inline PolyVector univariate_to_vector(const Poly& c, std::size_t ell, std::size_t m) {
    if (c.degree() >= static_cast<int>(ell * m)) throw Error(ErrorKind::DegreeOverflow, "degree >= ell*m");
    const auto& f = c.field();
    std::vector<std::vector<Field::Elem>> comps(ell, std::vector<Field::Elem>(m, f.zero()));
    const auto& coeffs = c.coeffs();
    for (std::size_t y = 0; y < coeffs.size(); ++y) {
        const std::size_t h = y % ell;
        const auto k = split_residue(static_cast<std::int64_t>(y - h), static_cast<std::int64_t>(ell),
                                     static_cast<std::int64_t>(m));
        comps[h][static_cast<std::size_t>(k)] = coeffs[y];
    }
    std::vector<Poly> out;
    out.reserve(ell);
    for (auto& v : comps) out.emplace_back(f, std::move(v));
    return PolyVector(std::move(out), m);
}

/// Cyclic shift of the serialized codeword by ell positions, X^ell c(X) mod
/// X^{ell m} - 1; on components this is c_i(X) -> X c_i(X) mod X^m - 1.
inline PolyVector qc_shift(const PolyVector& c) {
    const std::size_t n = c.size() * c.m();
    return univariate_to_vector(vector_to_univariate(c).shifted(c.size()).mod_xn_minus_one(n), c.size(), c.m());
}

class QuasiCyclicCode {
public:
    explicit QuasiCyclicCode(RgbPotBasis basis) : basis_(std::move(basis)), k_(qcpc::dimension(basis_)) {}

    static QuasiCyclicCode from_generators(const GeneratingMatrix& gen) { return QuasiCyclicCode(rgb_pot_reduce(gen)); }

    const RgbPotBasis& basis() const noexcept { return basis_; }
    std::size_t ell() const noexcept { return basis_.ell(); }
    std::size_t m() const noexcept { return basis_.m(); }
    std::size_t length() const noexcept { return basis_.ell() * basis_.m(); }
    std::size_t dimension() const noexcept { return k_; }
    std::size_t level() const { return qcpc::level(basis_); }
    bool contains(const PolyVector& v) const { return qcpc::contains(basis_, v); }

private:
    RgbPotBasis basis_;
    std::size_t k_;
};

} // namespace qcpc
