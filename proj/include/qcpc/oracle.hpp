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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "product.hpp"
#include "qc_module.hpp"

namespace qcpc {

/// Field arithmetic on element indices, tabulated for small fields.
class SymbolTables {
public:
    using Symbol = std::uint32_t;

    explicit SymbolTables(const Field& f) : field_(f) {
        if (f.order_wide() > 256) throw Error(ErrorKind::TooLarge, "symbol tables support q <= 256 only");
        q_ = static_cast<std::uint32_t>(f.order());
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        for (Symbol a = 0; a < q_; ++a) {
            const auto ea = f.from_index(a);
            neg_[a] = static_cast<Symbol>(f.index(f.neg(ea)));
            for (Symbol b = 0; b < q_; ++b) {
                const auto eb = f.from_index(b);
                add_[a * q_ + b] = static_cast<Symbol>(f.index(f.add(ea, eb)));
                mul_[a * q_ + b] = static_cast<Symbol>(f.index(f.mul(ea, eb)));
            }
        }
        inv_.assign(q_, 0);
        for (Symbol a = 1; a < q_; ++a)
            for (Symbol b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }

    const Field& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return q_; }
    Symbol add(Symbol a, Symbol b) const { return add_[a * q_ + b]; }
    Symbol sub(Symbol a, Symbol b) const { return add_[a * q_ + neg_[b]]; }
    Symbol mul(Symbol a, Symbol b) const { return mul_[a * q_ + b]; }
    Symbol neg(Symbol a) const { return neg_[a]; }
    Symbol inv(Symbol a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        return inv_[a];
    }

private:
    Field field_;
    std::uint32_t q_ = 2;
    std::vector<Symbol> add_, mul_, neg_, inv_;
};

using SymbolVector = std::vector<SymbolTables::Symbol>;

/// Row-reduced echelon form over GF(q) with membership queries.
class Echelon {
public:
    explicit Echelon(const SymbolTables& t, std::size_t n) : tables_(&t), n_(n) {}

    /// Adds v to the span; returns false if it was already contained.
    bool insert(SymbolVector v) {
        reduce(v);
        const auto it = std::find_if(v.begin(), v.end(), [](auto s) { return s != 0; });
        if (it == v.end()) return false;
        const auto col = static_cast<std::size_t>(it - v.begin());
        const auto inv = tables_->inv(v[col]);
        for (auto& s : v) s = tables_->mul(s, inv);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto c = rows_[r][col];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = tables_->sub(rows_[r][j], tables_->mul(c, v[j]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(col);
        return true;
    }

    bool contains(SymbolVector v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](auto s) { return s == 0; });
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<SymbolVector>& rows() const noexcept { return rows_; }

private:
    void reduce(SymbolVector& v) const {
        if (v.size() != n_) throw Error(ErrorKind::ShapeMismatch, "vector length differs from code length");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) v[j] = tables_->sub(v[j], tables_->mul(c, rows_[r][j]));
        }
    }

    const SymbolTables* tables_;
    std::size_t n_;
    std::vector<SymbolVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// F_q-linear generator array of a code of length n and dimension k.
class LinearCodeView {
public:
    LinearCodeView(Field field, std::size_t n, std::vector<SymbolVector> generator)
        : tables_(field), n_(n), generator_(std::move(generator)) {
        Echelon e(tables_, n_);
        for (const auto& row : generator_) {
            if (row.size() != n_) throw Error(ErrorKind::ShapeMismatch, "generator row length differs from n");
            if (!e.insert(row)) throw Error(ErrorKind::RankMismatch, "generator rows are linearly dependent");
        }
    }

    const Field& field() const noexcept { return tables_.field(); }
    const SymbolTables& tables() const noexcept { return tables_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return generator_.size(); }
    const std::vector<SymbolVector>& generator() const noexcept { return generator_; }

    Echelon echelon() const {
        Echelon e(tables_, n_);
        for (const auto& row : generator_) e.insert(row);
        return e;
    }

private:
    SymbolTables tables_;
    std::size_t n_;
    std::vector<SymbolVector> generator_;
};

inline SymbolVector to_symbols(const Poly& c, std::size_t n) {
    SymbolVector out(n, 0);
    const auto& coeffs = c.coeffs();
    if (coeffs.size() > n) throw Error(ErrorKind::DegreeOverflow, "polynomial longer than code length");
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = static_cast<SymbolTables::Symbol>(c.field().index(coeffs[i]));
    return out;
}

inline Poly from_symbols(const Field& f, const SymbolVector& v) {
    std::vector<Field::Elem> coeffs;
    coeffs.reserve(v.size());
    for (auto s : v) coeffs.push_back(f.from_index(s));
    return Poly(f, std::move(coeffs));
}

/// Rows X^t (row i) for 0 <= t < m - deg g_{i,i}, serialized by interleaving.
inline LinearCodeView expand_to_linear(const RgbPotBasis& b) {
    const std::size_t ell = b.ell(), m = b.m(), n = ell * m;
    std::vector<SymbolVector> gen;
    for (std::size_t i = 0; i < ell; ++i) {
        const int span = static_cast<int>(m) - b.diagonal(i).degree();
        for (int t = 0; t < span; ++t) {
            std::vector<Poly> comps;
            for (const auto& e : b.row(i)) comps.push_back(e.shifted(static_cast<std::size_t>(t)).mod_xn_minus_one(m));
            gen.push_back(to_symbols(vector_to_univariate(PolyVector(std::move(comps), m)), n));
        }
    }
    LinearCodeView view(b.field(), n, std::move(gen));
    if (view.dimension() != dimension(b)) throw Error(ErrorKind::RankMismatch, "expanded rank differs from k");
    return view;
}

/// Basis of a cyclic code viewed as a 1-quasi-cyclic code.
inline RgbPotBasis cyclic_basis(const CyclicCode& c) {
    return RgbPotBasis(c.field(), c.length(), {{c.generator()}});
}

struct EnumerationOptions {
    std::uint64_t guard = std::uint64_t{1} << 26; ///< maximum number of messages
    unsigned threads = 1;
};

struct MinDistanceResult {
    std::size_t d = 0;           ///< 0 when k = 0
    std::uint64_t enumerated = 0; ///< messages visited, including zero
};

namespace detail {

inline std::uint64_t message_count(const LinearCodeView& v, std::uint64_t guard) {
    const std::uint64_t q = v.tables().q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        if (total > guard / q) throw Error(ErrorKind::TooLarge, "q^k exceeds the enumeration guard");
        total *= q;
    }
    if (total > guard) throw Error(ErrorKind::TooLarge, "q^k exceeds the enumeration guard");
    return total;
}

/// Minimum nonzero weight over Gray-code indices [lo, hi) of a binary code.
inline std::size_t binary_min_weight(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t words,
                                     std::uint64_t lo, std::uint64_t hi) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint64_t> cw(words, 0);
    const std::uint64_t start = lo ^ (lo >> 1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if ((start >> r) & 1)
            for (std::size_t w = 0; w < words; ++w) cw[w] ^= rows[r][w];
    auto weight = [&] {
        std::size_t s = 0;
        for (auto x : cw) s += static_cast<std::size_t>(std::popcount(x));
        return s;
    };
    if (start != 0) best = weight();
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
        const auto& row = rows[static_cast<std::size_t>(std::countr_zero(i))];
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
        best = std::min(best, weight());
    }
    return best;
}

/// Minimum nonzero weight over message indices [lo, hi) (base-q digits).
inline std::size_t qary_min_weight(const LinearCodeView& v, std::uint64_t lo, std::uint64_t hi) {
    const auto& t = v.tables();
    const std::uint32_t q = t.q();
    const std::size_t k = v.dimension(), n = v.length();
    // step[r][d]: change of the codeword when digit r moves from d to d+1 mod q.
    std::vector<std::vector<SymbolVector>> step(k, std::vector<SymbolVector>(q, SymbolVector(n)));
    for (std::size_t r = 0; r < k; ++r)
        for (std::uint32_t d = 0; d < q; ++d)
            for (std::size_t j = 0; j < n; ++j)
                step[r][d][j] = t.sub(t.mul((d + 1) % q, v.generator()[r][j]), t.mul(d, v.generator()[r][j]));

    std::vector<std::uint32_t> digits(k, 0);
    SymbolVector cw(n, 0);
    std::uint64_t x = lo;
    for (std::size_t r = 0; r < k; ++r, x /= q) {
        digits[r] = static_cast<std::uint32_t>(x % q);
        for (std::size_t j = 0; j < n; ++j) cw[j] = t.add(cw[j], t.mul(digits[r], v.generator()[r][j]));
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    auto weight = [&] { return static_cast<std::size_t>(std::count_if(cw.begin(), cw.end(), [](auto s) { return s != 0; })); };
    if (lo != 0) best = weight();
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
        for (std::size_t r = 0; r < k; ++r) {
            const auto& delta = step[r][digits[r]];
            for (std::size_t j = 0; j < n; ++j) cw[j] = t.add(cw[j], delta[j]);
            digits[r] = (digits[r] + 1) % q;
            if (digits[r] != 0) break;
        }
        best = std::min(best, weight());
    }
    return best;
}

} // namespace detail

/// Exact minimum distance by enumerating all q^k messages. The message space
/// is split into contiguous ranges, one per worker; workers only read the
/// shared generator.
inline MinDistanceResult min_distance(const LinearCodeView& v, const EnumerationOptions& opt = {}) {
    const std::uint64_t total = detail::message_count(v, opt.guard);
    MinDistanceResult result;
    result.enumerated = total;
    if (v.dimension() == 0) return result;

    const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 1024))));
    std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
    const bool binary = v.tables().q() == 2;
    const std::size_t words = (v.length() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> packed;
    if (binary) {
        for (const auto& row : v.generator()) {
            std::vector<std::uint64_t> p(words, 0);
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j]) p[j / 64] |= std::uint64_t{1} << (j % 64);
            packed.push_back(std::move(p));
        }
    }
    auto work = [&](unsigned w) {
        const std::uint64_t lo = total / workers * w;
        const std::uint64_t hi = w + 1 == workers ? total : total / workers * (w + 1);
        best[w] = binary ? detail::binary_min_weight(packed, words, lo, hi) : detail::qary_min_weight(v, lo, hi);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    result.d = *std::min_element(best.begin(), best.end());
    return result;
}

/// All q^k codewords (guarded), in message-index order.
inline std::vector<SymbolVector> enumerate_codewords(const LinearCodeView& v, std::uint64_t guard = std::uint64_t{1} << 20) {
    const std::uint64_t total = detail::message_count(v, guard);
    const auto& t = v.tables();
    std::vector<SymbolVector> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        SymbolVector cw(v.length(), 0);
        std::uint64_t x = i;
        for (std::size_t r = 0; r < v.dimension(); ++r, x /= t.q()) {
            const auto d = static_cast<std::uint32_t>(x % t.q());
            if (d == 0) continue;
            for (std::size_t j = 0; j < v.length(); ++j) cw[j] = t.add(cw[j], t.mul(d, v.generator()[r][j]));
        }
        out.push_back(std::move(cw));
    }
    return out;
}

/// Closure of the row space under the cyclic shift by ell positions, checked
/// on the generator rows.
inline bool is_quasi_cyclic(const LinearCodeView& v, std::size_t ell) {
    const std::size_t n = v.length();
    if (ell == 0 || n % ell != 0) throw Error(ErrorKind::ShapeMismatch, "ell must divide the code length");
    const Echelon e = v.echelon();
    for (const auto& row : v.generator()) {
        SymbolVector shifted(n);
        for (std::size_t j = 0; j < n; ++j) shifted[(j + ell) % n] = row[j];
        if (!e.contains(std::move(shifted))) return false;
    }
    return true;
}

inline bool modules_equal(const GeneratingMatrix& g1, const GeneratingMatrix& g2) {
    if (g1.ell() != g2.ell() || g1.m() != g2.m() || !(g1.field() == g2.field()))
        throw Error(ErrorKind::ShapeMismatch, "generating matrices of different shape");
    return rgb_pot_reduce(g1) == rgb_pot_reduce(g2);
}

/// Row i of M, deinterleaved into its ell components.
inline PolyVector matrix_row(const CodewordMatrix& M, std::size_t i, std::size_t ell) {
    const auto& f = M.field();
    const std::size_t m = M.cols() / ell;
    std::vector<Field::Elem> flat;
    for (std::size_t j = 0; j < M.cols(); ++j) flat.push_back(M.at(i, j));
    return univariate_to_vector(Poly(f, std::move(flat)), ell, m);
}

/// b_j(X) = sum_i m_{i,j} X^i.
inline Poly matrix_column(const CodewordMatrix& M, std::size_t j) {
    std::vector<Field::Elem> col;
    for (std::size_t i = 0; i < M.rows(); ++i) col.push_back(M.at(i, j));
    return Poly(M.field(), std::move(col));
}

/// Every row lies in A and every column in B.
inline bool check_product_membership(const CodewordMatrix& M, const RgbPotBasis& A, const CyclicCode& B) {
    if (M.rows() != B.length() || M.cols() != A.ell() * A.m())
        throw Error(ErrorKind::ShapeMismatch, "matrix shape differs from m_B x ell_A m_A");
    if (!(M.field() == A.field()) || !(A.field() == B.field())) throw Error(ErrorKind::FieldMismatch, "codes over different fields");
    for (std::size_t i = 0; i < M.rows(); ++i)
        if (!contains(A, matrix_row(M, i, A.ell()))) return false;
    for (std::size_t j = 0; j < M.cols(); ++j)
        if (!B.contains(matrix_column(M, j))) return false;
    return true;
}

/// m_{i,j} = b_i a_j for a row codeword a of A and a column codeword b of B.
inline CodewordMatrix outer_product(const SymbolVector& column, const SymbolVector& row, const SymbolTables& t) {
    CodewordMatrix M(t.field(), column.size(), row.size());
    for (std::size_t i = 0; i < column.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j) M.set(i, j, t.field().from_index(t.mul(column[i], row[j])));
    return M;
}

/// F_q-linear generators of A (x) B as codeword matrices: outer products of
/// generator rows.
inline std::vector<CodewordMatrix> product_generators(const RgbPotBasis& A, const CyclicCode& B) {
    const auto va = expand_to_linear(A);
    const auto vb = expand_to_linear(cyclic_basis(B));
    std::vector<CodewordMatrix> out;
    for (const auto& b : vb.generator())
        for (const auto& a : va.generator()) out.push_back(outer_product(b, a, va.tables()));
    return out;
}

} // namespace qcpc
