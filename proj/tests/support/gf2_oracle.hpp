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

// Stand-alone binary arithmetic on 128-bit words. Used to cross-check the
// library without touching its field or polynomial code.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gf2 {

using Word = unsigned __int128;

inline Word bit(int k) { return Word{1} << k; }

inline Word from_exponents(std::initializer_list<int> es) {
    Word w = 0;
    for (int e : es) w ^= bit(e);
    return w;
}

inline int popcount(Word w) {
    return std::popcount(static_cast<std::uint64_t>(w)) + std::popcount(static_cast<std::uint64_t>(w >> 64));
}

inline int degree(Word w) {
    for (int k = 127; k >= 0; --k)
        if ((w >> k) & 1) return k;
    return -1;
}

inline std::vector<int> exponents(Word w) {
    std::vector<int> out;
    for (int k = 127; k >= 0; --k)
        if ((w >> k) & 1) out.push_back(k);
    return out;
}

inline Word mask(int n) { return n >= 128 ? ~Word{0} : bit(n) - 1; }

/// X^k w mod X^n - 1, for deg w < n.
inline Word rotate(Word w, int k, int n) {
    k %= n;
    if (k == 0) return w;
    return ((w << k) | (w >> (n - k))) & mask(n);
}

inline Word cyclic_mul(Word a, Word b, int n) {
    Word out = 0;
    for (int k = 0; k < n; ++k)
        if ((a >> k) & 1) out ^= rotate(b, k, n);
    return out;
}

/// w(X^e) mod X^n - 1 with e taken mod n.
inline Word substitute(Word w, long long e, int n) {
    const long long r = ((e % n) + n) % n;
    Word out = 0;
    for (int k = 0; k < 128; ++k)
        if ((w >> k) & 1) out ^= bit(static_cast<int>((k * r) % n));
    return out;
}

inline Word reduce_cyclic(Word w, int n) {
    Word out = 0;
    for (int k = 0; k < 128; ++k)
        if ((w >> k) & 1) out ^= bit(k % n);
    return out;
}

inline Word mod(Word a, Word b) {
    const int db = degree(b);
    if (db < 0) throw std::domain_error("division by zero");
    for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
    return a;
}

inline Word gcd(Word a, Word b) {
    while (b != 0) {
        const Word r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

/// Rank over GF(2) of a list of words.
inline std::size_t rank(std::vector<Word> rows) {
    std::size_t r = 0;
    for (int col = 127; col >= 0; --col) {
        std::size_t piv = r;
        while (piv < rows.size() && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && ((rows[i] >> col) & 1)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

/// Keeps a linearly independent subset spanning the same space.
inline std::vector<Word> independent(const std::vector<Word>& rows) {
    std::vector<Word> kept;
    for (Word w : rows) {
        kept.push_back(w);
        if (rank(kept) < kept.size()) kept.pop_back();
    }
    return kept;
}

inline bool same_span(const std::vector<Word>& u, const std::vector<Word>& v) {
    std::vector<Word> both = u;
    both.insert(both.end(), v.begin(), v.end());
    const auto r = rank(both);
    return rank(u) == r && rank(v) == r;
}

/// Span generators of the binary ell-quasi-cyclic code with the given rows:
/// row entry h, coefficient t lands at position ell*((t+s) mod m) + h.
inline std::vector<Word> qc_span(const std::vector<std::vector<Word>>& rows, int ell, int m) {
    std::vector<Word> out;
    for (const auto& row : rows)
        for (int s = 0; s < m; ++s) {
            Word w = 0;
            for (int h = 0; h < ell; ++h) {
                const Word shifted = rotate(reduce_cyclic(row[h], m), s, m);
                for (int t = 0; t < m; ++t)
                    if ((shifted >> t) & 1) w ^= bit(ell * t + h);
            }
            out.push_back(w);
        }
    return independent(out);
}

/// Minimum weight of the nonzero words in the span of independent rows.
inline int brute_min_distance(const std::vector<Word>& rows) {
    int best = -1;
    const std::uint64_t total = std::uint64_t{1} << rows.size();
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        Word w = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((msg >> i) & 1) w ^= rows[i];
        const int wt = popcount(w);
        if (best < 0 || wt < best) best = wt;
    }
    return best < 0 ? 0 : best;
}

/// Serialized product code: all outer products b (x) a placed by
/// position(i, j) = (i a ell m_A ell + j b m_B) mod n.
inline std::vector<Word> product_span(const std::vector<Word>& a_rows, int row_len, const std::vector<Word>& b_rows,
                                      int m_b, int ell_a, long long a, long long b) {
    const int n = row_len * m_b;
    std::vector<Word> out;
    for (Word ra : a_rows)
        for (Word cb : b_rows) {
            Word w = 0;
            for (int i = 0; i < m_b; ++i) {
                if (!((cb >> i) & 1)) continue;
                for (int j = 0; j < row_len; ++j) {
                    if (!((ra >> j) & 1)) continue;
                    long long pos = (static_cast<long long>(i) * a * row_len * ell_a + static_cast<long long>(j) * b * m_b) % n;
                    if (pos < 0) pos += n;
                    w ^= bit(static_cast<int>(pos));
                }
            }
            out.push_back(w);
        }
    return independent(out);
}

} // namespace gf2
