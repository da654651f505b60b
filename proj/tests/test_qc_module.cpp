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

#include <gtest/gtest.h>

#include <qcpc/oracle.hpp>
#include <qcpc/qc_module.hpp>
#include <qcpc/text_format.hpp>

#include <random>
#include <set>

#include "support/gf2_oracle.hpp"
#include "support/instances.hpp"

using namespace qcpc;
using qcpc::test_support::random_generating_matrix;
using qcpc::test_support::random_poly;

namespace {

const Field& binary() {
    static const Field f(2, 1);
    return f;
}

Poly P(const std::string& s) { return parse_poly(binary(), s); }

const char* kGa00 = "X^8+X^7+X^6+X^4+X^2+X+1";
const char* kGa01 = "X^14+X^13+X^12+X^11+X^8+1";

RgbPotBasis code_a() { return rgb_pot_reduce(GeneratingMatrix(binary(), 2, 17, {{P(kGa00), P(kGa01)}})); }

RgbPotBasis zero_code(const Field& f, std::size_t ell, std::size_t m) {
    std::vector<std::vector<Poly>> rows(ell, std::vector<Poly>(ell, Poly(f)));
    for (std::size_t i = 0; i < ell; ++i) rows[i][i] = Poly::xn_minus_one(f, m);
    return RgbPotBasis(f, m, rows);
}

std::set<std::string> codeword_set(const Field& f, const std::vector<SymbolVector>& gens, std::size_t n) {
    // Full F_q span, enumerated.
    std::set<std::string> out;
    SymbolTables t(f);
    std::vector<SymbolVector> basis;
    Echelon e(t, n);
    for (const auto& g : gens)
        if (e.insert(g)) basis.push_back(g);
    const std::uint64_t q = t.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= q;
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        SymbolVector w(n, 0);
        std::uint64_t r = msg;
        for (const auto& b : basis) {
            const auto c = static_cast<std::uint32_t>(r % q);
            r /= q;
            for (std::size_t i = 0; i < n; ++i) w[i] = t.add(w[i], t.mul(c, b[i]));
        }
        out.insert(std::string(w.begin(), w.end()));
    }
    return out;
}

/// All X^s a_i of the explicit rows plus X^s (X^m-1) e_j (which vanish), serialized.
std::vector<SymbolVector> shifts_of_rows(const GeneratingMatrix& g) {
    std::vector<SymbolVector> out;
    const std::size_t ell = g.ell(), m = g.m();
    for (const auto& row : g.rows())
        for (std::size_t s = 0; s < m; ++s) {
            std::vector<Poly> comps;
            for (const auto& e : row) comps.push_back(e.shifted(s).mod_xn_minus_one(m));
            out.push_back(to_symbols(vector_to_univariate(PolyVector(comps, m)), ell * m));
        }
    return out;
}

} // namespace

TEST(Reduce, ZeroCodePreimage) {
    const auto b = rgb_pot_reduce(GeneratingMatrix(binary(), 2, 17, {{P("X^17+1"), P("0")}, {P("0"), P("X^17+1")}}));
    EXPECT_EQ(b, zero_code(binary(), 2, 17));
    EXPECT_EQ(rgb_pot_reduce(GeneratingMatrix(binary(), 3, 5)), zero_code(binary(), 3, 5));
}

TEST(Reduce, WorkedRowCodeUnchanged) {
    const auto b = code_a();
    EXPECT_EQ(b.entry(0, 0), P(kGa00));
    EXPECT_EQ(b.entry(0, 1), P(kGa01));
    EXPECT_TRUE(b.entry(1, 0).is_zero());
    EXPECT_EQ(b.entry(1, 1), P("X^17+1"));
    EXPECT_TRUE(is_rgb_pot(b).ok);
}

TEST(Reduce, IdempotentAndCanonicalOnRandomInputs) {
    std::mt19937_64 rng(19);
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const Field f = field_of_order(q);
        for (int t = 0; t < 60; ++t) {
            const std::size_t ell = 1 + rng() % 3;
            std::size_t m = 1 + rng() % 9;
            if (std::gcd<std::uint64_t>(m, q) != 1) m = 7;
            const auto g = random_generating_matrix(rng, f, ell, m, rng() % 4);
            const auto b = rgb_pot_reduce(g);
            const auto report = is_rgb_pot(b);
            ASSERT_TRUE(report.ok) << "q=" << q << " ell=" << ell << " m=" << m;
            ASSERT_EQ(rgb_pot_reduce(b.to_generating_matrix()), b);
            const auto view = expand_to_linear(b);
            ASSERT_EQ(view.dimension(), dimension(b));
            ASSERT_TRUE(is_quasi_cyclic(view, ell));
            // Same module from a shuffled, rescaled generating set.
            auto rows = g.rows();
            std::reverse(rows.begin(), rows.end());
            for (auto& row : rows)
                for (auto& e : row) e = e.scaled(f.from_int(q == 3 ? 2 : 1));
            ASSERT_EQ(rgb_pot_reduce(GeneratingMatrix(f, ell, m, rows)), b);
        }
    }
}

TEST(Reduce, ModuleEqualityByEnumeration) {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (std::size_t ell = 1; ell <= 3; ++ell)
        for (std::size_t m = 1; m <= 7; m += 2)
            for (int t = 0; t < 6; ++t) {
                const auto g = random_generating_matrix(rng, binary(), ell, m, 1 + rng() % 3);
                const auto b = rgb_pot_reduce(g);
                const auto from_input = codeword_set(binary(), shifts_of_rows(g), ell * m);
                const auto from_basis = codeword_set(binary(), expand_to_linear(b).generator(), ell * m);
                ASSERT_EQ(from_input, from_basis);
                std::uint64_t size = 1;
                for (std::size_t i = 0; i < dimension(b); ++i) size *= 2;
                ASSERT_EQ(from_basis.size(), size);
                for (const auto& w : from_basis) {
                    const SymbolVector v(w.begin(), w.end());
                    const auto c = univariate_to_vector(from_symbols(binary(), v), ell, m);
                    ASSERT_TRUE(contains(b, c));
                    ASSERT_TRUE(contains(b, qc_shift(c)));
                }
                ++checked;
            }
    EXPECT_EQ(checked, 72);
}

TEST(IsRgbPot, Violations) {
    const auto b = code_a();
    EXPECT_TRUE(is_rgb_pot(b).ok);

    const RgbPotBasis swapped(binary(), 17, {b.row(1), b.row(0)});
    auto r = is_rgb_pot(swapped);
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                            [](const RgbViolation& v) { return v.condition == RgbCondition::LowerTriangleZero; }));

    auto entries = b.entries();
    entries[0][1] += entries[1][1];
    r = is_rgb_pot(RgbPotBasis(binary(), 17, entries));
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].condition, RgbCondition::OffDiagonalDegree);

    entries = b.entries();
    entries[0][0] = P("X^2+1");
    r = is_rgb_pot(RgbPotBasis(binary(), 17, entries));
    EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                            [](const RgbViolation& v) { return v.condition == RgbCondition::DiagonalDivides; }));

    entries = zero_code(binary(), 2, 3).entries();
    entries[0][1] = P("X");
    r = is_rgb_pot(RgbPotBasis(binary(), 3, entries));
    EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                            [](const RgbViolation& v) { return v.condition == RgbCondition::FullDiagonalRowZero; }));

    const Field f3(3, 1);
    const RgbPotBasis not_monic(f3, 2, {{parse_poly(f3, "2*X+1")}});
    r = is_rgb_pot(not_monic);
    EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                            [](const RgbViolation& v) { return v.condition == RgbCondition::DiagonalMonic; }));
}

TEST(Dimension, Formula) {
    EXPECT_EQ(dimension(code_a()), 9u);
    EXPECT_EQ(dimension(zero_code(binary(), 3, 5)), 0u);
    EXPECT_EQ(QuasiCyclicCode(code_a()).length(), 34u);
}

TEST(Level, Examples) {
    EXPECT_EQ(level(code_a()), 1u);
    EXPECT_EQ(level(zero_code(binary(), 3, 5)), 0u);
    const RgbPotBasis full(binary(), 4, {{P("1"), P("0")}, {P("0"), P("1")}});
    EXPECT_EQ(level(full), 2u);
    const RgbPotBasis gap(binary(), 3, {{P("X^3+1"), P("0")}, {P("0"), P("1")}});
    EXPECT_THROW(level(gap), Error);
}

TEST(Encode, UnitAndZeroMessages) {
    const auto b = code_a();
    const auto c = encode(b, PolyVector({P("1"), P("0")}, 17));
    EXPECT_EQ(c[0], P(kGa00));
    EXPECT_EQ(c[1], P(kGa01));
    EXPECT_TRUE(encode(b, PolyVector::zero(binary(), 2, 17)).is_zero());
    EXPECT_THROW(encode(b, PolyVector({P("X^9"), P("0")}, 17)), Error);
    EXPECT_THROW(encode(b, PolyVector({P("0"), P("1")}, 17)), Error);
}

TEST(Encode, InjectiveOnTinyCode) {
    const auto b = rgb_pot_reduce(GeneratingMatrix(binary(), 2, 3, {{P("X+1"), P("X")}}));
    const std::size_t k = dimension(b);
    std::set<std::string> seen;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
        std::uint64_t r = msg;
        std::vector<Poly> parts;
        for (std::size_t j = 0; j < 2; ++j) {
            const int len = 3 - b.diagonal(j).degree();
            std::vector<std::int64_t> cs;
            for (int t = 0; t < len; ++t, r >>= 1) cs.push_back(static_cast<std::int64_t>(r & 1));
            parts.push_back(Poly::from_ints(binary(), cs));
        }
        const auto c = encode(b, PolyVector(parts, 3));
        EXPECT_TRUE(contains(b, c));
        seen.insert(to_string(vector_to_univariate(c)));
    }
    EXPECT_EQ(seen.size(), std::size_t{1} << k);
}

TEST(Serialization, InterleaveExample) {
    EXPECT_EQ(vector_to_univariate(PolyVector({P("1+X"), P("X")}, 2)), P("1+X^2+X^3"));
    EXPECT_TRUE(vector_to_univariate(PolyVector::zero(binary(), 3, 4)).is_zero());
}

TEST(Serialization, RoundTrip) {
    std::mt19937_64 rng(29);
    const Field f(3, 1);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t ell = 1 + rng() % 4, m = 1 + rng() % 9;
        std::vector<Poly> comps;
        for (std::size_t h = 0; h < ell; ++h) comps.push_back(random_poly(rng, f, static_cast<int>(m) - 1));
        const PolyVector c(comps, m);
        ASSERT_EQ(univariate_to_vector(vector_to_univariate(c), ell, m), c);
    }
}

TEST(Shift, Examples) {
    EXPECT_TRUE(qc_shift(PolyVector::zero(binary(), 2, 5)).is_zero());
    const PolyVector e0({P("1")}, 3);
    EXPECT_EQ(qc_shift(e0), PolyVector({P("X")}, 3));
    const PolyVector v({P("X^2+1"), P("X")}, 3);
    EXPECT_EQ(qc_shift(v), PolyVector({P("X+1"), P("X^2")}, 3));
}

TEST(Shift, ReturnsAfterMSteps) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const std::size_t ell = 1 + rng() % 3, m = 1 + rng() % 8;
        std::vector<Poly> comps;
        for (std::size_t h = 0; h < ell; ++h) comps.push_back(random_poly(rng, binary(), static_cast<int>(m) - 1));
        const PolyVector c(comps, m);
        PolyVector s = c;
        for (std::size_t k = 0; k < m; ++k) s = qc_shift(s);
        ASSERT_EQ(s, c);
    }
}

TEST(Reduce, MatchesIndependentBinarySpan) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 40; ++t) {
        const std::size_t ell = 1 + rng() % 3, m = 1 + 2 * (rng() % 10);
        const auto g = random_generating_matrix(rng, binary(), ell, m, 1 + rng() % 3);
        const auto b = rgb_pot_reduce(g);
        const auto lhs = gf2::qc_span(qcpc::test_support::to_words(g.rows()), static_cast<int>(ell), static_cast<int>(m));
        const auto rhs = gf2::qc_span(qcpc::test_support::to_words(b.entries()), static_cast<int>(ell), static_cast<int>(m));
        ASSERT_TRUE(gf2::same_span(lhs, rhs));
        ASSERT_EQ(rhs.size(), dimension(b));
    }
}
