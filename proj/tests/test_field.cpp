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

#include <qcpc/field.hpp>
#include <qcpc/text_format.hpp>

#include <random>

#include "support/instances.hpp"

using namespace qcpc;

namespace {

std::vector<std::uint32_t> gf256_modulus() { return parse_prime_poly("X^8+X^4+X^3+X^2+1", 2); }

template <class F>
void expect_error(ErrorKind kind, F&& f) {
    try {
        f();
        FAIL() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

} // namespace

TEST(Field, PrimeFieldHasModulusX) {
    const Field f(2, 1);
    EXPECT_EQ(f.order(), 2u);
    EXPECT_TRUE(f.is_prime_field());
    EXPECT_EQ(format_prime_poly(f.modulus()), "X");
}

TEST(Field, ExplicitModulusGf256) {
    const Field f(2, 8, gf256_modulus());
    EXPECT_EQ(f.order(), 256u);
    EXPECT_EQ(format_prime_poly(f.modulus()), "X^8+X^4+X^3+X^2+1");
}

TEST(Field, ReducibleModulusRejected) {
    expect_error(ErrorKind::NotIrreducible, [] { Field(2, 8, parse_prime_poly("X^8+X^4+X^3+X^2+X", 2)); });
    expect_error(ErrorKind::NotIrreducible, [] { Field(3, 2, parse_prime_poly("X^2+2", 3)); });
}

TEST(Field, BadParametersRejected) {
    expect_error(ErrorKind::NotPrime, [] { Field(4, 1); });
    expect_error(ErrorKind::DegreeMismatch, [] { Field(2, 3, parse_prime_poly("X^2+X+1", 2)); });
}

TEST(Field, DefaultModulusIsSmallestIrreducible) {
    EXPECT_EQ(format_prime_poly(Field(2, 2).modulus()), "X^2+X+1");
    EXPECT_EQ(format_prime_poly(Field(2, 3).modulus()), "X^3+X+1");
    EXPECT_EQ(format_prime_poly(Field(2, 8).modulus()), "X^8+X^4+X^3+X+1");
    EXPECT_EQ(format_prime_poly(Field(3, 2).modulus()), "X^2+1");
    EXPECT_TRUE(Field(2, 8) == Field(2, 8));
}

TEST(Field, IrreducibilityTestsAgree) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int d = 1; d <= (p == 2 ? 8 : 4); ++d) {
            std::uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                const auto f = detail::gfp::monic_from_index(idx, d, p);
                EXPECT_EQ(detail::gfp::is_irreducible_trial(f, p), detail::gfp::is_irreducible_ben_or(f, p))
                    << format_prime_poly(f) << " over GF(" << p << ")";
            }
        }
}

TEST(Field, IrreducibleCountsMatchNecklaceFormula) {
    // Number of monic irreducibles of degree 8 over GF(2) is 30; degree 4 over GF(3) is 18.
    auto count = [](std::uint32_t p, int d) {
        std::uint64_t n = 1, found = 0;
        for (int i = 0; i < d; ++i) n *= p;
        for (std::uint64_t idx = 0; idx < n; ++idx)
            found += detail::gfp::is_irreducible(detail::gfp::monic_from_index(idx, d, p), p);
        return found;
    };
    EXPECT_EQ(count(2, 8), 30u);
    EXPECT_EQ(count(3, 4), 18u);
}

TEST(Field, AdditiveSelfInverseInCharacteristicTwo) {
    const Field f(2, 8, gf256_modulus());
    for (std::uint64_t i = 0; i < 256; ++i) {
        const auto a = f.from_index(i);
        EXPECT_TRUE(Field::is_zero(f.add(a, a)));
    }
}

TEST(Field, GroupOrderPower) {
    const Field f(2, 8, gf256_modulus());
    const auto alpha = nth_root_of_unity(f, 255);
    EXPECT_TRUE(alpha.pow(255).is_one());
    EXPECT_TRUE(has_order(f, alpha.value(), 255));
    EXPECT_TRUE(FieldElement(Field(2, 1), Field(2, 1).one()).inv().is_one());
}

TEST(Field, AxiomsOnRandomTriples) {
    std::mt19937_64 rng(7);
    for (const Field& f : {Field(2, 8, gf256_modulus()), Field(3, 3), Field(5, 1), Field(7, 2)}) {
        for (int t = 0; t < 1000; ++t) {
            const FieldElement a(f, test_support::random_element(rng, f));
            const FieldElement b(f, test_support::random_element(rng, f));
            const FieldElement c(f, test_support::random_element(rng, f));
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a - a, FieldElement(f, f.zero()));
            if (!a.is_zero()) {
                ASSERT_TRUE((a * a.inv()).is_one());
                ASSERT_EQ((b / a) * a, b);
            }
        }
    }
}

TEST(Field, EveryNonzeroElementInvertible) {
    for (const Field& f : {Field(2, 8, gf256_modulus()), Field(3, 4), Field(13, 1)}) {
        for (std::uint64_t i = 1; i < f.order(); ++i) {
            const auto a = f.from_index(i);
            EXPECT_TRUE(Field::is_one(f.mul(a, f.inv(a))));
        }
        expect_error(ErrorKind::DivisionByZero, [&] { f.inv(f.zero()); });
    }
}

TEST(Field, IndexRoundTrip) {
    const Field f(3, 3);
    for (std::uint64_t i = 0; i < f.order(); ++i) EXPECT_EQ(f.index(f.from_index(i)), i);
    EXPECT_EQ(f.from_int(-1), f.neg(f.one()));
}

TEST(Field, NegativeAndZeroPowers) {
    const Field f(5, 2);
    const auto a = f.from_index(7);
    EXPECT_TRUE(Field::is_one(f.pow(a, 0)));
    EXPECT_EQ(f.pow(a, -3), f.inv(f.pow(a, 3)));
}

TEST(RootOfUnity, OrderByDirectExponentiation) {
    const Field f(2, 8, gf256_modulus());
    for (std::uint64_t n : {1u, 3u, 5u, 15u, 17u, 51u, 85u, 255u}) {
        const auto beta = nth_root_of_unity(f, n);
        Field::Elem x = f.one();
        for (std::uint64_t k = 1; k < n; ++k) {
            x = f.mul(x, beta.value());
            ASSERT_FALSE(Field::is_one(x)) << "order of root for n=" << n << " divides " << k;
        }
        EXPECT_TRUE(Field::is_one(f.mul(x, beta.value())));
    }
}

TEST(RootOfUnity, Trivial) { EXPECT_TRUE(nth_root_of_unity(Field(2, 1), 1).is_one()); }

TEST(RootOfUnity, MissingOrder) {
    const Field f(2, 8, gf256_modulus());
    expect_error(ErrorKind::NoSuchRoot, [&] { nth_root_of_unity(f, 7); });
    expect_error(ErrorKind::NoSuchRoot, [&] { nth_root_of_unity(f, 0); });
}

TEST(RootOfUnity, Deterministic) {
    const Field f(2, 8);
    EXPECT_EQ(nth_root_of_unity(f, 17), nth_root_of_unity(Field(2, 8), 17));
}

TEST(Field, MixedFieldsRejected) {
    const FieldElement a(Field(2, 2), Field(2, 2).one());
    const FieldElement b(Field(3, 1), Field(3, 1).one());
    expect_error(ErrorKind::FieldMismatch, [&] { (void)(a + b); });
}
