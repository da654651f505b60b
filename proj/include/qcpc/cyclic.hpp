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
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace qcpc {

/// GF(q) for a prime power q, with the default modulus.
inline Field field_of_order(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::NotPrime, "field order must be a prime power");
    const auto primes = detail::prime_factors(q);
    if (primes.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    int k = 0;
    for (std::uint64_t v = q; v > 1; v /= primes[0]) ++k;
    return Field(static_cast<std::uint32_t>(primes[0]), k);
}

inline void require_coprime(std::uint64_t q, std::uint64_t m) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "length must be positive");
    if (std::gcd(q, m) != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
}

/// Smallest r >= 1 with q^r = 1 mod m.
inline int multiplicative_order(std::uint64_t q, std::uint64_t m) {
    require_coprime(q, m);
    if (m == 1) return 1;
    int r = 1;
    for (std::uint64_t v = q % m; v != 1; v = static_cast<std::uint64_t>(static_cast<WideUint>(v) * q % m)) ++r;
    return r;
}

/// {i q^j mod m}, ascending.
inline std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t q, std::uint64_t m, std::uint64_t i) {
    require_coprime(q, m);
    if (i >= m) throw Error(ErrorKind::IndexOutOfRange, "coset representative must lie in [0, m)");
    std::vector<std::uint64_t> out;
    std::uint64_t v = i;
    do {
        out.push_back(v);
        v = static_cast<std::uint64_t>(static_cast<WideUint>(v) * q % m);
    } while (v != i);
    std::sort(out.begin(), out.end());
    return out;
}

/// Cosets partitioning [0, m), each listed once, ordered by smallest member.
inline std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t q, std::uint64_t m) {
    require_coprime(q, m);
    std::vector<bool> seen(m, false);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (seen[i]) continue;
        auto c = cyclotomic_coset(q, m, i);
        for (auto v : c) seen[v] = true;
        out.push_back(std::move(c));
    }
    return out;
}

/// The smallest extension GF(q^r) of a base field that contains a primitive
/// m-th root of unity, together with the embedding of the base field.
class SplittingField {
public:
    SplittingField(Field base, std::uint64_t m) : base_(std::move(base)), m_(m) {
        const std::uint64_t q = base_.order();
        degree_ = multiplicative_order(q, m);
        ext_ = Field(base_.characteristic(), base_.degree() * degree_);
        alpha_ = nth_root_of_unity(ext_, m).value();
        build_embedding();
    }

    const Field& base() const noexcept { return base_; }
    const Field& extension() const noexcept { return ext_; }
    const Field::Elem& root() const noexcept { return alpha_; }
    int relative_degree() const noexcept { return degree_; }

    Field::Elem embed(const Field::Elem& b) const {
        if (base_.is_prime_field()) {
            Field::Elem e = ext_.zero();
            e[0] = b[0];
            return e;
        }
        return images_.at(base_.index(b));
    }

    /// Inverse of embed; throws CoefficientNotInBaseField for elements
    /// outside the subfield.
    Field::Elem to_base(const Field::Elem& e) const {
        if (base_.is_prime_field()) {
            if (std::any_of(e.begin() + 1, e.end(), [](std::uint32_t c) { return c != 0; }))
                throw Error(ErrorKind::CoefficientNotInBaseField, "element lies outside GF(p)");
            return Field::Elem{e[0]};
        }
        const auto it = preimages_.find(e);
        if (it == preimages_.end()) throw Error(ErrorKind::CoefficientNotInBaseField, "element lies outside the base field");
        return it->second;
    }

    /// prod_{j in C_i} (X - alpha^j), brought down to the base field.
    Poly minimal_polynomial(std::uint64_t i) const {
        Poly acc = Poly::constant(ext_, ext_.one());
        for (auto j : cyclotomic_coset(base_.order(), m_, i)) {
            auto root = ext_.pow_wide(alpha_, j);
            acc *= Poly(ext_, {ext_.neg(root), ext_.one()});
        }
        std::vector<Field::Elem> coeffs;
        coeffs.reserve(acc.coeffs().size());
        for (const auto& c : acc.coeffs()) coeffs.push_back(to_base(c));
        return Poly(base_, std::move(coeffs));
    }

private:
    void build_embedding() {
        if (base_.is_prime_field()) return;
        const std::uint64_t q = base_.order();
        if (q > (1u << 16)) throw Error(ErrorKind::TooLarge, "base field too large for tabulated embedding");
        // A root of the base modulus inside the extension generates the copy
        // of the base field; it lives in the order-(q-1) subgroup.
        const auto w = nth_root_of_unity(ext_, q - 1).value();
        std::vector<Field::Elem> mu;
        for (auto c : base_.modulus()) mu.push_back(ext_.from_int(c));
        const Poly modulus(ext_, mu);
        std::optional<Field::Elem> theta;
        Field::Elem cand = ext_.one();
        for (std::uint64_t j = 0; j + 1 < q; ++j, cand = ext_.mul(cand, w)) {
            if (Field::is_zero(modulus.evaluate(cand))) {
                theta = cand;
                break;
            }
        }
        if (!theta) throw Error(ErrorKind::CoefficientNotInBaseField, "no root of the base modulus in extension");
        for (std::uint64_t t = 0; t < q; ++t) {
            const auto b = base_.from_index(t);
            Field::Elem img = ext_.zero();
            Field::Elem power = ext_.one();
            for (int d = 0; d < base_.degree(); ++d) {
                img = ext_.add(img, ext_.mul(ext_.from_int(b[d]), power));
                power = ext_.mul(power, *theta);
            }
            preimages_.emplace(img, b);
            images_.push_back(std::move(img));
        }
    }

    Field base_;
    std::uint64_t m_;
    int degree_ = 1;
    Field ext_{2, 1};
    Field::Elem alpha_;
    std::vector<Field::Elem> images_;
    std::map<Field::Elem, Field::Elem> preimages_;
};

inline Poly minimal_polynomial(const Field& base, std::uint64_t m, std::uint64_t i) {
    return SplittingField(base, m).minimal_polynomial(i);
}

inline Poly minimal_polynomial(std::uint64_t q, std::uint64_t m, std::uint64_t i) {
    return minimal_polynomial(field_of_order(q), m, i);
}

struct CyclotomicFactor {
    std::uint64_t representative;
    Poly poly;
};

/// X^m - 1 as a product of minimal polynomials, one per cyclotomic coset,
/// ordered by coset representative.
inline std::vector<CyclotomicFactor> factor_xm_minus_1(const Field& base, std::uint64_t m) {
    const SplittingField split(base, m);
    std::vector<CyclotomicFactor> out;
    for (const auto& coset : cyclotomic_cosets(base.order(), m))
        out.push_back({coset.front(), split.minimal_polynomial(coset.front())});
    return out;
}

inline std::vector<CyclotomicFactor> factor_xm_minus_1(std::uint64_t q, std::uint64_t m) {
    return factor_xm_minus_1(field_of_order(q), m);
}

/// Cyclic code of length m generated by a monic divisor of X^m - 1.
class CyclicCode {
public:
    CyclicCode(std::size_t m, const Poly& generator) : m_(m), generator_(generator.monic()) {
        const auto& f = generator.field();
        require_coprime(f.order(), m);
        if (generator.is_zero() || !divides(generator_, Poly::xn_minus_one(f, m)))
            throw Error(ErrorKind::NotADivisor, "generator does not divide X^m - 1");
    }

    const Field& field() const noexcept { return generator_.field(); }
    std::size_t length() const noexcept { return m_; }
    const Poly& generator() const noexcept { return generator_; }
    std::size_t dimension() const noexcept { return m_ - static_cast<std::size_t>(generator_.degree()); }

    bool contains(const Poly& c) const { return divides(generator_, c.mod_xn_minus_one(m_)); }

private:
    std::size_t m_;
    Poly generator_;
};

inline CyclicCode cyclic_code_new(std::size_t m, const Poly& g) { return CyclicCode(m, g); }

} // namespace qcpc
