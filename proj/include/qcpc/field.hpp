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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace qcpc {

/// Exponents and field orders of the extension fields used for minimal
/// polynomials can exceed 64 bits (e.g. GF(3^52)).
using WideUint = unsigned __int128;

namespace detail {

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t result = 1 % p;
    std::uint64_t base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(p)");
    return pow_mod(a, p - 2, p);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors of n, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Dense polynomials over the prime field GF(p), ascending coefficients,
/// trimmed (the zero polynomial is the empty vector).
namespace gfp {

using Coeffs = std::vector<std::uint32_t>;

inline void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs sub(Coeffs a, const Coeffs& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    Coeffs out(acc.begin(), acc.end());
    trim(out);
    return out;
}

/// Remainder of a modulo b (b nonzero), optionally returning the quotient.
inline Coeffs mod(Coeffs a, const Coeffs& b, std::uint32_t p, Coeffs* quotient = nullptr) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const int db = degree(b);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    if (quotient) quotient->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    for (int k = degree(a); k >= db; --k) {
        const std::uint32_t c = mul_mod(a[k], lead_inv, p);
        if (c == 0) continue;
        if (quotient) (*quotient)[k - db] = c;
        for (int i = 0; i <= db; ++i) a[k - db + i] = (a[k - db + i] + p - mul_mod(c, b[i], p)) % p;
    }
    trim(a);
    if (quotient) trim(*quotient);
    return a;
}

inline Coeffs gcd(Coeffs a, Coeffs b, std::uint32_t p) {
    while (!b.empty()) {
        Coeffs r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint32_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, inv, p);
    }
    return a;
}

/// Inverse of a modulo f, assuming gcd(a, f) = 1.
inline Coeffs inverse_mod(const Coeffs& a, const Coeffs& f, std::uint32_t p) {
    Coeffs r0 = f, r1 = mod(a, f, p);
    Coeffs s0, s1{1};
    while (!r1.empty()) {
        Coeffs q;
        Coeffs r2 = mod(r0, r1, p, &q);
        Coeffs s2 = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw Error(ErrorKind::DivisionByZero, "element is not invertible");
    const std::uint32_t inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = mul_mod(c, inv, p);
    return s0;
}

/// Monic polynomial of degree d whose lower coefficients are the base-p digits
/// of n. Enumerating n = 0, 1, ... visits monic polynomials in lexicographic
/// order of their coefficients read from X^{d-1} down to X^0.
inline Coeffs monic_from_index(std::uint64_t n, int d, std::uint32_t p) {
    Coeffs out(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        out[i] = static_cast<std::uint32_t>(n % p);
        n /= p;
    }
    out[d] = 1;
    return out;
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (std::uint64_t{1} << 62) / base) return std::nullopt;
        r *= base;
    }
    return r;
}

/// Irreducibility by trial division by every monic polynomial of degree
/// 1..deg/2. Only sensible for tiny fields.
inline bool is_irreducible_trial(const Coeffs& f, std::uint32_t p) {
    const int n = degree(f);
    if (n < 1) return false;
    for (int d = 1; d <= n / 2; ++d) {
        const auto count = checked_pow(p, d);
        if (!count) throw Error(ErrorKind::TooLarge, "trial division search space too large");
        for (std::uint64_t idx = 0; idx < *count; ++idx)
            if (mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
    return true;
}

inline Coeffs pow_x_mod(const Coeffs& base, std::uint64_t e, const Coeffs& f, std::uint32_t p) {
    Coeffs result{1};
    Coeffs b = mod(base, f, p);
    while (e) {
        if (e & 1) result = mod(mul(result, b, p), f, p);
        b = mod(mul(b, b, p), f, p);
        e >>= 1;
    }
    return result;
}

/// Ben-Or irreducibility test: f of degree n is irreducible iff
/// gcd(X^{p^i} - X, f) = 1 for all 1 <= i <= n/2.
inline bool is_irreducible_ben_or(const Coeffs& f, std::uint32_t p) {
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Coeffs x{0, 1};
    Coeffs h = mod(x, f, p);
    for (int i = 1; i <= n / 2; ++i) {
        h = pow_x_mod(h, p, f, p);
        if (degree(gcd(f, sub(h, x, p), p)) > 0) return false;
    }
    return true;
}

/// Trial division while the divisor search space stays below 2^16
/// candidates, Ben-Or beyond that.
inline bool is_irreducible(const Coeffs& f, std::uint32_t p) {
    const int n = degree(f);
    std::uint64_t candidates = 0;
    for (int d = 1; d <= n / 2; ++d) {
        const auto c = checked_pow(p, d);
        if (!c || (candidates += *c) > (1u << 16)) return is_irreducible_ben_or(f, p);
    }
    return is_irreducible_trial(f, p);
}

inline Coeffs smallest_irreducible(int d, std::uint32_t p) {
    for (std::uint64_t idx = 0;; ++idx) {
        Coeffs f = monic_from_index(idx, d, p);
        if (is_irreducible(f, p)) return f;
    }
}

} // namespace gfp
} // namespace detail

/// GF(p^m) as GF(p)[X]/(modulus). Elements are coefficient vectors of length
/// exactly m over GF(p) in the polynomial basis 1, X, ..., X^{m-1}.
///
/// A Field is an immutable handle; copies share the same tables.
class Field {
public:
    using Elem = std::vector<std::uint32_t>;

    /// GF(p^m). Without a modulus the lexicographically smallest monic
    /// irreducible polynomial of degree m is used.
    Field(std::uint32_t p, int m, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        if (!detail::is_prime(p) || p > (1u << 30)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a supported prime");
        if (m < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be positive");
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->m = m;
        if (modulus) {
            auto f = *modulus;
            for (auto c : f)
                if (c >= p) throw Error(ErrorKind::NotIrreducible, "modulus coefficient out of range");
            detail::gfp::trim(f);
            if (detail::gfp::degree(f) != m) throw Error(ErrorKind::DegreeMismatch, "modulus degree differs from m");
            if (f.back() != 1) throw Error(ErrorKind::NotIrreducible, "modulus is not monic");
            if (!detail::gfp::is_irreducible(f, p)) throw Error(ErrorKind::NotIrreducible, "modulus is reducible");
            impl->modulus = std::move(f);
        } else {
            impl->modulus = detail::gfp::smallest_irreducible(m, p);
        }
        WideUint q = 1;
        for (int i = 0; i < m; ++i) {
            if (q > (~WideUint{0}) / p) throw Error(ErrorKind::TooLarge, "field order exceeds 128 bits");
            q *= p;
        }
        impl->order = q;
        impl_ = std::move(impl);
    }

    std::uint32_t characteristic() const noexcept { return impl_->p; }
    int degree() const noexcept { return impl_->m; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }
    WideUint order_wide() const noexcept { return impl_->order; }

    std::uint64_t order() const {
        if (impl_->order >> 63) throw Error(ErrorKind::TooLarge, "field order does not fit 63 bits");
        return static_cast<std::uint64_t>(impl_->order);
    }

    bool is_prime_field() const noexcept { return impl_->m == 1; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.impl_ == b.impl_ ||
               (a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m && a.impl_->modulus == b.impl_->modulus);
    }

    Elem zero() const { return Elem(impl_->m, 0); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }

    /// Image of an integer under Z -> GF(p) -> GF(p^m).
    Elem from_int(std::int64_t v) const {
        Elem e = zero();
        const auto p = static_cast<std::int64_t>(impl_->p);
        e[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
        return e;
    }

    /// Element whose coefficient vector holds the base-p digits of idx.
    Elem from_index(WideUint idx) const {
        if (idx >= impl_->order) throw Error(ErrorKind::IndexOutOfRange, "element index beyond field order");
        Elem e = zero();
        for (int i = 0; i < impl_->m; ++i) {
            e[i] = static_cast<std::uint32_t>(idx % impl_->p);
            idx /= impl_->p;
        }
        return e;
    }

    WideUint index_wide(const Elem& e) const {
        WideUint idx = 0;
        for (int i = impl_->m - 1; i >= 0; --i) idx = idx * impl_->p + e[i];
        return idx;
    }

    std::uint64_t index(const Elem& e) const { return static_cast<std::uint64_t>(index_wide(e)); }

    Elem from_coefficients(std::vector<std::uint32_t> coeffs) const {
        if (coeffs.size() > static_cast<std::size_t>(impl_->m))
            throw Error(ErrorKind::DegreeMismatch, "too many coefficients for field element");
        for (auto c : coeffs)
            if (c >= impl_->p) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
        coeffs.resize(impl_->m, 0);
        return coeffs;
    }

    static bool is_zero(const Elem& a) noexcept {
        return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
    }

    static bool is_one(const Elem& a) noexcept {
        if (a.empty() || a[0] != 1) return false;
        return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
    }

    Elem add(const Elem& a, const Elem& b) const {
        const auto p = impl_->p;
        Elem r(a.size());
        if (p == 2) {
            for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
        } else {
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto s = a[i] + b[i];
                r[i] = s >= p ? s - p : s;
            }
        }
        return r;
    }

    Elem neg(const Elem& a) const {
        const auto p = impl_->p;
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p - a[i];
        return r;
    }

    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    Elem mul(const Elem& a, const Elem& b) const {
        const auto p = impl_->p;
        const int m = impl_->m;
        if (m == 1) return Elem{detail::mul_mod(a[0], b[0], p)};
        std::vector<std::uint64_t> acc(2 * m - 1, 0);
        for (int i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < m; ++j) acc[i + j] += std::uint64_t{a[i]} * b[j] % p;
        }
        for (auto& c : acc) c %= p;
        const auto& f = impl_->modulus;
        for (int k = 2 * m - 2; k >= m; --k) {
            const std::uint64_t c = acc[k];
            if (c == 0) continue;
            acc[k] = 0;
            for (int i = 0; i < m; ++i) acc[k - m + i] = (acc[k - m + i] + (p - c) * f[i]) % p;
        }
        return Elem(acc.begin(), acc.begin() + m);
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        if (impl_->m == 1) return Elem{detail::inv_mod(a[0], impl_->p)};
        detail::gfp::Coeffs poly(a.begin(), a.end());
        detail::gfp::trim(poly);
        auto r = detail::gfp::inverse_mod(poly, impl_->modulus, impl_->p);
        r.resize(impl_->m, 0);
        return r;
    }

    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem pow_wide(Elem base, WideUint e) const {
        Elem result = one();
        while (e) {
            if (e & 1) result = mul(result, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return result;
    }

    /// Negative exponents are powers of the inverse.
    Elem pow(const Elem& base, std::int64_t e) const {
        if (e < 0) return pow_wide(inv(base), static_cast<WideUint>(-(e + 1)) + 1);
        return pow_wide(base, static_cast<WideUint>(e));
    }

    std::string to_string(const Elem& e) const;

private:
    struct Impl {
        std::uint32_t p = 2;
        int m = 1;
        std::vector<std::uint32_t> modulus;
        WideUint order = 2;
    };
    std::shared_ptr<const Impl> impl_;
};

/// A value in a specific field; arithmetic between elements of different
/// fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, Field::Elem value) : field_(std::move(field)), value_(std::move(value)) {}

    const Field& field() const noexcept { return field_; }
    const Field::Elem& value() const noexcept { return value_; }
    const std::vector<std::uint32_t>& coefficients() const noexcept { return value_; }
    bool is_zero() const noexcept { return Field::is_zero(value_); }
    bool is_one() const noexcept { return Field::is_one(value_); }

    FieldElement inv() const { return {field_, field_.inv(value_)}; }
    FieldElement pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.sub(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_.div(a.value_, b.value_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
    }

    Field field_;
    Field::Elem value_;
};

inline std::string Field::to_string(const Elem& e) const {
    const WideUint idx = index_wide(e);
    if (idx == 0) return "0";
    std::string s;
    for (WideUint v = idx; v; v /= 10) s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    return s;
}

/// True iff x has multiplicative order exactly n (n >= 1).
inline bool has_order(const Field& f, const Field::Elem& x, std::uint64_t n) {
    if (!Field::is_one(f.pow_wide(x, n))) return false;
    for (auto r : detail::prime_factors(n))
        if (Field::is_one(f.pow_wide(x, n / r))) return false;
    return true;
}

/// An element of multiplicative order exactly n. Candidates x = 1, 2, ... are
/// taken in element-index order and the first whose ((q-1)/n)-th power has
/// order n is returned; for n = q-1 this is the smallest primitive element.
inline FieldElement nth_root_of_unity(const Field& f, std::uint64_t n) {
    const WideUint group = f.order_wide() - 1;
    if (n == 0 || group % n != 0)
        throw Error(ErrorKind::NoSuchRoot, std::to_string(n) + " does not divide q-1");
    const WideUint cofactor = group / n;
    for (WideUint idx = 1; idx < f.order_wide(); ++idx) {
        auto y = f.pow_wide(f.from_index(idx), cofactor);
        if (has_order(f, y, n)) return {f, std::move(y)};
    }
    throw Error(ErrorKind::NoSuchRoot, "no element of the requested order");
}

} // namespace qcpc
