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
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace qcpc {

/// Dense univariate polynomial over a finite field. Coefficients ascend in
/// degree and are kept trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    using Elem = Field::Elem;

    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    explicit Poly(Field field) : field_(std::move(field)) {}

    Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c.size() != static_cast<std::size_t>(field_.degree()))
                throw Error(ErrorKind::FieldMismatch, "coefficient has wrong width for field");
        trim();
    }

    /// Coefficients given as integers, mapped through Z -> GF(p).
    static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
        std::vector<Elem> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(field.from_int(v));
        return Poly(field, std::move(c));
    }

    static Poly constant(const Field& field, Elem c) { return Poly(field, std::vector<Elem>{std::move(c)}); }

    static Poly monomial(const Field& field, std::size_t k, Elem c) {
        std::vector<Elem> coeffs(k + 1, field.zero());
        coeffs[k] = std::move(c);
        return Poly(field, std::move(coeffs));
    }

    static Poly x_pow(const Field& field, std::size_t k) { return monomial(field, k, field.one()); }

    /// X^n - 1.
    static Poly xn_minus_one(const Field& field, std::size_t n) {
        std::vector<Elem> coeffs(n + 1, field.zero());
        coeffs[0] = field.neg(field.one());
        coeffs[n] = field.add(coeffs[n], field.one());
        return Poly(field, std::move(coeffs));
    }

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

    Elem coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }
    const Elem& leading() const {
        if (coeffs_.empty()) throw Error(ErrorKind::DivisionByZero, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && Field::is_one(coeffs_.back()); }
    bool is_one() const { return coeffs_.size() == 1 && Field::is_one(coeffs_[0]); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading()));
    }

    Poly scaled(const Elem& c) const {
        if (Field::is_zero(c)) return Poly(field_);
        std::vector<Elem> out;
        out.reserve(coeffs_.size());
        for (const auto& a : coeffs_) out.push_back(field_.mul(a, c));
        return Poly(field_, std::move(out));
    }

    /// X^k * this.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<Elem> out(k, field_.zero());
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Poly(field_, std::move(out));
    }

    Elem evaluate(const Elem& x) const {
        Elem acc = field_.zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
        return acc;
    }

    /// Remainder modulo X^n - 1 by folding exponents.
    Poly mod_xn_minus_one(std::size_t n) const {
        if (n == 0) throw Error(ErrorKind::InvalidArgument, "modulus X^0 - 1 is zero");
        if (coeffs_.size() <= n) return *this;
        std::vector<Elem> out(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n));
        for (std::size_t k = n; k < coeffs_.size(); ++k) out[k % n] = field_.add(out[k % n], coeffs_[k]);
        return Poly(field_, std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_same(a, b);
        const auto& f = a.field_;
        const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
        const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
        std::vector<Elem> out = longer.coeffs_;
        for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) out[i] = f.add(out[i], shorter.coeffs_[i]);
        return Poly(f, std::move(out));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Elem> out;
        out.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) out.push_back(a.field_.neg(c));
        return Poly(a.field_, std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        const auto& f = a.field_;
        if (a.is_zero() || b.is_zero()) return Poly(f);
        const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (f.is_prime_field()) {
            const std::uint64_t p = f.characteristic();
            std::vector<std::uint64_t> acc(n, 0);
            for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
                const std::uint64_t ai = a.coeffs_[i][0];
                if (ai == 0) continue;
                for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] = (acc[i + j] + ai * b.coeffs_[j][0]) % p;
            }
            std::vector<Elem> out;
            out.reserve(n);
            for (auto v : acc) out.push_back(Elem{static_cast<std::uint32_t>(v)});
            return Poly(f, std::move(out));
        }
        std::vector<Elem> out(n, f.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (Field::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return Poly(f, std::move(out));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

private:
    friend std::pair<Poly, Poly> divmod(const Poly& u, const Poly& v);

    static void check_same(const Poly& a, const Poly& b) {
        if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    }

    void trim() {
        while (!coeffs_.empty() && Field::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    Field field_;
    std::vector<Elem> coeffs_;
};

/// Quotient and remainder with u = q*v + r, deg r < deg v.
inline std::pair<Poly, Poly> divmod(const Poly& u, const Poly& v) {
    Poly::check_same(u, v);
    if (v.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const auto& f = u.field();
    if (u.degree() < v.degree()) return {Poly(f), u};
    const int dv = v.degree();
    const std::size_t qlen = static_cast<std::size_t>(u.degree() - dv + 1);
    if (f.is_prime_field()) {
        const std::uint32_t p = f.characteristic();
        std::vector<std::uint32_t> r, d;
        for (const auto& c : u.coeffs_) r.push_back(c[0]);
        for (const auto& c : v.coeffs_) d.push_back(c[0]);
        const std::uint32_t lead_inv = detail::inv_mod(d.back(), p);
        std::vector<Field::Elem> q(qlen, Field::Elem{0});
        for (int k = u.degree(); k >= dv; --k) {
            const std::uint32_t c = detail::mul_mod(r[k], lead_inv, p);
            if (c == 0) continue;
            q[k - dv][0] = c;
            const std::uint64_t neg = p - c;
            for (int i = 0; i <= dv; ++i) r[k - dv + i] = static_cast<std::uint32_t>((r[k - dv + i] + neg * d[i]) % p);
        }
        std::vector<Field::Elem> rem;
        rem.reserve(static_cast<std::size_t>(dv));
        for (int i = 0; i < dv; ++i) rem.push_back(Field::Elem{r[i]});
        return {Poly(f, std::move(q)), Poly(f, std::move(rem))};
    }
    std::vector<Field::Elem> r = u.coeffs_;
    std::vector<Field::Elem> q(qlen, f.zero());
    const auto lead_inv = f.inv(v.leading());
    for (int k = u.degree(); k >= dv; --k) {
        if (Field::is_zero(r[k])) continue;
        auto c = f.mul(r[k], lead_inv);
        for (int i = 0; i <= dv; ++i) r[k - dv + i] = f.sub(r[k - dv + i], f.mul(c, v.coeffs_[i]));
        q[k - dv] = std::move(c);
    }
    r.resize(static_cast<std::size_t>(dv));
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

inline Poly operator%(const Poly& u, const Poly& v) { return divmod(u, v).second; }
inline Poly operator/(const Poly& u, const Poly& v) { return divmod(u, v).first; }

inline bool divides(const Poly& d, const Poly& u) {
    if (d.is_zero()) return u.is_zero();
    return (u % d).is_zero();
}

/// Monic greatest common divisor.
inline Poly gcd(Poly u, Poly v) {
    if (u.is_zero() && v.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
    while (!v.is_zero()) {
        Poly r = u % v;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

struct EgcdResult {
    Poly g; ///< monic gcd
    Poly s; ///< cofactor of u
    Poly t; ///< cofactor of v
};

/// s*u + t*v = g with g = gcd(u, v) monic and the minimal cofactors produced
/// by the Euclidean remainder sequence.
inline EgcdResult egcd(const Poly& u, const Poly& v) {
    if (u.is_zero() && v.is_zero()) throw Error(ErrorKind::BothZero, "egcd(0, 0) is undefined");
    const auto& f = u.field();
    Poly r0 = u, r1 = v;
    Poly s0 = Poly::constant(f, f.one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const auto inv = f.inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Least nonnegative residue of e modulo n.
inline std::int64_t residue(std::int64_t e, std::int64_t n) {
    const std::int64_t r = e % n;
    return r < 0 ? r + n : r;
}

/// p(X^e) reduced modulo X^N - 1, with e taken as its least nonnegative
/// residue mod N. Monomials that collide are summed.
inline Poly modular_substitute(const Poly& p, std::int64_t e, std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "substitution modulus must be positive");
    const auto& f = p.field();
    if (p.is_zero()) return p;
    const std::int64_t er = residue(e, n);
    std::vector<Field::Elem> out(static_cast<std::size_t>(n), f.zero());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (Field::is_zero(p.coeffs()[k])) continue;
        const auto idx = static_cast<std::size_t>(
            static_cast<std::int64_t>((static_cast<__int128>(static_cast<std::int64_t>(k) % n) * er) % n));
        out[idx] = f.add(out[idx], p.coeffs()[k]);
    }
    return Poly(f, std::move(out));
}

/// For y ≡ a*ell (mod m*ell): returns a mod m after checking that ell | y.
inline std::int64_t split_residue(std::int64_t y, std::int64_t ell, std::int64_t m) {
    if (ell < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "ell and m must be positive");
    if (y % ell != 0) throw Error(ErrorKind::NotADivisor, "ell does not divide y");
    return residue(y / ell, m);
}

} // namespace qcpc
