/*
   Copyright 2026 The ffhyp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFHYP_POLYNOMIAL_HPP
#define FFHYP_POLYNOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "ffhyp/error.hpp"

namespace ffhyp {

/*
   Dense univariate polynomial over a coefficient field R. R provides context_type,
   zero(ctx), one(ctx), context(), is_zero(), the field operations and ordering. The
   zero polynomial has degree -1. Coefficients are stored low to high without trailing
   zeros.
*/
template <class R>
class Polynomial {
   public:
    using coeff_type = R;
    using context_type = typename R::context_type;

    Polynomial() = default;
    explicit Polynomial(context_type ctx) : ctx_(ctx) {}
    Polynomial(context_type ctx, std::vector<R> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const R& c) : ctx_(c.context()) {
        if (!c.is_zero()) c_.push_back(c);
    }

    static Polynomial monomial(const R& c, std::size_t k) {
        Polynomial out(c.context());
        if (c.is_zero()) return out;
        out.c_.assign(k + 1, R::zero(c.context()));
        out.c_[k] = c;
        return out;
    }
    static Polynomial x(context_type ctx) { return monomial(R::one(ctx), 1); }
    // t - a
    static Polynomial linear(const R& a) { return Polynomial(a.context(), {-a, R::one(a.context())}); }

    context_type context() const noexcept { return ctx_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
    const std::vector<R>& coeffs() const noexcept { return c_; }

    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R::zero(ctx_); }
    R operator[](std::size_t i) const { return coeff(i); }
    R lead() const { return c_.empty() ? R::zero(ctx_) : c_.back(); }
    R constant_term() const { return coeff(0); }

    void set_coeff(std::size_t i, const R& v) {
        if (i >= c_.size()) {
            if (v.is_zero()) return;
            c_.resize(i + 1, R::zero(ctx_));
        }
        c_[i] = v;
        trim();
    }

    Polynomial operator-() const {
        Polynomial out(*this);
        for (auto& a : out.c_) a = -a;
        return out;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R::zero(ctx_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R::zero(ctx_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const R& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_) a *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
    friend Polynomial operator*(const R& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out(a.ctx_ ? a.ctx_ : b.ctx_);
        if (a.is_zero() || b.is_zero()) return out;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, R::zero(out.ctx_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        out.trim();
        return out;
    }

    // quotient and remainder; divisor must be nonzero
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) fail(Errc::InvalidArgument, "polynomial division by zero");
        Polynomial r(*this);
        Polynomial q(ctx_);
        if (r.degree() < d.degree()) return {q, r};
        const std::size_t dn = d.c_.size() - 1;
        const R inv = d.c_.back().is_one() ? d.c_.back() : R::one(ctx_) / d.c_.back();
        q.c_.assign(r.c_.size() - dn, R::zero(ctx_));
        for (std::size_t k = r.c_.size(); k-- > dn;) {
            if (r.c_[k].is_zero()) continue;
            R f = r.c_[k] * inv;
            q.c_[k - dn] = f;
            for (std::size_t j = 0; j <= dn; ++j) r.c_[k - dn + j] -= f * d.c_[j];
        }
        r.c_.resize(dn);
        r.trim();
        q.trim();
        return {q, r};
    }
    // *this %= d without forming the quotient
    void reduce_mod(const Polynomial& d) {
        if (d.is_zero()) fail(Errc::InvalidArgument, "polynomial division by zero");
        if (c_.size() < d.c_.size()) return;
        const std::size_t dn = d.c_.size() - 1;
        const R inv = d.c_.back().is_one() ? d.c_.back() : R::one(ctx_) / d.c_.back();
        for (std::size_t k = c_.size(); k-- > dn;) {
            if (c_[k].is_zero()) continue;
            const R f = c_[k] * inv;
            for (std::size_t j = 0; j < dn; ++j) c_[k - dn + j] -= f * d.c_[j];
        }
        c_.resize(dn, R::zero(ctx_));
        trim();
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

    // exact division, fails if the remainder is nonzero
    Polynomial divexact(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) fail(Errc::InvalidArgument, "inexact polynomial division");
        return q;
    }
    bool divides(const Polynomial& a) const { return (a % *this).is_zero(); }

    Polynomial monic() const {
        if (is_zero() || is_monic()) return *this;
        return *this * (R::one(ctx_) / lead());
    }

    R eval(const R& x) const {
        R acc = R::zero(ctx_);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Polynomial derivative() const {
        Polynomial out(ctx_);
        if (c_.size() <= 1) return out;
        out.c_.resize(c_.size() - 1, R::zero(ctx_));
        for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = c_[i] * R::from_int(ctx_, static_cast<std::int64_t>(i));
        out.trim();
        return out;
    }

    Polynomial pow(std::uint64_t e) const {
        Polynomial acc(R::one(ctx_));
        Polynomial base(*this);
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    // p(t^k)
    Polynomial inflate(std::size_t k) const {
        if (k == 1 || c_.size() <= 1) return *this;
        Polynomial out(ctx_);
        out.c_.assign((c_.size() - 1) * k + 1, R::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * k] = c_[i];
        return out;
    }

    // p(t + a)
    Polynomial shift(const R& a) const {
        Polynomial out(*this);
        const std::size_t n = out.c_.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j-- > i;) out.c_[j] += a * out.c_[j + 1];
        out.trim();
        return out;
    }

    // t^deg p(1/t) with respect to the given degree
    Polynomial reverse(int deg) const {
        Polynomial out(ctx_);
        if (deg < 0) return out;
        out.c_.assign(static_cast<std::size_t>(deg) + 1, R::zero(ctx_));
        for (std::size_t i = 0; i < c_.size() && static_cast<int>(i) <= deg; ++i) out.c_[deg - i] = c_[i];
        out.trim();
        return out;
    }

    // first n coefficients
    Polynomial truncate(std::size_t n) const {
        if (c_.size() <= n) return *this;
        Polynomial out(*this);
        out.c_.resize(n);
        out.trim();
        return out;
    }

    template <class F>
    auto map(F&& f) const {
        using S = decltype(f(std::declval<R>()));
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(f(a));
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    context_type ctx_{};
    std::vector<R> c_;
};

template <class R>
Polynomial<R> euclid_gcd(Polynomial<R> a, Polynomial<R> b) {
    while (!b.is_zero()) {
        a.reduce_mod(b);
        std::swap(a, b);
    }
    return a.monic();
}

template <class R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
    return euclid_gcd(std::move(a), std::move(b));
}

// returns (g, s, u) with s a + u b = g, g monic
template <class R>
std::tuple<Polynomial<R>, Polynomial<R>, Polynomial<R>> ext_gcd(const Polynomial<R>& a, const Polynomial<R>& b) {
    using P = Polynomial<R>;
    auto ctx = a.context() ? a.context() : b.context();
    P r0 = a, r1 = b;
    P s0(R::one(ctx)), s1(ctx), u0(ctx), u1(R::one(ctx));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        P s2 = s0 - q * s1;
        P u2 = u0 - q * u1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {r0, s0, u0};
    R inv = R::one(ctx) / r0.lead();
    return {r0 * inv, s0 * inv, u0 * inv};
}

// inverse of a modulo m; a must be coprime to m
template <class R>
Polynomial<R> inverse_mod(const Polynomial<R>& a, const Polynomial<R>& m) {
    auto [g, s, u] = ext_gcd(a % m, m);
    if (g.degree() != 0) fail(Errc::InvalidArgument, "polynomial not invertible modulo the given modulus");
    return s % m;
}

template <class R>
Polynomial<R> mul_mod(const Polynomial<R>& a, const Polynomial<R>& b, const Polynomial<R>& m) {
    return (a * b) % m;
}

template <class R>
Polynomial<R> pow_mod(Polynomial<R> base, std::uint64_t e, const Polynomial<R>& m) {
    Polynomial<R> acc = Polynomial<R>(R::one(m.context())) % m;
    base = base % m;
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, m);
        e >>= 1;
        if (e) base = mul_mod(base, base, m);
    }
    return acc;
}

// multiplicity of the factor pi in a (a nonzero), with the cofactor
template <class R>
std::pair<int, Polynomial<R>> split_valuation(Polynomial<R> a, const Polynomial<R>& pi) {
    int k = 0;
    while (!a.is_zero()) {
        auto [q, r] = a.divmod(pi);
        if (!r.is_zero()) break;
        a = std::move(q);
        ++k;
    }
    return {k, a};
}

template <class R>
Polynomial<R> lcm(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<R>(a.context());
    return (a / gcd(a, b) * b).monic();
}

}  // namespace ffhyp

#endif
