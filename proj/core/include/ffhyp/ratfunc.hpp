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

#ifndef FFHYP_RATFUNC_HPP
#define FFHYP_RATFUNC_HPP

#include <cstdint>
#include <memory>
#include <optional>

#include "ffhyp/divisor.hpp"
#include "ffhyp/kelem.hpp"
#include "ffhyp/polynomial.hpp"

namespace ffhyp {

/*
   Rational function in t over a coefficient field R (F_{q'} or K), kept as a reduced
   fraction with monic denominator. A function built from a divisor remembers that
   divisor; products, quotients, powers, scalings and twists carry it along.
*/
template <class R>
class RationalFunction {
   public:
    using coeff_type = R;
    using context_type = typename R::context_type;
    using poly_type = Polynomial<R>;

    RationalFunction() = default;
    explicit RationalFunction(context_type ctx) : num_(ctx), den_(R::one(ctx)) {}
    explicit RationalFunction(const R& c) : num_(c), den_(R::one(c.context())) {}
    explicit RationalFunction(poly_type num) : num_(std::move(num)), den_(R::one(num_.context())) {}
    RationalFunction(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(Errc::InvalidArgument, "rational function with zero denominator");
        normalize();
    }

    static RationalFunction zero(context_type ctx) { return RationalFunction(ctx); }
    static RationalFunction one(context_type ctx) { return RationalFunction(R::one(ctx)); }
    static RationalFunction t(context_type ctx) { return RationalFunction(poly_type::x(ctx)); }

    context_type context() const noexcept { return num_.context(); }
    const poly_type& num() const noexcept { return num_; }
    const poly_type& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    // deg den - deg num
    std::int64_t ord_infinity() const {
        if (is_zero()) fail(Errc::InvalidArgument, "order of the zero function");
        return den_.degree() - num_.degree();
    }

    // retained divisor, or the empty divisor for a nonzero constant
    std::optional<Divisor> factored() const {
        if (divisor_) return *divisor_;
        if (is_constant() && !is_zero()) return Divisor();
        return std::nullopt;
    }
    RationalFunction with_divisor(Divisor d) const {
        RationalFunction out(*this);
        out.divisor_ = std::make_shared<const Divisor>(std::move(d));
        return out;
    }
    RationalFunction without_divisor() const {
        RationalFunction out(*this);
        out.divisor_.reset();
        return out;
    }

    RationalFunction operator-() const {
        RationalFunction out(*this);
        out.num_ = -out.num_;
        return out;
    }
    RationalFunction& operator+=(const RationalFunction& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (den_ == o.den_) {
            num_ += o.num_;
            divisor_.reset();
            if (!den_.is_one()) normalize();
            return *this;
        }
        poly_type g = gcd(den_, o.den_);
        poly_type a = o.den_ / g;
        num_ = num_ * a + o.num_ * (den_ / g);
        den_ = den_ * a;
        divisor_.reset();
        normalize();
        return *this;
    }
    RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
    RationalFunction& operator*=(const RationalFunction& o) {
        auto d = combine(o, 1);
        if (is_zero() || o.is_zero()) {
            *this = zero(context() ? context() : o.context());
            return *this;
        }
        poly_type g1 = den_.is_one() ? den_ : gcd(o.num_, den_);
        poly_type g2 = o.den_.is_one() ? o.den_ : gcd(num_, o.den_);
        num_ = (num_ / g2) * (o.num_ / g1);
        den_ = (den_ / g1) * (o.den_ / g2);
        make_monic();
        set_divisor(std::move(d));
        return *this;
    }
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }
    RationalFunction& operator*=(const R& c) {
        if (c.is_zero()) return *this = zero(context());
        num_ *= c;
        return *this;
    }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator*(const R& c, RationalFunction f) { return f *= c; }
    friend RationalFunction operator*(RationalFunction f, const R& c) { return f *= c; }

    RationalFunction inverse() const {
        if (is_zero()) fail(Errc::InvalidArgument, "inverse of the zero function");
        RationalFunction out;
        R inv = R::one(context()) / num_.lead();
        out.num_ = den_ * inv;
        out.den_ = num_ * inv;
        if (divisor_) out.divisor_ = std::make_shared<const Divisor>(-*divisor_);
        return out;
    }

    RationalFunction pow(std::int64_t e) const {
        const RationalFunction base = e < 0 ? inverse() : *this;
        const std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
        RationalFunction out;
        out.num_ = base.num_.pow(k);
        out.den_ = base.den_.pow(k);
        if (base.divisor_) out.divisor_ = std::make_shared<const Divisor>(static_cast<std::int64_t>(k) * *base.divisor_);
        return out;
    }

    // value at x; PoleAtPoint if x is a pole
    R eval(const R& x) const {
        R d = den_.eval(x);
        if (d.is_zero()) fail(Errc::PoleAtPoint, "evaluation at a pole");
        return num_.eval(x) / d;
    }
    // value at infinity
    R eval_infinity() const {
        if (num_.degree() > den_.degree()) fail(Errc::PoleAtPoint, "evaluation at a pole at infinity");
        if (num_.degree() < den_.degree()) return R::zero(context());
        return num_.lead() / den_.lead();
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // internal: replace the divisor bookkeeping
    void set_divisor(std::optional<Divisor> d) {
        if (d)
            divisor_ = std::make_shared<const Divisor>(std::move(*d));
        else
            divisor_.reset();
    }

   private:
    std::optional<Divisor> combine(const RationalFunction& o, int sign) const {
        auto a = factored();
        auto b = o.factored();
        if (!a || !b) return std::nullopt;
        if (sign > 0) return *a + *b;
        return *a - *b;
    }
    void make_monic() {
        if (!den_.is_monic()) {
            R inv = R::one(context()) / den_.lead();
            num_ *= inv;
            den_ *= inv;
        }
    }
    void normalize() {
        if (num_.is_zero()) {
            den_ = poly_type(R::one(den_.context()));
            return;
        }
        if (den_.degree() > 0) {
            poly_type g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        make_monic();
    }

    poly_type num_;
    poly_type den_;
    std::shared_ptr<const Divisor> divisor_;
};

using RatFunc = RationalFunction<KElem>;
using RatFuncFq = RationalFunction<FieldElem>;
using KPoly = Polynomial<KElem>;

inline RatFunc operator*(const FieldElem& c, const RatFunc& f) { return KElem(c) * f; }

// F_{q'} coefficients into K
KPoly to_K(const FqPoly& a);
RatFunc to_K(const RatFuncFq& f);
// back to F_{q'} coefficients when every coefficient is constant
std::optional<FqPoly> to_fq(const KPoly& a);
std::optional<RatFuncFq> to_fq(const RatFunc& f);

// value of an F_{q'}-coefficient function at a point of K
KElem eval_in_K(const RatFuncFq& f, const KElem& x);
KElem eval_in_K(const FqPoly& f, const KElem& x);
KElem rf_eval(const RatFunc& f, const KElem& x);
KElem rf_eval_infinity(const RatFunc& f);

// coefficients through frobenius(., n), t fixed
RatFunc rf_twist(const RatFunc& f, std::int64_t n);
RatFuncFq rf_twist(const RatFuncFq& f, std::int64_t n);
KPoly poly_twist(const KPoly& a, std::int64_t n);

// f^(q^i): coefficients through frobenius(., i) and t -> t^(q^i)
RatFuncFq qpower(const RatFuncFq& f, int i);
RatFunc qpower(const RatFunc& f, int i);
FqPoly qpower(const FqPoly& a, int i);

// F_{q'}-coefficient data viewed over R
template <class R>
RationalFunction<R> embed(const RatFuncFq& f);
template <>
inline RatFuncFq embed<FieldElem>(const RatFuncFq& f) {
    return f;
}
template <>
inline RatFunc embed<KElem>(const RatFuncFq& f) {
    return to_K(f);
}
template <class R>
Polynomial<R> embed_poly(const FqPoly& f);
template <>
inline FqPoly embed_poly<FieldElem>(const FqPoly& f) {
    return f;
}
template <>
inline KPoly embed_poly<KElem>(const FqPoly& f) {
    return to_K(f);
}

// whether all coefficients lie in F_q
bool coefficients_in_base(const RatFuncFq& f);

}  // namespace ffhyp

#endif
