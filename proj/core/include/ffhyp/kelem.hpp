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

#ifndef FFHYP_KELEM_HPP
#define FFHYP_KELEM_HPP

#include <compare>
#include <cstdint>
#include <optional>

#include "ffhyp/fields.hpp"
#include "ffhyp/polynomial.hpp"

namespace ffhyp {

using FqPoly = Polynomial<FieldElem>;

// Euclid on the raw encodings
template <>
FqPoly gcd<FieldElem>(FqPoly a, FqPoly b);

/*
   Element of K = F_{q'}(tau): a reduced fraction of polynomials in tau with monic
   denominator, so equality is structural.
*/
class KElem {
   public:
    using context_type = FieldRef;

    KElem() = default;
    KElem(const FieldElem& c) : num_(c), den_(FieldElem::one(c.field())) {}  // NOLINT: constants embed
    explicit KElem(FqPoly num);
    KElem(FqPoly num, FqPoly den);

    static KElem zero(FieldRef f) { return KElem(FieldElem::zero(f)); }
    static KElem one(FieldRef f) { return KElem(FieldElem::one(f)); }
    static KElem from_int(FieldRef f, std::int64_t n) { return KElem(FieldElem::from_int(f, n)); }
    static KElem tau(FieldRef f) { return KElem(FqPoly::x(f)); }

    FieldRef context() const noexcept { return num_.context(); }
    FieldRef field() const noexcept { return num_.context(); }
    const FqPoly& num() const noexcept { return num_; }
    const FqPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    std::optional<FieldElem> as_constant() const;

    KElem operator-() const;
    KElem& operator+=(const KElem& o);
    KElem& operator-=(const KElem& o);
    KElem& operator*=(const KElem& o);
    KElem& operator/=(const KElem& o);
    friend KElem operator+(KElem a, const KElem& b) { return a += b; }
    friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
    friend KElem operator*(KElem a, const KElem& b) { return a *= b; }
    friend KElem operator/(KElem a, const KElem& b) { return a /= b; }

    KElem inverse() const;
    KElem pow(std::int64_t e) const;
    // x^(q^n); for n < 0 the unique q^|n|-th root, or NoRoot
    KElem frob(std::int64_t n) const;

    friend bool operator==(const KElem& a, const KElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const KElem& a, const KElem& b) {
        if (auto c = a.den_ <=> b.den_; c != 0) return c;
        return a.num_ <=> b.num_;
    }

   private:
    struct Reduced {};
    KElem(FqPoly num, FqPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    FqPoly num_;
    FqPoly den_;
};

KElem frobenius(const KElem& x, std::int64_t n);

// Euclid over K[t], skipped when a reduction modulo a prime of F_{q'}[tau] proves coprimality
template <>
Polynomial<KElem> gcd<KElem>(Polynomial<KElem> a, Polynomial<KElem> b);

// coefficientwise frobenius of a polynomial in tau: c -> c^(q^n), tau^i -> tau^(i q^n)
FqPoly frobenius_tau_poly(const FqPoly& a, std::int64_t n);

}  // namespace ffhyp

#endif
