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

#ifndef FFHYP_FIELDS_HPP
#define FFHYP_FIELDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "ffhyp/error.hpp"

namespace ffhyp {

class FieldDesc;
using FieldRef = const FieldDesc*;

/*
   A finite field F_{p^m} given by a monic irreducible modulus over F_p. Elements are
   encoded as integers sum c_i p^i where c_i are the coefficients of the residue class
   in u. The field also fixes a subfield F_q, q = p^base_m, whose q-power Frobenius is
   the twisting map on constants.

   Descriptors are interned: make_field returns the same pointer for equal arguments,
   and descriptors live for the rest of the program.
*/
class FieldDesc {
   public:
    using value_type = std::uint32_t;

    std::uint32_t p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    int base_m() const noexcept { return base_m_; }
    int ext_degree() const noexcept { return m_ / base_m_; }
    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t base_order() const noexcept { return base_order_; }
    // low to high, monic, length m + 1
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    value_type add(value_type a, value_type b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            value_type s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
        return add_digits(a, b);
    }
    value_type neg(value_type a) const noexcept { return neg_[a]; }
    value_type sub(value_type a, value_type b) const noexcept { return add(a, neg_[b]); }
    value_type mul(value_type a, value_type b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    value_type inv(value_type a) const {
        if (a == 0) fail(Errc::InvalidArgument, "inverse of zero in a finite field");
        return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    value_type pow(value_type a, std::int64_t e) const;
    // a^(p^k)
    value_type frob_p(value_type a, std::int64_t k) const;
    // a^(q^n), n may be negative
    value_type frob_q(value_type a, std::int64_t n) const { return frob_p(a, n * base_m_); }

    value_type from_int(std::int64_t n) const noexcept;
    // class of u
    value_type generator() const noexcept { return m_ == 1 ? modulus_root_ : p_; }
    std::vector<std::uint32_t> digits(value_type a) const;
    value_type from_digits(const std::vector<std::uint32_t>& c) const;

    // sorted encodings of F_q
    const std::vector<value_type>& base_elements() const noexcept { return base_elements_; }
    bool in_base(value_type a) const noexcept { return frob_q(a, 1) == a; }

    // exponent of a primitive element, used to order and enumerate
    value_type primitive() const noexcept { return exp_[1]; }

   private:
    friend FieldRef make_field(std::uint32_t, int, std::optional<std::vector<std::uint32_t>>, int);
    FieldDesc(std::uint32_t p, int m, std::vector<std::uint32_t> modulus, int base_m);

    value_type add_digits(value_type a, value_type b) const noexcept;

    std::uint32_t p_;
    int m_;
    int base_m_;
    std::uint32_t order_;
    std::uint32_t base_order_;
    std::vector<std::uint32_t> modulus_;
    value_type modulus_root_ = 0;
    std::vector<value_type> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<value_type> neg_;
    std::vector<std::uint16_t> add_table_;
    std::vector<value_type> base_elements_;
};

/*
   Returns the field F_{p^m} with subfield F_{p^base_m} (base_m = 0 means base_m = m).
   Without a modulus, the smallest irreducible in the order of the integer encoding of
   its lower coefficients is used, e.g. u^2+u+1 for F_4 and u^3+u+1 for F_8.
*/
FieldRef make_field(std::uint32_t p, int m, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                    int base_m = 0);

// Constants field F_{q^ext} over F_q with q = p^base_m, default modulus.
FieldRef make_constants_field(std::uint32_t p, int base_m, int ext);

// Same field, different designated subfield size.
FieldRef with_base(FieldRef f, int base_m);

std::vector<std::uint32_t> default_modulus(std::uint32_t p, int m);
bool is_prime(std::uint64_t n) noexcept;
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

class FieldElem {
   public:
    using context_type = FieldRef;

    FieldElem() = default;
    FieldElem(FieldRef f, std::uint32_t v) noexcept : f_(f), v_(v) {}

    static FieldElem zero(FieldRef f) noexcept { return {f, 0}; }
    static FieldElem one(FieldRef f) noexcept { return {f, 1}; }
    static FieldElem from_int(FieldRef f, std::int64_t n) noexcept { return {f, f->from_int(n)}; }
    static FieldElem generator(FieldRef f) noexcept { return {f, f->generator()}; }

    FieldRef context() const noexcept { return f_; }
    FieldRef field() const noexcept { return f_; }
    std::uint32_t value() const noexcept { return v_; }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool in_base() const noexcept { return f_->in_base(v_); }

    FieldElem operator-() const noexcept { return {f_, f_->neg(v_)}; }
    FieldElem& operator+=(const FieldElem& o) noexcept {
        v_ = f_->add(v_, o.v_);
        return *this;
    }
    FieldElem& operator-=(const FieldElem& o) noexcept {
        v_ = f_->sub(v_, o.v_);
        return *this;
    }
    FieldElem& operator*=(const FieldElem& o) noexcept {
        v_ = f_->mul(v_, o.v_);
        return *this;
    }
    FieldElem& operator/=(const FieldElem& o) {
        v_ = f_->div(v_, o.v_);
        return *this;
    }
    friend FieldElem operator+(FieldElem a, const FieldElem& b) noexcept { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) noexcept { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) noexcept { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    FieldElem inverse() const { return {f_, f_->inv(v_)}; }
    FieldElem pow(std::int64_t e) const { return {f_, f_->pow(v_, e)}; }
    // x^(q^n)
    FieldElem frob(std::int64_t n) const { return {f_, f_->frob_q(v_, n)}; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept { return a.v_ == b.v_ && a.f_ == b.f_; }
    friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) noexcept {
        return a.v_ <=> b.v_;
    }

   private:
    FieldRef f_ = nullptr;
    std::uint32_t v_ = 0;
};

// All elements of F_q (the subfield), sorted by encoding.
std::vector<FieldElem> base_field_elements(FieldRef f);
// All nonzero elements of F_q.
std::vector<FieldElem> base_field_units(FieldRef f);

}  // namespace ffhyp

#endif
