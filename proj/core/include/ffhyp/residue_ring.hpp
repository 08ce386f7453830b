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

#ifndef FFHYP_RESIDUE_RING_HPP
#define FFHYP_RESIDUE_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>

#include "ffhyp/kelem.hpp"

namespace ffhyp {

// F_{q'}[t]/(p) for an irreducible p; the residue field of a closed point
struct ResidueRing {
    FqPoly modulus;
};

class ResidueElem {
   public:
    using context_type = const ResidueRing*;

    ResidueElem() = default;
    ResidueElem(context_type ring, FqPoly v) : ring_(ring), v_(std::move(v) % ring->modulus) {}
    // embeds a constant
    ResidueElem(context_type ring, const FieldElem& c) : ring_(ring), v_(c) {}

    static ResidueElem zero(context_type r) { return {r, FieldElem::zero(r->modulus.context())}; }
    static ResidueElem one(context_type r) { return {r, FieldElem::one(r->modulus.context())}; }
    static ResidueElem from_int(context_type r, std::int64_t n) {
        return {r, FieldElem::from_int(r->modulus.context(), n)};
    }
    // class of t
    static ResidueElem generator(context_type r) { return {r, FqPoly::x(r->modulus.context())}; }

    context_type context() const noexcept { return ring_; }
    const FqPoly& value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_.is_zero(); }
    bool is_one() const noexcept { return v_.is_one(); }

    ResidueElem operator-() const { return {ring_, -v_}; }
    ResidueElem& operator+=(const ResidueElem& o) {
        v_ += o.v_;
        return *this;
    }
    ResidueElem& operator-=(const ResidueElem& o) {
        v_ -= o.v_;
        return *this;
    }
    ResidueElem& operator*=(const ResidueElem& o) {
        v_ = (v_ * o.v_) % ring_->modulus;
        return *this;
    }
    ResidueElem& operator/=(const ResidueElem& o) {
        v_ = (v_ * inverse_mod(o.v_, ring_->modulus)) % ring_->modulus;
        return *this;
    }
    friend ResidueElem operator+(ResidueElem a, const ResidueElem& b) { return a += b; }
    friend ResidueElem operator-(ResidueElem a, const ResidueElem& b) { return a -= b; }
    friend ResidueElem operator*(ResidueElem a, const ResidueElem& b) { return a *= b; }
    friend ResidueElem operator/(ResidueElem a, const ResidueElem& b) { return a /= b; }

    friend bool operator==(const ResidueElem& a, const ResidueElem& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const ResidueElem& a, const ResidueElem& b) { return a.v_ <=> b.v_; }

   private:
    context_type ring_ = nullptr;
    FqPoly v_;
};

// trace from F_q[t]/(p) down to F_q, p irreducible over F_q of degree d
FieldElem trace_to_base(const ResidueElem& x);

}  // namespace ffhyp

#endif
