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

#ifndef FFHYP_CONDUCTOR_HPP
#define FFHYP_CONDUCTOR_HPP

#include <optional>
#include <vector>

#include "ffhyp/func.hpp"

namespace ffhyp {

/*
   Element of the finite algebra of functions on D. One component per point of supp D,
   in ascending point order: the class of f in R[t]/(p^n) at a finite point, and the
   truncated expansion in s = 1/t, a class in R[s]/(s^n), at infinity.
*/
template <class R>
class ODElement {
   public:
    struct Component {
        Point point;
        Polynomial<R> modulus;
        Polynomial<R> value;
    };

    ODElement() = default;
    explicit ODElement(std::vector<Component> c) : c_(std::move(c)) {}

    const std::vector<Component>& components() const noexcept { return c_; }

    bool is_unit() const;
    bool is_one() const;
    // the common constant when every component is the image of one nonzero constant
    std::optional<R> scalar() const;

    friend ODElement operator+(const ODElement& a, const ODElement& b) { return combine(a, b, false); }
    friend ODElement operator*(const ODElement& a, const ODElement& b) { return combine(a, b, true); }
    friend bool operator==(const ODElement& a, const ODElement& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i].point == b.c_[i].point) || !(a.c_[i].modulus == b.c_[i].modulus) ||
                !(a.c_[i].value == b.c_[i].value))
                return false;
        return true;
    }

   private:
    static ODElement combine(const ODElement& a, const ODElement& b, bool mul);
    std::vector<Component> c_;
};

template <class R>
ODElement<R> restrict_to_D(const RationalFunction<R>& f, const Divisor& D);

template <class R>
bool is_one_mod_D(const RationalFunction<R>& f, const Divisor& D);

// f with (f) = E1 - E2 and f = 1 on D, when E1 and E2 are equivalent modulo D
template <class R>
std::optional<RationalFunction<R>> equivalent_mod_D(const Divisor& E1, const Divisor& E2, const Divisor& D,
                                                     typename R::context_type ctx);

}  // namespace ffhyp

#endif
