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

#include "ffhyp/conductor.hpp"

#include "ffhyp/rr.hpp"

namespace ffhyp {

template <class R>
bool ODElement<R>::is_unit() const {
    for (const auto& c : c_)
        if (gcd(c.value, c.modulus).degree() != 0) return false;
    return true;
}

template <class R>
bool ODElement<R>::is_one() const {
    for (const auto& c : c_)
        if (!c.value.is_one()) return false;
    return true;
}

template <class R>
std::optional<R> ODElement<R>::scalar() const {
    if (c_.empty()) return std::nullopt;
    const Polynomial<R>& anchor = c_.front().value;
    if (anchor.degree() != 0) return std::nullopt;
    for (const auto& c : c_)
        if (!(c.value == anchor)) return std::nullopt;
    return anchor.coeff(0);
}

template <class R>
ODElement<R> ODElement<R>::combine(const ODElement& a, const ODElement& b, bool mul) {
    if (a.c_.size() != b.c_.size()) fail(Errc::InvalidArgument, "restrictions to different conductors");
    std::vector<Component> out;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const auto& x = a.c_[i];
        const auto& y = b.c_[i];
        if (!(x.point == y.point) || !(x.modulus == y.modulus))
            fail(Errc::InvalidArgument, "restrictions to different conductors");
        out.push_back({x.point, x.modulus, mul ? (x.value * y.value) % x.modulus : x.value + y.value});
    }
    return ODElement(std::move(out));
}

template <class R>
ODElement<R> restrict_to_D(const RationalFunction<R>& f, const Divisor& D) {
    validate_conductor(D);
    const auto ctx = f.den().context();
    std::vector<typename ODElement<R>::Component> out;
    for (const auto& [P, n] : D.terms()) {
        const auto un = static_cast<std::uint64_t>(n);
        if (P.is_infinity()) {
            const int a = f.num().degree(), b = f.den().degree();
            if (a > b) fail(Errc::PoleOnConductor, "function has a pole at infinity");
            Polynomial<R> mod = Polynomial<R>::monomial(R::one(ctx), un);
            Polynomial<R> val(ctx);
            if (!f.is_zero()) {
                // f(1/s) = s^(b-a) num^(s) / den^(s)
                Polynomial<R> g = f.num().reverse(a) * Polynomial<R>::monomial(R::one(ctx), static_cast<std::size_t>(b - a));
                Polynomial<R> h = f.den().reverse(b);
                val = (g * inverse_mod(h % mod, mod)) % mod;
            }
            out.push_back({P, std::move(mod), std::move(val)});
            continue;
        }
        Polynomial<R> p = point_poly<R>(P, ctx);
        if (f.den().degree() > 0 && (f.den() % p).is_zero()) fail(Errc::PoleOnConductor, "function has a pole on the conductor");
        Polynomial<R> mod = p.pow(un);
        Polynomial<R> val = (f.num() * inverse_mod(f.den() % mod, mod)) % mod;
        out.push_back({P, std::move(mod), std::move(val)});
    }
    return ODElement<R>(std::move(out));
}

template <class R>
bool is_one_mod_D(const RationalFunction<R>& f, const Divisor& D) {
    try {
        return restrict_to_D(f, D).is_one();
    } catch (const Error& e) {
        if (e.code() == Errc::PoleOnConductor) return false;
        throw;
    }
}

template <class R>
std::optional<RationalFunction<R>> equivalent_mod_D(const Divisor& E1, const Divisor& E2, const Divisor& D,
                                                     typename R::context_type ctx) {
    validate_conductor(D);
    if (!supported_away(E1, D) || !supported_away(E2, D))
        fail(Errc::SupportMeetsConductor, "divisor support meets the conductor");
    const Divisor diff = E1 - E2;
    if (diff.degree() != 0) return std::nullopt;
    RationalFunction<R> f0 = rf_from_divisor<R>(diff, ctx);
    auto c = restrict_to_D(f0, D).scalar();
    if (!c) return std::nullopt;
    return c->inverse() * f0;
}

template class ODElement<FieldElem>;
template class ODElement<KElem>;
template ODElement<FieldElem> restrict_to_D(const RatFuncFq&, const Divisor&);
template ODElement<KElem> restrict_to_D(const RatFunc&, const Divisor&);
template bool is_one_mod_D(const RatFuncFq&, const Divisor&);
template bool is_one_mod_D(const RatFunc&, const Divisor&);
template std::optional<RatFuncFq> equivalent_mod_D<FieldElem>(const Divisor&, const Divisor&, const Divisor&, FieldRef);
template std::optional<RatFunc> equivalent_mod_D<KElem>(const Divisor&, const Divisor&, const Divisor&, FieldRef);

}  // namespace ffhyp
