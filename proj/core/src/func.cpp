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

#include "ffhyp/func.hpp"

namespace ffhyp {

template <>
Polynomial<FieldElem> point_poly<FieldElem>(const Point& P, FieldRef ctx) {
    if (P.is_closed()) return P.poly();
    if (P.is_finite()) {
        auto c = P.x().as_constant();
        if (!c) fail(Errc::InvalidArgument, "point with tau-dependent coordinate in an F_q' computation");
        return FqPoly::linear(*c);
    }
    (void)ctx;
    fail(Errc::InvalidArgument, "the point at infinity has no local polynomial");
}

template <>
Polynomial<KElem> point_poly<KElem>(const Point& P, FieldRef ctx) {
    if (P.is_closed()) return to_K(P.poly());
    if (P.is_finite()) return KPoly::linear(P.x());
    (void)ctx;
    fail(Errc::InvalidArgument, "the point at infinity has no local polynomial");
}

template <>
FieldElem point_coordinate<FieldElem>(const Point& P) {
    if (!P.is_finite()) fail(Errc::InvalidArgument, "coordinate of a point that is not finite rational");
    auto c = P.x().as_constant();
    if (!c) fail(Errc::InvalidArgument, "point with tau-dependent coordinate in an F_q' computation");
    return *c;
}

template <>
KElem point_coordinate<KElem>(const Point& P) {
    if (!P.is_finite()) fail(Errc::InvalidArgument, "coordinate of a point that is not finite rational");
    return P.x();
}

template <class R>
RationalFunction<R> rf_from_divisor(const Divisor& E, typename R::context_type ctx) {
    if (E.degree() != 0) fail(Errc::NonzeroDegree, "divisor of nonzero degree is not principal");
    Polynomial<R> num(R::one(ctx)), den(R::one(ctx));
    for (const auto& [P, k] : E.terms()) {
        if (P.is_infinity()) continue;
        Polynomial<R> pp = point_poly<R>(P, ctx).pow(static_cast<std::uint64_t>(k > 0 ? k : -k));
        if (k > 0)
            num = num * pp;
        else
            den = den * pp;
    }
    return RationalFunction<R>(num, den).with_divisor(E);
}

template RationalFunction<FieldElem> rf_from_divisor<FieldElem>(const Divisor&, FieldRef);
template RationalFunction<KElem> rf_from_divisor<KElem>(const Divisor&, FieldRef);

namespace {

void add_factors(Divisor& out, const FqPoly& g, int sign) {
    if (g.degree() <= 0) return;
    FieldRef f = g.context();
    if (coefficients_in(g, f->base_m())) {
        for (const auto& [p, k] : factor_over_base(g)) out.add(Point::closed(p), sign * k);
        return;
    }
    for (const auto& [p, k] : poly_factor_fq(g)) {
        if (p.degree() != 1) fail(Errc::Unfactorable, "irreducible factor over F_q' of degree above one");
        out.add(Point::finite(KElem(-p.coeff(0))), sign * k);
    }
}

}  // namespace

Divisor divisor_of(const RatFuncFq& f) {
    if (f.is_zero()) fail(Errc::InvalidArgument, "divisor of the zero function");
    if (auto d = f.factored()) return *d;
    Divisor out;
    add_factors(out, f.num(), 1);
    add_factors(out, f.den(), -1);
    out.add(Point::infinity(), f.ord_infinity());
    return out;
}

Divisor divisor_of(const RatFunc& f) {
    if (f.is_zero()) fail(Errc::InvalidArgument, "divisor of the zero function");
    if (auto d = f.factored()) return *d;
    if (auto g = to_fq(f)) return divisor_of(*g);
    Divisor out;
    auto linear = [&](const KPoly& a, int sign) {
        if (a.degree() <= 0) return;
        if (a.degree() > 1) fail(Errc::Unfactorable, "no factorization known for a tau-dependent polynomial");
        out.add(Point::finite(-a.coeff(0) / a.coeff(1)), sign);
    };
    linear(f.num(), 1);
    linear(f.den(), -1);
    out.add(Point::infinity(), f.ord_infinity());
    return out;
}

}  // namespace ffhyp
