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

#include "ffhyp/divisor.hpp"

#include "ffhyp/factor.hpp"

namespace ffhyp {

Point Point::finite(KElem x) {
    Point p;
    p.kind_ = Kind::Finite;
    p.x_ = std::move(x);
    return p;
}

Point Point::closed(const FqPoly& poly) {
    if (poly.degree() < 1) fail(Errc::InvalidArgument, "closed point needs a polynomial of positive degree");
    FqPoly m = poly.monic();
    if (!coefficients_in(m, m.context()->base_m()))
        fail(Errc::InvalidArgument, "closed point polynomial must have coefficients in F_q");
    if (m.degree() == 1) return finite(KElem(-m.coeff(0)));
    if (!is_irreducible_over_base(m)) fail(Errc::InvalidArgument, "closed point polynomial is reducible over F_q");
    Point p;
    p.kind_ = Kind::Closed;
    p.poly_ = std::move(m);
    return p;
}

bool Point::is_base_rational() const {
    if (kind_ != Kind::Finite) return true;
    auto c = x_.as_constant();
    return c && c->in_base();
}

Point Point::twist(std::int64_t n) const {
    if (kind_ != Kind::Finite || n == 0) return *this;
    return finite(x_.frob(n));
}

std::int64_t Divisor::degree() const {
    std::int64_t d = 0;
    for (const auto& [p, k] : terms_) d += k * p.degree();
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [p, k] : terms_)
        if (k < 0) return false;
    return true;
}

bool Divisor::is_base_rational() const {
    for (const auto& [p, k] : terms_)
        if (!p.is_base_rational()) return false;
    return true;
}

std::vector<Point> Divisor::support() const {
    std::vector<Point> out;
    for (const auto& [p, k] : terms_) out.push_back(p);
    return out;
}

Divisor Divisor::positive_part() const {
    Divisor out;
    for (const auto& [p, k] : terms_)
        if (k > 0) out.terms_.emplace(p, k);
    return out;
}

Divisor Divisor::negative_part() const {
    Divisor out;
    for (const auto& [p, k] : terms_)
        if (k < 0) out.terms_.emplace(p, -k);
    return out;
}

void Divisor::add(const Point& p, std::int64_t k) {
    if (k == 0) return;
    auto [it, inserted] = terms_.emplace(p, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) terms_.erase(it);
    }
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, k] : o.terms_) add(p, k);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [p, k] : o.terms_) add(p, -k);
    return *this;
}

Divisor Divisor::operator-() const {
    Divisor out;
    for (const auto& [p, k] : terms_) out.terms_.emplace(p, -k);
    return out;
}

Divisor operator*(std::int64_t k, const Divisor& d) {
    Divisor out;
    if (k == 0) return out;
    for (const auto& [p, m] : d.terms_) out.terms_.emplace(p, k * m);
    return out;
}

Divisor div_twist(const Divisor& E, std::int64_t n) {
    if (n == 0) return E;
    Divisor out;
    for (const auto& [p, k] : E.terms()) out.add(p.twist(n), k);
    return out;
}

bool points_meet(const Point& a, const Point& b) {
    if (a.kind() == b.kind()) return a == b;
    if (a.is_infinity() || b.is_infinity()) return false;
    const Point& fin = a.is_finite() ? a : b;
    const Point& clo = a.is_closed() ? a : b;
    auto c = fin.x().as_constant();
    if (!c) return false;
    return clo.poly().eval(*c).is_zero();
}

bool supported_away(const Divisor& E, const Divisor& D) {
    for (const auto& [p, k] : E.terms())
        for (const auto& [r, m] : D.terms())
            if (points_meet(p, r)) return false;
    return true;
}

std::vector<Point> splice_closed(const Point& P, FieldRef constants) {
    if (P.is_infinity()) return {P};
    if (P.is_finite()) return {P};
    if (P.poly().context() != constants)
        fail(Errc::InvalidArgument, "closed point and constants field do not match");
    auto roots = roots_in_field(P.poly());
    if (static_cast<int>(roots.size()) != P.degree())
        fail(Errc::FieldTooSmall, "closed point of degree " + std::to_string(P.degree()) +
                                      " does not split in the constants field");
    std::vector<Point> out;
    for (const auto& r : roots) out.push_back(Point::finite(r));
    return out;
}

Divisor splice_divisor(const Divisor& E, FieldRef constants) {
    Divisor out;
    for (const auto& [p, k] : E.terms())
        for (const auto& r : splice_closed(p, constants)) out.add(r, k);
    return out;
}

}  // namespace ffhyp
