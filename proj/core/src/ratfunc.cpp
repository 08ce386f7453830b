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

#include "ffhyp/ratfunc.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "ffhyp/factor.hpp"
#include "ffhyp/residue_ring.hpp"

namespace ffhyp {

namespace {

// residue fields F_{q'}[tau]/(pi) of size at least 2^20, pi irreducible over F_{q'}
const std::vector<std::unique_ptr<ResidueRing>>& test_primes(FieldRef f) {
    static std::mutex mu;
    static std::map<FieldRef, std::vector<std::unique_ptr<ResidueRing>>> cache;
    std::lock_guard lock(mu);
    auto& rings = cache[f];
    if (rings.empty()) {
        int d = 1;
        for (std::uint64_t size = f->order(); size < (std::uint64_t(1) << 20); size *= f->order()) ++d;
        // an F_q-irreducible of degree coprime to [F_q':F_q] stays irreducible over F_q'
        for (; rings.size() < 2; ++d)
            if (std::gcd(d, f->ext_degree()) == 1)
                rings.push_back(std::make_unique<ResidueRing>(ResidueRing{smallest_irreducible(f, d)}));
    }
    return rings;
}

std::optional<Polynomial<ResidueElem>> reduce_at(const KPoly& a, const ResidueRing* ring) {
    std::vector<ResidueElem> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) {
        ResidueElem d(ring, x.den());
        if (d.is_zero()) return std::nullopt;
        c.push_back(ResidueElem(ring, x.num()) / d);
    }
    Polynomial<ResidueElem> out(ring, std::move(c));
    if (out.degree() != a.degree()) return std::nullopt;
    return out;
}

}  // namespace

template <>
KPoly gcd<KElem>(KPoly a, KPoly b) {
    if (!a.is_zero() && !b.is_zero()) {
        FieldRef f = a.context();
        if (a.degree() == 0 || b.degree() == 0) return KPoly(KElem::one(f));
        // equal degrees after reduction make the reduced resultant the image of the true one
        for (const auto& ring : test_primes(f)) {
            auto ra = reduce_at(a, ring.get());
            if (!ra) continue;
            auto rb = reduce_at(b, ring.get());
            if (rb && euclid_gcd(std::move(*ra), std::move(*rb)).degree() == 0) return KPoly(KElem::one(f));
        }
    }
    return euclid_gcd(std::move(a), std::move(b));
}

KPoly to_K(const FqPoly& a) {
    std::vector<KElem> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.emplace_back(x);
    return KPoly(a.context(), std::move(c));
}

RatFunc to_K(const RatFuncFq& f) {
    RatFunc out(to_K(f.num()), to_K(f.den()));
    if (auto d = f.factored(); d && !f.is_constant()) out = out.with_divisor(*d);
    return out;
}

std::optional<FqPoly> to_fq(const KPoly& a) {
    std::vector<FieldElem> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) {
        auto v = x.as_constant();
        if (!v) return std::nullopt;
        c.push_back(*v);
    }
    return FqPoly(a.context(), std::move(c));
}

std::optional<RatFuncFq> to_fq(const RatFunc& f) {
    auto n = to_fq(f.num());
    auto d = to_fq(f.den());
    if (!n || !d) return std::nullopt;
    RatFuncFq out(*n, *d);
    if (auto dv = f.factored(); dv && !f.is_constant()) out = out.with_divisor(*dv);
    return out;
}

KElem eval_in_K(const FqPoly& f, const KElem& x) {
    KElem acc = KElem::zero(f.context());
    for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * x + KElem(f.coeffs()[k]);
    return acc;
}

KElem eval_in_K(const RatFuncFq& f, const KElem& x) {
    KElem d = eval_in_K(f.den(), x);
    if (d.is_zero()) fail(Errc::PoleAtPoint, "evaluation at a pole");
    return eval_in_K(f.num(), x) / d;
}

KElem rf_eval(const RatFunc& f, const KElem& x) { return f.eval(x); }
KElem rf_eval_infinity(const RatFunc& f) { return f.eval_infinity(); }

KPoly poly_twist(const KPoly& a, std::int64_t n) {
    if (n == 0) return a;
    std::vector<KElem> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(x.frob(n));
    return KPoly(a.context(), std::move(c));
}

RatFunc rf_twist(const RatFunc& f, std::int64_t n) {
    if (n == 0) return f;
    RatFunc out(poly_twist(f.num(), n), poly_twist(f.den(), n));
    if (auto d = f.factored()) out.set_divisor(div_twist(*d, n));
    return out;
}

RatFuncFq rf_twist(const RatFuncFq& f, std::int64_t n) {
    if (n == 0) return f;
    auto tw = [n](const FqPoly& a) {
        std::vector<FieldElem> c;
        for (const auto& x : a.coeffs()) c.push_back(x.frob(n));
        return FqPoly(a.context(), std::move(c));
    };
    RatFuncFq out(tw(f.num()), tw(f.den()));
    if (auto d = f.factored()) out.set_divisor(div_twist(*d, n));
    return out;
}

namespace {

std::uint64_t q_to(FieldRef f, int i) {
    std::uint64_t e = 1;
    for (int k = 0; k < i; ++k) e *= f->base_order();
    return e;
}

}  // namespace

FqPoly qpower(const FqPoly& a, int i) {
    if (i == 0 || a.is_zero()) return a;
    std::vector<FieldElem> c;
    for (const auto& x : a.coeffs()) c.push_back(x.frob(i));
    return FqPoly(a.context(), std::move(c)).inflate(q_to(a.context(), i));
}

RatFuncFq qpower(const RatFuncFq& f, int i) {
    if (i == 0 || f.is_zero()) return f;
    RatFuncFq out;
    // frobenius is injective, so the fraction stays reduced
    out = RatFuncFq(qpower(f.num(), i));
    return out / RatFuncFq(qpower(f.den(), i));
}

RatFunc qpower(const RatFunc& f, int i) {
    if (i == 0 || f.is_zero()) return f;
    FieldRef F = f.context();
    const std::uint64_t e = q_to(F, i);
    return RatFunc(poly_twist(f.num(), i).inflate(e), poly_twist(f.den(), i).inflate(e));
}

bool coefficients_in_base(const RatFuncFq& f) {
    for (const auto& c : f.num().coeffs())
        if (!c.in_base()) return false;
    for (const auto& c : f.den().coeffs())
        if (!c.in_base()) return false;
    return true;
}

}  // namespace ffhyp
