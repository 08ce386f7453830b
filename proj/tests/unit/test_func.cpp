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

#include "doctest.h"
#include "ffhyp/func.hpp"
#include "support.hpp"

using namespace ffhyp;
using namespace ffhyp::testing;

namespace {

// irreducibility by trial division over all monic polynomials of degree <= deg/2
bool brute_irreducible(const FqPoly& g) {
    FieldRef f = g.context();
    const auto& base = f->base_elements();
    const int n = g.degree();
    for (int d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= base.size();
        for (std::uint64_t k = 0; k < count; ++k) {
            std::vector<FieldElem> c;
            std::uint64_t r = k;
            for (int i = 0; i < d; ++i) {
                c.emplace_back(f, base[r % base.size()]);
                r /= base.size();
            }
            c.push_back(FieldElem::one(f));
            if ((g % FqPoly(f, c)).is_zero()) return false;
        }
    }
    return true;
}

FqPoly expand(const Factorization& fs, FieldRef f) {
    FqPoly acc(FieldElem::one(f));
    for (const auto& [p, k] : fs) acc = acc * p.pow(static_cast<std::uint64_t>(k));
    return acc;
}

}  // namespace

TEST_CASE("rf_eval") {
    FieldRef f = make_field(3, 1);
    RatFunc t = RatFunc::t(f);
    RatFunc one = RatFunc::one(f);
    RatFunc g = (t - one) / t;
    CHECK(rf_eval(g, KElem::one(f)).is_zero());
    CHECK(rf_eval_infinity(g).is_one());

    FieldRef f2 = make_field(2, 1);
    RatFunc t2 = RatFunc::t(f2);
    KElem tau = KElem::tau(f2);
    CHECK(rf_eval(t2 * t2 + t2, tau) == tau * tau + tau);

    bool threw = false;
    try {
        rf_eval(g, KElem::zero(f));
    } catch (const Error& e) {
        threw = e.code() == Errc::PoleAtPoint;
    }
    CHECK(threw);
}

TEST_CASE("rf_twist") {
    FieldRef f2 = make_field(2, 1);
    RatFunc t = RatFunc::t(f2);
    KElem tau = KElem::tau(f2);
    RatFunc x = t - RatFunc(tau);
    CHECK(rf_twist(x, 1) == t - RatFunc(tau * tau));
    CHECK(rf_twist(x, 0) == x);
    RatFunc y = (t - RatFunc(tau * tau)) * (t - RatFunc(tau));
    bool threw = false;
    try {
        rf_twist(y, -1);
    } catch (const Error& e) {
        threw = e.code() == Errc::NoRoot;
    }
    CHECK(threw);
    CHECK(rf_twist(rf_twist(x, 2), -2) == x);
}

TEST_CASE("rf_twist properties") {
    FieldRef f = make_field(3, 1);
    RatFunc t = RatFunc::t(f);
    KElem tau = KElem::tau(f);
    for (int i = 0; i < 10; ++i) {
        RatFunc a = RatFunc(to_K(random_poly(f, 2))) * t + RatFunc(tau.pow(random_int(1, 3)));
        RatFunc b = (t - RatFunc(tau + KElem::from_int(f, i))) / (t * t + RatFunc(tau));
        CHECK(rf_twist(a * b, 1) == rf_twist(a, 1) * rf_twist(b, 1));
        KElem x = tau.pow(2) + KElem::from_int(f, 1);
        if (!b.den().eval(x).is_zero())
            CHECK(rf_eval(rf_twist(b, 1), frobenius(x, 1)) == frobenius(rf_eval(b, x), 1));
    }
    // fixed by the twist exactly when coefficients lie in F_q
    RatFunc c = to_K(RatFuncFq(poly_of(f, {1, 2, 1}), poly_of(f, {0, 1})));
    CHECK(rf_twist(c, 1) == c);
    CHECK(!(rf_twist(t - RatFunc(tau), 1) == t - RatFunc(tau)));
}

TEST_CASE("rf_from_divisor") {
    FieldRef f = make_field(3, 1);
    Point zero = Point::finite(FieldElem::zero(f));
    Point one = Point::finite(FieldElem::one(f));
    Point two = Point::finite(FieldElem::from_int(f, 2));
    Point inf = Point::infinity();
    RatFunc t = RatFunc::t(f);
    CHECK(rf_from_divisor<KElem>(Divisor(zero) - Divisor(inf), f) == t);
    CHECK(rf_from_divisor<KElem>(Divisor(two) - Divisor(one), f) == (t - RatFunc(KElem::from_int(f, 2))) / (t - RatFunc::one(f)));

    FieldRef f2 = make_field(2, 1);
    FqPoly p = poly_of(f2, {1, 1, 1});
    Divisor E = Divisor(Point::closed(p)) - Divisor(inf, 2);
    CHECK(rf_from_divisor<KElem>(E, f2) == RatFunc(to_K(p)));

    bool threw = false;
    try {
        rf_from_divisor<KElem>(Divisor(zero), f);
    } catch (const Error& e) {
        threw = e.code() == Errc::NonzeroDegree;
    }
    CHECK(threw);
}

TEST_CASE("divisor_of") {
    FieldRef f2 = make_field(2, 1);
    RatFuncFq t = RatFuncFq::t(f2);
    Point zero = Point::finite(FieldElem::zero(f2));
    Point inf = Point::infinity();
    CHECK(divisor_of(t) == Divisor(zero) - Divisor(inf));
    FqPoly p = poly_of(f2, {1, 1, 1});
    RatFuncFq g = RatFuncFq(p) / t;
    CHECK(divisor_of(g) == Divisor(Point::closed(p)) - Divisor(zero) - Divisor(inf));

    KElem tau = KElem::tau(f2);
    RatFunc h = rf_from_divisor<KElem>(Divisor(Point::finite(tau)) - Divisor(inf), f2);
    CHECK(h == RatFunc::t(f2) - RatFunc(tau));
    CHECK(divisor_of(h) == Divisor(Point::finite(tau)) - Divisor(inf));

    // retained divisors survive products, inverses and twists
    KElem tau2 = tau * tau;
    Divisor A = Divisor(Point::finite(tau)) + Divisor(Point::finite(tau2)) - Divisor(zero, 2);
    RatFunc fa = rf_from_divisor<KElem>(A, f2);
    Divisor B = Divisor(Point::finite(tau2 * tau)) - Divisor(Point::closed(p)) + Divisor(inf);
    RatFunc fb = rf_from_divisor<KElem>(B, f2);
    CHECK(divisor_of(fa * fb) == A + B);
    CHECK(divisor_of(fa / fb) == A - B);
    CHECK(divisor_of(rf_twist(fa, 2)) == div_twist(A, 2));
    CHECK(divisor_of(fa).degree() == 0);

    // unfactorable input
    RatFunc u = (RatFunc::t(f2) * RatFunc::t(f2) + RatFunc(tau)).without_divisor();
    bool threw = false;
    try {
        divisor_of(u);
    } catch (const Error& e) {
        threw = e.code() == Errc::Unfactorable;
    }
    CHECK(threw);
}

TEST_CASE("divisor_of on random F_q functions") {
    for (auto [p, m] : {std::pair{2u, 1}, std::pair{3u, 1}, std::pair{2u, 2}}) {
        FieldRef f = make_field(p, m);
        for (int i = 0; i < 15; ++i) {
            RatFuncFq a(random_poly(f, random_int(0, 5), true), random_poly(f, random_int(0, 5), true));
            RatFuncFq b(random_poly(f, random_int(0, 4), true), random_poly(f, random_int(0, 4), true));
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(divisor_of(a).degree() == 0);
            CHECK(divisor_of(a * b) == divisor_of(a) + divisor_of(b));
            Divisor d = divisor_of(a);
            RatFuncFq back = rf_from_divisor<FieldElem>(d, f);
            // same divisor, so a constant multiple
            CHECK((a / back).is_constant());
            CHECK(divisor_of(back) == d);
            CHECK(a.ord_infinity() == d.multiplicity(Point::infinity()));
        }
    }
}

TEST_CASE("poly_factor_fq examples") {
    FieldRef f2 = make_field(2, 1);
    auto f1 = poly_factor_fq(poly_of(f2, {0, 1, 1}));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == std::pair{poly_of(f2, {0, 1}), 1});
    CHECK(f1[1] == std::pair{poly_of(f2, {1, 1}), 1});
    auto fsq = poly_factor_fq(poly_of(f2, {1, 0, 1}));
    REQUIRE(fsq.size() == 1);
    CHECK(fsq[0] == std::pair{poly_of(f2, {1, 1}), 2});
    auto f3 = poly_factor_fq(poly_of(f2, {0, 1, 0, 0, 1}));
    REQUIRE(f3.size() == 3);
    CHECK(f3[0].first == poly_of(f2, {0, 1}));
    CHECK(f3[1].first == poly_of(f2, {1, 1}));
    CHECK(f3[2].first == poly_of(f2, {1, 1, 1}));
}

TEST_CASE("poly_factor_fq on random polynomials") {
    for (auto [p, m, b] : {std::tuple{2u, 1, 1}, std::tuple{3u, 1, 1}, std::tuple{2u, 2, 2}, std::tuple{5u, 1, 1},
                           std::tuple{2u, 4, 2}, std::tuple{3u, 2, 1}}) {
        FieldRef f = make_field(p, m, std::nullopt, b);
        for (int i = 0; i < 25; ++i) {
            FqPoly g = random_poly(f, random_int(1, 9), true);
            if (i % 3 == 0) g = g * g;
            if (i % 5 == 0) g = g * random_poly(f, 2, true).pow(p);
            auto fs = factor_over_base(g);
            CHECK(expand(fs, f) == g.monic());
            for (const auto& [q, k] : fs) {
                CHECK(q.is_monic());
                CHECK(brute_irreducible(q));
                CHECK(is_irreducible_over_base(q));
            }
        }
    }
}

TEST_CASE("factoring over the full constants field") {
    FieldRef f = make_field(2, 2, std::nullopt, 1);
    FqPoly p = poly_of(f, {1, 1, 1});
    auto fs = poly_factor_fq(p);
    CHECK(fs.size() == 2);
    for (auto& [q, k] : fs) CHECK(q.degree() == 1);
    CHECK(factor_over_base(p).size() == 1);
}

TEST_CASE("gcd over K[t] agrees with plain Euclid") {
    for (FieldRef f : {make_field(2, 1), make_field(3, 1), make_constants_field(2, 1, 2)}) {
        auto random_k = [&] {
            FqPoly num = random_poly(f, random_int(0, 6));
            FqPoly den = random_poly(f, random_int(0, 4));
            return KElem(num, den);
        };
        auto random_kpoly = [&](int degree) {
            std::vector<KElem> c;
            for (int i = 0; i <= degree; ++i) c.push_back(random_k());
            if (c.back().is_zero()) c.back() = KElem::tau(f);
            return KPoly(f, std::move(c));
        };
        for (int trial = 0; trial < 20; ++trial) {
            KPoly common = trial % 2 ? random_kpoly(random_int(1, 2)) : KPoly(KElem::one(f));
            KPoly a = random_kpoly(random_int(0, 4)) * common;
            KPoly b = random_kpoly(random_int(1, 4)) * common;
            KPoly g = gcd(a, b);
            CHECK(g == euclid_gcd(a, b));
            CHECK(g.degree() >= common.degree());
        }
        KPoly h(KElem::one(f));
        for (int k = 0; k < 4; ++k) h = h * KPoly::linear(KElem::tau(f).frob(k));
        CHECK(gcd(h, h * KPoly::linear(KElem::one(f))) == h);
        CHECK(gcd(h, KPoly::linear(KElem::one(f)).pow(3)).is_one());
    }
}
