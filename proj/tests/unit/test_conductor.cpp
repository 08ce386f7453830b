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
#include "ffhyp/conductor.hpp"
#include "support.hpp"

using namespace ffhyp;
using namespace ffhyp::testing;

namespace {

Point at(FieldRef f, int a) { return Point::finite(FieldElem::from_int(f, a)); }

template <class R>
Polynomial<R> component(const ODElement<R>& u, const Point& P) {
    for (const auto& c : u.components())
        if (c.point == P) return c.value;
    FAIL("missing component");
    return {};
}

}  // namespace

TEST_CASE("restriction examples") {
    FieldRef f = make_field(5, 1);
    RatFuncFq t = RatFuncFq::t(f);
    Divisor D01 = Divisor(at(f, 0)) + Divisor(at(f, 1));
    auto u = restrict_to_D(t, D01);
    CHECK(component(u, at(f, 0)).is_zero());
    CHECK(component(u, at(f, 1)).is_one());

    RatFuncFq one = RatFuncFq::one(f);
    CHECK(restrict_to_D((t - one) / t, Divisor(at(f, 1))).components()[0].value.is_zero());

    Divisor Dinf0 = Divisor(Point::infinity()) + Divisor(at(f, 0));
    for (int c = 1; c < 5; ++c) {
        RatFuncFq g = (t - RatFuncFq(FieldElem::from_int(f, c))) / (t - one);
        auto v = restrict_to_D(g, Dinf0);
        CHECK(component(v, Point::infinity()).is_one());
        CHECK(component(v, at(f, 0)) == FqPoly(FieldElem::from_int(f, c)));
        CHECK(v.components().front().point == Point::infinity());
    }

    bool threw = false;
    try {
        restrict_to_D(one / t, D01);
    } catch (const Error& e) {
        threw = e.code() == Errc::PoleOnConductor;
    }
    CHECK(threw);
    threw = false;
    try {
        restrict_to_D(t, Dinf0);
    } catch (const Error& e) {
        threw = e.code() == Errc::PoleOnConductor;
    }
    CHECK(threw);
}

TEST_CASE("restriction at infinity of higher order") {
    FieldRef f = make_field(3, 1);
    RatFuncFq t = RatFuncFq::t(f);
    RatFuncFq one = RatFuncFq::one(f);
    // t/(t-1) = 1/(1-s) = 1 + s + s^2 + ...
    auto u = restrict_to_D(t / (t - one), Divisor(Point::infinity(), 3));
    CHECK(u.components()[0].value == poly_of(f, {1, 1, 1}));
    CHECK(u.is_unit());
    CHECK(!u.is_one());
}

TEST_CASE("restriction is a ring map") {
    FieldRef f = make_field(3, 1);
    Point c2 = Point::closed(poly_of(f, {1, 0, 1}));
    Divisor D = Divisor(Point::infinity(), 2) + Divisor(at(f, 1), 2) + Divisor(c2, 2);
    FqPoly H = smallest_irreducible(f, 3);
    for (int trial = 0; trial < 40; ++trial) {
        RatFuncFq a(random_poly(f, 3, true), H), b(random_poly(f, 2, true), H * FqPoly::linear(FieldElem::from_int(f, 0)));
        CHECK(restrict_to_D(a + b, D) == restrict_to_D(a, D) + restrict_to_D(b, D));
        CHECK(restrict_to_D(a * b, D) == restrict_to_D(a, D) * restrict_to_D(b, D));
    }
}

TEST_CASE("is_one_mod_D") {
    FieldRef f = make_field(5, 1);
    RatFuncFq t = RatFuncFq::t(f);
    CHECK(is_one_mod_D(RatFuncFq::one(f), Divisor(at(f, 3)) + Divisor(Point::infinity(), 2)));
    CHECK(is_one_mod_D(t, Divisor(at(f, 1))));
    CHECK(!is_one_mod_D(t, Divisor(at(f, 1), 2)));
    CHECK(!is_one_mod_D(t, Divisor(Point::infinity())));
    RatFuncFq t4 = t.pow(4);
    for (int c = 1; c < 5; ++c) {
        auto u = restrict_to_D(t4, Divisor(at(f, c)));
        CHECK(u.components()[0].value.is_one());
    }
    CHECK(is_one_mod_D(t4, Divisor(at(f, 1)) + Divisor(at(f, 2)) + Divisor(at(f, 3)) + Divisor(at(f, 4))));
}

TEST_CASE("equivalence examples") {
    FieldRef f = make_field(5, 1);
    Divisor Dinf0 = Divisor(Point::infinity()) + Divisor(at(f, 0));
    Divisor E = Divisor(at(f, 2)) - Divisor(at(f, 3));
    auto w = equivalent_mod_D<FieldElem>(E, E, Dinf0, f);
    REQUIRE(w);
    CHECK(w->is_one());
    for (int c = 1; c < 5; ++c) {
        auto v = equivalent_mod_D<FieldElem>(Divisor(at(f, c)), Divisor(at(f, 1)), Dinf0, f);
        CHECK(v.has_value() == (c == 1));
        auto v0 = equivalent_mod_D<FieldElem>(Divisor(at(f, c)), Divisor(at(f, 1)), Divisor(at(f, 0)), f);
        REQUIRE(v0);
        CHECK(is_one_mod_D(*v0, Divisor(at(f, 0))));
        CHECK(divisor_of(*v0) == Divisor(at(f, c)) - Divisor(at(f, 1)));
    }
    CHECK(!equivalent_mod_D<FieldElem>(Divisor(at(f, 2)), Divisor(), Dinf0, f));
    bool threw = false;
    try {
        equivalent_mod_D<FieldElem>(Divisor(at(f, 0)), Divisor(at(f, 1)), Dinf0, f);
    } catch (const Error& e) {
        threw = e.code() == Errc::SupportMeetsConductor;
    }
    CHECK(threw);
    threw = false;
    try {
        equivalent_mod_D<FieldElem>(Divisor(at(f, 2)), Divisor(at(f, 1)), Divisor(), f);
    } catch (const Error& e) {
        threw = e.code() == Errc::ZeroConductor;
    }
    CHECK(threw);
}

TEST_CASE("equivalence against product criterion") {
    // modulo [inf] + [0], E1 - E2 = sum n_i [a_i] is principal to the conductor iff prod (-a_i)^n_i = 1
    FieldRef f = make_field(7, 1);
    Divisor D = Divisor(Point::infinity()) + Divisor(at(f, 0));
    for (int trial = 0; trial < 200; ++trial) {
        Divisor E1, E2;
        for (int k = 0; k < 3; ++k) {
            E1.add(at(f, random_int(1, 6)), 1);
            E2.add(at(f, random_int(1, 6)), 1);
        }
        FieldElem prod = FieldElem::one(f);
        const Divisor diff = E1 - E2;
        for (const auto& [P, n] : diff.terms()) prod *= (-*P.x().as_constant()).pow(n);
        auto w = equivalent_mod_D<FieldElem>(E1, E2, D, f);
        CHECK(w.has_value() == prod.is_one());
        if (w) {
            CHECK(is_one_mod_D(*w, D));
            CHECK(divisor_of(*w) == E1 - E2);
        }
    }
}

TEST_CASE("equivalence is an equivalence relation") {
    FieldRef f = make_field(3, 2, std::nullopt, 1);
    Point c2 = Point::closed(poly_of(f, {1, 0, 1}));
    Divisor D = Divisor(Point::infinity(), 2) + Divisor(c2);
    std::vector<Divisor> pool;
    for (int i = 0; i < 12; ++i) {
        Divisor E;
        E.add(Point::finite(random_elem(f)), 1);
        E.add(Point::finite(random_elem(f)), 1);
        if (!supported_away(E, D)) continue;
        pool.push_back(E);
    }
    for (const auto& A : pool) {
        auto r = equivalent_mod_D<FieldElem>(A, A, D, f);
        REQUIRE(r);
        CHECK(r->is_one());
        for (const auto& B : pool) {
            auto ab = equivalent_mod_D<FieldElem>(A, B, D, f);
            auto ba = equivalent_mod_D<FieldElem>(B, A, D, f);
            CHECK(ab.has_value() == ba.has_value());
            if (!ab) continue;
            CHECK(*ba == ab->inverse());
            for (const auto& C : pool) {
                auto bc = equivalent_mod_D<FieldElem>(B, C, D, f);
                if (!bc) continue;
                auto ac = equivalent_mod_D<FieldElem>(A, C, D, f);
                REQUIRE(ac);
                CHECK(*ac == *ab * *bc);
            }
        }
    }
}

TEST_CASE("twisting preserves equivalence") {
    FieldRef f = make_field(3, 1);
    KElem tau = KElem::tau(f);
    Divisor D = Divisor(Point::infinity()) + Divisor(Point::finite(FieldElem::zero(f)));
    for (int k = 0; k < 5; ++k) {
        KElem a = tau.pow(random_int(1, 3)) + KElem(random_base_elem(f, true));
        KElem b = tau + KElem(FieldElem::from_int(f, random_int(1, 2)));
        Divisor E1 = Divisor(Point::finite(a)) + Divisor(Point::finite(b));
        Divisor E2 = Divisor(Point::finite(a * b)) + Divisor(Point::finite(FieldElem::one(f)));
        auto w = equivalent_mod_D<KElem>(E1, E2, D, f);
        REQUIRE(w);
        CHECK(is_one_mod_D(*w, D));
        CHECK(divisor_of(*w) == E1 - E2);
        for (int n : {1, 2}) {
            auto wn = equivalent_mod_D<KElem>(div_twist(E1, n), div_twist(E2, n), D, f);
            REQUIRE(wn);
            CHECK(*wn == rf_twist(*w, n));
        }
        // a non-equivalent pair stays non-equivalent
        Divisor E3 = Divisor(Point::finite(a * b)) + Divisor(Point::finite(FieldElem::from_int(f, 2)));
        CHECK(!equivalent_mod_D<KElem>(E1, E3, D, f));
        CHECK(!equivalent_mod_D<KElem>(div_twist(E1, 1), div_twist(E3, 1), D, f));
    }
}
