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

TEST_CASE("div_twist") {
    FieldRef f2 = make_field(2, 1);
    KElem tau = KElem::tau(f2);
    Point inf = Point::infinity();
    Divisor E = Divisor(Point::finite(tau)) - Divisor(inf);
    CHECK(div_twist(E, 1) == Divisor(Point::finite(tau * tau)) - Divisor(inf));
    Divisor D = Divisor(Point::finite(FieldElem::zero(f2)), 2) + Divisor(inf);
    CHECK(div_twist(D, 5) == D);
    CHECK(div_twist(Divisor(Point::finite(tau * tau)), -1) == Divisor(Point::finite(tau)));
    bool threw = false;
    try {
        div_twist(E, -1);
    } catch (const Error& e) {
        threw = e.code() == Errc::NoRoot;
    }
    CHECK(threw);
}

TEST_CASE("div_twist properties") {
    FieldRef f = make_field(3, 2, std::nullopt, 1);
    KElem tau = KElem::tau(f);
    for (int i = 0; i < 10; ++i) {
        Divisor A = Divisor(Point::finite(tau.pow(random_int(1, 3)) + KElem(random_elem(f))), random_int(-2, 2)) +
                    Divisor(Point::finite(random_elem(f)), random_int(-2, 2)) + Divisor(Point::infinity(), random_int(-2, 2));
        Divisor B = Divisor(Point::finite(tau + KElem(random_elem(f))), random_int(-2, 2)) +
                    Divisor(Point::closed(poly_of(f, {1, 0, 1})), random_int(-1, 1));
        for (int n : {1, 2, 3}) {
            CHECK(div_twist(A, n).degree() == A.degree());
            CHECK(div_twist(A + B, n) == div_twist(A, n) + div_twist(B, n));
        }
    }
}

TEST_CASE("supported_away") {
    FieldRef f2 = make_field(2, 1);
    Point inf = Point::infinity();
    Point zero = Point::finite(FieldElem::zero(f2));
    Point one = Point::finite(FieldElem::one(f2));
    Divisor D = Divisor(inf) + Divisor(zero);
    CHECK(supported_away(Divisor(one), D));
    CHECK(!supported_away(Divisor(zero) + Divisor(one), D));

    FieldRef f4 = make_field(2, 2, std::nullopt, 1);
    Point u = Point::finite(FieldElem::generator(f4));
    Point closed = Point::closed(poly_of(f4, {1, 1, 1}));
    CHECK(!supported_away(Divisor(u), Divisor(closed)));
    CHECK(supported_away(Divisor(Point::finite(KElem::tau(f4))), Divisor(closed)));
    CHECK(supported_away(Divisor(Point::finite(FieldElem::one(f4))), Divisor(closed)));
}

TEST_CASE("splice_closed") {
    FieldRef f4 = make_field(2, 2, std::nullopt, 1);
    FieldElem u = FieldElem::generator(f4);
    auto pts = splice_closed(Point::closed(poly_of(f4, {1, 1, 1})), f4);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point::finite(u));
    CHECK(pts[1] == Point::finite(u + FieldElem::one(f4)));

    FieldRef f2 = make_field(2, 1);
    auto lin = splice_closed(Point::closed(poly_of(f2, {1, 1})), f2);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0] == Point::finite(FieldElem::one(f2)));

    bool threw = false;
    try {
        splice_closed(Point::closed(poly_of(f2, {1, 1, 1})), f2);
    } catch (const Error& e) {
        threw = e.code() == Errc::FieldTooSmall;
    }
    CHECK(threw);
}

TEST_CASE("splice then refactor recovers the closed point") {
    FieldRef f = make_field(3, 4, std::nullopt, 1);
    for (int d : {2, 4}) {
        for (const auto& p : monic_irreducibles(f, d)) {
            auto roots = splice_closed(Point::closed(p), f);
            FqPoly prod(FieldElem::one(f));
            for (const auto& r : roots) prod = prod * FqPoly::linear(*r.x().as_constant());
            CHECK(prod == p);
            Divisor spliced;
            for (const auto& r : roots) spliced.add(r, 1);
            CHECK(spliced.degree() == d);
        }
    }
}

TEST_CASE("divisor arithmetic") {
    FieldRef f = make_field(3, 1);
    Point a = Point::finite(FieldElem::one(f));
    Point c = Point::closed(poly_of(f, {1, 0, 1}));
    Divisor D1 = Divisor(a, 2) + Divisor(c);
    Divisor D2 = Divisor(a, -2) + Divisor(Point::infinity());
    CHECK((D1 + D2).degree() == D1.degree() + D2.degree());
    CHECK((D1 + D2) == Divisor(c) + Divisor(Point::infinity()));
    CHECK(D1.is_effective());
    CHECK(!D2.is_effective());
    CHECK(D2.negative_part() == Divisor(a, 2));
    CHECK(D1.degree() == 4);
    CHECK(Point::closed(poly_of(f, {2, 1})) == Point::finite(FieldElem::one(f)));
}
