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
#include "ffhyp/moore.hpp"
#include "support.hpp"

using namespace ffhyp;
using namespace ffhyp::testing;

TEST_CASE("moore_det examples") {
    FieldRef f2 = make_field(2, 1);
    FqPoly t = FqPoly::x(f2), one(FieldElem::one(f2));
    CHECK(moore_det(std::vector<FqPoly>{t}) == t);
    CHECK(moore_det(std::vector<FqPoly>{t, one}) == poly_of(f2, {0, 1, 1}));
    CHECK(moore_product(std::vector<FqPoly>{t, one}, f2, one) == poly_of(f2, {0, 1, 1}));
    std::vector<FqPoly> xs{t * t, t, one};
    CHECK(moore_det(xs) == moore_product(xs, f2, one));
    CHECK(!moore_det(xs).is_zero());
}

TEST_CASE("moore identity over polynomials") {
    for (auto [p, m] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
        FieldRef f = make_field(p, m);
        FqPoly one(FieldElem::one(f));
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<FqPoly> xs;
                for (int i = 0; i < n; ++i) xs.push_back(random_poly(f, random_int(0, 3), true));
                CHECK(moore_det(xs) == moore_product(xs, f, one));
            }
        }
    }
}

TEST_CASE("moore identity in extension fields") {
    // base F_3 inside F_27
    FieldRef f = make_field(3, 3, std::nullopt, 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FieldElem> xs{random_elem(f), random_elem(f), random_elem(f)};
        CHECK(moore_det(xs) == moore_product(xs, f, FieldElem::one(f)));
    }
    // base F_2 inside F_16
    FieldRef g = make_field(2, 4, std::nullopt, 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FieldElem> xs{random_elem(g), random_elem(g), random_elem(g), random_elem(g)};
        CHECK(moore_det(xs) == moore_product(xs, g, FieldElem::one(g)));
    }
}

TEST_CASE("moore identity over K and F_q(t)") {
    FieldRef f = make_field(2, 2);
    KElem tau = KElem::tau(f);
    std::vector<KElem> xs{tau, tau * tau + KElem(FieldElem::generator(f)), KElem::one(f) / (tau + KElem::one(f))};
    CHECK(moore_det(xs) == moore_product(xs, f, KElem::one(f)));

    FieldRef g = make_field(3, 1);
    RatFuncFq t = RatFuncFq::t(g), one = RatFuncFq::one(g);
    std::vector<RatFuncFq> ys{t / (t + one), one / t, t * t};
    CHECK(moore_det(ys) == moore_product(ys, g, one));
}

TEST_CASE("moore determinant vanishes on dependent input and is linear") {
    FieldRef f = make_field(3, 1);
    FqPoly one(FieldElem::one(f));
    for (int trial = 0; trial < 20; ++trial) {
        FqPoly a = random_poly(f, 3, true), b = random_poly(f, 2, true);
        FieldElem c = random_base_elem(f, true), d = random_base_elem(f);
        CHECK(moore_det(std::vector<FqPoly>{a, b, c * a + d * b}).is_zero());
        CHECK(moore_det(std::vector<FqPoly>{c * a, b}) == c * moore_det(std::vector<FqPoly>{a, b}));
        CHECK(moore_det(std::vector<FqPoly>{a + b, b}) == moore_det(std::vector<FqPoly>{a, b}));
    }
}
