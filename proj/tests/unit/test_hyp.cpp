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
#include "ffhyp/hyp.hpp"
#include "support.hpp"

using namespace ffhyp;
using namespace ffhyp::testing;

namespace {

Point at(FieldRef f, int a) { return Point::finite(FieldElem::from_int(f, a)); }
Divisor pt(FieldRef f, int a, int mult = 1) { return Divisor(at(f, a), mult); }
Divisor inf(int mult = 1) { return Divisor(Point::infinity(), mult); }

std::int64_t geometric(std::int64_t q, int n) {
    std::int64_t s = 0, p = 1;
    for (int i = 0; i < n; ++i, p *= q) s += p;
    return s;
}

// closed form of the three-point ratios: base^(sign(N) (q^|N| - 1)/(q - 1))
RatFuncFq closed_form(const RatFuncFq& base, std::int64_t q, int N) {
    const std::int64_t e = geometric(q, N > 0 ? N : -N);
    return base.pow(N > 0 ? e : -e);
}

std::vector<FieldRef> small_fields() { return {make_field(2, 1), make_field(3, 1), make_field(2, 2), make_field(5, 1)}; }

PrincipalPart random_pp(const Divisor& D, FieldRef f) {
    for (;;) {
        std::vector<FieldElem> c;
        for (int i = 0; i < D.degree(); ++i) c.push_back(random_base_elem(f));
        PrincipalPart a(D, c);
        if (!a.is_zero()) return a;
    }
}

template <class F>
Errc error_of(F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("presets") {
    FieldRef f = make_field(3, 1);
    Divisor D = inf() + pt(f, 0);
    CHECK(alpha_inf(D, f).coords() == std::vector<FieldElem>{FieldElem::one(f), FieldElem::zero(f)});
    CHECK(alpha_0(D, f).lift() == RatFuncFq(FieldElem::from_int(f, -1)) / RatFuncFq::t(f));
    CHECK(alpha_1(D, f).is_zero());
    CHECK(alpha_preset("alpha_1", pt(f, 1) + inf(), f) == alpha_1(pt(f, 1) + inf(), f));
}

TEST_CASE("first three-point formula, high degree") {
    for (FieldRef f : small_fields()) {
        const std::int64_t q = f->base_order();
        Divisor D = inf() + pt(f, 0);
        for (int N = 1; N <= (q <= 3 ? 4 : 3); ++N) {
            Divisor E = pt(f, 1, N - 2);
            auto expect = closed_form(RatFuncFq::t(f), q, N);
            CHECK(hyp_high(D, alpha_inf(D, f), alpha_0(D, f), E, HypMethod::enumerate) == expect);
            CHECK(hyp_high(D, alpha_inf(D, f), alpha_0(D, f), E, HypMethod::moore) == expect);
        }
    }
    FieldRef f2 = make_field(2, 1);
    Divisor D = inf() + pt(f2, 0);
    RatFuncFq t = RatFuncFq::t(f2);
    CHECK(hyp(D, alpha_inf(D, f2), alpha_0(D, f2), Divisor()) == t * t * t);
}

TEST_CASE("three-point formulas, both regimes") {
    for (FieldRef f : small_fields()) {
        const std::int64_t q = f->base_order();
        RatFuncFq t = RatFuncFq::t(f), one = RatFuncFq::one(f);
        struct Row {
            Divisor D;
            PrincipalPart a, b;
            Point moving;
            RatFuncFq base;
        };
        Divisor D1 = inf() + pt(f, 0), D2 = pt(f, 1) + inf(), D3 = pt(f, 0) + pt(f, 1);
        std::vector<Row> rows = {
            {D1, alpha_inf(D1, f), alpha_0(D1, f), at(f, 1), t},
            {D2, alpha_1(D2, f), alpha_inf(D2, f), at(f, 0), one / (one - t)},
            {D3, alpha_0(D3, f), alpha_1(D3, f), Point::infinity(), (t - one) / t},
        };
        const int span = q <= 3 ? 3 : 2;
        for (const auto& r : rows) {
            for (int N = -span; N <= span; ++N) {
                if (N == 0) continue;
                Divisor E(r.moving, N - 2);
                CHECK(hyp(r.D, r.a, r.b, E) == closed_form(r.base, q, N));
            }
        }
    }
}

TEST_CASE("low degree examples") {
    FieldRef f2 = make_field(2, 1);
    Divisor D = inf() + pt(f2, 0);
    CHECK(hyp_low(D, alpha_inf(D, f2), alpha_0(D, f2), pt(f2, 1, -3)) == RatFuncFq::t(f2).inverse());
    FieldRef f3 = make_field(3, 1);
    Divisor D3 = inf() + pt(f3, 0);
    CHECK(hyp_low(D3, alpha_inf(D3, f3), alpha_0(D3, f3), pt(f3, 1, -4)) == RatFuncFq::t(f3).pow(-4));
    CHECK(hyp_low(D3, alpha_inf(D3, f3), alpha_inf(D3, f3), pt(f3, 1, -4)).is_one());
}

TEST_CASE("twisted three-point formula") {
    // Hyp(alpha_inf, alpha_0, [c] + (N-3)[1]) = c^-1 t^(sign(N) (q^|N|-1)/(q-1))
    for (FieldRef f : {make_field(3, 1), make_field(2, 2), make_field(5, 1)}) {
        const std::int64_t q = f->base_order();
        Divisor D = inf() + pt(f, 0);
        for (const auto& c : base_field_units(f)) {
            for (int N : {-2, -1, 1, 2, 3}) {
                Divisor E = Divisor(Point::finite(c)) + pt(f, 1, N - 3);
                auto expect = c.inverse() * closed_form(RatFuncFq::t(f), q, N);
                CHECK(hyp(D, alpha_inf(D, f), alpha_0(D, f), E) == expect);
            }
        }
    }
    FieldRef f3 = make_field(3, 1);
    Divisor D = inf() + pt(f3, 0);
    auto two_t4 = FieldElem::from_int(f3, 2) * RatFuncFq::t(f3).pow(4);
    CHECK(hyp_high(D, alpha_inf(D, f3), alpha_0(D, f3), pt(f3, 2) + pt(f3, 1, -1), HypMethod::enumerate) == two_t4);
}

TEST_CASE("regime dispatch and errors") {
    FieldRef f = make_field(3, 1);
    Divisor D = inf() + pt(f, 0);
    auto a = alpha_inf(D, f), b = alpha_0(D, f);
    CHECK(error_of([&] { hyp(D, a, b, pt(f, 1, -2)); }) == Errc::UndefinedRegime);
    CHECK_NOTHROW(hyp(D, a, b, pt(f, 1, -1)));
    CHECK_NOTHROW(hyp(D, a, b, pt(f, 1, -3)));
    CHECK(error_of([&] { hyp_high(D, a, b, pt(f, 1, -2)); }) == Errc::WrongRegime);
    CHECK(error_of([&] { hyp_low(D, a, b, pt(f, 1, -2)); }) == Errc::WrongRegime);
    CHECK(error_of([&] { hyp(D, PrincipalPart::zero(D, f), b, Divisor()); }) == Errc::ZeroAlphaBeta);
    CHECK(error_of([&] { hyp(D, a, b, pt(f, 0)); }) == Errc::SupportMeetsConductor);
    CHECK(error_of([&] { hyp(Divisor(), a, b, Divisor()); }) == Errc::ZeroConductor);
    CHECK(error_of([&] { hyp_high(D, a, b, pt(f, 1, 30), HypMethod::enumerate, 1000); }) == Errc::BudgetExceeded);
    // a one-point conductor leaves no gap
    Divisor D1 = inf(1);
    CHECK_NOTHROW(hyp(D1, alpha_inf(D1, f), alpha_inf(D1, f), pt(f, 1, -2)));
}

TEST_CASE("enumeration agrees with Moore determinants") {
    for (FieldRef f : {make_field(2, 1), make_field(3, 1), make_field(2, 2)}) {
        const std::int64_t q = f->base_order();
        std::vector<Divisor> Ds = {inf() + pt(f, 0), inf(2), pt(f, 0, 2) + pt(f, 1)};
        if (q == 2) Ds.push_back(Divisor(Point::closed(poly_of(f, {1, 1, 1}))));
        for (const auto& D : Ds) {
            for (int trial = 0; trial < 4; ++trial) {
                Divisor E;
                for (int k = 0; k < 3; ++k) {
                    Point P = k == 0 ? Point::infinity() : Point::finite(random_base_elem(f));
                    if (supported_away(Divisor(P), D)) E.add(P, random_int(-1, 2));
                }
                if (E.degree() <= -2 || E.degree() > 4 || geometric(q, static_cast<int>(E.degree()) + 1) > 400) continue;
                auto a = random_pp(D, f), b = random_pp(D, f);
                auto x = hyp_high(D, a, b, E, HypMethod::enumerate);
                CHECK(x == hyp_high(D, a, b, E, HypMethod::moore));
                CHECK(coefficients_in_base(x));
            }
        }
    }
}

TEST_CASE("lifting") {
    FieldRef f = make_field(3, 1);
    Divisor D = inf() + pt(f, 0, 2);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_pp(D, f);
        Divisor E = pt(f, 1, random_int(-1, 2)) + pt(f, 2, random_int(-1, 1));
        if (E.degree() < -1) continue;
        RatFuncFq x = lift_principal_part(a, E);
        CHECK(PrincipalPart::of(x, D) == a);
        Divisor d = divisor_of(x) + E + D;
        for (const auto& [P, n] : d.terms()) CHECK(n >= 0);
    }
}

TEST_CASE("scaling, additivity and inversion relations") {
    for (FieldRef f : {make_field(3, 1), make_field(2, 2), make_field(5, 1)}) {
        Divisor D = inf() + pt(f, 0);
        std::vector<Divisor> Es = {pt(f, 1, 1), pt(f, 1, -1), pt(f, 1, -3), pt(f, 1, -4) + inf(0)};
        if (f->base_order() <= 3) Es.push_back(pt(f, 1, 2));
        for (const auto& E : Es) {
            if (f->base_order() == 5 && E.degree() < -3) continue;
            for (int trial = 0; trial < 3; ++trial) {
                auto a = random_pp(D, f), b = random_pp(D, f);
                auto h = hyp(D, a, b, E);
                for (const auto& c : base_field_units(f)) {
                    CHECK(hyp(D, c * a, b, E) == c * h);
                    CHECK(hyp(D, a, c.inverse() * b, E) == c * h);
                }
                auto a1 = random_pp(D, f);
                auto a2 = a - a1;
                if (!a2.is_zero()) CHECK(h == hyp(D, a1, b, E) + hyp(D, a2, b, E));
                CHECK(hyp(D, b, a, E) == h.inverse());
            }
        }
    }
}

TEST_CASE("changing E by a principal divisor") {
    FieldRef f = make_field(3, 1);
    RatFuncFq t = RatFuncFq::t(f), one = RatFuncFq::one(f);
    Divisor D = inf() + pt(f, 0);
    Point c2 = Point::closed(poly_of(f, {1, 0, 1}));
    std::vector<RatFuncFq> fs = {(t - one) / (t + one), RatFuncFq(poly_of(f, {1, 0, 1})) / (t - one).pow(2),
                                 FieldElem::from_int(f, 2) * (t + one) / (t - one)};
    std::vector<Divisor> Es = {pt(f, 1, 1), pt(f, 2, -1), Divisor(c2) + pt(f, 1, -5), pt(f, 1, -4)};
    for (const auto& g : fs) {
        Divisor dg = divisor_of(g);
        for (const auto& E : Es) {
            auto a = random_pp(D, f), b = random_pp(D, f);
            auto lhs = hyp(D, a, b, E + dg);
            auto rhs = hyp(D, a.act(g), b.act(g), E);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("class invariance") {
    FieldRef f = make_field(5, 1);
    Divisor D = inf() + pt(f, 0);
    // [a] + [b] ~ [ab] + [1] modulo [inf] + [0]
    for (int trial = 0; trial < 6; ++trial) {
        int x = random_int(2, 4), y = random_int(2, 4);
        Divisor E1 = pt(f, x) + pt(f, y) + pt(f, 1, -5);
        Divisor E2 = pt(f, (x * y) % 5) + pt(f, 1) + pt(f, 1, -5);
        REQUIRE(equivalent_mod_D<FieldElem>(E1, E2, D, f));
        auto a = random_pp(D, f), b = random_pp(D, f);
        CHECK(hyp(D, a, b, E1) == hyp(D, a, b, E2));
        CHECK(hyp(D, a, b, E1 + pt(f, 1, 2)) == hyp(D, a, b, E2 + pt(f, 1, 2)));
    }
}

TEST_CASE("identical principal parts give one") {
    FieldRef f = make_field(3, 1);
    Divisor D = inf() + pt(f, 0);
    for (const auto& E : {pt(f, 1, 2), pt(f, 1, -5)}) {
        auto a = random_pp(D, f);
        CHECK(hyp(D, a, a, E).is_one());
    }
}
