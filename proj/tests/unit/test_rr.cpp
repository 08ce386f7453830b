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

#include <algorithm>

#include "doctest.h"
#include "ffhyp/linalg.hpp"
#include "ffhyp/rr.hpp"
#include "ffhyp/span.hpp"
#include "support.hpp"

using namespace ffhyp;
using namespace ffhyp::testing;

namespace {

RatFuncFq rf(const FqPoly& n, const FqPoly& d) { return RatFuncFq(n, d); }

Divisor finite(FieldRef f, int a, int mult = 1) { return Divisor(Point::finite(FieldElem::from_int(f, a)), mult); }
Divisor inf(int mult = 1) { return Divisor(Point::infinity(), mult); }

// does (f) + E >= 0 hold, checked through valuations at the points of E and at the poles of f
bool in_L(const RatFuncFq& f, const Divisor& E) {
    if (f.is_zero()) return true;
    Divisor d = divisor_of(f) + E;
    for (const auto& [P, n] : d.terms())
        if (n < 0) return false;
    return true;
}

// embed a polynomial over a prime field into an extension of it
FqPoly lift_prime(const FqPoly& a, FieldRef big) {
    std::vector<FieldElem> c;
    for (const auto& x : a.coeffs()) c.push_back(FieldElem::from_int(big, x.value()));
    return FqPoly(big, std::move(c));
}

}  // namespace

TEST_CASE("rr_basis examples") {
    FieldRef f = make_field(3, 1);
    auto b = rr_basis<FieldElem>(inf(2), f);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == RatFuncFq::one(f));
    CHECK(b[1] == RatFuncFq::t(f));
    CHECK(b[2] == RatFuncFq::t(f) * RatFuncFq::t(f));

    CHECK(rr_basis<FieldElem>(-finite(f, 1), f).empty());

    auto c = rr_basis<FieldElem>(-finite(f, 0) + inf(2), f);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == RatFuncFq::t(f));
    CHECK(c[1] == RatFuncFq::t(f) * RatFuncFq::t(f));
}

TEST_CASE("rr_basis dimension and membership") {
    FieldRef f = make_field(3, 1);
    Point closed = Point::closed(poly_of(f, {1, 0, 1}));
    for (int trial = 0; trial < 40; ++trial) {
        Divisor E = finite(f, 0, random_int(-3, 3)) + finite(f, 1, random_int(-3, 3)) + inf(random_int(-3, 3)) +
                    Divisor(closed, random_int(-2, 2));
        auto b = rr_basis<FieldElem>(E, f);
        CHECK(static_cast<std::int64_t>(b.size()) == std::max<std::int64_t>(E.degree() + 1, 0));
        for (const auto& g : b) CHECK(in_L(g, E));
        // linear independence: numerators over the common denominator have distinct degrees
        FqPoly L(FieldElem::one(f));
        for (const auto& g : b) L = lcm(L, g.den());
        for (std::size_t i = 1; i < b.size(); ++i)
            CHECK((b[i] * RatFuncFq(L)).num().degree() > (b[i - 1] * RatFuncFq(L)).num().degree());
    }
}

TEST_CASE("rr_basis over K") {
    FieldRef f = make_field(2, 1);
    KElem tau = KElem::tau(f);
    Divisor E = Divisor(Point::finite(tau), 2) - Divisor(Point::finite(tau * tau)) + inf(1);
    auto b = rr_basis<KElem>(E, f);
    REQUIRE(b.size() == 3);
    for (const auto& g : b) {
        Divisor d = divisor_of(g) + E;
        for (const auto& [P, n] : d.terms()) CHECK(n >= 0);
    }
}

TEST_CASE("omega_basis") {
    FieldRef f = make_field(3, 1);
    auto w = omega_basis<FieldElem>(inf(-2), f);
    REQUIRE(w.size() == 1);
    CHECK(w[0].coeff == RatFuncFq::one(f));
    CHECK(omega_basis<FieldElem>(Divisor(), f).empty());

    // {dt/(t-1)^2, dt/(t-1)^3} up to change of basis
    auto v = omega_basis<FieldElem>(finite(f, 1, -3), f);
    REQUIRE(v.size() == 2);
    FqPoly tm1 = poly_of(f, {-1, 1});
    RatFuncFq e1 = rf(FqPoly(FieldElem::one(f)), tm1 * tm1), e2 = rf(FqPoly(FieldElem::one(f)), tm1 * tm1 * tm1);
    // every basis element lies in the span of e1, e2 and vice versa
    auto span = enumerate_span(std::vector<RatFuncFq>{e1, e2}, f, RatFuncFq::zero(f));
    for (const auto& x : v) CHECK(std::find(span.begin(), span.end(), x.coeff) != span.end());
    auto span2 = enumerate_span(std::vector<RatFuncFq>{v[0].coeff, v[1].coeff}, f, RatFuncFq::zero(f));
    std::sort(span.begin(), span.end(), [](auto& a, auto& b) { return (a.num() <=> b.num()) < 0 || (a.num() == b.num() && (a.den() <=> b.den()) < 0); });
    std::sort(span2.begin(), span2.end(), [](auto& a, auto& b) { return (a.num() <=> b.num()) < 0 || (a.num() == b.num() && (a.den() <=> b.den()) < 0); });
    CHECK(span == span2);

    for (int trial = 0; trial < 30; ++trial) {
        Divisor E = finite(f, 0, random_int(-3, 2)) + finite(f, 2, random_int(-3, 2)) + inf(random_int(-3, 1));
        auto b = omega_basis<FieldElem>(E, f);
        CHECK(static_cast<std::int64_t>(b.size()) == std::max<std::int64_t>(-E.degree() - 1, 0));
        for (const auto& x : b) {
            Divisor d = differential_divisor(x) - E;
            for (const auto& [P, n] : d.terms()) CHECK(n >= 0);
        }
    }
}

TEST_CASE("residue examples") {
    FieldRef f2 = make_field(2, 1);
    FqPoly t = FqPoly::x(f2);
    FqPoly one(FieldElem::one(f2));
    CHECK(residue(Differential<FieldElem>{rf(one, t)}, Point::finite(FieldElem::zero(f2))).is_one());
    CHECK(residue(Differential<FieldElem>{RatFuncFq::t(f2)}, Point::infinity()).is_zero());
    CHECK(residue(Differential<FieldElem>{rf(one, t)}, Point::infinity()).is_one());  // -1 = 1

    FqPoly c = poly_of(f2, {1, 1, 1});
    Point P = Point::closed(c);
    Differential<FieldElem> w{rf(one, c)};
    CHECK(residue(w, P).is_zero());
    ResidueRing ring{c};
    CHECK(local_residue(w, P, ring).is_one());

    // series oracle in F_4: residue of 1/((t-u)(t-u^2)) at u is 1/(u - u^2) = 1
    FieldRef f4 = make_field(2, 2, std::nullopt, 1);
    FieldElem u = FieldElem::generator(f4);
    FqPoly c4 = lift_prime(c, f4);
    CHECK(laurent_residue(FqPoly(FieldElem::one(f4)), c4, u).is_one());
    CHECK((FieldElem::one(f4) / (u - u * u)).is_one());
}

TEST_CASE("closed point residues against splitting field") {
    FieldRef f = make_field(3, 1);
    for (int d : {2, 3}) {
        FieldRef big = make_field(3, d, std::nullopt, 1);
        for (const auto& p : monic_irreducibles(f, d)) {
            Point P = Point::closed(p);
            ResidueRing ring{p};
            auto roots = roots_in_field(lift_prime(p, big));
            REQUIRE(static_cast<int>(roots.size()) == d);
            for (int trial = 0; trial < 6; ++trial) {
                int k = random_int(1, 3);
                FqPoly den = p.pow(k) * random_poly(f, random_int(0, 2), true).monic();
                if (den.is_zero()) continue;
                FqPoly num = random_poly(f, random_int(0, 5), true);
                Differential<FieldElem> w{rf(num, den)};
                FieldElem sum = FieldElem::zero(big);
                FqPoly bn = lift_prime(w.coeff.num(), big), bd = lift_prime(w.coeff.den(), big);
                for (const auto& r : roots) sum += laurent_residue(bn, bd, r);
                CHECK(sum == FieldElem::from_int(big, residue(w, P).value()));
                ResidueElem loc = local_residue(w, P, ring);
                CHECK(trace_to_base(loc) == residue(w, P));
                // the local residue evaluated at a root equals the residue there
                FieldElem at = lift_prime(loc.value(), big).eval(roots[0]);
                CHECK(at == laurent_residue(bn, bd, roots[0]));
            }
        }
    }
}

TEST_CASE("sum of residues vanishes") {
    for (auto [p, m] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{5, 1}, std::pair{2, 3}}) {
        FieldRef f = make_field(p, m);
        for (int trial = 0; trial < 25; ++trial) {
            FqPoly den = random_poly(f, random_int(1, 6), true);
            if (den.is_zero()) continue;
            FqPoly num = random_poly(f, random_int(0, 8), true);
            Differential<FieldElem> w{rf(num, den)};
            FieldElem total = residue(w, Point::infinity());
            for (const auto& [g, e] : factor_over_base(w.coeff.den())) total += residue(w, Point::closed(g));
            CHECK(total.is_zero());
        }
    }
}

TEST_CASE("residue pairing") {
    FieldRef f = make_field(3, 1);
    Divisor D0 = finite(f, 0);
    PrincipalPart a(D0, {FieldElem::one(f)});
    CHECK(a.lift() == rf(FqPoly(FieldElem::one(f)), FqPoly::x(f)));
    CHECK(res_pairing(Differential<FieldElem>{RatFuncFq::one(f)}, a).is_one());
    CHECK(res_pairing(Differential<FieldElem>{RatFuncFq::t(f)}, PrincipalPart::zero(finite(f, 0) + inf(2), f)).is_zero());

    // D = [inf] + [0], alpha = class of t, omega = dt/(t-1)^3: only infinity contributes
    Divisor D = inf() + finite(f, 0);
    PrincipalPart at = PrincipalPart::of(RatFuncFq::t(f), D);
    FqPoly tm1 = poly_of(f, {-1, 1});
    Differential<FieldElem> w{rf(FqPoly(FieldElem::one(f)), tm1 * tm1 * tm1)};
    // t/(t-1)^3 = s^2 (1 + 3s + ...) ds * -s^-2 ... : residue at infinity of t dt/(t-1)^3 is 0
    CHECK(res_pairing(w, at).is_zero());
    Differential<FieldElem> w2{rf(FqPoly(FieldElem::one(f)), tm1 * tm1)};
    // t dt/(t-1)^2 has residue -1 at infinity
    CHECK(res_pairing(w2, at) == FieldElem::from_int(f, -1));
}

TEST_CASE("residue pairing independent of lifting") {
    FieldRef f = make_field(3, 1);
    Point closed = Point::closed(poly_of(f, {1, 0, 1}));
    Divisor D = finite(f, 0, 2) + Divisor(closed) + inf(2);
    FqPoly H = smallest_irreducible(f, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FieldElem> c;
        for (int i = 0; i < D.degree(); ++i) c.push_back(random_base_elem(f));
        PrincipalPart a(D, c);
        // add a function regular on D to the lifting
        RatFuncFq g = rf(random_poly(f, 3, true), H);
        Differential<FieldElem> w{rf(random_poly(f, 1, true), H)};
        FieldElem direct = FieldElem::zero(f);
        Differential<FieldElem> prod{w.coeff * (a.lift() + g)};
        for (const auto& [P, n] : D.terms()) direct += residue(prod, P);
        CHECK(direct == res_pairing(w, a));
    }
}

TEST_CASE("residue pairing is perfect") {
    FieldRef f = make_field(2, 1);
    Point c2 = Point::closed(poly_of(f, {1, 1, 1}));
    std::vector<Divisor> Ds = {finite(f, 0), inf(3), finite(f, 0, 2) + finite(f, 1) + inf(), Divisor(c2) + inf(2),
                               Divisor(c2, 2) + finite(f, 1, 3)};
    for (const auto& D : Ds) {
        auto ws = conductor_dual_differentials(D, f);
        const auto n = static_cast<std::size_t>(D.degree());
        REQUIRE(ws.size() == n);
        Matrix<FieldElem> G(n, n, FieldElem::zero(f));
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<FieldElem> e(n, FieldElem::zero(f));
            e[j] = FieldElem::one(f);
            PrincipalPart a(D, e);
            for (std::size_t i = 0; i < n; ++i) G(i, j) = res_pairing(ws[i], a);
        }
        CHECK(!determinant(G).is_zero());
    }
}

TEST_CASE("principal parts") {
    FieldRef f = make_field(3, 1);
    Divisor D = finite(f, 1, 2) + inf(2);
    FqPoly tm1 = poly_of(f, {-1, 1});
    RatFuncFq g = rf(poly_of(f, {2, 0, 1, 1, 1}), tm1 * tm1 * poly_of(f, {1, 0, 1}));
    PrincipalPart a = PrincipalPart::of(g, D);
    CHECK(PrincipalPart::of(a.lift(), D) == a);
    CHECK(PrincipalPart::of(g - a.lift(), D).is_zero());
    CHECK((a - a).is_zero());
    CHECK(PrincipalPart::of(g + g, D) == a + a);
    bool threw = false;
    try {
        PrincipalPart::of(rf(FqPoly(FieldElem::one(f)), tm1 * tm1 * tm1), D);
    } catch (const Error&) {
        threw = true;
    }
    CHECK(threw);
}
