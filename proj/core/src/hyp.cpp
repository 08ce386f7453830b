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

#include "ffhyp/hyp.hpp"

#include "ffhyp/linalg.hpp"
#include "ffhyp/moore.hpp"

namespace ffhyp {

namespace {

RatFuncFq t_of(FieldRef f) { return RatFuncFq::t(f); }

FqPoly balanced_product(std::vector<FqPoly>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return std::move(v[lo]);
    const std::size_t mid = lo + (hi - lo) / 2;
    FqPoly a = balanced_product(v, lo, mid);
    return a * balanced_product(v, mid, hi);
}

FqPoly product_of(std::vector<FqPoly> v, FieldRef f) {
    if (v.empty()) return FqPoly(FieldElem::one(f));
    return balanced_product(v, 0, v.size());
}

FqPoly common_denominator(const std::vector<RatFuncFq>& fs, FieldRef f) {
    FqPoly L(FieldElem::one(f));
    for (const auto& x : fs) L = lcm(L, x.den());
    return L;
}

FqPoly clear(const RatFuncFq& x, const FqPoly& L) { return x.num() * (L / x.den()); }

void check_inputs(const Divisor& D, const PrincipalPart& alpha, const PrincipalPart& beta, const Divisor& E) {
    validate_conductor(D);
    if (!(alpha.conductor() == D) || !(beta.conductor() == D))
        fail(Errc::InvalidArgument, "principal parts are not along the given conductor");
    if (alpha.field() != beta.field()) fail(Errc::InvalidArgument, "principal parts over different fields");
    if (alpha.is_zero() || beta.is_zero()) fail(Errc::ZeroAlphaBeta, "alpha and beta must be nonzero");
    if (!E.is_base_rational()) fail(Errc::InvalidArgument, "E must be a divisor over F_q");
    if (!supported_away(E, D)) fail(Errc::SupportMeetsConductor, "E meets the conductor");
}

}  // namespace

PrincipalPart alpha_inf(const Divisor& D, FieldRef f) { return PrincipalPart::of(t_of(f), D); }

PrincipalPart alpha_1(const Divisor& D, FieldRef f) {
    RatFuncFq one = RatFuncFq::one(f);
    return PrincipalPart::of(one / (one - t_of(f)), D);
}

PrincipalPart alpha_0(const Divisor& D, FieldRef f) {
    RatFuncFq one = RatFuncFq::one(f);
    return PrincipalPart::of((t_of(f) - one) / t_of(f), D);
}

PrincipalPart alpha_preset(std::string_view name, const Divisor& D, FieldRef f) {
    if (name == "alpha_inf") return alpha_inf(D, f);
    if (name == "alpha_1") return alpha_1(D, f);
    if (name == "alpha_0") return alpha_0(D, f);
    fail(Errc::InvalidArgument, "unknown principal part preset: " + std::string(name));
}

RatFuncFq lift_principal_part(const PrincipalPart& alpha, const Divisor& E) {
    const Divisor& D = alpha.conductor();
    FieldRef f = alpha.field();
    if (E.degree() < -1) fail(Errc::WrongRegime, "principal parts lift to L(E + D) only for deg E >= -1");
    auto basis = rr_basis<FieldElem>(E + D, f);
    const std::size_t rows = static_cast<std::size_t>(D.degree());
    Matrix<FieldElem> A(rows, basis.size(), FieldElem::zero(f));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto c = PrincipalPart::of(basis[j], D).coords();
        for (std::size_t i = 0; i < rows; ++i) A(i, j) = c[i];
    }
    auto x = solve(A, alpha.coords(), FieldElem::zero(f));
    if (!x) fail(Errc::SolveFailed, "principal part does not lift to L(E + D)");
    RatFuncFq out = RatFuncFq::zero(f);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!(*x)[j].is_zero()) out += (*x)[j] * basis[j];
    return out;
}

RatFuncFq hyp_high(const Divisor& D, const PrincipalPart& alpha, const PrincipalPart& beta, const Divisor& E,
                   HypMethod method, std::uint64_t budget) {
    check_inputs(D, alpha, beta, E);
    if (E.degree() <= -2) fail(Errc::WrongRegime, "high degree ratio needs deg E > -2");
    FieldRef f = alpha.field();
    const RatFuncFq a = lift_principal_part(alpha, E);
    const RatFuncFq b = lift_principal_part(beta, E);
    const auto basis = rr_basis<FieldElem>(E, f);

    std::vector<RatFuncFq> all = basis;
    all.push_back(a);
    all.push_back(b);
    const FqPoly L = common_denominator(all, f);
    const FqPoly na = clear(a, L), nb = clear(b, L);
    std::vector<FqPoly> ne;
    for (const auto& e : basis) ne.push_back(clear(e, L));

    if (method == HypMethod::moore) {
        std::vector<FqPoly> xa{na}, xb{nb};
        xa.insert(xa.end(), ne.begin(), ne.end());
        xb.insert(xb.end(), ne.begin(), ne.end());
        return RatFuncFq(moore_det(xa), moore_det(xb));
    }
    std::vector<FqPoly> top, bottom;
    for_each_in_span(
        ne, f, FqPoly(f),
        [&](const FqPoly& v) {
            top.push_back(na + v);
            bottom.push_back(nb + v);
        },
        budget);
    return RatFuncFq(product_of(std::move(top), f), product_of(std::move(bottom), f));
}

RatFuncFq hyp_low(const Divisor& D, const PrincipalPart& alpha, const PrincipalPart& beta, const Divisor& E,
                  std::uint64_t budget) {
    check_inputs(D, alpha, beta, E);
    if (E.degree() >= -D.degree()) fail(Errc::WrongRegime, "low degree ratio needs deg E < -deg D");
    FieldRef f = alpha.field();
    const auto omegas = omega_basis<FieldElem>(E, f);
    std::vector<RatFuncFq> coeffs;
    for (const auto& w : omegas) coeffs.push_back(w.coeff);
    const FqPoly L = common_denominator(coeffs, f);
    std::vector<FqPoly> nw;
    for (const auto& c : coeffs) nw.push_back(clear(c, L));

    // numerators of the dt-coefficients of all w with RES_D(w * lift) = 1
    auto hyperplane = [&](const PrincipalPart& x) {
        std::vector<FieldElem> l;
        for (const auto& w : omegas) l.push_back(res_pairing(w, x));
        std::size_t pivot = l.size();
        for (std::size_t i = 0; i < l.size(); ++i)
            if (!l[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == l.size()) fail(Errc::DegenerateFunctional, "the residue functional vanishes identically");
        const FieldElem inv = l[pivot].inverse();
        const FqPoly base = inv * nw[pivot];
        std::vector<FqPoly> kernel;
        for (std::size_t j = 0; j < nw.size(); ++j)
            if (j != pivot) kernel.push_back(nw[j] - (l[j] * inv) * nw[pivot]);
        std::vector<FqPoly> out;
        for_each_in_span(kernel, f, FqPoly(f), [&](const FqPoly& v) { out.push_back(base + v); }, budget);
        return product_of(std::move(out), f);
    };
    return RatFuncFq(hyperplane(beta), hyperplane(alpha));
}

RatFuncFq hyp(const Divisor& D, const PrincipalPart& alpha, const PrincipalPart& beta, const Divisor& E,
              HypMethod method, std::uint64_t budget) {
    validate_conductor(D);
    if (E.degree() > -2) return hyp_high(D, alpha, beta, E, method, budget);
    if (E.degree() < -D.degree()) return hyp_low(D, alpha, beta, E, budget);
    fail(Errc::UndefinedRegime, "deg E lies in [-deg D, -2], where no ratio is defined");
}

}  // namespace ffhyp
