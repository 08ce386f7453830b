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

#include "ffhyp/shtuka.hpp"

#include "ffhyp/linalg.hpp"

namespace ffhyp {

namespace {

KElem twist(const KElem& x, std::int64_t n) { return x.frob(n); }

// value at b of the leading Laurent coefficient of f at b, relative to (t - b)^-k
KElem polar_value(const RatFunc& f, const KElem& b, std::int64_t k) {
    if (k <= 0) return rf_eval(f, b);
    RatFunc w = f * RatFunc(KPoly::linear(b).pow(static_cast<std::uint64_t>(k)));
    return rf_eval(w, b);
}

void check_pair(const PrincipalPart& a, const PrincipalPart& b) {
    if (a.is_zero() || b.is_zero()) fail(Errc::ZeroAlphaBeta, "alpha and beta must be nonzero");
}

void check_alpha(const Shtuka& s, const PrincipalPart& a) {
    if (!(a.conductor() == s.D)) fail(Errc::InvalidArgument, "principal part is not along the shtuka's conductor");
    if (a.is_zero()) fail(Errc::ZeroAlpha, "alpha must be nonzero");
}

std::vector<KElem> as_K(const std::vector<FieldElem>& v) {
    std::vector<KElem> out;
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

// coefficient matrix of the principal parts along D of the given functions
Matrix<KElem> principal_part_matrix(const std::vector<RatFunc>& basis, const Divisor& D, FieldRef f) {
    const auto rows = static_cast<std::size_t>(D.degree());
    Matrix<KElem> A(rows, basis.size(), KElem::zero(f));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto c = principal_part_coords<KElem>(basis[j], D);
        for (std::size_t i = 0; i < rows; ++i) A(i, j) = c[i];
    }
    return A;
}

RatFunc combine(const std::vector<RatFunc>& basis, const std::vector<KElem>& x, FieldRef f) {
    RatFunc out = RatFunc::zero(f);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!x[j].is_zero()) out += x[j] * basis[j];
    return out;
}

}  // namespace

Shtuka shtuka_validate(const Divisor& D, const KElem& xi, const Point& eta, const Divisor& E) {
    validate_conductor(D);
    if (xi.is_constant()) fail(Errc::NonGenericBasepoint, "the basepoint must depend on tau");
    const Point base = Point::finite(xi);
    if (!supported_away(Divisor(base), D) || !supported_away(Divisor(eta), D) || !supported_away(E, D))
        fail(Errc::SupportMeetsConductor, "shtuka data meets the conductor");
    if (E.degree() != -1) fail(Errc::BadDegree, "the shtuka divisor must have degree -1");
    FieldRef f = xi.context();
    const Divisor lhs = div_twist(E, 1) + Divisor(eta);
    const Divisor rhs = E + Divisor(base.twist(1));
    auto w = equivalent_mod_D<KElem>(lhs, rhs, D, f);
    if (!w) fail(Errc::RelationFails, "E - E^(1) is not equivalent to eta - xi^(1) modulo D");
    return Shtuka{D, xi, eta, E, std::move(*w), f};
}

bool nondegenerate(const Shtuka& s) {
    const std::int64_t lo = 1 - (s.E.degree() + s.D.degree());
    if (!s.eta.is_finite()) return true;
    for (std::int64_t i = lo; i <= 0; ++i) {
        // eta = xi^(i) with i <= 0 iff eta^(-i) = xi
        if (twist(s.eta.x(), -i) == s.xi) return false;
    }
    return true;
}

const RatFunc& special_function(const Shtuka& s) { return s.special; }

RatFunc psi_lift(const Shtuka& s, const PrincipalPart& alpha) {
    check_alpha(s, alpha);
    auto basis = rr_basis<KElem>(s.E + s.D, s.field);
    Matrix<KElem> A = principal_part_matrix(basis, s.D, s.field);
    if (A.rows() != A.cols()) fail(Errc::SolveFailed, "lifting space has the wrong dimension");
    auto x = solve_unique(A, as_K(alpha.coords()));
    if (!x) fail(Errc::SolveFailed, "principal part has no unique lifting");
    return combine(basis, *x, s.field);
}

KElem cd_symbol(const Shtuka& s, const PrincipalPart& alpha, const PrincipalPart& beta, SymbolMethod method) {
    check_pair(alpha, beta);
    check_alpha(s, alpha);
    check_alpha(s, beta);
    if (method == SymbolMethod::determinant) return cd_symbol_determinant(s, alpha, beta);
    RatFunc r = psi_lift(s, alpha) / psi_lift(s, beta);
    return rf_eval(r, s.xi);
}

KElem cd_symbol_determinant(const Shtuka& s, const PrincipalPart& alpha, const PrincipalPart& beta,
                            const std::optional<Divisor>& E2_in) {
    check_pair(alpha, beta);
    check_alpha(s, alpha);
    check_alpha(s, beta);
    const Point base = Point::finite(s.xi);
    Divisor E = s.E;
    Divisor E2;
    if (E2_in) {
        E2 = *E2_in;
        for (const auto& [P, k] : E2.terms()) {
            if (k != 1 || !P.is_finite()) fail(Errc::NoDecomposition, "E2 must be a sum of distinct rational points");
            if (P == base) fail(Errc::NoDecomposition, "E2 contains the basepoint");
            if (E.multiplicity(P) != -1) fail(Errc::NoDecomposition, "E2 must consist of points of multiplicity -1 in E");
        }
    } else {
        Divisor spliced;
        for (const auto& [P, k] : E.terms()) {
            if (P.is_closed() && k == -1) {
                try {
                    for (const auto& r : splice_closed(P, s.field)) spliced.add(r, k);
                    continue;
                } catch (const Error& e) {
                    if (e.code() != Errc::FieldTooSmall) throw;
                }
            }
            spliced.add(P, k);
        }
        E = spliced;
        for (const auto& [P, k] : E.terms())
            if (k == -1 && P.is_finite() && !(P == base)) E2.add(P, 1);
    }
    const Divisor E1 = E + E2;
    if (!supported_away(E1, s.D) || !supported_away(E2, s.D))
        fail(Errc::NoDecomposition, "decomposition meets the conductor");
    const std::int64_t k0 = E1.multiplicity(base);

    std::vector<KElem> pts{s.xi};
    for (const auto& [P, k] : E2.terms()) pts.push_back(P.x());
    const std::size_t n = pts.size() - 1;

    auto fs = rr_basis<KElem>(E1, s.field);
    if (fs.size() != n) fail(Errc::NoDecomposition, "L(E1) does not match the number of points in E2");

    auto lift = [&](const PrincipalPart& a) {
        auto basis = rr_basis<KElem>(E1 + s.D, s.field);
        Matrix<KElem> A = principal_part_matrix(basis, s.D, s.field);
        auto x = solve(A, as_K(a.coords()), KElem::zero(s.field));
        if (!x) fail(Errc::SolveFailed, "principal part does not lift to L(E1 + D)");
        return combine(basis, *x, s.field);
    };
    auto det_for = [&](const RatFunc& first) {
        Matrix<KElem> M(n + 1, n + 1, KElem::zero(s.field));
        for (std::size_t i = 0; i <= n; ++i) {
            const RatFunc& g = i == 0 ? first : fs[i - 1];
            M(i, 0) = polar_value(g, pts[0], k0);
            for (std::size_t j = 1; j <= n; ++j) M(i, j) = rf_eval(g, pts[j]);
        }
        return determinant(M);
    };
    KElem top = det_for(lift(alpha));
    KElem bottom = det_for(lift(beta));
    if (top.is_zero() || bottom.is_zero()) fail(Errc::VanishingDeterminant, "a symbol determinant vanishes");
    return top / bottom;
}

Shtuka shtuka_from_E0_case1(const Divisor& D, const KElem& xi, int N, const Divisor& E0) {
    if (N < 1) fail(Errc::InvalidArgument, "the twist count must be positive");
    if (!E0.is_base_rational()) fail(Errc::InvalidArgument, "E0 must be a divisor over F_q");
    if (E0.degree() != N - 2) fail(Errc::BadDegree, "E0 must have degree N - 2");
    Divisor E = E0;
    for (int k = 1; k < N; ++k) E.add(Point::finite(twist(xi, k)), -1);
    return shtuka_validate(D, xi, Point::finite(twist(xi, N)), E);
}

Shtuka shtuka_from_E0_case2(const Divisor& D, const KElem& xi, int N, const Divisor& E0) {
    validate_conductor(D);
    if (N <= D.degree() - 2) fail(Errc::InvalidArgument, "the twist count must exceed deg D - 2");
    if (!E0.is_base_rational()) fail(Errc::InvalidArgument, "E0 must be a divisor over F_q");
    if (E0.degree() != -N - 2) fail(Errc::BadDegree, "E0 must have degree -N - 2");
    Divisor E = E0;
    for (int k = 0; k <= N; ++k) E.add(Point::finite(twist(xi, k)), 1);
    return shtuka_validate(D, twist(xi, N), Point::finite(xi), E);
}

std::vector<RatFunc> drinfeld_iterates(const RatFunc& f, const RatFunc& psi, int N) {
    if (N < 0) fail(Errc::InvalidArgument, "iterate count must be nonnegative");
    std::vector<RatFunc> out{psi};
    for (int k = 0; k < N; ++k) out.push_back(f * rf_twist(out.back(), 1));
    return out;
}

std::size_t rank_over_K(const std::vector<RatFunc>& fs) {
    if (fs.empty()) return 0;
    FieldRef f = fs.front().context();
    KPoly L(KElem::one(f));
    for (const auto& x : fs) L = lcm(L, x.den());
    std::vector<KPoly> nums;
    int deg = 0;
    for (const auto& x : fs) {
        nums.push_back(x.num() * (L / x.den()));
        deg = std::max(deg, nums.back().degree());
    }
    Matrix<KElem> M(fs.size(), static_cast<std::size_t>(deg + 1), KElem::zero(f));
    for (std::size_t i = 0; i < nums.size(); ++i)
        for (int j = 0; j <= nums[i].degree(); ++j) M(i, static_cast<std::size_t>(j)) = nums[i].coeff(static_cast<std::size_t>(j));
    return rank(M);
}

}  // namespace ffhyp
