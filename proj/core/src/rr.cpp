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

#include "ffhyp/rr.hpp"

namespace ffhyp {

FieldElem trace_to_base(const ResidueElem& x) {
    const ResidueRing* ring = x.context();
    FieldRef f = ring->modulus.context();
    const int d = ring->modulus.degree();
    const std::uint64_t q = f->base_order();
    ResidueElem acc = x;
    ResidueElem cur = x;
    for (int i = 1; i < d; ++i) {
        ResidueElem base = cur, pw = ResidueElem::one(ring);
        for (std::uint64_t e = q; e; e >>= 1) {
            if (e & 1) pw *= base;
            base *= base;
        }
        cur = pw;
        acc += cur;
    }
    if (acc.value().degree() > 0) fail(Errc::InvalidArgument, "trace is not a constant; modulus not irreducible");
    return acc.value().coeff(0);
}

template <class R>
std::vector<RationalFunction<R>> rr_basis(const Divisor& E, typename R::context_type ctx) {
    std::vector<RationalFunction<R>> out;
    const std::int64_t d = E.degree();
    if (d < 0) return out;
    Polynomial<R> h(R::one(ctx)), G(R::one(ctx));
    for (const auto& [P, k] : E.terms()) {
        if (P.is_infinity()) continue;
        Polynomial<R> pp = point_poly<R>(P, ctx).pow(static_cast<std::uint64_t>(k > 0 ? k : -k));
        if (k > 0)
            h = h * pp;
        else
            G = G * pp;
    }
    Divisor fin;
    for (const auto& [P, k] : E.terms())
        if (!P.is_infinity()) fin.add(P, -k);
    const Point origin = Point::finite(FieldElem::zero(ctx));
    for (std::int64_t i = 0; i <= d; ++i) {
        Divisor div = fin + Divisor(origin, i);
        div.add(Point::infinity(), -div.degree());
        out.push_back(RationalFunction<R>(G * Polynomial<R>::monomial(R::one(ctx), static_cast<std::size_t>(i)), h)
                          .with_divisor(std::move(div)));
    }
    return out;
}

template <class R>
std::vector<Differential<R>> omega_basis(const Divisor& E, typename R::context_type ctx) {
    std::vector<Differential<R>> out;
    for (auto& f : rr_basis<R>(-E - Divisor(Point::infinity(), 2), ctx)) out.push_back({std::move(f)});
    return out;
}

namespace {

// first n coefficients of the power series a / b, b(0) != 0
template <class R>
std::vector<R> series_divide(const Polynomial<R>& a, const Polynomial<R>& b, std::size_t n) {
    std::vector<R> c;
    c.reserve(n);
    const R inv = R::one(b.context()) / b.coeff(0);
    for (std::size_t i = 0; i < n; ++i) {
        R acc = a.coeff(i);
        for (std::size_t j = 1; j <= i && j < b.coeffs().size(); ++j) acc -= b.coeffs()[j] * c[i - j];
        c.push_back(acc * inv);
    }
    return c;
}

}  // namespace

template <class R>
R laurent_residue(const Polynomial<R>& num, const Polynomial<R>& den, const R& a) {
    const auto ctx = den.context();
    if (num.is_zero()) return R::zero(ctx);
    Polynomial<R> ds = den.shift(a);
    std::size_t k = 0;
    while (k < ds.coeffs().size() && ds.coeffs()[k].is_zero()) ++k;
    if (k == 0) return R::zero(ctx);
    std::vector<R> rest(ds.coeffs().begin() + static_cast<std::ptrdiff_t>(k), ds.coeffs().end());
    Polynomial<R> dk(ctx, std::move(rest));
    return series_divide(num.shift(a), dk, k)[k - 1];
}

template <class R>
R residue(const Differential<R>& w, const Point& P) {
    const auto& f = w.coeff;
    const auto ctx = f.den().context();
    if (f.is_zero()) return R::zero(ctx);
    if (P.is_finite()) return laurent_residue(f.num(), f.den(), point_coordinate<R>(P));
    if (P.is_infinity()) {
        // omega = -s^(b-a-2) g^(s)/h^(s) ds
        const int a = f.num().degree(), b = f.den().degree();
        const int j = a - b + 1;
        if (j < 0) return R::zero(ctx);
        auto c = series_divide(f.num().reverse(a), f.den().reverse(b), static_cast<std::size_t>(j) + 1);
        return -c[static_cast<std::size_t>(j)];
    }
    // closed point: polar part r / p^k, sum of residues at the roots is [t^(kd-1)] r
    Polynomial<R> p = embed_poly<R>(P.poly());
    auto [k, rest] = split_valuation(f.den(), p);
    if (k == 0) return R::zero(ctx);
    Polynomial<R> pk = p.pow(static_cast<std::uint64_t>(k));
    Polynomial<R> r = (f.num() * inverse_mod(rest, pk)) % pk;
    return r.coeff(static_cast<std::size_t>(k * p.degree() - 1));
}

ResidueElem local_residue(const Differential<FieldElem>& w, const Point& P, const ResidueRing& ring) {
    if (!P.is_closed() || !(ring.modulus == P.poly())) fail(Errc::InvalidArgument, "local residue needs its closed point");
    auto lift = [&](const FqPoly& a) {
        std::vector<ResidueElem> c;
        for (const auto& x : a.coeffs()) c.emplace_back(&ring, x);
        return Polynomial<ResidueElem>(&ring, std::move(c));
    };
    return laurent_residue(lift(w.coeff.num()), lift(w.coeff.den()), ResidueElem::generator(&ring));
}

void validate_conductor(const Divisor& D) {
    if (D.is_zero()) fail(Errc::ZeroConductor, "the conductor must be nonzero");
    if (!D.is_effective()) fail(Errc::InvalidArgument, "the conductor must be effective");
    if (!D.is_base_rational()) fail(Errc::InvalidArgument, "the conductor must be a divisor over F_q");
}

template <class R>
std::vector<R> principal_part_coords(const RationalFunction<R>& f, const Divisor& D) {
    const auto ctx = f.den().context();
    std::vector<R> out;
    for (const auto& [P, n] : D.terms()) {
        if (P.is_infinity()) {
            Polynomial<R> Q = f.num() / f.den();
            if (Q.degree() > n) fail(Errc::InvalidArgument, "pole at infinity exceeds the conductor");
            for (std::int64_t j = 1; j <= n; ++j) out.push_back(Q.coeff(static_cast<std::size_t>(j)));
            continue;
        }
        Polynomial<R> pi = point_poly<R>(P, ctx);
        const std::size_t width = static_cast<std::size_t>(n * pi.degree());
        auto [k, rest] = split_valuation(f.den(), pi);
        if (k > n) fail(Errc::InvalidArgument, "pole order exceeds the conductor");
        if (k == 0 || f.is_zero()) {
            for (std::size_t j = 0; j < width; ++j) out.push_back(R::zero(ctx));
            continue;
        }
        Polynomial<R> pk = pi.pow(static_cast<std::uint64_t>(k));
        Polynomial<R> r = (f.num() * inverse_mod(rest, pk)) % pk;
        Polynomial<R> numer = r * pi.pow(static_cast<std::uint64_t>(n - k));
        for (std::size_t j = 0; j < width; ++j) out.push_back(numer.coeff(j));
    }
    return out;
}

template <class R>
RationalFunction<R> principal_part_lift(const std::vector<R>& coords, const Divisor& D, typename R::context_type ctx) {
    // common denominator H = prod p^n
    std::vector<std::pair<Polynomial<R>, Polynomial<R>>> parts;  // (numerator, p^n)
    Polynomial<R> H(R::one(ctx));
    Polynomial<R> poly_part(ctx);
    std::size_t pos = 0;
    for (const auto& [P, n] : D.terms()) {
        if (P.is_infinity()) {
            for (std::int64_t j = 1; j <= n; ++j, ++pos)
                poly_part += Polynomial<R>::monomial(coords.at(pos), static_cast<std::size_t>(j));
            continue;
        }
        Polynomial<R> pn = point_poly<R>(P, ctx).pow(static_cast<std::uint64_t>(n));
        const std::size_t width = static_cast<std::size_t>(pn.degree());
        std::vector<R> c(coords.begin() + static_cast<std::ptrdiff_t>(pos),
                         coords.begin() + static_cast<std::ptrdiff_t>(pos + width));
        pos += width;
        parts.emplace_back(Polynomial<R>(ctx, std::move(c)), pn);
        H = H * pn;
    }
    if (pos != coords.size()) fail(Errc::InvalidArgument, "principal part coordinates do not match the conductor");
    Polynomial<R> num = poly_part * H;
    for (const auto& [r, pn] : parts) num += r * (H / pn);
    return RationalFunction<R>(num, H);
}

template std::vector<RatFuncFq> rr_basis<FieldElem>(const Divisor&, FieldRef);
template std::vector<RatFunc> rr_basis<KElem>(const Divisor&, FieldRef);
template std::vector<Differential<FieldElem>> omega_basis<FieldElem>(const Divisor&, FieldRef);
template std::vector<Differential<KElem>> omega_basis<KElem>(const Divisor&, FieldRef);
template FieldElem laurent_residue(const FqPoly&, const FqPoly&, const FieldElem&);
template KElem laurent_residue(const KPoly&, const KPoly&, const KElem&);
template FieldElem residue(const Differential<FieldElem>&, const Point&);
template KElem residue(const Differential<KElem>&, const Point&);
template std::vector<FieldElem> principal_part_coords(const RatFuncFq&, const Divisor&);
template std::vector<KElem> principal_part_coords(const RatFunc&, const Divisor&);
template RatFuncFq principal_part_lift(const std::vector<FieldElem>&, const Divisor&, FieldRef);
template RatFunc principal_part_lift(const std::vector<KElem>&, const Divisor&, FieldRef);

PrincipalPart::PrincipalPart(Divisor D, std::vector<FieldElem> coords) : D_(std::move(D)), c_(std::move(coords)) {
    validate_conductor(D_);
    if (static_cast<std::int64_t>(c_.size()) != D_.degree())
        fail(Errc::InvalidArgument, "principal part needs deg D coordinates");
    f_ = c_.front().field();
    for (const auto& c : c_)
        if (!c.in_base()) fail(Errc::InvalidArgument, "principal part coordinates must lie in F_q");
}

PrincipalPart PrincipalPart::zero(const Divisor& D, FieldRef f) {
    validate_conductor(D);
    return PrincipalPart(D, std::vector<FieldElem>(static_cast<std::size_t>(D.degree()), FieldElem::zero(f)));
}

PrincipalPart PrincipalPart::of(const RatFuncFq& f, const Divisor& D) {
    validate_conductor(D);
    return PrincipalPart(D, principal_part_coords(f, D));
}

PrincipalPart PrincipalPart::of(const RatFunc& f, const Divisor& D) {
    auto g = to_fq(f);
    if (!g) fail(Errc::InvalidArgument, "principal part of a function with tau-dependent coefficients");
    return of(*g, D);
}

bool PrincipalPart::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

RatFuncFq PrincipalPart::lift() const { return principal_part_lift(c_, D_, f_); }

PrincipalPart PrincipalPart::act(const RatFuncFq& u) const { return of(u * lift(), D_); }

PrincipalPart PrincipalPart::operator-() const {
    PrincipalPart out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

PrincipalPart operator+(const PrincipalPart& a, const PrincipalPart& b) {
    if (!(a.D_ == b.D_)) fail(Errc::InvalidArgument, "principal parts along different conductors");
    PrincipalPart out(a);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

PrincipalPart operator*(const FieldElem& c, const PrincipalPart& a) {
    PrincipalPart out(a);
    for (auto& x : out.c_) x *= c;
    return out;
}

template <class R>
R res_pairing(const Differential<R>& w, const PrincipalPart& alpha) {
    const auto ctx = w.coeff.den().context();
    Differential<R> prod{w.coeff * embed<R>(alpha.lift())};
    R acc = R::zero(ctx);
    for (const auto& [P, n] : alpha.conductor().terms()) acc += residue(prod, P);
    return acc;
}

template FieldElem res_pairing(const Differential<FieldElem>&, const PrincipalPart&);
template KElem res_pairing(const Differential<KElem>&, const PrincipalPart&);

std::vector<Differential<FieldElem>> conductor_dual_differentials(const Divisor& D, FieldRef f) {
    validate_conductor(D);
    const int n = static_cast<int>(D.degree());
    FqPoly H = smallest_irreducible(f, n + 1);
    std::vector<Differential<FieldElem>> out;
    for (int i = 0; i < n; ++i)
        out.push_back({RatFuncFq(FqPoly::monomial(FieldElem::one(f), static_cast<std::size_t>(i)), H)});
    return out;
}

}  // namespace ffhyp
