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

#include "checks.hpp"

#include <charconv>
#include <functional>
#include <random>

#include "ffhyp/factor.hpp"
#include "ffhyp/moore.hpp"
#include "ffhyp/shtuka.hpp"

namespace ffhyp::cli {

std::int64_t geometric(std::int64_t q, std::int64_t n) {
    std::int64_t s = 0, p = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

text::Bindings preset_bindings(FieldRef f) {
    RatFunc t = RatFunc::t(f), one = RatFunc::one(f);
    return {{"alpha_inf", t}, {"alpha_1", one / (one - t)}, {"alpha_0", (t - one) / t}};
}

PrincipalPart parse_principal_part(std::string_view s, const Divisor& D, FieldRef f) {
    return PrincipalPart::of(text::parse_ratfunc_fq(s, f, preset_bindings(f)), D);
}

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(Errc::ParseError, msg); }

std::optional<std::string> opt(const Params& p, std::string_view key) {
    auto it = p.find(key);
    if (it == p.end()) return std::nullopt;
    return it->second;
}

const std::string& req(const Params& p, std::string_view key) {
    auto it = p.find(key);
    if (it == p.end()) bad("missing parameter '" + std::string(key) + "'");
    return it->second;
}

std::int64_t to_int(const std::string& s, std::string_view key) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        bad("parameter '" + std::string(key) + "' is not an integer: '" + s + "'");
    return v;
}

std::int64_t integer(const Params& p, std::string_view key) { return to_int(req(p, key), key); }

std::int64_t integer_or(const Params& p, std::string_view key, std::int64_t dflt) {
    auto v = opt(p, key);
    return v ? to_int(*v, key) : dflt;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

FieldRef field_of(const Params& p) { return text::parse_field(req(p, "q")); }

HypMethod method_of(const Params& p) {
    auto m = opt(p, "method");
    if (!m || *m == "moore") return HypMethod::moore;
    if (*m == "enumerate") return HypMethod::enumerate;
    bad("method must be enumerate or moore");
}

template <class T>
CheckOutcome compare(const T& lhs, const T& rhs) {
    return {text::to_string(lhs), text::to_string(rhs), lhs == rhs};
}

Point at(FieldRef f, std::int64_t a) { return Point::finite(FieldElem::from_int(f, a)); }
Divisor pt(FieldRef f, std::int64_t a, std::int64_t k = 1) { return Divisor(at(f, a), k); }
Divisor inf(std::int64_t k = 1) { return Divisor(Point::infinity(), k); }

RatFuncFq closed_form(const RatFuncFq& base, std::int64_t q, std::int64_t N) {
    const std::int64_t e = geometric(q, N > 0 ? N : -N);
    return base.pow(N > 0 ? e : -e);
}

FieldElem unit_param(const Params& p, FieldRef f) {
    FieldElem c = text::parse_element(req(p, "c"), f);
    if (c.is_zero() || !c.in_base()) bad("c must be a nonzero element of F_q");
    return c;
}

std::int64_t nonzero_N(const Params& p) {
    const std::int64_t N = integer(p, "N");
    if (N == 0) bad("N must be nonzero");
    return N;
}

// ---- deterministic random instances ----

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::uint64_t below(std::uint64_t n) { return g_() % n; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

   private:
    std::mt19937_64 g_;
};

FieldElem random_base(FieldRef f, Rng& r) {
    const auto& b = f->base_elements();
    return FieldElem(f, b[r.below(b.size())]);
}

FieldElem random_unit(FieldRef f, Rng& r) {
    const auto& b = f->base_elements();
    return FieldElem(f, b[1 + r.below(b.size() - 1)]);
}

// infinity, the F_q-rational points and the closed points of degree two
std::vector<Point> small_points(FieldRef f) {
    std::vector<Point> out{Point::infinity()};
    for (const auto& c : base_field_elements(f)) out.push_back(Point::finite(c));
    for (const auto& g : monic_irreducibles(f, 2)) out.push_back(Point::closed(g));
    return out;
}

Divisor random_conductor(FieldRef f, Rng& r, int max_degree) {
    const auto pts = small_points(f);
    const std::int64_t target = r.range(1, max_degree);
    Divisor D;
    while (D.degree() < target) {
        const Point& P = r.pick(pts);
        if (P.degree() <= target - D.degree()) D.add(P, 1);
    }
    return D;
}

Divisor random_divisor_away(FieldRef f, const Divisor& D, Rng& r, std::int64_t target) {
    std::vector<Point> away, rational;
    for (const auto& P : small_points(f)) {
        if (!supported_away(Divisor(P), D)) continue;
        away.push_back(P);
        if (P.degree() == 1) rational.push_back(P);
    }
    if (away.empty()) fail(Errc::InvalidArgument, "no points away from the conductor");
    for (int attempt = 0; attempt < 64; ++attempt) {
        Divisor E;
        const auto k = r.range(0, 2);
        for (std::int64_t i = 0; i < k; ++i) E.add(r.pick(away), r.range(-2, 2));
        const std::int64_t gap = target - E.degree();
        if (!rational.empty()) {
            E.add(r.pick(rational), gap);
            return E;
        }
        if (gap % 2 == 0) {
            E.add(r.pick(away), gap / 2);
            return E;
        }
    }
    fail(Errc::InvalidArgument, "no divisor of degree " + std::to_string(target) + " away from the conductor");
}

PrincipalPart random_pp(const Divisor& D, FieldRef f, Rng& r) {
    for (;;) {
        std::vector<FieldElem> c;
        for (std::int64_t i = 0; i < D.degree(); ++i) c.push_back(random_base(f, r));
        PrincipalPart a(D, c);
        if (!a.is_zero()) return a;
    }
}

// F_q-rational E of the requested regime, enumeration kept below about 4^4 elements
Divisor regime_divisor(FieldRef f, const Divisor& D, Rng& r, const std::string& regime) {
    const std::int64_t q = f->base_order();
    if (regime == "high") return random_divisor_away(f, D, r, r.range(-1, q <= 3 ? 3 : 2));
    if (regime == "low") {
        const std::int64_t extra = q <= 3 ? 3 : 2;
        return random_divisor_away(f, D, r, -D.degree() - r.range(1, extra));
    }
    bad("regime must be high or low");
}

struct Instance {
    FieldRef f;
    Rng rng;
    Divisor D;
};

Instance instance(const Params& p) {
    FieldRef f = field_of(p);
    Rng r(static_cast<std::uint64_t>(integer(p, "seed")));
    Divisor D = random_conductor(f, r, static_cast<int>(integer_or(p, "max-conductor", 3)));
    return {f, std::move(r), std::move(D)};
}

// ---- checks ----

CheckOutcome check_hyp(const Params& p, const CheckOptions& o) {
    FieldRef f = field_of(p);
    Divisor D = text::parse_divisor(req(p, "conductor"), f);
    auto a = parse_principal_part(req(p, "alpha"), D, f);
    auto b = parse_principal_part(req(p, "beta"), D, f);
    Divisor E = text::parse_divisor(req(p, "E"), f);
    RatFuncFq expect = text::parse_ratfunc_fq(req(p, "expect"), f);
    return compare(hyp(D, a, b, E, method_of(p), o.max_enum), expect);
}

CheckOutcome check_threepoint(const Params& p, const CheckOptions& o) {
    FieldRef f = field_of(p);
    const std::int64_t N = nonzero_N(p), q = f->base_order();
    const std::string variant = opt(p, "variant").value_or("inf-0");
    RatFuncFq t = RatFuncFq::t(f), one = RatFuncFq::one(f);
    Divisor D;
    std::string a, b;
    Point moving;
    RatFuncFq base = t;
    if (variant == "inf-0") {
        D = inf() + pt(f, 0);
        a = "alpha_inf", b = "alpha_0", moving = at(f, 1);
    } else if (variant == "1-inf") {
        D = pt(f, 1) + inf();
        a = "alpha_1", b = "alpha_inf", moving = at(f, 0), base = one / (one - t);
    } else if (variant == "0-1") {
        D = pt(f, 0) + pt(f, 1);
        a = "alpha_0", b = "alpha_1", moving = Point::infinity(), base = (t - one) / t;
    } else {
        bad("variant must be inf-0, 1-inf or 0-1");
    }
    auto lhs = hyp(D, alpha_preset(a, D, f), alpha_preset(b, D, f), Divisor(moving, N - 2), method_of(p), o.max_enum);
    return compare(lhs, closed_form(base, q, N));
}

RatFuncFq simple_hyp(FieldRef f, const FieldElem& c, std::int64_t N, HypMethod m, const CheckOptions& o) {
    Divisor D = inf() + pt(f, 0);
    Divisor E = Divisor(Point::finite(c)) + pt(f, 1, N - 3);
    return hyp(D, alpha_inf(D, f), alpha_0(D, f), E, m, o.max_enum);
}

CheckOutcome check_simple(const Params& p, const CheckOptions& o) {
    FieldRef f = field_of(p);
    const std::int64_t N = nonzero_N(p);
    FieldElem c = unit_param(p, f);
    return compare(simple_hyp(f, c, N, method_of(p), o), c.inverse() * closed_form(RatFuncFq::t(f), f->base_order(), N));
}

/*
   c^-1 tau^(q^N - 1) against the value with t = tau^(q-1). For N < 0 the left side is a
   q^|N|-th root, so both sides are compared after raising to the q^|N| power; the value
   side is already that power.
*/
CheckOutcome check_tau_identity(const Params& p, const CheckOptions& o) {
    FieldRef f = field_of(p);
    const std::int64_t N = nonzero_N(p), q = f->base_order();
    FieldElem c = unit_param(p, f);
    KElem tau = KElem::tau(f);
    KElem rhs = rf_eval(to_K(simple_hyp(f, c, N, HypMethod::moore, o)), tau.pow(q - 1));
    KElem lhs;
    if (N > 0) {
        lhs = KElem(c.inverse()) * tau.pow(ipow(q, N) - 1);
    } else {
        const std::int64_t Q = ipow(q, -N);
        lhs = KElem(c.inverse().pow(Q)) * tau.pow(1 - Q);
    }
    return compare(lhs, rhs);
}

CheckOutcome check_hyp_methods(const Params& p, const CheckOptions& o) {
    Instance in = instance(p);
    const std::int64_t q = in.f->base_order();
    std::int64_t top = 4;
    while (top > -1 && ipow(q, top + 1) > 1024) --top;
    Divisor E = random_divisor_away(in.f, in.D, in.rng, in.rng.range(-1, top));
    auto a = random_pp(in.D, in.f, in.rng), b = random_pp(in.D, in.f, in.rng);
    return compare(hyp_high(in.D, a, b, E, HypMethod::enumerate, o.max_enum),
                   hyp_high(in.D, a, b, E, HypMethod::moore, o.max_enum));
}

CheckOutcome check_hyp_scaling(const Params& p, const CheckOptions& o) {
    Instance in = instance(p);
    Divisor E = regime_divisor(in.f, in.D, in.rng, opt(p, "regime").value_or("high"));
    auto a = random_pp(in.D, in.f, in.rng), b = random_pp(in.D, in.f, in.rng);
    FieldElem c = random_unit(in.f, in.rng);
    RatFuncFq rhs = c * hyp(in.D, a, b, E, HypMethod::moore, o.max_enum);
    RatFuncFq l1 = hyp(in.D, c * a, b, E, HypMethod::moore, o.max_enum);
    RatFuncFq l2 = hyp(in.D, a, c.inverse() * b, E, HypMethod::moore, o.max_enum);
    CheckOutcome out = compare(l1, rhs);
    if (!(l2 == l1)) {
        out.lhs += " / " + text::to_string(l2);
        out.pass = false;
    }
    return out;
}

CheckOutcome check_hyp_additivity(const Params& p, const CheckOptions& o) {
    Instance in = instance(p);
    // a split into two nonzero parts needs at least two nonzero principal parts
    while (ipow(in.f->base_order(), in.D.degree()) < 4) in.D = random_conductor(in.f, in.rng, 3);
    Divisor E = regime_divisor(in.f, in.D, in.rng, opt(p, "regime").value_or("high"));
    auto b = random_pp(in.D, in.f, in.rng);
    for (;;) {
        auto a1 = random_pp(in.D, in.f, in.rng), a2 = random_pp(in.D, in.f, in.rng);
        if ((a1 + a2).is_zero()) continue;
        return compare(hyp(in.D, a1 + a2, b, E, HypMethod::moore, o.max_enum),
                       hyp(in.D, a1, b, E, HypMethod::moore, o.max_enum) +
                           hyp(in.D, a2, b, E, HypMethod::moore, o.max_enum));
    }
}

// a nonconstant function whose divisor avoids D (degree zero at infinity when infinity is in D)
RatFuncFq random_unit_function(FieldRef f, const Divisor& D, Rng& r) {
    std::vector<Point> finite, rational;
    for (const auto& P : small_points(f)) {
        if (P.is_infinity() || !supported_away(Divisor(P), D)) continue;
        finite.push_back(P);
        if (P.degree() == 1) rational.push_back(P);
    }
    if (finite.empty()) fail(Errc::InvalidArgument, "no finite points away from the conductor");
    const bool balance = D.multiplicity(Point::infinity()) > 0;
    for (;;) {
        RatFuncFq g(random_unit(f, r));
        const auto k = r.range(1, 3);
        for (std::int64_t i = 0; i < k; ++i) {
            RatFuncFq lin(point_poly<FieldElem>(r.pick(finite), f));
            g = r.below(2) ? g * lin : g / lin;
        }
        if (balance) {
            const std::int64_t d = g.num().degree() - g.den().degree();
            if (d != 0) {
                if (!rational.empty()) {
                    g = g * RatFuncFq(point_poly<FieldElem>(r.pick(rational), f)).pow(-d);
                } else if (d % 2 == 0) {
                    g = g * RatFuncFq(point_poly<FieldElem>(r.pick(finite), f)).pow(-d / 2);
                } else {
                    continue;
                }
            }
        }
        if (!g.is_constant()) return g;
    }
}

CheckOutcome check_hyp_inv(const Params& p, const CheckOptions& o) {
    Instance in = instance(p);
    Divisor E = regime_divisor(in.f, in.D, in.rng, opt(p, "regime").value_or("high"));
    auto a = random_pp(in.D, in.f, in.rng), b = random_pp(in.D, in.f, in.rng);
    RatFuncFq g = random_unit_function(in.f, in.D, in.rng);
    return compare(hyp(in.D, a, b, E + divisor_of(g), HypMethod::moore, o.max_enum),
                   hyp(in.D, a.act(g), b.act(g), E, HypMethod::moore, o.max_enum));
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == ',') {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

CheckOutcome check_moore(const Params& p, const CheckOptions& o) {
    FieldRef f = field_of(p);
    if (auto els = opt(p, "elements")) {
        std::vector<RatFuncFq> xs;
        for (const auto& s : split_list(*els)) xs.push_back(text::parse_ratfunc_fq(s, f));
        return compare(moore_det(xs), moore_product(xs, f, RatFuncFq::one(f), o.max_enum));
    }
    Rng r(static_cast<std::uint64_t>(integer(p, "seed")));
    const std::int64_t n = integer(p, "n");
    if (n < 1) bad("n must be positive");
    std::vector<FieldElem> xs;
    for (std::int64_t i = 0; i < n; ++i) xs.push_back(FieldElem(f, static_cast<std::uint32_t>(r.below(f->order()))));
    return compare(moore_det(xs), moore_product(xs, f, FieldElem::one(f), o.max_enum));
}

struct Realization {
    Shtuka s;
    Divisor D, E0;
    KElem xi;
};

Realization realization(const Params& p, FieldRef f) {
    KElem xi = text::parse_kelem(opt(p, "xi").value_or("tau"), f);
    text::Bindings env{{"xi", RatFunc(xi)}};
    Divisor D = text::parse_divisor(req(p, "conductor"), f, env);
    Divisor E0 = text::parse_divisor(req(p, "E0"), f, env);
    const std::int64_t which = integer(p, "case");
    const int shift = static_cast<int>(integer(p, p.count("shift") ? "shift" : "N"));
    if (which == 1) return {shtuka_from_E0_case1(D, xi, shift, E0), D, E0, xi};
    if (which == 2) return {shtuka_from_E0_case2(D, xi, shift, E0), D, E0, xi};
    bad("case must be 1 or 2");
}

CheckOutcome check_symbol(const Params& p, const CheckOptions& o) {
    FieldRef f = field_of(p);
    Realization x = realization(p, f);
    auto a = parse_principal_part(req(p, "alpha"), x.D, f);
    auto b = parse_principal_part(req(p, "beta"), x.D, f);
    KElem solve = cd_symbol(x.s, a, b, SymbolMethod::solve);
    KElem det = cd_symbol(x.s, a, b, SymbolMethod::determinant);
    KElem via_hyp = rf_eval(to_K(hyp(x.D, a, b, x.E0, HypMethod::moore, o.max_enum)), x.xi);
    CheckOutcome out = compare(solve, via_hyp);
    if (!(det == solve)) {
        out.lhs += " (determinant " + text::to_string(det) + ")";
        out.pass = false;
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// psi does not vanish at x: the reduced numerator has no root there
bool nonvanishing_at(const RatFunc& psi, const KElem& x) { return !psi.num().eval(x).is_zero(); }

CheckOutcome check_vanishing(const Params& p, const CheckOptions&) {
    FieldRef f = field_of(p);
    Realization x = realization(p, f);
    auto a = parse_principal_part(req(p, "alpha"), x.D, f);
    auto b = parse_principal_part(req(p, "beta"), x.D, f);
    const std::size_t dim = rr_basis<KElem>(x.s.E, f).size();
    RatFunc pa = psi_lift(x.s, a), pb = psi_lift(x.s, b);
    bool additive = true;
    if (!(a + b).is_zero()) additive = psi_lift(x.s, a + b) == pa + pb;
    const bool nonzero = nonvanishing_at(pa, x.s.xi) && nonvanishing_at(pb, x.s.xi);
    return {"dim=" + std::to_string(dim) + " additive=" + yes_no(additive) + " nonvanishing=" + yes_no(nonzero),
            "dim=0 additive=yes nonvanishing=yes", dim == 0 && additive && nonzero};
}

// xi = tau^(q-1), E = [tau] - 2[1], eta = tau^((q-1)^2) over [0] + [inf]; for q = 2,
// xi = tau, E = [tau^3] - 2[1], eta = tau^-1
Shtuka sample_shtuka(FieldRef f) {
    const std::int64_t q = f->base_order();
    KElem tau = KElem::tau(f);
    Divisor D = pt(f, 0) + inf();
    if (q == 2) return shtuka_validate(D, tau, Point::finite(tau.inverse()), Divisor(Point::finite(tau.pow(3))) + pt(f, 1, -2));
    return shtuka_validate(D, tau.pow(q - 1), Point::finite(tau.pow((q - 1) * (q - 1))),
                           Divisor(Point::finite(tau)) + pt(f, 1, -2));
}

CheckOutcome check_chi_zero(const Params& p, const CheckOptions&) {
    FieldRef f = field_of(p);
    const std::string kind = opt(p, "shtuka").value_or("sample");
    Shtuka s = kind == "sample" ? sample_shtuka(f) : realization(p, f).s;
    if (kind != "sample" && kind != "realization") bad("shtuka must be sample or realization");
    text::Bindings env{{"xi", RatFunc(s.xi)}};
    Divisor D1 = text::parse_divisor(req(p, "D1"), f, env);
    const std::int64_t m = integer(p, "m"), N = integer(p, "N");
    if (m < 0 || N < 1) fail(Errc::InvalidArgument, "need m >= 0 and N >= 1");
    const std::int64_t d = (s.E + D1).degree();
    if (m > d) fail(Errc::InvalidArgument, "m exceeds deg(E + D1)");
    for (std::int64_t i = 1 - d; i <= N - m; ++i) {
        std::optional<KElem> twisted;
        try {
            twisted = s.xi.frob(i);
        } catch (const Error& e) {
            if (e.code() != Errc::NoRoot) throw;
        }
        if (twisted && s.eta == Point::finite(*twisted))
            fail(Errc::InvalidArgument, "eta is the twist of xi by " + std::to_string(i));
    }
    Divisor space = s.E + D1;
    for (std::int64_t i = 0; i < m; ++i) space.add(Point::finite(s.xi.frob(-i)), -1);
    auto basis = rr_basis<KElem>(space, f);
    if (basis.empty()) fail(Errc::InvalidArgument, "the lifting space is zero");
    auto its = drinfeld_iterates(special_function(s), basis.back(), static_cast<int>(N));
    return {std::to_string(rank_over_K(its)), std::to_string(N + 1), rank_over_K(its) == static_cast<std::size_t>(N + 1)};
}

CheckOutcome check_coleman(const Params& p, const CheckOptions& o) {
    FieldRef f = field_of(p);
    Divisor D = inf() + pt(f, 1) + pt(f, 0);
    Divisor E = text::parse_divisor(req(p, "E"), f);
    auto a0 = alpha_0(D, f), a1 = alpha_1(D, f), ai = alpha_inf(D, f);
    return compare(hyp(D, a0 + a1 - ai, ai, E, HypMethod::enumerate, o.max_enum),
                   hyp(D, a0, ai, E, HypMethod::moore, o.max_enum) + hyp(D, a1 - ai, ai, E, HypMethod::moore, o.max_enum));
}

using CheckFn = CheckOutcome (*)(const Params&, const CheckOptions&);

const std::map<std::string, CheckFn, std::less<>>& registry() {
    static const std::map<std::string, CheckFn, std::less<>> r = {
        {"hyp", check_hyp},
        {"threepoint", check_threepoint},
        {"simple", check_simple},
        {"tau-identity", check_tau_identity},
        {"hyp-methods", check_hyp_methods},
        {"hyp-scaling", check_hyp_scaling},
        {"hyp-additivity", check_hyp_additivity},
        {"hyp-inv", check_hyp_inv},
        {"moore", check_moore},
        {"symbol", check_symbol},
        {"vanishing", check_vanishing},
        {"chi-zero", check_chi_zero},
        {"coleman", check_coleman},
    };
    return r;
}

}  // namespace

CheckOutcome run_check(std::string_view name, const Params& p, const CheckOptions& opt) {
    auto it = registry().find(name);
    if (it == registry().end()) bad("unknown check '" + std::string(name) + "'");
    return it->second(p, opt);
}

bool is_known_check(std::string_view name) { return registry().count(name) > 0; }

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

}  // namespace ffhyp::cli
