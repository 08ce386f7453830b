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

#include "ffhyp/factor.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace ffhyp {

namespace {

FieldElem pth_root(const FieldElem& c) { return {c.field(), c.field()->frob_p(c.value(), -1)}; }

// g = h(t^p) -> h^(1/p)
FqPoly pth_root(const FqPoly& g) {
    FieldRef f = g.context();
    const std::uint32_t p = f->p();
    std::vector<FieldElem> out(g.degree() / p + 1, FieldElem::zero(f));
    for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) out[i / p] = pth_root(g.coeff(i));
    return FqPoly(f, std::move(out));
}

std::uint64_t sub_order(FieldRef f, int sub_m) {
    std::uint64_t Q = 1;
    for (int i = 0; i < sub_m; ++i) Q *= f->p();
    return Q;
}

FqPoly random_poly(FieldRef f, int sub_m, int deg, std::mt19937_64& rng) {
    const std::uint64_t Q = sub_order(f, sub_m);
    const std::uint32_t step = static_cast<std::uint32_t>((f->order() - 1) / (Q - 1));
    std::uniform_int_distribution<std::uint64_t> dist(0, Q - 1);
    std::vector<FieldElem> c;
    for (int i = 0; i <= deg; ++i) {
        std::uint64_t k = dist(rng);
        if (k == 0)
            c.push_back(FieldElem::zero(f));
        else
            c.emplace_back(f, f->pow(f->primitive(), static_cast<std::int64_t>((k - 1) * step)));
    }
    return FqPoly(f, std::move(c));
}

// all factors of f (square-free, all irreducible factors of degree d)
void equal_degree(const FqPoly& f, int d, int sub_m, std::mt19937_64& rng, Factorization& out) {
    if (f.degree() == d) {
        out.emplace_back(f.monic(), 1);
        return;
    }
    FieldRef F = f.context();
    const std::uint64_t Q = sub_order(F, sub_m);
    const FqPoly one(FieldElem::one(F));
    while (true) {
        FqPoly a = random_poly(F, sub_m, f.degree() - 1, rng);
        if (a.degree() < 1) continue;
        FqPoly b(F);
        if (Q % 2 == 1) {
            // a^((Q^d-1)/2) = (a^(1+Q+...+Q^(d-1)))^((Q-1)/2)
            FqPoly norm = one;
            FqPoly cur = a % f;
            for (int i = 0; i < d; ++i) {
                norm = mul_mod(norm, cur, f);
                if (i + 1 < d) cur = pow_mod(cur, Q, f);
            }
            b = pow_mod(norm, (Q - 1) / 2, f) - one;
        } else {
            // absolute trace to F_2
            const int k = sub_m * d;
            FqPoly cur = a % f;
            b = cur;
            for (int i = 1; i < k; ++i) {
                cur = mul_mod(cur, cur, f);
                b += cur;
            }
        }
        FqPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, sub_m, rng, out);
            equal_degree(f / g, d, sub_m, rng, out);
            return;
        }
    }
}

// f square-free and monic
void factor_squarefree(FqPoly f, int sub_m, int mult, std::mt19937_64& rng, Factorization& out) {
    FieldRef F = f.context();
    const std::uint64_t Q = sub_order(F, sub_m);
    FqPoly x = FqPoly::x(F);
    FqPoly h = x % f;
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        h = pow_mod(h, Q, f);
        FqPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            Factorization part;
            equal_degree(g, d, sub_m, rng, part);
            for (auto& [p, e] : part) out.emplace_back(std::move(p), mult);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), mult);
}

void sort_factors(Factorization& fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal factors
    Factorization merged;
    for (auto& fe : fs) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(std::move(fe));
    }
    fs = std::move(merged);
}

}  // namespace

bool coefficients_in(const FqPoly& g, int sub_m) {
    FieldRef f = g.context();
    for (const auto& c : g.coeffs())
        if (f->frob_p(c.value(), sub_m) != c.value()) return false;
    return true;
}

Factorization squarefree_decomposition(const FqPoly& g, int sub_m) {
    if (g.is_zero()) fail(Errc::InvalidArgument, "factorization of the zero polynomial");
    Factorization out;
    FieldRef F = g.context();
    const int p = static_cast<int>(F->p());
    FqPoly f = g.monic();
    if (f.degree() <= 0) return out;
    FqPoly c = gcd(f, f.derivative());
    FqPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = gcd(w, c);
        FqPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& [fac, e] : squarefree_decomposition(pth_root(c), sub_m)) out.emplace_back(fac, e * p);
    }
    (void)sub_m;
    return out;
}

Factorization factor_over(const FqPoly& g, int sub_m) {
    if (g.is_zero()) fail(Errc::InvalidArgument, "factorization of the zero polynomial");
    if (!coefficients_in(g, sub_m)) fail(Errc::InvalidArgument, "coefficients outside the factorization field");
    Factorization out;
    std::mt19937_64 rng(0x5eed5eedULL);
    for (auto& [part, mult] : squarefree_decomposition(g, sub_m)) factor_squarefree(part, sub_m, mult, rng, out);
    sort_factors(out);
    return out;
}

Factorization factor_over_base(const FqPoly& g) { return factor_over(g, g.context()->base_m()); }

Factorization poly_factor_fq(const FqPoly& g) { return factor_over(g, g.context()->m()); }

bool is_irreducible_over(const FqPoly& g, int sub_m) {
    if (g.degree() < 1) return false;
    if (g.degree() == 1) return true;
    FieldRef F = g.context();
    const std::uint64_t Q = sub_order(F, sub_m);
    FqPoly f = g.monic();
    FqPoly x = FqPoly::x(F);
    FqPoly h = x;
    for (int i = 1; i <= f.degree() / 2; ++i) {
        h = pow_mod(h, Q, f);
        if (gcd(f, h - x).degree() > 0) return false;
    }
    return true;
}

bool is_irreducible_over_base(const FqPoly& g) { return is_irreducible_over(g, g.context()->base_m()); }

std::vector<FieldElem> roots_in_field(const FqPoly& g) {
    std::vector<FieldElem> out;
    if (g.is_zero()) fail(Errc::InvalidArgument, "roots of the zero polynomial");
    FieldRef f = g.context();
    for (std::uint32_t v = 0; v < f->order(); ++v) {
        FieldElem x(f, v);
        if (g.eval(x).is_zero()) out.push_back(x);
    }
    return out;
}

namespace {

// k-th monic polynomial of the given degree over F_q, low coefficients as base-q digits
std::optional<FqPoly> nth_monic(FieldRef f, int degree, std::uint64_t k) {
    const auto& base = f->base_elements();
    const std::uint64_t q = base.size();
    std::vector<FieldElem> c(degree + 1, FieldElem::zero(f));
    for (int i = 0; i < degree; ++i) {
        c[i] = FieldElem(f, base[k % q]);
        k /= q;
    }
    if (k != 0) return std::nullopt;
    c[degree] = FieldElem::one(f);
    return FqPoly(f, std::move(c));
}

}  // namespace

std::vector<FqPoly> monic_irreducibles(FieldRef f, int degree) {
    std::vector<FqPoly> out;
    for (std::uint64_t k = 0;; ++k) {
        auto p = nth_monic(f, degree, k);
        if (!p) break;
        if (is_irreducible_over_base(*p)) out.push_back(std::move(*p));
    }
    return out;
}

FqPoly smallest_irreducible(FieldRef f, int degree) {
    for (std::uint64_t k = 0;; ++k) {
        auto p = nth_monic(f, degree, k);
        if (!p) break;
        if (is_irreducible_over_base(*p)) return *p;
    }
    fail(Errc::InvalidArgument, "no irreducible polynomial of the requested degree");
}

}  // namespace ffhyp
