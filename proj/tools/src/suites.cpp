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

#include <functional>

#include "checks.hpp"
#include "ffhyp/factor.hpp"

namespace ffhyp::cli {

namespace {

using Lines = std::vector<std::string>;

const char* const kSmallFields[] = {"2", "3", "2^2"};

Point at(FieldRef f, std::int64_t a) { return Point::finite(FieldElem::from_int(f, a)); }
Divisor pt(FieldRef f, std::int64_t a, std::int64_t k = 1) { return Divisor(at(f, a), k); }
Divisor closed(FieldRef f, std::vector<std::int64_t> c, std::int64_t k = 1) {
    std::vector<FieldElem> v;
    for (auto x : c) v.push_back(FieldElem::from_int(f, x));
    return Divisor(Point::closed(FqPoly(f, std::move(v))), k);
}

std::string div(const Divisor& d) { return text::to_string(d); }

Lines basic_threepoint() {
    Lines out;
    for (const char* q : kSmallFields)
        for (const char* v : {"inf-0", "1-inf", "0-1"})
            for (int N : {-3, -2, -1, 1, 2, 3})
                out.push_back(std::string("check threepoint q=") + q + " N=" + std::to_string(N) + " variant=" + v);
    return out;
}

Lines simple_example() {
    Lines out;
    for (const char* kind : {"simple", "tau-identity"})
        for (const char* q : kSmallFields) {
            FieldRef f = text::parse_field(q);
            for (const auto& c : base_field_units(f))
                for (int N : {-3, -2, -1, 1, 2, 3})
                    out.push_back(std::string("check ") + kind + " q=" + q + " N=" + std::to_string(N) +
                                  " c=" + text::to_string(c));
        }
    return out;
}

Lines hyp_relations() {
    Lines out;
    auto q_of = [](int seed) { return std::string(kSmallFields[seed % 3]); };
    for (int s = 1; s <= 50; ++s) out.push_back("check hyp-methods q=" + q_of(s) + " seed=" + std::to_string(s));
    for (const char* kind : {"hyp-scaling", "hyp-additivity", "hyp-inv"})
        for (const char* regime : {"high", "low"})
            for (int s = 1; s <= 25; ++s)
                out.push_back(std::string("check ") + kind + " q=" + q_of(s) + " regime=" + regime +
                              " seed=" + std::to_string(s));
    for (const char* q : kSmallFields)
        for (int n = 1; n <= 4; ++n) {
            std::string els;
            for (int k = n; k >= 1; --k) els += (els.empty() ? "" : ",") + std::string(k == 1 ? "t" : "t^" + std::to_string(k));
            out.push_back(std::string("check moore q=") + q + " elements=" + els);
        }
    for (int s = 1; s <= 25; ++s) {
        const int n = 1 + s % 4;
        out.push_back("check moore q=" + q_of(s) + ",ext=" + std::to_string(n) + " n=" + std::to_string(n) +
                      " seed=" + std::to_string(s));
    }
    return out;
}

struct ConductorShape {
    std::string D, alpha, beta;
    int degree;
};

std::vector<ConductorShape> symbol_conductors() {
    return {{"[inf]+[0]", "alpha_inf", "alpha_0", 2},
            {"[inf]+2*[0]", "alpha_inf+1/t^2", "alpha_0", 3},
            {"[inf]+[1]+[0]", "alpha_0+alpha_1-alpha_inf", "alpha_inf", 3}};
}

// F_q-rational divisors of the given degree supported away from the conductor
std::vector<Divisor> e0_grid(FieldRef f, const ConductorShape& c, std::int64_t d) {
    const bool one_free = c.D.find("[1]") == std::string::npos;
    if (f->base_order() == 3) {
        if (one_free) return {pt(f, 1, d), pt(f, 2) + pt(f, 1, d - 1)};
        return {pt(f, 2, d), closed(f, {1, 0, 1}) + pt(f, 2, d - 2)};
    }
    if (one_free) return {pt(f, 1, d)};
    // over F_2 only the closed points t^2+t+1 and t^3+t+1 avoid [inf]+[1]+[0]
    Divisor c2 = closed(f, {1, 1, 1}), c3 = closed(f, {1, 1, 0, 1});
    switch (d) {
        case -1: return {c2 - c3};
        case 0: return {Divisor()};
        case 1: return {c3 - c2};
        case 2: return {c2};
        case -4: return {-2 * c2};
        case -5: return {-1 * (c2 + c3)};
        case -6: return {-3 * c2, -2 * c3};
        default: return {};
    }
}

Lines realization_lines(const char* kind) {
    Lines out;
    for (const char* q : {"2", "3"}) {
        FieldRef f = text::parse_field(q);
        for (const auto& c : symbol_conductors()) {
            auto line = [&](int which, int N, const Divisor& E0) {
                out.push_back(std::string("check ") + kind + " q=" + q + " conductor=" + c.D + " case=" +
                              std::to_string(which) + " N=" + std::to_string(N) + " E0=" + div(E0) +
                              " alpha=" + c.alpha + " beta=" + c.beta);
            };
            for (int N = 1; N <= 4; ++N)
                for (const auto& E0 : e0_grid(f, c, N - 2)) line(1, N, E0);
            for (int N = c.degree - 1; N <= c.degree + 1; ++N)
                for (const auto& E0 : e0_grid(f, c, -N - 2)) line(2, N, E0);
        }
    }
    return out;
}

Lines symbol_agreement() {
    Lines out = realization_lines("symbol");
    Lines more = realization_lines("vanishing");
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

Lines chi_zero() {
    Lines out;
    for (const char* q : {"2", "3"}) {
        for (auto [D1, m] : std::vector<std::pair<const char*, int>>{{"[inf]", 0}, {"2*[inf]", 0}, {"2*[inf]", 1}, {"3*[inf]", 1}})
            out.push_back(std::string("check chi-zero q=") + q + " shtuka=sample D1=" + D1 + " m=" + std::to_string(m) + " N=4");
    }
    // realizations have special function 1
    out.push_back("check chi-zero q=2 shtuka=realization conductor=[inf]+[0] case=1 shift=5 E0=3*[1] D1=[inf] m=0 N=4");
    out.push_back("check chi-zero q=3 shtuka=realization conductor=[inf]+[0] case=1 shift=5 E0=3*[1] D1=[inf] m=0 N=4");
    for (int m : {0, 1})
        out.push_back("check chi-zero q=2 shtuka=realization conductor=[inf]+[0] case=2 shift=2 E0=-4*[1] D1=2*[inf] m=" +
                      std::to_string(m) + " N=4");
    out.push_back("check chi-zero q=3 shtuka=realization conductor=[inf]+[0] case=2 shift=2 E0=-4*[1] D1=3*[inf] m=2 N=4");
    return out;
}

Lines coleman_threepoint() {
    Lines out;
    auto line = [&](const char* q, const Divisor& E) { out.push_back(std::string("check coleman q=") + q + " E=" + div(E)); };
    FieldRef f2 = text::parse_field("2");
    Divisor c2 = closed(f2, {1, 1, 1}), c3 = closed(f2, {1, 1, 0, 1});
    for (const auto& E : {Divisor(), c2 - c3, c3 - c2, c2, c3, -2 * c2, -1 * (c2 + c3), -3 * c2}) line("2", E);
    FieldRef f3 = text::parse_field("3");
    for (int k : {-1, 0, 1, 2, -4, -5, -6}) line("3", pt(f3, 2, k));
    Divisor q2 = closed(f3, {1, 0, 1});
    for (const auto& E : {q2 - pt(f3, 2), q2 - pt(f3, 2, 3), -1 * q2 - pt(f3, 2, 3)}) line("3", E);
    FieldRef f4 = text::parse_field("2^2");
    Point u = Point::finite(FieldElem::generator(f4));
    for (int k : {-1, 0, 1, 2, -4, -5}) line("2^2", Divisor(u, k));
    line("2^2", Divisor(u) - Divisor(Point::finite(FieldElem::generator(f4) + FieldElem::one(f4))));
    return out;
}

const std::vector<std::pair<std::string, std::function<Lines()>>>& suites() {
    static const std::vector<std::pair<std::string, std::function<Lines()>>> s = {
        {"basic-threepoint", basic_threepoint}, {"simple-example", simple_example},
        {"hyp-relations", hyp_relations},       {"symbol-agreement", symbol_agreement},
        {"chi-zero", chi_zero},                 {"coleman-threepoint", coleman_threepoint},
    };
    return s;
}

}  // namespace

std::optional<std::vector<std::string>> builtin_suite(std::string_view name) {
    for (const auto& [n, fn] : suites())
        if (n == name) return fn();
    return std::nullopt;
}

std::vector<std::string> builtin_suite_names() {
    std::vector<std::string> out;
    for (const auto& [n, fn] : suites()) out.push_back(n);
    return out;
}

}  // namespace ffhyp::cli
