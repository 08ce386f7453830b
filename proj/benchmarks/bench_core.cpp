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
#include <benchmark/benchmark.h>

#include <random>

#include "ffhyp/factor.hpp"
#include "ffhyp/hyp.hpp"
#include "ffhyp/shtuka.hpp"

using namespace ffhyp;

namespace {

FqPoly random_poly(FieldRef f, int degree, std::mt19937_64& g) {
    std::vector<FieldElem> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(f, static_cast<std::uint32_t>(g() % f->order()));
    c.back() = FieldElem::one(f);
    return FqPoly(f, std::move(c));
}

void BM_FieldMul(benchmark::State& state) {
    FieldRef f = make_field(2, 8);
    std::mt19937_64 g(1);
    std::vector<FieldElem> xs;
    for (int i = 0; i < 1024; ++i) xs.emplace_back(f, static_cast<std::uint32_t>(1 + g() % (f->order() - 1)));
    FieldElem acc = FieldElem::one(f);
    for (auto _ : state) {
        for (const auto& x : xs) acc *= x;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul);

void BM_Factor(benchmark::State& state) {
    FieldRef f = make_field(3, 1);
    std::mt19937_64 g(2);
    FqPoly p = random_poly(f, static_cast<int>(state.range(0)), g);
    for (auto _ : state) benchmark::DoNotOptimize(factor_over_base(p));
}
BENCHMARK(BM_Factor)->Arg(16)->Arg(32)->Arg(64);

void hyp_threepoint(benchmark::State& state, HypMethod method) {
    FieldRef f = make_field(3, 1);
    const Divisor D = Divisor(Point::infinity()) + Divisor(Point::finite(FieldElem::zero(f)));
    const Divisor E(Point::finite(FieldElem::one(f)), state.range(0) - 2);
    auto a = alpha_inf(D, f), b = alpha_0(D, f);
    for (auto _ : state) benchmark::DoNotOptimize(hyp_high(D, a, b, E, method));
}

void BM_HypEnumerate(benchmark::State& state) { hyp_threepoint(state, HypMethod::enumerate); }
void BM_HypMoore(benchmark::State& state) { hyp_threepoint(state, HypMethod::moore); }
BENCHMARK(BM_HypEnumerate)->DenseRange(2, 6);
BENCHMARK(BM_HypMoore)->DenseRange(2, 6);

// denominator of a realization's Riemann-Roch basis against a power of a rational linear form
void kpoly_gcd(benchmark::State& state, bool fast) {
    FieldRef f = make_field(3, 1);
    KPoly h(KElem::one(f));
    for (int k = 0; k <= state.range(0); ++k) h = h * KPoly::linear(KElem::tau(f).frob(k));
    KPoly G = KPoly::linear(KElem::from_int(f, 2)).pow(8) * KPoly::linear(KElem::one(f));
    for (auto _ : state) benchmark::DoNotOptimize(fast ? gcd(h, G) : euclid_gcd(h, G));
}

void BM_KPolyGcd(benchmark::State& state) { kpoly_gcd(state, true); }
void BM_KPolyGcdEuclid(benchmark::State& state) { kpoly_gcd(state, false); }
BENCHMARK(BM_KPolyGcd)->DenseRange(2, 4);
BENCHMARK(BM_KPolyGcdEuclid)->DenseRange(2, 4);

void symbol(benchmark::State& state, SymbolMethod method) {
    FieldRef f = make_field(3, 1);
    const Divisor D = Divisor(Point::infinity()) + Divisor(Point::finite(FieldElem::zero(f)));
    const int N = static_cast<int>(state.range(0));
    const Divisor E0(Point::finite(FieldElem::one(f)), -N - 2);
    Shtuka s = shtuka_from_E0_case2(D, KElem::tau(f), N, E0);
    auto a = alpha_inf(D, f), b = alpha_0(D, f);
    for (auto _ : state) benchmark::DoNotOptimize(cd_symbol(s, a, b, method));
}

void BM_SymbolSolve(benchmark::State& state) { symbol(state, SymbolMethod::solve); }
void BM_SymbolDeterminant(benchmark::State& state) { symbol(state, SymbolMethod::determinant); }
BENCHMARK(BM_SymbolSolve)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolDeterminant)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
