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

#ifndef FFHYP_TESTS_SUPPORT_HPP
#define FFHYP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ffhyp/func.hpp"

namespace ffhyp::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261015);
    return g;
}

inline FieldElem random_elem(FieldRef f, bool nonzero = false) {
    std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, f->order() - 1);
    return FieldElem(f, d(rng()));
}

inline FieldElem random_base_elem(FieldRef f, bool nonzero = false) {
    const auto& b = f->base_elements();
    std::uniform_int_distribution<std::size_t> d(nonzero ? 1 : 0, b.size() - 1);
    return FieldElem(f, b[d(rng())]);
}

inline FqPoly random_poly(FieldRef f, int degree, bool base = false) {
    std::vector<FieldElem> c;
    for (int i = 0; i <= degree; ++i) c.push_back(base ? random_base_elem(f) : random_elem(f));
    if (c.back().is_zero()) c.back() = FieldElem::one(f);
    return FqPoly(f, std::move(c));
}

inline int random_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// x^n by repeated multiplication, independent of the table power map
inline FieldElem slow_pow(const FieldElem& x, std::uint64_t n) {
    FieldElem acc = FieldElem::one(x.field());
    for (std::uint64_t i = 0; i < n; ++i) acc *= x;
    return acc;
}

inline FqPoly poly_of(FieldRef f, std::vector<std::int64_t> c) {
    std::vector<FieldElem> v;
    for (auto x : c) v.push_back(FieldElem::from_int(f, x));
    return FqPoly(f, std::move(v));
}

}  // namespace ffhyp::testing

#endif
