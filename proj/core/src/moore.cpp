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

#include "ffhyp/moore.hpp"

#include "ffhyp/linalg.hpp"

namespace ffhyp {

namespace {

template <class T, class Pow>
Matrix<T> moore_matrix(const std::vector<T>& xs, const T& zero, Pow&& qpow) {
    const std::size_t n = xs.size();
    Matrix<T> m(n, n, zero);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = qpow(xs[j], static_cast<int>(n - 1 - i));
    return m;
}

void require_nonempty(std::size_t n) {
    if (n == 0) fail(Errc::InvalidArgument, "Moore determinant of an empty list");
}

}  // namespace

FieldElem moore_det(const std::vector<FieldElem>& xs) {
    require_nonempty(xs.size());
    FieldRef f = xs.front().context();
    return determinant(moore_matrix(xs, FieldElem::zero(f), [](const FieldElem& x, int i) { return x.frob(i); }));
}

KElem moore_det(const std::vector<KElem>& xs) {
    require_nonempty(xs.size());
    FieldRef f = xs.front().context();
    return determinant(moore_matrix(xs, KElem::zero(f), [](const KElem& x, int i) { return x.frob(i); }));
}

FqPoly moore_det(const std::vector<FqPoly>& xs) {
    require_nonempty(xs.size());
    FieldRef f = xs.front().context();
    return bareiss_determinant(moore_matrix(xs, FqPoly(f), [](const FqPoly& x, int i) { return qpower(x, i); }));
}

RatFuncFq moore_det(const std::vector<RatFuncFq>& xs) {
    require_nonempty(xs.size());
    FieldRef f = xs.front().context();
    // Moore(L x_1, ..., L x_n) = L^(1 + q + ... + q^(n-1)) Moore(x_1, ..., x_n)
    FqPoly L(FieldElem::one(f));
    for (const auto& x : xs) L = lcm(L, x.den());
    std::vector<FqPoly> cleared;
    for (const auto& x : xs) cleared.push_back(x.num() * (L / x.den()));
    const std::uint64_t q = f->base_order();
    std::uint64_t e = 0, qi = 1;
    for (std::size_t i = 0; i < xs.size(); ++i, qi *= q) e += qi;
    return RatFuncFq(moore_det(cleared)) / RatFuncFq(L.pow(e));
}

}  // namespace ffhyp
