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

#ifndef FFHYP_MOORE_HPP
#define FFHYP_MOORE_HPP

#include <vector>

#include "ffhyp/ratfunc.hpp"
#include "ffhyp/span.hpp"

namespace ffhyp {

/*
   det (x_j^(q^(n-i)))_{i,j}: the first row carries the highest q-power. q is the order
   of the base field of the elements' field.
*/
FieldElem moore_det(const std::vector<FieldElem>& xs);
KElem moore_det(const std::vector<KElem>& xs);
FqPoly moore_det(const std::vector<FqPoly>& xs);
RatFuncFq moore_det(const std::vector<RatFuncFq>& xs);

/*
   prod_k prod_{a in F_q^(n-k)} (x_k + a_{k+1} x_{k+1} + ... + a_n x_n), the product side
   of the Moore identity, by enumeration.
*/
template <class V>
V moore_product(const std::vector<V>& xs, FieldRef f, const V& one, std::uint64_t budget = kDefaultMaxEnum) {
    V acc = one;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        std::vector<V> tail(xs.begin() + static_cast<std::ptrdiff_t>(k) + 1, xs.end());
        for_each_in_span(
            tail, f, one - one, [&](const V& v) { acc = acc * (xs[k] + v); }, budget);
    }
    return acc;
}

}  // namespace ffhyp

#endif
