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

#ifndef FFHYP_SPAN_HPP
#define FFHYP_SPAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffhyp/fields.hpp"

namespace ffhyp {

inline constexpr std::uint64_t kDefaultMaxEnum = std::uint64_t(1) << 20;

// q^n, or BudgetExceeded if it is above the budget
inline std::uint64_t span_size(std::uint64_t q, std::size_t n, std::uint64_t budget = kDefaultMaxEnum) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= q;
        if (total > budget)
            fail(Errc::BudgetExceeded, "span of " + std::to_string(n) + " vectors over F_" + std::to_string(q) +
                                           " exceeds the enumeration budget of " + std::to_string(budget));
    }
    return total;
}

/*
   Calls visit(v) for every F_q-linear combination v of the basis, in lexicographic
   order of the coefficient vector with the first coefficient varying fastest and F_q
   ordered by encoding. V needs +, - and scalar multiplication by FieldElem on the left.
*/
template <class V, class Visit>
void for_each_in_span(const std::vector<V>& basis, FieldRef f, const V& zero, Visit&& visit,
                      std::uint64_t budget = kDefaultMaxEnum) {
    const auto scalars = base_field_elements(f);
    const std::uint64_t q = scalars.size();
    const std::uint64_t total = span_size(q, basis.size(), budget);
    const std::size_t n = basis.size();

    // steps[i][j] = (s_{j+1} - s_j) * b_i, wrap[i] = -s_last * b_i
    std::vector<std::vector<V>> steps(n);
    std::vector<V> wrap;
    wrap.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < q; ++j) steps[i].push_back((scalars[j + 1] - scalars[j]) * basis[i]);
        wrap.push_back((-scalars[q - 1]) * basis[i]);
    }
    std::vector<std::size_t> digit(n, 0);
    V cur = zero;
    for (std::uint64_t k = 0; k < total; ++k) {
        visit(static_cast<const V&>(cur));
        for (std::size_t i = 0; i < n; ++i) {
            if (digit[i] + 1 < q) {
                cur = cur + steps[i][digit[i]];
                ++digit[i];
                break;
            }
            cur = cur + wrap[i];
            digit[i] = 0;
        }
    }
}

template <class V>
std::vector<V> enumerate_span(const std::vector<V>& basis, FieldRef f, const V& zero,
                              std::uint64_t budget = kDefaultMaxEnum) {
    std::vector<V> out;
    for_each_in_span(basis, f, zero, [&](const V& v) { out.push_back(v); }, budget);
    return out;
}

}  // namespace ffhyp

#endif
