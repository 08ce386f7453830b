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

#ifndef FFHYP_HYP_HPP
#define FFHYP_HYP_HPP

#include <string_view>

#include "ffhyp/rr.hpp"
#include "ffhyp/span.hpp"

namespace ffhyp {

enum class HypMethod { enumerate, moore };

// principal parts along D of t, 1/(1-t) and (t-1)/t
PrincipalPart alpha_inf(const Divisor& D, FieldRef f);
PrincipalPart alpha_1(const Divisor& D, FieldRef f);
PrincipalPart alpha_0(const Divisor& D, FieldRef f);
// by name: "alpha_inf", "alpha_1", "alpha_0"
PrincipalPart alpha_preset(std::string_view name, const Divisor& D, FieldRef f);

// an element of L(E + D) with principal part alpha along D (requires deg E >= -1)
RatFuncFq lift_principal_part(const PrincipalPart& alpha, const Divisor& E);

// product over e in L(E) of (a + e) / (b + e), deg E > -2
RatFuncFq hyp_high(const Divisor& D, const PrincipalPart& alpha, const PrincipalPart& beta, const Divisor& E,
                   HypMethod method = HypMethod::moore, std::uint64_t budget = kDefaultMaxEnum);

// ratio of products of differentials in the two affine hyperplanes, deg E < -deg D
RatFuncFq hyp_low(const Divisor& D, const PrincipalPart& alpha, const PrincipalPart& beta, const Divisor& E,
                  std::uint64_t budget = kDefaultMaxEnum);

RatFuncFq hyp(const Divisor& D, const PrincipalPart& alpha, const PrincipalPart& beta, const Divisor& E,
              HypMethod method = HypMethod::moore, std::uint64_t budget = kDefaultMaxEnum);

}  // namespace ffhyp

#endif
