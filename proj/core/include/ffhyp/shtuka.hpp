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

#ifndef FFHYP_SHTUKA_HPP
#define FFHYP_SHTUKA_HPP

#include <optional>
#include <vector>

#include "ffhyp/conductor.hpp"
#include "ffhyp/hyp.hpp"

namespace ffhyp {

/*
   Rank-one shtuka on the line: conductor D, basepoint xi (transcendental over F_q'),
   zero eta, divisor E of degree -1, with E^(1) + eta - E - xi^(1) principal to D.
   The special function is the witness of that equivalence.
*/
struct Shtuka {
    Divisor D;
    KElem xi;
    Point eta;
    Divisor E;
    RatFunc special;
    FieldRef field = nullptr;
};

Shtuka shtuka_validate(const Divisor& D, const KElem& xi, const Point& eta, const Divisor& E);

bool nondegenerate(const Shtuka& s);

const RatFunc& special_function(const Shtuka& s);

// the unique element of L(E + D) with principal part alpha along D
RatFunc psi_lift(const Shtuka& s, const PrincipalPart& alpha);

enum class SymbolMethod { solve, determinant };

// (psi_alpha / psi_beta)(xi)
KElem cd_symbol(const Shtuka& s, const PrincipalPart& alpha, const PrincipalPart& beta,
                SymbolMethod method = SymbolMethod::solve);

/*
   Determinant formula with E = E1 - E2, E2 a sum of distinct rational points of
   multiplicity -1 in E. Without an explicit E2 all such finite points are used, along
   with the roots of closed points of multiplicity -1 that split over the constants.
*/
KElem cd_symbol_determinant(const Shtuka& s, const PrincipalPart& alpha, const PrincipalPart& beta,
                            const std::optional<Divisor>& E2 = std::nullopt);

// the shtuka (D, xi, xi^(N), E0 - xi^(1) - ... - xi^(N-1)), N >= 1, deg E0 = N - 2
Shtuka shtuka_from_E0_case1(const Divisor& D, const KElem& xi, int N, const Divisor& E0);
// the shtuka (D, xi^(N), xi, E0 + xi + ... + xi^(N)), N > deg D - 2, deg E0 = -N - 2
Shtuka shtuka_from_E0_case2(const Divisor& D, const KElem& xi, int N, const Divisor& E0);

// psi_0 = psi, psi_{k+1} = f psi_k^(1)
std::vector<RatFunc> drinfeld_iterates(const RatFunc& f, const RatFunc& psi, int N);

// dimension of the K-span
std::size_t rank_over_K(const std::vector<RatFunc>& fs);

}  // namespace ffhyp

#endif
