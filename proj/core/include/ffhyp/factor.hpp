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

#ifndef FFHYP_FACTOR_HPP
#define FFHYP_FACTOR_HPP

#include <utility>
#include <vector>

#include "ffhyp/kelem.hpp"

namespace ffhyp {

using Factorization = std::vector<std::pair<FqPoly, int>>;

/*
   Factorization of a nonzero polynomial whose coefficients lie in the subfield of
   F_{p^m} of degree sub_m over F_p: square-free decomposition, distinct-degree and then
   equal-degree splitting. Factors are monic irreducible over that subfield, sorted by
   degree and then coefficients; the leading coefficient of g is dropped.
*/
Factorization factor_over(const FqPoly& g, int sub_m);

// over F_q, the field's designated subfield
Factorization factor_over_base(const FqPoly& g);
// over the full constants field F_{q'}
Factorization poly_factor_fq(const FqPoly& g);

// square-free decomposition: pairs (square-free part, multiplicity)
Factorization squarefree_decomposition(const FqPoly& g, int sub_m);

bool is_irreducible_over(const FqPoly& g, int sub_m);
bool is_irreducible_over_base(const FqPoly& g);

// true iff every coefficient lies in the subfield of degree sub_m
bool coefficients_in(const FqPoly& g, int sub_m);

// roots of g in F_{p^m}, sorted by encoding, without multiplicity
std::vector<FieldElem> roots_in_field(const FqPoly& g);

// monic irreducibles over F_q of the given degree, in order of the coefficient encoding
std::vector<FqPoly> monic_irreducibles(FieldRef f, int degree);
FqPoly smallest_irreducible(FieldRef f, int degree);

}  // namespace ffhyp

#endif
