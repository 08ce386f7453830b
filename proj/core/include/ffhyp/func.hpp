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

#ifndef FFHYP_FUNC_HPP
#define FFHYP_FUNC_HPP

#include "ffhyp/divisor.hpp"
#include "ffhyp/factor.hpp"
#include "ffhyp/ratfunc.hpp"

namespace ffhyp {

// local parameter polynomial of a finite or closed point: t - x, or the closed point's polynomial
template <class R>
Polynomial<R> point_poly(const Point& P, typename R::context_type ctx);

// coordinate of a finite point as an element of R
template <class R>
R point_coordinate(const Point& P);

// the function with divisor E (deg E = 0) and monic numerator and denominator
template <class R>
RationalFunction<R> rf_from_divisor(const Divisor& E, typename R::context_type ctx);

Divisor divisor_of(const RatFuncFq& f);
Divisor divisor_of(const RatFunc& f);

}  // namespace ffhyp

#endif
