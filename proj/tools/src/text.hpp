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

#ifndef FFHYP_TOOLS_TEXT_HPP
#define FFHYP_TOOLS_TEXT_HPP

#include <map>
#include <string>
#include <string_view>

#include "ffhyp/divisor.hpp"
#include "ffhyp/ratfunc.hpp"

namespace ffhyp::text {

/*
   Field specs: "q=p^m[,ext=k][,modulus=poly]"; the leading "q=" is optional and q may
   be written as an integer. ext=k gives constants F_{q^k} over F_q. modulus is a
   polynomial in u over F_p for the full constants field.
*/
FieldRef parse_field(std::string_view spec);
std::string field_spec(FieldRef f);

// named values available to expressions besides t, tau and u
using Bindings = std::map<std::string, RatFunc, std::less<>>;

RatFunc parse_ratfunc(std::string_view s, FieldRef f, const Bindings& env = {});
KElem parse_kelem(std::string_view s, FieldRef f, const Bindings& env = {});
RatFuncFq parse_ratfunc_fq(std::string_view s, FieldRef f, const Bindings& env = {});
FieldElem parse_element(std::string_view s, FieldRef f, const Bindings& env = {});

/*
   Divisors: "0" or a signed sum of "k*[P]" terms. P is "inf", "xi^(k)" (a twist of the
   binding xi), an expression free of t (a rational point) or a polynomial in t over
   F_q (a closed point, made monic).
*/
Point parse_point(std::string_view s, FieldRef f, const Bindings& env = {});
Divisor parse_divisor(std::string_view s, FieldRef f, const Bindings& env = {});

std::string to_string(const FieldElem& x);
std::string to_string(const FqPoly& p, std::string_view var = "t");
std::string to_string(const KElem& x);
std::string to_string(const RatFunc& f);
std::string to_string(const RatFuncFq& f);
std::string to_string(const Point& p);
std::string to_string(const Divisor& d);

}  // namespace ffhyp::text

#endif
