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

#ifndef FFHYP_TOOLS_CHECKS_HPP
#define FFHYP_TOOLS_CHECKS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffhyp/hyp.hpp"
#include "ffhyp/span.hpp"
#include "text.hpp"

namespace ffhyp::cli {

using Params = std::map<std::string, std::string, std::less<>>;

struct CheckOutcome {
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct CheckOptions {
    std::uint64_t max_enum = kDefaultMaxEnum;
};

/*
   Runs one named check. Parameter problems raise ParseError; computation errors
   propagate as ffhyp::Error.
*/
CheckOutcome run_check(std::string_view name, const Params& p, const CheckOptions& opt = {});
bool is_known_check(std::string_view name);
std::vector<std::string> check_names();

// scenario lines of a built-in suite
std::optional<std::vector<std::string>> builtin_suite(std::string_view name);
std::vector<std::string> builtin_suite_names();

// alpha_inf, alpha_1, alpha_0 bound to t, 1/(1-t), (t-1)/t
text::Bindings preset_bindings(FieldRef f);
// principal part along D of an expression over F_q, presets allowed
PrincipalPart parse_principal_part(std::string_view s, const Divisor& D, FieldRef f);

// (q^n - 1) / (q - 1)
std::int64_t geometric(std::int64_t q, std::int64_t n);

}  // namespace ffhyp::cli

#endif
