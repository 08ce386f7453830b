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

#ifndef FFHYP_TOOLS_RUNNER_HPP
#define FFHYP_TOOLS_RUNNER_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "checks.hpp"

namespace ffhyp::cli {

struct ScenarioCheck {
    std::size_t line = 0;
    std::string name;
    Params params;
    std::string label;
};

struct CheckReport {
    std::string label;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string error;  // error name and message when the computation failed
};

enum class Format { text, json_lines };

/*
   Line format: "check <name> key=value ..." or "suite <builtin>"; '#' starts a comment.
   Values may be double-quoted to contain spaces. Errors are ParseError with the line.
*/
std::vector<ScenarioCheck> parse_scenario(std::string_view text);

// reports in input order; jobs = 0 picks the hardware concurrency
std::vector<CheckReport> run_scenario(const std::vector<ScenarioCheck>& checks, const CheckOptions& opt,
                                      unsigned jobs = 1);

CheckReport run_one(const ScenarioCheck& c, const CheckOptions& opt);

void emit(std::ostream& os, const CheckReport& r, Format f);
void emit_summary(std::ostream& os, const std::vector<CheckReport>& rs, Format f);

}  // namespace ffhyp::cli

#endif
