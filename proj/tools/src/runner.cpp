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

#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace ffhyp::cli {

namespace {

[[noreturn]] void line_error(std::size_t line, const std::string& msg) {
    fail(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> words(std::string_view s, std::size_t line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size() || s[i] == '#') break;
        std::string w;
        bool quoted = false;
        while (i < s.size() && (quoted || !std::isspace(static_cast<unsigned char>(s[i])))) {
            if (s[i] == '"')
                quoted = !quoted;
            else
                w += s[i];
            ++i;
        }
        if (quoted) line_error(line, "unterminated quote");
        out.push_back(std::move(w));
    }
    return out;
}

void parse_into(std::string_view text, std::vector<ScenarioCheck>& out, int depth) {
    std::size_t line = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line;
        auto w = words(text.substr(start, end - start), line);
        start = end + 1;
        if (w.empty()) continue;
        if (w[0] == "suite") {
            if (w.size() != 2) line_error(line, "usage: suite <name>");
            auto lines = builtin_suite(w[1]);
            if (!lines) line_error(line, "unknown suite '" + w[1] + "'");
            if (depth > 4) line_error(line, "suites nested too deeply");
            std::string body;
            for (const auto& l : *lines) body += l + "\n";
            parse_into(body, out, depth + 1);
            continue;
        }
        if (w[0] != "check") line_error(line, "expected 'check' or 'suite', got '" + w[0] + "'");
        if (w.size() < 2) line_error(line, "missing check name");
        ScenarioCheck c;
        c.line = line;
        c.name = w[1];
        if (!is_known_check(c.name)) line_error(line, "unknown check '" + c.name + "'");
        c.label = c.name;
        for (std::size_t k = 2; k < w.size(); ++k) {
            auto eq = w[k].find('=');
            if (eq == std::string::npos || eq == 0) line_error(line, "expected key=value, got '" + w[k] + "'");
            std::string key = w[k].substr(0, eq);
            if (c.params.count(key)) line_error(line, "repeated key '" + key + "'");
            c.params.emplace(key, w[k].substr(eq + 1));
            c.label += " " + w[k];
        }
        out.push_back(std::move(c));
    }
}

}  // namespace

std::vector<ScenarioCheck> parse_scenario(std::string_view text) {
    std::vector<ScenarioCheck> out;
    parse_into(text, out, 0);
    return out;
}

CheckReport run_one(const ScenarioCheck& c, const CheckOptions& opt) {
    CheckReport r;
    r.label = c.label;
    try {
        CheckOutcome o = run_check(c.name, c.params, opt);
        r.lhs = std::move(o.lhs);
        r.rhs = std::move(o.rhs);
        r.pass = o.pass;
    } catch (const Error& e) {
        r.error = std::string(e.name()) + ": " + e.what();
    } catch (const std::exception& e) {
        r.error = std::string("InternalError: ") + e.what();
    }
    return r;
}

std::vector<CheckReport> run_scenario(const std::vector<ScenarioCheck>& checks, const CheckOptions& opt,
                                      unsigned jobs) {
    std::vector<CheckReport> out(checks.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, checks.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) out[i] = run_one(checks[i], opt);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) out[i] = run_one(checks[i], opt);
        });
    for (auto& t : pool) t.join();
    return out;
}

void emit(std::ostream& os, const CheckReport& r, Format f) {
    if (f == Format::json_lines) {
        nlohmann::ordered_json j;
        j["check"] = r.label;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["pass"] = r.pass;
        if (!r.error.empty()) j["error"] = r.error;
        os << j.dump() << '\n';
        return;
    }
    os << (r.pass ? "PASS " : "FAIL ") << r.label << '\n';
    if (!r.error.empty()) {
        os << "  error: " << r.error << '\n';
        return;
    }
    os << "  lhs: " << r.lhs << '\n' << "  rhs: " << r.rhs << '\n';
}

void emit_summary(std::ostream& os, const std::vector<CheckReport>& rs, Format f) {
    if (f == Format::json_lines) return;
    const auto passed = std::count_if(rs.begin(), rs.end(), [](const CheckReport& r) { return r.pass; });
    os << passed << "/" << rs.size() << " checks passed\n";
}

}  // namespace ffhyp::cli
