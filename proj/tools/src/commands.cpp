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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ffhyp/conductor.hpp"
#include "ffhyp/moore.hpp"
#include "ffhyp/shtuka.hpp"
#include "json.hpp"
#include "runner.hpp"

namespace ffhyp::cli {

namespace {

struct Globals {
    std::string q = "2";
    std::string format = "text";
    std::uint64_t max_enum = kDefaultMaxEnum;
    unsigned jobs = 1;
    std::string xi = "tau";

    Format fmt() const { return format == "json-lines" ? Format::json_lines : Format::text; }
};

// one line per value; json-lines wraps each as {"command", "result"}
void print_values(std::ostream& out, const Globals& g, const std::string& command, const std::vector<std::string>& values) {
    for (const auto& v : values) {
        if (g.fmt() == Format::json_lines) {
            nlohmann::ordered_json j;
            j["command"] = command;
            j["result"] = v;
            out << j.dump() << '\n';
        } else {
            out << v << '\n';
        }
    }
}

HypMethod hyp_method(const std::string& s) { return s == "enumerate" ? HypMethod::enumerate : HypMethod::moore; }

int report_checks(std::ostream& out, const Globals& g, const std::vector<CheckReport>& rs) {
    bool all = true;
    for (const auto& r : rs) {
        emit(out, r, g.fmt());
        all = all && r.pass;
    }
    emit_summary(out, rs, g.fmt());
    return all ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hypergeometric ratios and shtuka symbols on the projective line over a finite field", "ffhyp"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--q", g.q, "field spec q=p^m[,ext=k][,modulus=poly in u]");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json-lines"}));
    app.add_option("--max-enum", g.max_enum, "enumeration budget");
    app.add_option("--jobs", g.jobs, "parallel checks for verify (0: all cores)");
    app.add_option("--xi", g.xi, "basepoint expression bound to xi");

    std::string conductor, alpha, beta, E, method = "moore";
    auto* hyp_cmd = app.add_subcommand("hyp", "hypergeometric ratio Hyp_D(alpha, beta, E)");
    hyp_cmd->add_option("--conductor", conductor, "conductor divisor")->required();
    hyp_cmd->add_option("--alpha", alpha, "function whose principal part is alpha")->required();
    hyp_cmd->add_option("--beta", beta, "function whose principal part is beta")->required();
    hyp_cmd->add_option("--E", E, "divisor")->required();
    hyp_cmd->add_option("--method", method, "high degree method")->check(CLI::IsMember({"enumerate", "moore"}));

    std::string elements;
    bool with_product = false;
    auto* moore_cmd = app.add_subcommand("moore", "Moore determinant");
    moore_cmd->add_option("--elements", elements, "comma separated functions of t")->required();
    moore_cmd->add_flag("--product", with_product, "also print the product side and compare");

    auto* rr_cmd = app.add_subcommand("rr-basis", "basis of L(E)");
    rr_cmd->add_option("--E", E, "divisor")->required();

    std::string omega, point;
    auto* res_cmd = app.add_subcommand("residue", "residue of f dt at a point");
    res_cmd->add_option("--omega", omega, "coefficient f of f dt")->required();
    res_cmd->add_option("--point", point, "point: inf, a constant, or an irreducible polynomial in t")->required();

    std::string e1, e2;
    auto* cg_cmd = app.add_subcommand("classgroup", "equivalence of divisors modulo a conductor");
    cg_cmd->add_option("--conductor", conductor, "conductor divisor")->required();
    cg_cmd->add_option("--e1", e1, "first divisor")->required();
    cg_cmd->add_option("--e2", e2, "second divisor")->required();

    int which = 1, N = 1;
    std::string E0, symbol_method = "solve";
    bool all_methods = false;
    auto* sym_cmd = app.add_subcommand("symbol", "Catalan-Drinfeld symbol of a realization shtuka");
    sym_cmd->add_option("--conductor", conductor, "conductor divisor")->required();
    sym_cmd->add_option("--case", which, "realization shape")->check(CLI::IsMember({1, 2}));
    sym_cmd->add_option("--N", N, "shift")->required();
    sym_cmd->add_option("--E0", E0, "divisor over F_q")->required();
    sym_cmd->add_option("--alpha", alpha, "function whose principal part is alpha")->required();
    sym_cmd->add_option("--beta", beta, "function whose principal part is beta")->required();
    sym_cmd->add_option("--method", symbol_method, "method")->check(CLI::IsMember({"solve", "determinant", "hyp"}));
    sym_cmd->add_flag("--all-methods", all_methods, "print every method and whether they agree");

    std::string scenario;
    auto* verify_cmd = app.add_subcommand("verify", "run a scenario file or built-in suite");
    verify_cmd->add_option("scenario", scenario, "file, built-in suite name, or - for stdin")->required();

    std::string c = "1";
    auto* tau_cmd = app.add_subcommand("tau-identity", "compare c^-1 tau^(q^N - 1) with the ratio at t = tau^(q-1)");
    tau_cmd->add_option("--N", N, "nonzero integer")->required();
    tau_cmd->add_option("--c", c, "element of F_q^x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        CheckOptions opt{g.max_enum};
        if (*verify_cmd) {
            std::string body;
            if (scenario == "-") {
                std::stringstream ss;
                ss << std::cin.rdbuf();
                body = ss.str();
            } else if (std::ifstream in(scenario); in) {
                std::stringstream ss;
                ss << in.rdbuf();
                body = ss.str();
            } else if (builtin_suite(scenario)) {
                body = "suite " + scenario + "\n";
            } else {
                err << "error: no scenario file or built-in suite named '" << scenario << "'\n";
                return kExitInput;
            }
            return report_checks(out, g, run_scenario(parse_scenario(body), opt, g.jobs));
        }
        if (*tau_cmd) {
            ScenarioCheck sc{0, "tau-identity", {{"q", g.q}, {"N", std::to_string(N)}, {"c", c}}, ""};
            sc.label = "tau-identity q=" + g.q + " N=" + std::to_string(N) + " c=" + c;
            // bad arguments are input errors here, not a failed check
            auto r = run_check(sc.name, sc.params, opt);
            return report_checks(out, g, {CheckReport{sc.label, r.lhs, r.rhs, r.pass, {}}});
        }

        FieldRef f = text::parse_field(g.q);
        KElem xi = text::parse_kelem(g.xi, f);
        text::Bindings env{{"xi", RatFunc(xi)}};

        if (*hyp_cmd) {
            Divisor D = text::parse_divisor(conductor, f, env);
            auto a = parse_principal_part(alpha, D, f), b = parse_principal_part(beta, D, f);
            Divisor div = text::parse_divisor(E, f, env);
            print_values(out, g, "hyp", {text::to_string(hyp(D, a, b, div, hyp_method(method), g.max_enum))});
            return kExitOk;
        }
        if (*moore_cmd) {
            std::vector<RatFuncFq> xs;
            std::stringstream ss(elements);
            for (std::string s; std::getline(ss, s, ',');) xs.push_back(text::parse_ratfunc_fq(s, f, env));
            RatFuncFq det = moore_det(xs);
            if (!with_product) {
                print_values(out, g, "moore", {text::to_string(det)});
                return kExitOk;
            }
            RatFuncFq prod = moore_product(xs, f, RatFuncFq::one(f), g.max_enum);
            return report_checks(out, g, {{"moore elements=" + elements, text::to_string(det), text::to_string(prod), det == prod, ""}});
        }
        if (*rr_cmd) {
            Divisor div = text::parse_divisor(E, f, env);
            std::vector<std::string> vs;
            if (div.is_base_rational())
                for (const auto& x : rr_basis<FieldElem>(div, f)) vs.push_back(text::to_string(x));
            else
                for (const auto& x : rr_basis<KElem>(div, f)) vs.push_back(text::to_string(x));
            if (vs.empty() && g.fmt() == Format::text) vs.push_back("(empty)");
            print_values(out, g, "rr-basis", vs);
            return kExitOk;
        }
        if (*res_cmd) {
            Point P = text::parse_point(point, f, env);
            RatFunc w = text::parse_ratfunc(omega, f, env);
            std::string v;
            if (auto wq = to_fq(w); wq && P.is_base_rational())
                v = text::to_string(residue(Differential<FieldElem>{*wq}, P));
            else
                v = text::to_string(residue(Differential<KElem>{w}, P));
            print_values(out, g, "residue", {v});
            return kExitOk;
        }
        if (*cg_cmd) {
            Divisor D = text::parse_divisor(conductor, f, env);
            Divisor a = text::parse_divisor(e1, f, env), b = text::parse_divisor(e2, f, env);
            std::string v = "not equivalent";
            if (a.is_base_rational() && b.is_base_rational()) {
                if (auto w = equivalent_mod_D<FieldElem>(a, b, D, f)) v = text::to_string(*w);
            } else if (auto w = equivalent_mod_D<KElem>(a, b, D, f)) {
                v = text::to_string(*w);
            }
            print_values(out, g, "classgroup", {v});
            return kExitOk;
        }
        if (*sym_cmd) {
            Divisor D = text::parse_divisor(conductor, f, env);
            Divisor e0 = text::parse_divisor(E0, f, env);
            Shtuka s = which == 1 ? shtuka_from_E0_case1(D, xi, N, e0) : shtuka_from_E0_case2(D, xi, N, e0);
            auto a = parse_principal_part(alpha, D, f), b = parse_principal_part(beta, D, f);
            auto by_hyp = [&] { return rf_eval(to_K(hyp(D, a, b, e0, HypMethod::moore, g.max_enum)), xi); };
            if (!all_methods) {
                KElem v = symbol_method == "hyp"           ? by_hyp()
                          : symbol_method == "determinant" ? cd_symbol(s, a, b, SymbolMethod::determinant)
                                                           : cd_symbol(s, a, b, SymbolMethod::solve);
                print_values(out, g, "symbol", {text::to_string(v)});
                return kExitOk;
            }
            KElem v1 = cd_symbol(s, a, b, SymbolMethod::solve);
            KElem v2 = cd_symbol(s, a, b, SymbolMethod::determinant);
            KElem v3 = by_hyp();
            const bool agree = v1 == v2 && v2 == v3;
            if (g.fmt() == Format::json_lines) {
                nlohmann::ordered_json j;
                j["command"] = "symbol";
                j["solve"] = text::to_string(v1);
                j["determinant"] = text::to_string(v2);
                j["hyp"] = text::to_string(v3);
                j["agree"] = agree;
                out << j.dump() << '\n';
            } else {
                out << "solve: " << text::to_string(v1) << '\n'
                    << "determinant: " << text::to_string(v2) << '\n'
                    << "hyp: " << text::to_string(v3) << '\n'
                    << (agree ? "agree" : "disagree") << '\n';
            }
            return agree ? kExitOk : kExitFail;
        }
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace ffhyp::cli
