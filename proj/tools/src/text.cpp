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

#include "text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "ffhyp/factor.hpp"

namespace ffhyp::text {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(Errc::ParseError, msg); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s) {
    s = trim(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) parse_fail("not an integer: '" + std::string(s) + "'");
    return v;
}

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;
};

class Lexer {
   public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

   private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        const char c = s_[i_];
        const std::size_t start = i_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            tok_ = {Token::Num, std::string(s_.substr(start, i_ - start))};
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            tok_ = {Token::Ident, std::string(s_.substr(start, i_ - start))};
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            ++i_;
            tok_ = {Token::Op, std::string(1, c)};
        } else {
            parse_fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
    Token tok_{Token::End, ""};
};

class Parser {
   public:
    Parser(std::string_view s, FieldRef f, const Bindings& env) : lex_(s), f_(f), env_(env) {}

    RatFunc parse() {
        RatFunc v = expr();
        if (lex_.peek().kind != Token::End) parse_fail("trailing input near '" + lex_.peek().text + "'");
        return v;
    }

   private:
    bool is_op(const char* op) const { return lex_.peek().kind == Token::Op && lex_.peek().text == op; }

    RatFunc expr() {
        RatFunc v = term();
        while (is_op("+") || is_op("-")) {
            const bool plus = lex_.take().text == "+";
            RatFunc w = term();
            v = plus ? v + w : v - w;
        }
        return v;
    }

    bool starts_atom() const {
        const auto& t = lex_.peek();
        return t.kind == Token::Num || t.kind == Token::Ident || (t.kind == Token::Op && t.text == "(");
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            if (is_op("*")) {
                lex_.take();
                v = v * unary();
            } else if (is_op("/")) {
                lex_.take();
                RatFunc w = unary();
                if (w.is_zero()) fail(Errc::InvalidArgument, "division by zero");
                v = v / w;
            } else if (starts_atom()) {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    RatFunc unary() {
        if (is_op("-")) {
            lex_.take();
            return -unary();
        }
        if (is_op("+")) {
            lex_.take();
            return unary();
        }
        return power();
    }

    std::int64_t exponent() {
        bool paren = false;
        if (is_op("(")) {
            lex_.take();
            paren = true;
        }
        bool neg = false;
        if (is_op("-")) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Token::Num) parse_fail("exponent must be an integer");
        std::int64_t e = parse_int(t.text);
        if (paren) {
            if (!is_op(")")) parse_fail("missing ')' in exponent");
            lex_.take();
        }
        return neg ? -e : e;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (is_op("^")) {
            lex_.take();
            const std::int64_t e = exponent();
            if (base.is_zero() && e < 0) fail(Errc::InvalidArgument, "negative power of zero");
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        Token t = lex_.take();
        if (t.kind == Token::Num) {
            // reduce the decimal string mod p without overflow
            const std::int64_t p = f_->p();
            std::int64_t v = 0;
            for (char c : t.text) v = (v * 10 + (c - '0')) % p;
            return RatFunc(KElem(FieldElem::from_int(f_, v)));
        }
        if (t.kind == Token::Ident) {
            if (auto it = env_.find(t.text); it != env_.end()) return it->second;
            if (t.text == "t") return RatFunc::t(f_);
            if (t.text == "tau") return RatFunc(KElem::tau(f_));
            if (t.text == "u") return RatFunc(KElem(FieldElem::generator(f_)));
            parse_fail("unknown identifier '" + t.text + "'");
        }
        if (t.kind == Token::Op && t.text == "(") {
            RatFunc v = expr();
            if (!is_op(")")) parse_fail("missing ')'");
            lex_.take();
            return v;
        }
        parse_fail(t.kind == Token::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }

    Lexer lex_;
    FieldRef f_;
    const Bindings& env_;
};

bool has_top_level(const std::string& s, std::string_view chars) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && i > 0 && chars.find(c) != std::string_view::npos) return true;
    }
    return false;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

// polynomial with coefficients printed by cf, descending powers
template <class C, class CF>
std::string print_poly(const std::vector<C>& c, std::string_view var, CF&& cf) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        std::string term;
        std::string mono = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
        std::string cs = cf(c[k]);
        if (k == 0)
            term = cs;
        else if (c[k].is_one())
            term = mono;
        else if (has_top_level(cs, "+-/"))
            term = paren(cs) + "*" + mono;
        else
            term = cs + "*" + mono;
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string fraction(const std::string& num, const std::string& den, bool den_one) {
    if (den_one) return num;
    std::string n = has_top_level(num, "+-") ? paren(num) : num;
    std::string d = has_top_level(den, "+-*/") ? paren(den) : den;
    return n + "/" + d;
}

}  // namespace

FieldRef parse_field(std::string_view spec) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i)
        if (i == spec.size() || spec[i] == ',') {
            parts.push_back(trim(spec.substr(start, i - start)));
            start = i + 1;
        }
    if (parts.empty() || parts[0].empty()) parse_fail("empty field spec");
    std::string_view q = parts[0];
    if (q.substr(0, 2) == "q=") q = trim(q.substr(2));
    std::uint32_t p = 0;
    int m = 0;
    if (auto caret = q.find('^'); caret != std::string_view::npos) {
        p = static_cast<std::uint32_t>(parse_int(q.substr(0, caret)));
        m = static_cast<int>(parse_int(q.substr(caret + 1)));
    } else {
        const std::int64_t n = parse_int(q);
        if (n < 2) parse_fail("field order must be at least 2");
        for (std::int64_t d = 2; d <= n; ++d)
            if (n % d == 0) {
                p = static_cast<std::uint32_t>(d);
                break;
            }
        std::int64_t r = n;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1) fail(Errc::InvalidArgument, "field order " + std::to_string(n) + " is not a prime power");
    }
    if (m < 1) parse_fail("bad field degree");
    int ext = 1;
    std::optional<std::string> modulus;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto kv = parts[i];
        auto eq = kv.find('=');
        if (eq == std::string_view::npos) parse_fail("expected key=value in field spec: '" + std::string(kv) + "'");
        auto key = trim(kv.substr(0, eq));
        auto val = trim(kv.substr(eq + 1));
        if (key == "ext")
            ext = static_cast<int>(parse_int(val));
        else if (key == "modulus")
            modulus = std::string(val);
        else
            parse_fail("unknown field spec key '" + std::string(key) + "'");
    }
    if (ext < 1) parse_fail("ext must be positive");
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    const int total = m * ext;
    if (!modulus) return make_field(p, total, std::nullopt, m);
    // parse the modulus over F_p with u as the variable
    FieldRef fp = make_field(p, 1);
    Bindings env{{"u", RatFunc::t(fp)}};
    RatFunc r = parse_ratfunc(*modulus, fp, env);
    auto poly = to_fq(r);
    if (!poly || !poly->is_polynomial()) parse_fail("modulus must be a polynomial in u");
    std::vector<std::uint32_t> c;
    for (const auto& x : poly->num().coeffs()) c.push_back(x.value());
    return make_field(p, total, c, m);
}

std::string field_spec(FieldRef f) {
    std::string s = "q=" + std::to_string(f->p()) + "^" + std::to_string(f->base_m());
    if (f->ext_degree() > 1) s += ",ext=" + std::to_string(f->ext_degree());
    return s;
}

RatFunc parse_ratfunc(std::string_view s, FieldRef f, const Bindings& env) {
    if (trim(s).empty()) parse_fail("empty expression");
    return Parser(s, f, env).parse();
}

KElem parse_kelem(std::string_view s, FieldRef f, const Bindings& env) {
    RatFunc r = parse_ratfunc(s, f, env);
    if (!r.is_constant()) parse_fail("expected an expression free of t: '" + std::string(s) + "'");
    return r.is_zero() ? KElem::zero(f) : r.num().coeff(0) / r.den().coeff(0);
}

RatFuncFq parse_ratfunc_fq(std::string_view s, FieldRef f, const Bindings& env) {
    auto r = to_fq(parse_ratfunc(s, f, env));
    if (!r) parse_fail("expected an expression free of tau: '" + std::string(s) + "'");
    return *r;
}

FieldElem parse_element(std::string_view s, FieldRef f, const Bindings& env) {
    auto c = parse_kelem(s, f, env).as_constant();
    if (!c) parse_fail("expected a constant: '" + std::string(s) + "'");
    return *c;
}

Point parse_point(std::string_view s, FieldRef f, const Bindings& env) {
    s = trim(s);
    if (s == "inf" || s == "infinity" || s == "oo") return Point::infinity();
    // xi^(k)
    if (s.substr(0, 2) == "xi") {
        auto rest = trim(s.substr(2));
        if (rest.size() >= 4 && rest[0] == '^' && trim(rest.substr(1)).front() == '(' && rest.back() == ')') {
            auto inner = trim(rest.substr(1));
            auto k = parse_int(inner.substr(1, inner.size() - 2));
            auto it = env.find("xi");
            if (it == env.end()) parse_fail("xi is not bound");
            KElem xi = parse_kelem("xi", f, env);
            return Point::finite(xi.frob(k));
        }
    }
    RatFunc r = parse_ratfunc(s, f, env);
    if (r.is_constant()) return Point::finite(parse_kelem(s, f, env));
    auto g = to_fq(r);
    if (!g || !g->is_polynomial()) parse_fail("a point is a constant or a polynomial in t over F_q: '" + std::string(s) + "'");
    return Point::closed(g->num().monic());
}

Divisor parse_divisor(std::string_view s, FieldRef f, const Bindings& env) {
    s = trim(s);
    Divisor out;
    if (s == "0") return out;
    std::size_t i = 0;
    bool first = true;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    while (true) {
        skip();
        if (i >= s.size()) break;
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            parse_fail("expected '+' or '-' between divisor terms");
        }
        std::int64_t k = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            k = parse_int(s.substr(i, j - i));
            i = j;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        if (i >= s.size() || s[i] != '[') parse_fail("expected '[' in divisor '" + std::string(s) + "'");
        const std::size_t close = s.find(']', i);
        if (close == std::string_view::npos) parse_fail("missing ']' in divisor");
        out.add(parse_point(s.substr(i + 1, close - i - 1), f, env), sign * k);
        i = close + 1;
        first = false;
    }
    if (first) parse_fail("empty divisor");
    return out;
}

std::string to_string(const FieldElem& x) {
    FieldRef f = x.context();
    if (f->m() == 1) return std::to_string(x.value());
    auto d = f->digits(x.value());
    std::string out;
    for (std::size_t k = d.size(); k-- > 0;) {
        if (d[k] == 0) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
        std::string term = k == 0 ? std::to_string(d[k]) : (d[k] == 1 ? mono : std::to_string(d[k]) + "*" + mono);
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const FqPoly& p, std::string_view var) {
    return print_poly(p.coeffs(), var, [](const FieldElem& c) { return to_string(c); });
}

std::string to_string(const KElem& x) {
    return fraction(to_string(x.num(), "tau"), to_string(x.den(), "tau"), x.den().is_one());
}

std::string to_string(const RatFunc& f) {
    auto poly = [](const KPoly& p) { return print_poly(p.coeffs(), "t", [](const KElem& c) { return to_string(c); }); };
    return fraction(poly(f.num()), poly(f.den()), f.den().is_one());
}

std::string to_string(const RatFuncFq& f) { return to_string(to_K(f)); }

std::string to_string(const Point& p) {
    if (p.is_infinity()) return "inf";
    if (p.is_finite()) return to_string(p.x());
    return to_string(p.poly(), "t");
}

std::string to_string(const Divisor& d) {
    std::string out;
    for (const auto& [P, k] : d.terms()) {
        std::string term = "[" + to_string(P) + "]";
        const std::int64_t a = k < 0 ? -k : k;
        if (a != 1) term = std::to_string(a) + "*" + term;
        if (k < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace ffhyp::text
