/*
   Copyright 2026 The onsager-kernel authors

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

#include "onsager/expression.hpp"

#include <fmt/format.h>

#include <cctype>
#include <climits>
#include <map>

namespace onsager {

SyntaxError::SyntaxError(const std::string& message, int line, int column)
    : std::runtime_error(fmt::format("{}:{}: {}", line, column, message)), line_(line), column_(column) {}

namespace {

struct CallSpec {
    ExprKind kind;
    bool signed_first;  // first argument is '+' or '-'
    int ints;           // number of integer arguments after the sign
    bool expr_first;    // first argument is an expression (dp, binom)
};

const std::map<std::string, CallSpec>& calls() {
    static const std::map<std::string, CallSpec> table = {
        {"xp", {ExprKind::Generator, false, 1, false}},  {"xm", {ExprKind::Generator, false, 1, false}},
        {"h", {ExprKind::Generator, false, 1, false}},   {"lam", {ExprKind::Lambda, false, 3, false}},
        {"p", {ExprKind::P, false, 3, false}},           {"d1", {ExprKind::D1, true, 3, false}},
        {"duv", {ExprKind::Duv, true, 4, false}},        {"dt", {ExprKind::DTriple, true, 4, false}},
        {"dp", {ExprKind::DividedPower, false, 1, true}}, {"binom", {ExprKind::Binom, false, 1, true}},
    };
    return table;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(msg, line, col);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(fmt::format("expected '{}'", c));
    }

    static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    static ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
        Expr e;
        e.kind = k;
        e.kids = {std::move(a), std::move(b)};
        return node(std::move(e));
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = binary(ExprKind::Add, lhs, term());
            else if (accept('-'))
                lhs = binary(ExprKind::Sub, lhs, term());
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (accept('*')) lhs = binary(ExprKind::Mul, lhs, unary());
        return lhs;
    }

    ExprPtr unary() {
        if (accept('-')) {
            Expr e;
            e.kind = ExprKind::Neg;
            e.kids = {unary()};
            return node(std::move(e));
        }
        return atom();
    }

    std::string digits() {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
        return d;
    }

    int integer() {
        skip();
        const std::size_t at = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
        std::string d = digits();
        if (d.empty()) fail_at(at, "expected an integer");
        long v = 0;
        for (char c : d) {
            v = v * 10 + (c - '0');
            if (v > INT_MAX) fail_at(at, "integer out of range");
        }
        return static_cast<int>(neg ? -v : v);
    }

    ExprPtr atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprPtr a = expr();
            expect(',');
            ExprPtr b = expr();
            expect(']');
            return binary(ExprKind::Bracket, a, b);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            std::string num = digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty()) fail("expected a denominator");
                num += "/" + den;
            }
            Expr e;
            e.kind = ExprKind::Number;
            try {
                e.value = parse_scalar(num);
            } catch (const std::exception& ex) {
                fail_at(at, ex.what());
            }
            return node(std::move(e));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return call();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    ExprPtr call() {
        const std::size_t at = pos_;
        std::string name;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
        auto it = calls().find(name);
        if (it == calls().end()) fail_at(at, "unknown name '" + name + "'");
        const CallSpec& spec = it->second;
        Expr e;
        e.kind = spec.kind;
        if (spec.kind == ExprKind::Generator)
            e.generator = name == "xp" ? Kind::XPlus : name == "xm" ? Kind::XMinus : Kind::H;
        expect('(');
        bool first = true;
        auto comma = [&] {
            if (!first) expect(',');
            first = false;
        };
        if (spec.expr_first) {
            comma();
            e.kids.push_back(expr());
        }
        if (spec.signed_first) {
            comma();
            skip();
            if (accept('+'))
                e.sign = Sign::Plus;
            else if (accept('-'))
                e.sign = Sign::Minus;
            else
                fail("expected '+' or '-'");
        }
        for (int i = 0; i < spec.ints; ++i) {
            comma();
            e.ints.push_back(integer());
        }
        expect(')');
        return node(std::move(e));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

const char* call_name(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Generator:
            return e.generator == Kind::XPlus ? "xp" : e.generator == Kind::XMinus ? "xm" : "h";
        case ExprKind::Lambda:
            return "lam";
        case ExprKind::P:
            return "p";
        case ExprKind::D1:
            return "d1";
        case ExprKind::Duv:
            return "duv";
        case ExprKind::DTriple:
            return "dt";
        case ExprKind::DividedPower:
            return "dp";
        case ExprKind::Binom:
            return "binom";
        default:
            return "";
    }
}

// 0: sums, 1: products, 2: unary minus, 3: atoms
int precedence(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub:
            return 0;
        case ExprKind::Mul:
            return 1;
        case ExprKind::Neg:
            return 2;
        default:
            return 3;
    }
}

std::string print_at(const ExprPtr& e, int min_prec) {
    std::string s;
    switch (e->kind) {
        case ExprKind::Number:
            s = to_string(e->value);
            break;
        case ExprKind::Add:
            s = print_at(e->kids[0], 0) + " + " + print_at(e->kids[1], 1);
            break;
        case ExprKind::Sub:
            s = print_at(e->kids[0], 0) + " - " + print_at(e->kids[1], 1);
            break;
        case ExprKind::Mul:
            s = print_at(e->kids[0], 1) + "*" + print_at(e->kids[1], 2);
            break;
        case ExprKind::Neg:
            s = "-" + print_at(e->kids[0], 2);
            break;
        case ExprKind::Bracket:
            s = "[" + print_at(e->kids[0], 0) + ", " + print_at(e->kids[1], 0) + "]";
            break;
        default: {
            s = std::string(call_name(*e)) + "(";
            std::vector<std::string> args;
            for (const auto& k : e->kids) args.push_back(print_at(k, 0));
            if (e->kind == ExprKind::D1 || e->kind == ExprKind::Duv || e->kind == ExprKind::DTriple)
                args.push_back(e->sign == Sign::Plus ? "+" : "-");
            for (int i : e->ints) args.push_back(std::to_string(i));
            for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i];
            s += ")";
        }
    }
    return precedence(*e) < min_prec ? "(" + s + ")" : s;
}

LieElement require_lie(const ExprPtr& e, const char* context) {
    auto l = as_lie(evaluate(e));
    if (!l) throw DomainError(fmt::format("{} needs a degree-one argument, got {}", context, print(e)));
    return *l;
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const ExprPtr& e) { return print_at(e, 0); }

std::optional<LieElement> as_lie(const UEAElement& a) {
    LieElement r;
    for (const auto& [w, c] : pbw_normal_form(a)) {
        if (w.size() != 1) return std::nullopt;
        r.add(w.front(), c);
    }
    return r;
}

UEAElement evaluate(const ExprPtr& e) {
    const auto& a = e->ints;
    switch (e->kind) {
        case ExprKind::Number:
            return from_scalar(e->value);
        case ExprKind::Generator:
            return from_lie(generator(e->generator, a[0]));
        case ExprKind::Lambda:
            return lambda(a[0], a[1], a[2]);
        case ExprKind::P:
            return from_lie(p_def(a[0], a[1], a[2]));
        case ExprKind::D1:
            return from_lie(d1_rec(e->sign, a[0], a[1], a[2]));
        case ExprKind::Duv:
            return duv(e->sign, a[0], a[1], a[2], a[3]);
        case ExprKind::DTriple:
            return from_lie(d_triple(e->sign, a[0], a[1], a[2], a[3]));
        case ExprKind::DividedPower:
            return divided_power(from_lie(require_lie(e->kids[0], "dp")), a[0]);
        case ExprKind::Binom:
            return binomial(from_lie(require_lie(e->kids[0], "binom")), a[0]);
        case ExprKind::Add:
            return evaluate(e->kids[0]) + evaluate(e->kids[1]);
        case ExprKind::Sub:
            return evaluate(e->kids[0]) - evaluate(e->kids[1]);
        case ExprKind::Mul:
            return ordered_product(evaluate(e->kids[0]), evaluate(e->kids[1]));
        case ExprKind::Neg:
            return -evaluate(e->kids[0]);
        case ExprKind::Bracket:
            return from_lie(bracket(require_lie(e->kids[0], "bracket"), require_lie(e->kids[1], "bracket")));
    }
    return {};
}

}  // namespace onsager
