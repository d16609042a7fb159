#include "gtp/expr.hpp"

#include <cctype>

namespace gtp {

namespace {

ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_sum();
        skip();
        if (p_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw MathError("expression parse error at offset " + std::to_string(p_) + ": " + why + " in '" +
                        std::string(s_) + "'");
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool peek(char c) {
        skip();
        return p_ < s_.size() && s_[p_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++p_;
    }
    bool starts_factor() {
        skip();
        if (p_ >= s_.size()) return false;
        char c = s_[p_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[';
    }

    ExprPtr parse_sum() {
        ExprPtr lhs;
        if (peek('-')) {
            ++p_;
            lhs = node(Expr::Kind::Neg, {parse_product()});
        } else {
            if (peek('+')) ++p_;
            lhs = parse_product();
        }
        while (true) {
            if (peek('+')) {
                ++p_;
                lhs = node(Expr::Kind::Add, {lhs, parse_product()});
            } else if (peek('-')) {
                ++p_;
                lhs = node(Expr::Kind::Sub, {lhs, parse_product()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_power();
        while (true) {
            if (peek('*')) {
                ++p_;
                lhs = node(Expr::Kind::Mul, {lhs, parse_power()});
            } else if (peek('/')) {
                ++p_;
                lhs = node(Expr::Kind::Div, {lhs, parse_power()});
            } else if (starts_factor()) {
                lhs = node(Expr::Kind::Mul, {lhs, parse_power()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek('^')) {
            ++p_;
            skip();
            std::size_t q = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (q == p_) fail("expected exponent");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Pow;
            e->exponent = static_cast<unsigned>(std::stoul(std::string(s_.substr(q, p_ - q))));
            e->args = {base};
            return e;
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end");
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            ExprPtr e = parse_sum();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++p_;
            std::vector<ExprPtr> items{parse_sum()};
            while (peek(',')) {
                ++p_;
                items.push_back(parse_sum());
            }
            expect(']');
            if (items.size() < 2) fail("bracket needs two entries");
            ExprPtr acc = items.back();
            for (std::size_t n = items.size() - 1; n-- > 0;) acc = node(Expr::Kind::Bracket, {items[n], acc});
            return acc;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t q = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Num;
            e->num = Rational::parse(std::string(s_.substr(q, p_ - q)));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t q = p_;
            while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Sym;
            e->name = std::string(s_.substr(q, p_ - q));
            return e;
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t p_ = 0;
};

void collect(const Expr& e, std::vector<std::string>& out) {
    if (e.kind == Expr::Kind::Sym) {
        for (const auto& s : out)
            if (s == e.name) return;
        out.push_back(e.name);
    }
    for (const auto& a : e.args) collect(*a, out);
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

std::string expr_str(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Num: return e.num.str();
        case Expr::Kind::Sym: return e.name;
        case Expr::Kind::Add: return "(" + expr_str(*e.args[0]) + " + " + expr_str(*e.args[1]) + ")";
        case Expr::Kind::Sub: return "(" + expr_str(*e.args[0]) + " - " + expr_str(*e.args[1]) + ")";
        case Expr::Kind::Neg: return "-" + expr_str(*e.args[0]);
        case Expr::Kind::Mul: return expr_str(*e.args[0]) + "*" + expr_str(*e.args[1]);
        case Expr::Kind::Div: return expr_str(*e.args[0]) + "/" + expr_str(*e.args[1]);
        case Expr::Kind::Pow: return expr_str(*e.args[0]) + "^" + std::to_string(e.exponent);
        case Expr::Kind::Bracket: return "[" + expr_str(*e.args[0]) + ", " + expr_str(*e.args[1]) + "]";
    }
    return "?";
}

std::vector<std::string> expr_symbols(const Expr& e) {
    std::vector<std::string> out;
    collect(e, out);
    return out;
}

}  // namespace gtp
