#pragma once

#include "gtp/exactmath.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gtp {

// Expression syntax for relations and Casimir formulas:
//   sums, juxtaposed or '*' products, '/', integer powers '^', parentheses,
//   brackets [a,b] and nested [a,b,c] = [a,[b,c]], integer literals, identifiers.
struct Expr {
    enum class Kind { Num, Sym, Add, Sub, Neg, Mul, Div, Pow, Bracket };
    Kind kind = Kind::Num;
    Rational num;
    std::string name;
    unsigned exponent = 0;
    std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view text);
std::string expr_str(const Expr& e);
// Identifiers occurring in e, in first-occurrence order.
std::vector<std::string> expr_symbols(const Expr& e);

// Ops must provide: V num(const Rational&), V sym(const std::string&), V add(const V&, const V&),
// V sub(const V&, const V&), V neg(const V&), V mul(const V&, const V&), V div(const V&, const V&),
// V bracket(const V&, const V&).
template <class V, class Ops>
V evaluate(const Expr& e, Ops& ops) {
    switch (e.kind) {
        case Expr::Kind::Num: return ops.num(e.num);
        case Expr::Kind::Sym: return ops.sym(e.name);
        case Expr::Kind::Add: return ops.add(evaluate<V>(*e.args[0], ops), evaluate<V>(*e.args[1], ops));
        case Expr::Kind::Sub: return ops.sub(evaluate<V>(*e.args[0], ops), evaluate<V>(*e.args[1], ops));
        case Expr::Kind::Neg: return ops.neg(evaluate<V>(*e.args[0], ops));
        case Expr::Kind::Mul: return ops.mul(evaluate<V>(*e.args[0], ops), evaluate<V>(*e.args[1], ops));
        case Expr::Kind::Div: return ops.div(evaluate<V>(*e.args[0], ops), evaluate<V>(*e.args[1], ops));
        case Expr::Kind::Pow: {
            V base = evaluate<V>(*e.args[0], ops);
            V r = ops.num(Rational(1));
            for (unsigned n = 0; n < e.exponent; ++n) r = ops.mul(r, base);
            return r;
        }
        case Expr::Kind::Bracket: {
            V a = evaluate<V>(*e.args[0], ops);
            V b = evaluate<V>(*e.args[1], ops);
            return ops.bracket(a, b);
        }
    }
    throw MathError("bad expression node");
}

}  // namespace gtp
