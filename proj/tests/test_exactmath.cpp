#include "gtp/exactmath.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gtp;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 17);
    return Rational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937_64& rng) {
    const std::array<Sym, 3> vars{Sym::i, Sym::j, Sym::a3};
    Polynomial p;
    std::uniform_int_distribution<int> deg(0, 2), terms(1, 4);
    for (int t = terms(rng); t > 0; --t) {
        Polynomial m = random_rational(rng);
        for (Sym v : vars) m *= Polynomial::var(v).pow(static_cast<unsigned>(deg(rng)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("rationals are reduced with a positive denominator") {
    const Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.den() == 2);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("division by zero is an explicit error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), MathError);
    CHECK_THROWS_AS(Rational(1, 0), MathError);
    CHECK_FALSE(rational_arith(Rational(1), Rational(0), ArithOp::Div).has_value());
    CHECK(*rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::Sub) == Rational(1, 6));
}

TEST_CASE("polynomials form a commutative ring (property)") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 40; ++n) {
        const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("polynomial evaluation is a ring homomorphism (property)") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 40; ++n) {
        const Polynomial a = random_poly(rng), b = random_poly(rng);
        const Bindings at{{Sym::i, random_rational(rng)}, {Sym::j, random_rational(rng)}, {Sym::a3, random_rational(rng)}};
        CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
        CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
    }
}

TEST_CASE("exact division and gcd") {
    const Polynomial x = Polynomial::var(Sym::i), y = Polynomial::var(Sym::j);
    const Polynomial f = (x + y) * (x - Polynomial(2) * y);
    REQUIRE(f.exact_div(x + y).has_value());
    CHECK(*f.exact_div(x + y) == x - Polynomial(2) * y);
    CHECK_FALSE(f.exact_div(x + Polynomial(1)).has_value());
    CHECK(poly_gcd(f, (x + y) * (x + Polynomial(3))).monic() == (x + y).monic());
}

TEST_CASE("rational functions are canonical") {
    const RationalFunction x = RationalFunction::var(Sym::i), y = RationalFunction::var(Sym::j);
    const RationalFunction f = (x * x - y * y) / (x - y);
    CHECK(f == x + y);
    CHECK(f.is_polynomial());
    CHECK(rf_simplify_equal(RationalFunction(1) / x + RationalFunction(1) / y, (x + y) / (x * y)));
    CHECK_FALSE(rf_simplify_equal(x / y, y / x));
}

TEST_CASE("rf_eval reports poles and unbound symbols") {
    const RationalFunction f = parse_rf("1/(i - 2)");
    CHECK(rf_eval(f, {{Sym::i, Rational(3)}}) == Rational(1));
    CHECK_THROWS_AS(rf_eval(f, {{Sym::i, Rational(2)}}), MathError);
    CHECK_THROWS_AS(rf_eval(f, {}), MathError);
}

TEST_CASE("parser round trip") {
    const RationalFunction f = parse_rf("(a1 + 2*i - j)^2 / 3 - k");
    const Bindings b{{Sym::a1, Rational(1, 5)}, {Sym::i, Rational(1)}, {Sym::j, Rational(2)}, {Sym::k, Rational(1)}};
    CHECK(f.eval(b) == Rational(1, 5) * Rational(1, 5) / Rational(3) - Rational(1));
    CHECK(parse_rf(f.str()) == f);
    CHECK(f.shifted(Sym::k, Rational(1)).eval(b) == f.eval(b) - Rational(1));
}
