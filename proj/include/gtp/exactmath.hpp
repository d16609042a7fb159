#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtp {

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact rational number, always reduced with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}
    static Rational parse(std::string_view s);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational pow(unsigned e) const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    mpz_class floor() const;
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

// Field arithmetic with an explicit error value instead of an exception.
enum class ArithOp { Add, Sub, Mul, Div };
std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op);

// Fixed symbol registry for parameters, lattice indices and central generators.
enum class Sym : std::uint8_t {
    a1, a2, a3, a4, xi, mu, upsilon, t1, t2, t3,
    h1, h2, z1, z2, i, j, k,
    Count
};
constexpr std::size_t kNumSyms = static_cast<std::size_t>(Sym::Count);
std::string_view sym_name(Sym s);
std::optional<Sym> sym_from_name(std::string_view name);

using Exponents = std::array<std::uint8_t, kNumSyms>;

// Graded lexicographic order, larger monomials sort first.
struct GrLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

using Bindings = std::map<Sym, Rational>;

class Polynomial {
public:
    using Terms = std::map<Exponents, Rational, GrLexGreater>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial var(Sym s);
    static Polynomial monomial(const Exponents& e, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int total_degree() const;
    int degree_in(Sym s) const;
    bool has(Sym s) const { return degree_in(s) > 0; }
    std::vector<Sym> symbols() const;
    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const;
    Rational eval(const Bindings& b) const;
    Polynomial substitute(const std::map<Sym, Polynomial>& sub) const;
    Polynomial partial_eval(const Bindings& b) const;
    Polynomial shifted(Sym s, const Rational& delta) const;

    // Coefficients with respect to one variable, index = power.
    std::vector<Polynomial> coeffs_in(Sym s) const;
    static Polynomial from_coeffs(Sym s, const std::vector<Polynomial>& cs);

    std::optional<Polynomial> exact_div(const Polynomial& d) const;
    // Scaled so the leading coefficient is 1.
    Polynomial monic() const;
    Rational content_rational() const;

    std::string str() const;

private:
    Terms terms_;
};

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Polynomial& n, const Polynomial& d);
    static RationalFunction var(Sym s) { return RationalFunction(Polynomial::var(s)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    Rational eval(const Bindings& b) const;
    RationalFunction substitute(const std::map<Sym, Polynomial>& sub) const;
    RationalFunction partial_eval(const Bindings& b) const;
    RationalFunction shifted(Sym s, const Rational& delta) const;
    std::string str() const;

private:
    void canonicalize();
    Polynomial num_;
    Polynomial den_;
};

bool rf_simplify_equal(const RationalFunction& f, const RationalFunction& g);

// Evaluates f, throwing MathError on an unbound symbol or a pole.
Rational rf_eval(const RationalFunction& f, const Bindings& b);

// Parses expressions over the symbol registry: + - * / ^ and parentheses.
RationalFunction parse_rf(std::string_view text);

}  // namespace gtp
