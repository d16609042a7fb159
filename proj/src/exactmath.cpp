#include "gtp/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gtp {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
    if (den == 0) throw MathError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    std::string t(s);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t.empty()) throw MathError("empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw MathError("bad rational literal: " + t);
    if (q.get_den() == 0) throw MathError("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div:
            if (b.is_zero()) return std::nullopt;
            return a / b;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- symbols

namespace {
constexpr std::array<std::string_view, kNumSyms> kSymNames = {
    "a1", "a2", "a3", "a4", "xi", "mu", "upsilon", "t1", "t2", "t3",
    "h1", "h2", "z1", "z2", "i", "j", "k"};
}

std::string_view sym_name(Sym s) { return kSymNames.at(static_cast<std::size_t>(s)); }

std::optional<Sym> sym_from_name(std::string_view name) {
    for (std::size_t n = 0; n < kNumSyms; ++n)
        if (kSymNames[n] == name) return static_cast<Sym>(n);
    return std::nullopt;
}

bool GrLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (std::size_t n = 0; n < kNumSyms; ++n) {
        da += a[n];
        db += b[n];
    }
    if (da != db) return da > db;
    for (std::size_t n = 0; n < kNumSyms; ++n)
        if (a[n] != b[n]) return a[n] > b[n];
    return false;
}

// ---------------------------------------------------------------- Polynomial

namespace {
Exponents zero_exp() {
    Exponents e{};
    return e;
}
}  // namespace

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(zero_exp(), c);
}

Polynomial Polynomial::var(Sym s) {
    Exponents e = zero_exp();
    e[static_cast<std::size_t>(s)] = 1;
    return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_exp());
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(zero_exp());
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto x : terms_.begin()->first) d += x;
    return d;
}

int Polynomial::degree_in(Sym s) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(s)]);
    return d;
}

std::vector<Sym> Polynomial::symbols() const {
    std::vector<Sym> out;
    for (std::size_t n = 0; n < kNumSyms; ++n)
        for (const auto& [e, c] : terms_)
            if (e[n] > 0) {
                out.push_back(static_cast<Sym>(n));
                break;
            }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t n = 0; n < kNumSyms; ++n) e[n] = static_cast<std::uint8_t>(ea[n] + eb[n]);
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

Rational Polynomial::eval(const Bindings& b) const {
    std::array<std::vector<Rational>, kNumSyms> powers;
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t n = 0; n < kNumSyms; ++n) {
            if (!e[n]) continue;
            auto& pw = powers[n];
            if (pw.empty()) {
                auto it = b.find(static_cast<Sym>(n));
                if (it == b.end())
                    throw MathError("unbound symbol " + std::string(kSymNames[n]));
                pw.push_back(Rational(1));
                pw.push_back(it->second);
            }
            while (pw.size() <= e[n]) pw.push_back(pw.back() * pw[1]);
            t *= pw[e[n]];
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<Sym, Polynomial>& sub) const {
    Polynomial total;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        Polynomial t(1);
        for (const auto& [s, p] : sub) {
            auto n = static_cast<std::size_t>(s);
            if (rest[n]) {
                t *= p.pow(rest[n]);
                rest[n] = 0;
            }
        }
        total += t * monomial(rest, c);
    }
    return total;
}

Polynomial Polynomial::partial_eval(const Bindings& b) const {
    std::map<Sym, Polynomial> sub;
    for (const auto& [s, v] : b) sub.emplace(s, Polynomial(v));
    return substitute(sub);
}

Polynomial Polynomial::shifted(Sym s, const Rational& delta) const {
    if (delta.is_zero() || !has(s)) return *this;
    return substitute({{s, var(s) + Polynomial(delta)}});
}

std::vector<Polynomial> Polynomial::coeffs_in(Sym s) const {
    auto n = static_cast<std::size_t>(s);
    std::vector<Polynomial> out(std::max(degree_in(s), 0) + 1);
    for (const auto& [e, c] : terms_) {
        Exponents r = e;
        int p = r[n];
        r[n] = 0;
        out[p] += monomial(r, c);
    }
    return out;
}

Polynomial Polynomial::from_coeffs(Sym s, const std::vector<Polynomial>& cs) {
    Polynomial out;
    Polynomial x = var(s);
    for (std::size_t p = 0; p < cs.size(); ++p) out += cs[p] * x.pow(static_cast<unsigned>(p));
    return out;
}

std::optional<Polynomial> Polynomial::exact_div(const Polynomial& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    if (d.is_constant()) return *this * (Rational(1) / d.constant_term());
    Polynomial q, r = *this;
    const Exponents& ld = d.leading_exponents();
    const Rational& lc = d.leading_coeff();
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        Exponents e;
        for (std::size_t n = 0; n < kNumSyms; ++n) {
            if (lr[n] < ld[n]) return std::nullopt;
            e[n] = static_cast<std::uint8_t>(lr[n] - ld[n]);
        }
        Polynomial t = monomial(e, r.leading_coeff() / lc);
        q += t;
        r -= t * d;
    }
    return q;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coeff());
}

Rational Polynomial::content_rational() const {
    if (is_zero()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(mpq_class(g, l));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool is_one = true;
        for (auto x : e) is_one = is_one && x == 0;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (is_one || a != Rational(1)) {
            os << a.str();
            need_star = true;
        }
        for (std::size_t n = 0; n < kNumSyms; ++n) {
            if (!e[n]) continue;
            if (need_star) os << "*";
            os << kSymNames[n];
            if (e[n] > 1) os << "^" << int(e[n]);
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

Polynomial content_in(const Polynomial& p, Sym x);

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = a.exact_div(b);
    if (!q) throw MathError("internal: inexact polynomial division");
    return *q;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Sym x) {
    int db = b.degree_in(x);
    auto bc = b.coeffs_in(x);
    Polynomial lb = bc.back();
    Polynomial xv = Polynomial::var(x);
    Polynomial r = a;
    while (!r.is_zero() && r.degree_in(x) >= db) {
        int dr = r.degree_in(x);
        Polynomial lr = r.coeffs_in(x).back();
        r = lb * r - lr * xv.pow(static_cast<unsigned>(dr - db)) * b;
    }
    return r;
}

Polynomial primitive_in(const Polynomial& p, Sym x) {
    Polynomial c = content_in(p, x);
    return divide_exact(p, c);
}

Polynomial content_in(const Polynomial& p, Sym x) {
    Polynomial g;
    for (const auto& c : p.coeffs_in(x)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g.is_zero() ? Polynomial(1) : g;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    std::optional<Sym> x;
    for (std::size_t n = 0; n < kNumSyms && !x; ++n) {
        Sym s = static_cast<Sym>(n);
        if (a.has(s) || b.has(s)) x = s;
    }
    if (!a.has(*x)) return poly_gcd(a, content_in(b, *x));
    if (!b.has(*x)) return poly_gcd(content_in(a, *x), b);
    Polynomial ca = content_in(a, *x), cb = content_in(b, *x);
    Polynomial gc = poly_gcd(ca, cb);
    Polynomial p = divide_exact(a, ca), q = divide_exact(b, cb);
    if (p.degree_in(*x) < q.degree_in(*x)) std::swap(p, q);
    Polynomial g;
    while (true) {
        Polynomial r = prem(p, q, *x);
        if (r.is_zero()) {
            g = q;
            break;
        }
        if (r.degree_in(*x) == 0) {
            g = Polynomial(1);
            break;
        }
        p = q;
        q = primitive_in(r, *x);
    }
    g = primitive_in(g, *x);
    return (gc * g).monic();
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& n, const Polynomial& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    Rational lc = den_.leading_coeff();
    if (lc != Rational(1)) {
        Rational inv = Rational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw MathError("rational function is not constant");
    return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw MathError("rational function division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

Rational RationalFunction::eval(const Bindings& b) const {
    Rational d = den_.eval(b);
    if (d.is_zero()) throw MathError("pole: denominator " + den_.str() + " vanishes");
    return num_.eval(b) / d;
}

RationalFunction RationalFunction::substitute(const std::map<Sym, Polynomial>& sub) const {
    return RationalFunction(num_.substitute(sub), den_.substitute(sub));
}

RationalFunction RationalFunction::partial_eval(const Bindings& b) const {
    return RationalFunction(num_.partial_eval(b), den_.partial_eval(b));
}

RationalFunction RationalFunction::shifted(Sym s, const Rational& delta) const {
    if (delta.is_zero()) return *this;
    RationalFunction r;
    r.num_ = num_.shifted(s, delta);
    r.den_ = den_.shifted(s, delta);
    r.canonicalize();
    return r;
}

std::string RationalFunction::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool rf_simplify_equal(const RationalFunction& f, const RationalFunction& g) {
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

Rational rf_eval(const RationalFunction& f, const Bindings& b) { return f.eval(b); }

// ---------------------------------------------------------------- parser

namespace {

class RfParser {
public:
    explicit RfParser(std::string_view s) : s_(s) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw MathError("parse error (" + what + ") at offset " + std::to_string(pos_) + " in '" +
                        std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    RationalFunction expr() {
        RationalFunction r = term();
        while (true) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    RationalFunction term() {
        RationalFunction r = unary();
        while (true) {
            if (eat('*')) r *= unary();
            else if (eat('/')) r /= unary();
            else return r;
        }
    }
    RationalFunction unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        RationalFunction base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
            RationalFunction r(1);
            for (unsigned n = 0; n < e; ++n) r *= base;
            return r;
        }
        return base;
    }
    RationalFunction primary() {
        skip();
        if (eat('(')) {
            RationalFunction r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            auto sym = sym_from_name(name);
            if (!sym) fail("unknown symbol " + std::string(name));
            return RationalFunction::var(*sym);
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rf(std::string_view text) { return RfParser(text).parse(); }

}  // namespace gtp
