#include "gtp/gtmodules.hpp"

#include "gtp/centralizer.hpp"
#include "gtp/parallel.hpp"
#include "gtp/tables.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gtp {

using RF = RationalFunction;

std::string point_str(const Point& p) {
    return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
}

Point operator+(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

namespace {

const std::vector<std::pair<Family, std::string_view>> kFamilies = {
    {Family::A2, "A2"},       {Family::C2_V1, "C2_V1"},         {Family::C2_V2, "C2_V2"},
    {Family::C2_General, "C2_General"}, {Family::G2, "G2"}, {Family::G2_Printed, "G2_Printed"},
};

RF var(Sym s) { return RF::var(s); }
RF q(long n, long d = 1) { return RF(Rational(n, d)); }

bool is_int(const Rational& r) { return r.is_integer(); }

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& [x, n] : kFamilies)
        if (x == f) return n;
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    std::string up;
    for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (const auto& [x, n] : kFamilies) {
        std::string nu;
        for (char c : n) nu.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        if (nu == up) return x;
    }
    return std::nullopt;
}

AlgebraId family_algebra(Family f) {
    switch (f) {
        case Family::A2: return AlgebraId::A2;
        case Family::C2_V1:
        case Family::C2_V2:
        case Family::C2_General: return AlgebraId::C2;
        case Family::G2:
        case Family::G2_Printed: break;
    }
    return AlgebraId::G2;
}

std::vector<std::string> family_parameters(Family f) {
    switch (f) {
        case Family::A2: return {"a1", "a2", "a3", "t1", "t2"};
        case Family::C2_V1: return {"a1", "a2", "a3", "upsilon"};
        case Family::C2_V2:
        case Family::C2_General: return {"a1", "a2", "a3", "a4", "upsilon"};
        case Family::G2:
        case Family::G2_Printed: break;
    }
    return {"a1", "a2", "a3"};
}

Rational ParameterPoint::at(Sym s) const {
    auto it = values.find(s);
    if (it == values.end()) throw ModuleError("parameter " + std::string(sym_name(s)) + " is not set");
    return it->second;
}

nlohmann::json ParameterPoint::to_json() const {
    nlohmann::json j;
    j["family"] = std::string(family_name(family));
    j["algebra"] = std::string(algebra_name(algebra()));
    nlohmann::json v = nlohmann::json::object();
    for (const auto& [s, r] : values) v[std::string(sym_name(s))] = r.str();
    j["values"] = v;
    return j;
}

std::vector<Rational> upsilon_roots(const Rational& xi) {
    // u^2 - u - (2 + xi/2) = 0, discriminant 9 + 2 xi
    const Rational disc = Rational(9) + Rational(2) * xi;
    std::vector<Rational> out;
    if (disc.sign() < 0) return out;
    mpz_class n = disc.num(), d = disc.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return out;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    const Rational r = Rational(mpq_class(rn, rd));
    out.push_back((Rational(1) - r) / Rational(2));
    if (!r.is_zero()) out.push_back((Rational(1) + r) / Rational(2));
    return out;
}

namespace {

Rational need(const Bindings& b, Sym s, Family f) {
    auto it = b.find(s);
    if (it == b.end())
        throw ModuleError(std::string(family_name(f)) + " requires parameter " + std::string(sym_name(s)));
    return it->second;
}

Rational c2_xi(const Rational& u) { return Rational(2) * (u + Rational(1)) * (u - Rational(2)); }

}  // namespace

ParameterPoint make_parameters(Family f, const Bindings& given, bool check_a3) {
    ParameterPoint p;
    p.family = f;
    p.checked = check_a3;
    auto& v = p.values;
    const std::string fam(family_name(f));
    switch (f) {
        case Family::A2: {
            for (Sym s : {Sym::a1, Sym::a2, Sym::a3, Sym::t1, Sym::t2}) v[s] = need(given, s, f);
            const Rational t1 = v[Sym::t1], t2 = v[Sym::t2], t3 = -t1 - t2;
            v[Sym::t3] = t3;
            v[Sym::xi] = -(t1 * t2 + t1 * t3 + t2 * t3) - Rational(1);
            v[Sym::mu] = -(t1 * t2 * t3) - v[Sym::xi];
            for (Sym s : {Sym::xi, Sym::mu, Sym::t3})
                if (auto it = given.find(s); it != given.end() && it->second != v[s])
                    throw ModuleError(fam + ": " + std::string(sym_name(s)) + " is determined by t1, t2");
            if (check_a3 && is_int(v[Sym::a3])) throw ModuleError(fam + " requires a3 not in Z");
            break;
        }
        case Family::C2_V1: {
            for (Sym s : {Sym::a1, Sym::a2, Sym::a3}) v[s] = need(given, s, f);
            v[Sym::a4] = v[Sym::a3];
            if (auto it = given.find(Sym::a4); it != given.end() && it->second != v[Sym::a3])
                throw ModuleError(fam + " requires a4 = a3");
            if (auto it = given.find(Sym::upsilon); it != given.end()) {
                v[Sym::upsilon] = it->second;
                v[Sym::xi] = c2_xi(it->second);
                if (auto x = given.find(Sym::xi); x != given.end() && x->second != v[Sym::xi])
                    throw ModuleError(fam + ": xi != 2(upsilon+1)(upsilon-2)");
            } else if (auto x = given.find(Sym::xi); x != given.end()) {
                auto roots = upsilon_roots(x->second);
                if (roots.empty()) throw ModuleError(fam + ": 2(u+1)(u-2) = xi has no rational root");
                v[Sym::xi] = x->second;
                v[Sym::upsilon] = roots.front();
            } else {
                throw ModuleError(fam + " requires upsilon or xi");
            }
            if (check_a3 && is_int(v[Sym::a3])) throw ModuleError(fam + " requires a3 not in Z");
            break;
        }
        case Family::C2_V2: {
            for (Sym s : {Sym::a1, Sym::a2, Sym::a3, Sym::a4}) v[s] = need(given, s, f);
            auto roots = upsilon_roots(Rational(-4));
            v[Sym::xi] = Rational(-4);
            if (auto x = given.find(Sym::xi); x != given.end() && x->second != Rational(-4))
                throw ModuleError(fam + " requires xi = -4");
            if (auto it = given.find(Sym::upsilon); it != given.end()) {
                if (std::find(roots.begin(), roots.end(), it->second) == roots.end())
                    throw ModuleError(fam + ": upsilon must solve 2(u+1)(u-2) = -4, i.e. be 0 or 1");
                v[Sym::upsilon] = it->second;
            } else {
                v[Sym::upsilon] = roots.front();
            }
            break;
        }
        case Family::C2_General: {
            for (Sym s : {Sym::a1, Sym::a2, Sym::a3, Sym::a4, Sym::upsilon}) v[s] = need(given, s, f);
            v[Sym::xi] = c2_xi(v[Sym::upsilon]);
            break;
        }
        case Family::G2:
        case Family::G2_Printed: {
            for (Sym s : {Sym::a1, Sym::a2, Sym::a3}) v[s] = need(given, s, f);
            if (check_a3 && is_int(v[Sym::a3])) throw ModuleError(fam + " requires a3 not in Z");
            break;
        }
    }
    return p;
}

ParameterPoint a2_parameters(Rational a1, Rational a2, Rational a3, Rational t1, Rational t2) {
    return make_parameters(Family::A2, {{Sym::a1, a1}, {Sym::a2, a2}, {Sym::a3, a3}, {Sym::t1, t1}, {Sym::t2, t2}});
}

ParameterPoint c2_parameters(Family f, Rational a1, Rational a2, Rational a3, Rational a4, Rational upsilon) {
    Bindings b{{Sym::a1, a1}, {Sym::a2, a2}, {Sym::a3, a3}, {Sym::upsilon, upsilon}};
    if (f != Family::C2_V1 || a4 != a3) b[Sym::a4] = a4;
    return make_parameters(f, b);
}

ParameterPoint g2_parameters(Family f, Rational a1, Rational a2, Rational a3) {
    return make_parameters(f, {{Sym::a1, a1}, {Sym::a2, a2}, {Sym::a3, a3}});
}

namespace {

Rational draw(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(2, 12);
    return Rational(num(rng), den(rng));
}

}  // namespace

ParameterPoint sample_generic_parameters(Family f, std::mt19937_64& rng, std::vector<std::string>* log) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Bindings b;
        for (const auto& name : family_parameters(f)) b[*sym_from_name(name)] = draw(rng);
        if (f == Family::C2_V2) b[Sym::upsilon] = Rational(static_cast<long>(rng() % 2));
        std::string reason;
        try {
            ParameterPoint p = make_parameters(f, b);
            ConditionResult r = simplicity_condition(p);
            if (r.holds) return p;
            reason = r.witness + " has an integer zero";
        } catch (const ModuleError& e) {
            reason = e.what();
        }
        if (log) {
            std::string s = "rejected";
            for (const auto& [k, v] : b) s += " " + std::string(sym_name(k)) + "=" + v.str();
            log->push_back(s + ": " + reason);
        }
    }
    throw ModuleError("no generic parameter point found");
}

// ---------------------------------------------------------------- coefficient forms

namespace {

// Parameter provider: symbols for the symbolic families, constants for a point.
struct Ctx {
    Family family;
    const ParameterPoint* point = nullptr;

    RF p(Sym s) const {
        if (point) return RF(point->at(s));
        switch (s) {
            case Sym::t3: return -var(Sym::t1) - var(Sym::t2);
            case Sym::xi:
                if (family == Family::A2) {
                    RF t1 = var(Sym::t1), t2 = var(Sym::t2), t3 = p(Sym::t3);
                    return -(t1 * t2 + t1 * t3 + t2 * t3) - q(1);
                }
                return q(2) * (var(Sym::upsilon) + q(1)) * (var(Sym::upsilon) - q(2));
            case Sym::mu: {
                RF t1 = var(Sym::t1), t2 = var(Sym::t2), t3 = p(Sym::t3);
                return -(t1 * t2 * t3) - p(Sym::xi);
            }
            case Sym::a4:
                if (family == Family::C2_V1) return var(Sym::a3);
                return var(Sym::a4);
            default: return var(s);
        }
    }
};

const RF I = RF::var(Sym::i);
const RF J = RF::var(Sym::j);
const RF K = RF::var(Sym::k);

struct A2Forms {
    RF a1, a2, a3, xi, mu;
    std::array<RF, 3> t;
    explicit A2Forms(const Ctx& c)
        : a1(c.p(Sym::a1)), a2(c.p(Sym::a2)), a3(c.p(Sym::a3)), xi(c.p(Sym::xi)), mu(c.p(Sym::mu)),
          t{c.p(Sym::t1), c.p(Sym::t2), c.p(Sym::t3)} {}
    RF h1(const RF& i, const RF& j) const { return a1 + q(2) * i - j; }
    RF h2(const RF& i, const RF& j) const { return a2 - i + q(2) * j; }
    RF s(const RF& j, const RF& k) const { return a3 - j + q(2) * k - q(1); }
    RF Sp(const RF& i, const RF& j, const RF& k) const { return q(1, 2) * (a1 + a3 - q(1)) + i - j + k; }
    RF Sm(const RF& i, const RF& k) const { return q(1, 2) * (-a1 + a3 - q(1)) - i + k; }
    RF Tp(const RF& k) const { return q(1, 6) * (a1 + q(2) * a2 + q(3) * a3) + k - q(1, 2); }
    RF Tm(const RF& j, const RF& k) const { return q(1, 6) * (-a1 - q(2) * a2 + q(3) * a3) - j + k - q(1, 2); }
    RF Qm(const RF& j, const RF& k) const {
        return -mu + Tm(j, k - q(2)) * xi - Tm(j, k) * Tm(j, k - q(1)) * Tm(j, k - q(2));
    }
    RF Qp(const RF& k) const { return mu + Tp(k) * xi - Tp(k) * Tp(k - q(1)) * Tp(k - q(2)); }
    std::vector<RF> Qm_factors(const RF& j, const RF& k) const {
        return {Tm(j, k - q(1)) - t[0], Tm(j, k - q(1)) - t[1], Tm(j, k - q(1)) - t[2]};
    }
    std::vector<RF> Qp_factors(const RF& k) const {
        return {Tp(k - q(1)) + t[0], Tp(k - q(1)) + t[1], Tp(k - q(1)) + t[2]};
    }
};

struct C2Forms {
    RF a1, a2, a3, a4, u;
    explicit C2Forms(const Ctx& c)
        : a1(c.p(Sym::a1)), a2(c.p(Sym::a2)), a3(c.p(Sym::a3)), a4(c.p(Sym::a4)), u(c.p(Sym::upsilon)) {}
    RF h1(const RF& i, const RF& j) const { return a1 + q(2) * i - j; }
    RF h2(const RF& i, const RF& j) const { return a2 - q(2) * i + q(2) * j; }
    RF s(const RF& j, const RF& k) const { return a3 - j + q(2) * k - q(1); }
    RF Qp(const RF& j, const RF& k) const { return u / s(j, k) + q(1); }
    RF Qm(const RF& j, const RF& k) const { return u / s(j, k) - q(1); }
    RF Sp(const RF& i, const RF& j, const RF& k) const {
        return q(1, 2) * (a1 + a3 + q(2) * i - q(2) * j + q(2) * k - q(1));
    }
    RF Sm(const RF& i, const RF& k) const { return q(1, 2) * (-a1 + a3 - q(2) * i + q(2) * k - q(1)); }
    RF Tp(const RF& k) const { return q(1, 2) * (a1 + a2 + a4 + q(2) * k - q(1)); }
    RF Tm(const RF& j, const RF& k) const { return q(1, 2) * (-a1 - a2 + a4 - q(2) * j + q(2) * k - q(1)); }
};

struct G2Forms {
    RF a1, a2, a3;
    explicit G2Forms(const Ctx& c) : a1(c.p(Sym::a1)), a2(c.p(Sym::a2)), a3(c.p(Sym::a3)) {}
    RF h01(const RF& i, const RF& j) const { return a1 + q(2) * i - j; }
    RF h21(const RF&, const RF& j) const { return a2 + j; }
    RF s(const RF& j, const RF& k) const { return a3 - j + q(2) * k - q(1); }
    RF Sp(const RF& i, const RF& j, const RF& k) const { return q(1, 2) * (s(j, k) + h01(i, j)); }
    RF Sm(const RF& i, const RF& k) const { return q(1, 2) * (s(q(0), k) - h01(i, q(0))); }
    RF Tp(const RF& j, const RF& k) const { return q(1, 2) * (s(j, k) + q(1, 3) * h21(q(0), j)); }
    RF Tm(const RF& j, const RF& k) const { return q(1, 2) * (s(j, k) - q(1, 3) * h21(q(0), j)); }
    RF Ap(const RF& j, const RF& k) const {
        return Tm(j - q(1), k - q(1)) * Tp(j, k) * Tp(j + q(1), k) / (q(9) * s(j, k) * s(j + q(1), k));
    }
    RF Am(const RF& j, const RF& k) const {
        return Tm(j - q(1), k - q(1)) * Tm(j, k) * Tp(j + q(1), k) / (q(9) * s(j, k) * s(j + q(1), k));
    }
    RF Bp(const RF& j, const RF& k) const {
        return Tp(j - q(1), k) * Tp(j, k) * Tp(j + q(1), k) / (q(27) * s(j, k) * s(j + q(1), k));
    }
    RF Bm(const RF& j, const RF& k) const {
        return Tm(j - q(1), k - q(1)) * Tm(j, k) * Tm(j + q(1), k + q(1)) / (q(27) * s(j, k) * s(j + q(1), k));
    }
    // Long-root actions with the central values -8/9 and 8/9 of the A2 subalgebra.
    RF Qm(const RF& j, const RF& k) const {
        return q(-8, 9) - q(8, 9) * Tm(j, k - q(2)) - Tm(j, k) * Tm(j, k - q(1)) * Tm(j, k - q(2));
    }
    RF Qp(const RF& j, const RF& k) const {
        return q(8, 9) - q(8, 9) * Tp(j, k) - Tp(j, k) * Tp(j, k - q(1)) * Tp(j, k - q(2));
    }
    std::vector<RF> Qm_factors(const RF& j, const RF& k) const {
        return {Tm(j, k - q(1)), Tm(j, k - q(1)) - q(1, 3), Tm(j, k - q(1)) + q(1, 3)};
    }
    std::vector<RF> Qp_factors(const RF& j, const RF& k) const {
        return {Tp(j, k - q(1)), Tp(j, k - q(1)) - q(1, 3), Tp(j, k - q(1)) + q(1, 3)};
    }
};

}  // namespace

std::vector<NamedForm> coefficient_family(Family f) {
    Ctx c{f};
    std::vector<NamedForm> out;
    switch (family_algebra(f)) {
        case AlgebraId::A2: {
            A2Forms a(c);
            out = {{"h1_ij", a.h1(I, J)}, {"h2_ij", a.h2(I, J)},     {"s_jk", a.s(J, K)},
                   {"S+_ijk", a.Sp(I, J, K)}, {"S-_ik", a.Sm(I, K)}, {"T+_k", a.Tp(K)},
                   {"T-_jk", a.Tm(J, K)}, {"Q-_jk", a.Qm(J, K)},   {"Q+_k", a.Qp(K)}};
            break;
        }
        case AlgebraId::C2: {
            C2Forms a(c);
            out = {{"h1_ij", a.h1(I, J)},    {"h2_ij", a.h2(I, J)}, {"s_jk", a.s(J, K)},
                   {"Q+_jk", a.Qp(J, K)},    {"Q-_jk", a.Qm(J, K)}, {"S+_ijk", a.Sp(I, J, K)},
                   {"S-_ik", a.Sm(I, K)},    {"T+_k", a.Tp(K)},     {"T-_jk", a.Tm(J, K)}};
            break;
        }
        case AlgebraId::G2: {
            G2Forms a(c);
            out = {{"h01_ij", a.h01(I, J)},
                   {"h21_ij", a.h21(I, J)},
                   {"h10_ij", q(1, 2) * (a.h21(I, J) - q(3) * a.h01(I, J))},
                   {"h11_ij", q(1, 2) * (a.h21(I, J) + q(3) * a.h01(I, J))},
                   {"h31_ij", q(1, 2) * (a.h21(I, J) - a.h01(I, J))},
                   {"h32_ij", q(1, 2) * (a.h21(I, J) + a.h01(I, J))},
                   {"s_jk", a.s(J, K)},
                   {"S+_ijk", a.Sp(I, J, K)},
                   {"S-_ik", a.Sm(I, K)},
                   {"T+_jk", a.Tp(J, K)},
                   {"T-_jk", a.Tm(J, K)},
                   {"A+_jk", a.Ap(J, K)},
                   {"A-_jk", a.Am(J, K)},
                   {"B+_jk", a.Bp(J, K)},
                   {"B-_jk", a.Bm(J, K)}};
            break;
        }
    }
    return out;
}

std::vector<ClosedFormPair> closed_form_pairs(Family f) {
    Ctx c{f};
    std::vector<ClosedFormPair> out;
    const RF a1 = c.p(Sym::a1), a2 = c.p(Sym::a2), a3 = c.p(Sym::a3);
    switch (family_algebra(f)) {
        case AlgebraId::A2: {
            A2Forms a(c);
            out.push_back({"S+_ijk", q(1, 2) * (a.s(J, K) + a.h1(I, J)), a.Sp(I, J, K)});
            out.push_back({"S-_ik", q(1, 2) * (a.s(q(0), K) - a.h1(I, q(0))), a.Sm(I, K)});
            out.push_back({"T+_k", q(1, 2) * (a.s(q(0), K) + q(1, 3) * (a.h1(q(0), q(0)) + q(2) * a.h2(q(0), q(0)))),
                           a.Tp(K)});
            out.push_back({"T-_jk", q(1, 2) * (a.s(J, K) - q(1, 3) * (a.h1(q(0), J) + q(2) * a.h2(q(0), J))),
                           a.Tm(J, K)});
            auto fm = a.Qm_factors(J, K);
            out.push_back({"Q-_jk", a.Qm(J, K), -(fm[0] * fm[1] * fm[2])});
            auto fp = a.Qp_factors(K);
            out.push_back({"Q+_k", a.Qp(K), fp[0] * fp[1] * fp[2], false});
            break;
        }
        case AlgebraId::C2: break;
        case AlgebraId::G2: {
            G2Forms a(c);
            out.push_back({"h10_ij", q(1, 2) * (a.h21(I, J) - q(3) * a.h01(I, J)),
                           q(1, 2) * (a2 - q(3) * a1) - q(3) * I + q(2) * J});
            out.push_back({"h11_ij", q(1, 2) * (a.h21(I, J) + q(3) * a.h01(I, J)),
                           q(1, 2) * (a2 + q(3) * a1) + q(3) * I - J});
            out.push_back({"h31_ij", q(1, 2) * (a.h21(I, J) - a.h01(I, J)), q(1, 2) * (a2 - a1) - I + J});
            out.push_back({"h32_ij", q(1, 2) * (a.h21(I, J) + a.h01(I, J)), q(1, 2) * (a2 + a1) + I});
            out.push_back({"S+_ijk", a.Sp(I, J, K),
                           q(1, 2) * (a1 + a3 + q(2) * I - q(2) * J + q(2) * K - q(1))});
            out.push_back({"S-_ik", a.Sm(I, K), q(1, 2) * (-a1 + a3 - q(2) * I + q(2) * K - q(1))});
            out.push_back({"T+_jk", a.Tp(J, K),
                           q(1, 6) * (a1 + q(2) * a2 + q(3) * a3 - q(2) * J + q(6) * K - q(3)), false});
            out.push_back({"T-_jk", a.Tm(J, K),
                           q(1, 6) * (-a1 - q(2) * a2 + q(3) * a3 - q(4) * J + q(6) * K - q(3)), false});
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- action tables

namespace {

ActionTerm term(Shift s, RF c, std::vector<RF> factors = {}) { return {s, std::move(c), std::move(factors)}; }

void set(ActionTable& t, std::string_view label, std::vector<ActionTerm> terms) {
    t.gens[static_cast<std::size_t>(t.lie().index(label))].terms = std::move(terms);
}

void build_a2(ActionTable& t, const Ctx& c) {
    A2Forms a(c);
    set(t, "h01", {term({0, 0, 0}, a.h1(I, J))});
    set(t, "h10", {term({0, 0, 0}, a.h2(I, J))});
    set(t, "e01", {term({1, 0, 0}, a.Sp(I, J, K), {a.Sp(I, J, K)})});
    set(t, "f01", {term({-1, 0, 0}, a.Sm(I, K), {a.Sm(I, K)})});
    set(t, "e10", {term({0, 1, 0}, a.Qm(J, K), a.Qm_factors(J, K)),
                   term({0, 1, 1}, a.Sm(I, K) / (a.s(J + q(1), K) * a.s(J, K)), {a.Sm(I, K)})});
    set(t, "f10", {term({0, -1, -1}, a.Qp(K), a.Qp_factors(K)),
                   term({0, -1, 0}, a.Sp(I, J, K) / (a.s(J + q(1), K) * a.s(J, K)), {a.Sp(I, J, K)})});
    t.notes.push_back("Q+_k uses its defining form mu + T+_k xi - T+_k T+_{k-1} T+_{k-2}, which equals "
                      "-(T+_{k-1}+t1)(T+_{k-1}+t2)(T+_{k-1}+t3)");
}

void build_c2(ActionTable& t, const Ctx& c) {
    C2Forms a(c);
    const bool u0 = c.point && c.point->at(Sym::upsilon).is_zero();
    auto qp = [&](const RF& j, const RF& k) { return u0 ? std::vector<RF>{} : std::vector<RF>{a.s(j, k) + a.u}; };
    auto qm = [&](const RF& j, const RF& k) { return u0 ? std::vector<RF>{} : std::vector<RF>{a.s(j, k) - a.u}; };
    auto cat = [](std::vector<RF> x, const std::vector<RF>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    const RF J1 = J + q(1);
    set(t, "h01", {term({0, 0, 0}, a.h1(I, J))});
    set(t, "h10", {term({0, 0, 0}, a.h2(I, J))});
    set(t, "e01", {term({1, 0, 0}, a.Sp(I, J, K), {a.Sp(I, J, K)})});
    set(t, "f01", {term({-1, 0, 0}, a.Sm(I, K), {a.Sm(I, K)})});
    set(t, "e10", {term({0, 1, 1}, a.Sm(I, K) * a.Qp(J1, K), cat({a.Sm(I, K)}, qp(J1, K))),
                   term({0, 1, 0}, a.Tm(J1, K) * a.Qm(J1, K), cat({a.Tm(J1, K)}, qm(J1, K)))});
    set(t, "f10", {term({0, -1, 0}, a.Sp(I, J, K) * a.Qp(J1, K), cat({a.Sp(I, J, K)}, qp(J1, K))),
                   term({0, -1, -1}, a.Tp(K - q(1)) * a.Qm(J1, K), cat({a.Tp(K - q(1))}, qm(J1, K)))});
    set(t, "e11", {term({1, 1, 1}, -a.Sp(I, J, K) * a.Qp(J1, K), cat({a.Sp(I, J, K)}, qp(J1, K))),
                   term({1, 1, 0}, a.Tm(J1, K) * a.Qm(J1, K), cat({a.Tm(J1, K)}, qm(J1, K)))});
    set(t, "f11", {term({-1, -1, 0}, a.Sm(I, K) * a.Qp(J1, K), cat({a.Sm(I, K)}, qp(J1, K))),
                   term({-1, -1, -1}, -a.Tp(K - q(1)) * a.Qm(J1, K), cat({a.Tp(K - q(1))}, qm(J1, K)))});
    set(t, "e21", {term({1, 2, 1}, q(2) * a.Tm(J1, K), {a.Tm(J1, K)})});
    set(t, "f21", {term({-1, -2, -1}, q(2) * a.Tp(K - q(1)), {a.Tp(K - q(1))})});
}

void build_g2(ActionTable& t, const Ctx& c) {
    G2Forms a(c);
    const RF one = q(1);
    const RF ss = a.s(J, K) * a.s(J + one, K);
    set(t, "h01", {term({0, 0, 0}, a.h01(I, J))});
    set(t, "h21", {term({0, 0, 0}, a.h21(I, J))});
    set(t, "e01", {term({1, 0, 0}, a.Sp(I, J, K), {a.Sp(I, J, K)})});
    set(t, "f01", {term({-1, 0, 0}, a.Sm(I, K), {a.Sm(I, K)})});
    set(t, "e31", {term({1, 3, 1}, a.Qm(J, K), a.Qm_factors(J, K)), term({1, 3, 2}, a.Sm(I, K) / ss, {a.Sm(I, K)})});
    set(t, "f31", {term({-1, -3, -2}, a.Qp(J, K), a.Qp_factors(J, K)),
                   term({-1, -3, -1}, a.Sp(I, J, K) / ss, {a.Sp(I, J, K)})});
    const RF te = a.Tm(J, K - one) * a.Tm(J + one, K) * a.Tp(J + q(2), K);
    const RF tf = a.Tp(J, K - one) * a.Tm(J + one, K) * a.Tp(J + q(2), K);
    set(t, "e10", {term({0, 1, 0}, q(-3) * te, {a.Tm(J, K - one), a.Tm(J + one, K), a.Tp(J + q(2), K)}),
                   term({0, 1, 1}, q(-3) * a.Sm(I, K) / ss, {a.Sm(I, K)})});
    set(t, "f10", {term({0, -1, -1}, q(3) * tf, {a.Tp(J, K - one), a.Tm(J + one, K), a.Tp(J + q(2), K)}),
                   term({0, -1, 0}, q(3) * a.Sp(I, J, K) / ss, {a.Sp(I, J, K)})});
    t.notes.push_back("reconstructed table: e01, f01, e31, f31 transported from the A2 modules W(m) through "
                      "psi_m; e10, f10 fitted; all other root vectors are commutators");
}

void build_g2_printed(ActionTable& t, const Ctx& c) {
    G2Forms a(c);
    const RF one = q(1);
    set(t, "h01", {term({0, 0, 0}, a.h01(I, J))});
    set(t, "h21", {term({0, 0, 0}, a.h21(I, J))});
    set(t, "e01", {term({1, 0, 0}, a.Sp(I, J, K))});
    set(t, "f01", {term({-1, 0, 0}, a.Sm(I, K))});
    set(t, "e21", {term({1, 2, 1}, a.Tp(J + one, K))});
    set(t, "f21", {term({-1, -2, -1}, a.Tm(J - one, K - one))});
    set(t, "e10", {term({0, 1, 0}, q(3)), term({0, 1, 1}, a.Ap(J, K) * a.Sm(I, K))});
    set(t, "f10", {term({0, -1, -1}, q(-3)), term({0, -1, 0}, -a.Am(J, K) * a.Sp(I, J, K))});
    set(t, "e11", {term({1, 1, 0}, q(-3)), term({1, 1, 1}, a.Ap(J, K) * a.Sp(I + one, J + one, K))});
    set(t, "f11", {term({-1, -1, -1}, q(-3)), term({-1, -1, 0}, a.Am(J, K) * a.Sm(I + one, K + one))});
    set(t, "e31", {term({1, 3, 1}, q(1)), term({1, 3, 2}, -a.Bp(J, K) * a.Sm(I + one, K + one))});
    set(t, "f31", {term({-1, -3, -2}, q(1)), term({-1, -3, -1}, -a.Bm(J, K) * a.Sp(I + one, J + one, K))});
    set(t, "e32", {term({2, 3, 1}, q(-1)), term({2, 3, 2}, -a.Bp(J, K) * a.Sp(I + one, J + one, K))});
    set(t, "f32", {term({-2, -3, -2}, q(1)), term({-2, -3, -1}, a.Bm(J, K) * a.Sm(I + one, K + one))});
    t.notes.push_back("printed table; the e01 coefficient printed with two indices is read as S+_ijk, and "
                      "T+/T- use their composite forms");
}

// Defines missing root vectors as scaled commutators of defined ones.
void complete_with_commutators(ActionTable& t) {
    const auto& g = t.lie();
    const int n = g.dimension();
    std::vector<bool> defined(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) defined[x] = !t.gens[x].terms.empty();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int target = 0; target < n; ++target) {
            if (defined[target]) continue;
            for (int x = 0; x < n && !defined[target]; ++x) {
                if (!defined[x]) continue;
                for (int y = 0; y < n; ++y) {
                    if (!defined[y] || x == y) continue;
                    const auto& br = g.bracket[x][y];
                    if (br.size() == 1 && br[0].first == target) {
                        t.gens[target].composite = Composite{Rational(1) / br[0].second, x, y};
                        defined[target] = true;
                        progress = true;
                        break;
                    }
                }
            }
        }
    }
    for (int x = 0; x < n; ++x)
        if (!defined[x]) throw ModuleError("no action for generator " + g.gens[x].label);
}

}  // namespace

std::vector<Shift> ActionTable::shifts(int gen) const {
    const auto& a = gens[static_cast<std::size_t>(gen)];
    std::set<Shift> out;
    if (a.composite) {
        for (const auto& sx : shifts(a.composite->x))
            for (const auto& sy : shifts(a.composite->y)) out.insert(sx + sy);
    } else {
        for (const auto& t : a.terms) out.insert(t.shift);
    }
    return {out.begin(), out.end()};
}

Shift ActionTable::max_shift() const {
    Shift m{0, 0, 0};
    for (int x = 0; x < static_cast<int>(gens.size()); ++x) {
        if (gens[x].composite) {
            // A composite's images span the largest single-step displacement it produces.
            for (const auto& s : shifts(x))
                for (int c = 0; c < 3; ++c) m[c] = std::max(m[c], std::abs(s[c]));
            continue;
        }
        for (const auto& t : gens[x].terms)
            for (int c = 0; c < 3; ++c) m[c] = std::max(m[c], std::abs(t.shift[c]));
    }
    return m;
}

nlohmann::json ActionTable::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["parameters"] = params.to_json();
    const auto& g = lie();
    nlohmann::json gj = nlohmann::json::array();
    for (int x = 0; x < g.dimension(); ++x) {
        nlohmann::json e;
        e["label"] = g.gens[x].label;
        const auto& a = gens[x];
        if (a.composite) {
            e["composite"] = {{"scale", a.composite->scale.str()},
                              {"x", g.gens[a.composite->x].label},
                              {"y", g.gens[a.composite->y].label}};
        } else {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& t : a.terms)
                terms.push_back({{"shift", t.shift}, {"coeff", t.coeff.str()}});
            e["terms"] = terms;
        }
        gj.push_back(e);
    }
    j["generators"] = gj;
    j["max_shift"] = max_shift();
    j["notes"] = notes;
    return j;
}

ActionTable build_module(const ParameterPoint& p) {
    ActionTable t;
    t.params = make_parameters(p.family, p.values, p.checked);
    t.gens.resize(static_cast<std::size_t>(t.lie().dimension()));
    Ctx c{p.family, &t.params};
    switch (p.family) {
        case Family::A2: build_a2(t, c); break;
        case Family::C2_V1:
        case Family::C2_V2:
        case Family::C2_General: build_c2(t, c); break;
        case Family::G2: build_g2(t, c); break;
        case Family::G2_Printed: build_g2_printed(t, c); break;
    }
    complete_with_commutators(t);
    return t;
}

// ---------------------------------------------------------------- windows

bool LatticeWindow::contains(const Point& p) const {
    for (int c = 0; c < 3; ++c)
        if (p[c] < lo[c] || p[c] > hi[c]) return false;
    return true;
}

bool LatticeWindow::empty() const {
    for (int c = 0; c < 3; ++c)
        if (lo[c] > hi[c]) return true;
    return false;
}

std::size_t LatticeWindow::size() const {
    if (empty()) return 0;
    std::size_t n = 1;
    for (int c = 0; c < 3; ++c) n *= static_cast<std::size_t>(hi[c] - lo[c] + 1);
    return n;
}

std::size_t LatticeWindow::index(const Point& p) const {
    const std::size_t nj = static_cast<std::size_t>(hi[1] - lo[1] + 1);
    const std::size_t nk = static_cast<std::size_t>(hi[2] - lo[2] + 1);
    return (static_cast<std::size_t>(p[0] - lo[0]) * nj + static_cast<std::size_t>(p[1] - lo[1])) * nk +
           static_cast<std::size_t>(p[2] - lo[2]);
}

Point LatticeWindow::point(std::size_t idx) const {
    const std::size_t nj = static_cast<std::size_t>(hi[1] - lo[1] + 1);
    const std::size_t nk = static_cast<std::size_t>(hi[2] - lo[2] + 1);
    const int k = static_cast<int>(idx % nk);
    idx /= nk;
    const int j = static_cast<int>(idx % nj);
    const int i = static_cast<int>(idx / nj);
    return {lo[0] + i, lo[1] + j, lo[2] + k};
}

LatticeWindow LatticeWindow::expanded(const Shift& m) const {
    return {{lo[0] - m[0], lo[1] - m[1], lo[2] - m[2]}, {hi[0] + m[0], hi[1] + m[1], hi[2] + m[2]}};
}

LatticeWindow LatticeWindow::shrunk(const Shift& m) const {
    return {{lo[0] + m[0], lo[1] + m[1], lo[2] + m[2]}, {hi[0] - m[0], hi[1] - m[1], hi[2] - m[2]}};
}

std::vector<Point> LatticeWindow::points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (std::size_t t = 0; t < size(); ++t) out.push_back(point(t));
    return out;
}

nlohmann::json LatticeWindow::to_json() const { return {{"lo", lo}, {"hi", hi}}; }

LatticeWindow box_for(const ActionTable& t, const LatticeWindow& window, int degree) {
    Shift m = t.max_shift();
    for (auto& c : m) c *= degree + 1;
    return window.expanded(m);
}

LatticeVec basis_vector(const Point& p) { return LatticeVec{{p, Rational(1)}}; }

void vec_add(LatticeVec& y, const Rational& a, const LatticeVec& x) {
    if (a.is_zero()) return;
    for (const auto& [p, c] : x) {
        auto [it, inserted] = y.emplace(p, a * c);
        if (!inserted) {
            it->second += a * c;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

WindowEvaluator::WindowEvaluator(const ActionTable& table, LatticeWindow box, int threads)
    : table_(table), box_(box) {
    if (box_.empty()) throw ModuleError("empty window");
    const int n = table_.lie().dimension();
    const std::size_t size = box_.size();
    images_.assign(static_cast<std::size_t>(n), std::vector<Image>(size));
    std::vector<int> explicit_gens, composite_order;
    for (int x = 0; x < n; ++x) (table_.gens[x].composite ? composite_order : explicit_gens).push_back(x);

    parallel_for(size, threads, [&](std::size_t idx) {
        const Point p = box_.point(idx);
        const Bindings b{{Sym::i, Rational(p[0])}, {Sym::j, Rational(p[1])}, {Sym::k, Rational(p[2])}};
        for (int x : explicit_gens) {
            Image& img = images_[x][idx];
            for (const auto& t : table_.gens[x].terms) {
                try {
                    Rational v = rf_eval(t.coeff, b);
                    if (!v.is_zero()) img.terms.emplace_back(p + t.shift, v);
                } catch (const MathError& e) {
                    img.terms.clear();
                    img.error = "pole of " + table_.lie().gens[x].label + " at " + point_str(p);
                    break;
                }
            }
        }
    });

    // Composites depend on earlier generators; resolve in dependency order.
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int x : explicit_gens) done[x] = true;
    std::size_t remaining = composite_order.size();
    while (remaining > 0) {
        bool progress = false;
        for (int x : composite_order) {
            if (done[x]) continue;
            const Composite& c = *table_.gens[x].composite;
            if (!done[c.x] || !done[c.y]) continue;
            parallel_for(size, threads, [&](std::size_t idx) {
                const Point p = box_.point(idx);
                Image& img = images_[x][idx];
                LatticeVec acc;
                auto step = [&](int first, int second, const Rational& sign) -> bool {
                    const Image& a = images_[second][idx];
                    if (!a.error.empty()) {
                        img.error = a.error;
                        return false;
                    }
                    for (const auto& [q1, c1] : a.terms) {
                        if (!box_.contains(q1)) {
                            img.error = "margin exceeded at " + point_str(q1);
                            return false;
                        }
                        const Image& b2 = images_[first][box_.index(q1)];
                        if (!b2.error.empty()) {
                            img.error = b2.error;
                            return false;
                        }
                        for (const auto& [q2, c2] : b2.terms) vec_add(acc, sign * c1 * c2, basis_vector(q2));
                    }
                    return true;
                };
                if (!step(c.x, c.y, c.scale) || !step(c.y, c.x, -c.scale)) return;
                img.terms.assign(acc.begin(), acc.end());
                (void)p;
            });
            done[x] = true;
            --remaining;
            progress = true;
        }
        if (!progress) throw ModuleError("cyclic composite definitions");
    }
}

const WindowEvaluator::Image& WindowEvaluator::image(int gen, const Point& p) const {
    if (!box_.contains(p)) throw ModuleError("point " + point_str(p) + " outside the evaluation box");
    return images_[static_cast<std::size_t>(gen)][box_.index(p)];
}

LatticeVec WindowEvaluator::apply(int gen, const LatticeVec& v) const {
    LatticeVec out;
    for (const auto& [p, c] : v) {
        const Image& img = image(gen, p);
        if (!img.error.empty()) throw ModuleError(img.error);
        for (const auto& [q, d] : img.terms) {
            auto [it, inserted] = out.emplace(q, c * d);
            if (!inserted) {
                it->second += c * d;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

LatticeVec WindowEvaluator::apply_combination(const LinComb& x, const LatticeVec& v) const {
    LatticeVec out;
    for (const auto& [g, c] : x) vec_add(out, c, apply(g, v));
    return out;
}

LatticeVec WindowEvaluator::apply_word(const Mono& m, const LatticeVec& v) const {
    LatticeVec cur = v;
    for (auto it = m.rbegin(); it != m.rend() && !cur.empty(); ++it) cur = apply(*it, cur);
    return cur;
}

LatticeVec WindowEvaluator::apply_element(const UEAElement& x, const LatticeVec& v) const {
    // Shares the action of common right factors between monomials.
    std::map<Mono, LatticeVec> suffix;
    suffix.emplace(Mono{}, v);
    std::function<const LatticeVec&(const Mono&)> eval = [&](const Mono& s) -> const LatticeVec& {
        auto it = suffix.find(s);
        if (it != suffix.end()) return it->second;
        Mono rest(s.begin() + 1, s.end());
        LatticeVec r = apply(s.front(), eval(rest));
        return suffix.emplace(s, std::move(r)).first->second;
    };
    LatticeVec out;
    for (const auto& [m, c] : x.terms()) vec_add(out, c, eval(m));
    return out;
}

LatticeVec WindowEvaluator::apply_element(const UEAElement& x, const Point& p) const {
    return apply_element(x, basis_vector(p));
}

// ---------------------------------------------------------------- Gamma characters

std::vector<GammaGenerator> gamma_generators(AlgebraId id) {
    const auto& c = centralizer(id);
    std::vector<GammaGenerator> out;
    out.push_back({"h1", *c.symbol("h1")});
    out.push_back({"h2", *c.symbol("h2")});
    out.push_back({"z1", casimir(id, 1)});
    if (id != AlgebraId::G2) out.push_back({"z2", casimir(id, 2)});
    out.push_back({"c1", *c.symbol("c1")});
    return out;
}

GammaCharacter gamma_character(const WindowEvaluator& ev, const std::vector<GammaGenerator>& gens,
                               const Point& p) {
    GammaCharacter ch;
    ch.index = p;
    for (const auto& g : gens) {
        LatticeVec r = ev.apply_element(g.element, p);
        Rational v;
        for (const auto& [q, c] : r) {
            if (q != p) throw ModuleError(g.name + " is not diagonal at " + point_str(p));
            v = c;
        }
        ch.names.push_back(g.name);
        ch.values.push_back(v);
    }
    return ch;
}

GammaCharacter gamma_character(const ActionTable& t, const Point& p) {
    auto gens = gamma_generators(t.params.algebra());
    int degree = 0;
    for (const auto& g : gens) degree = std::max(degree, uea(t.params.algebra()).degree_of(g.element));
    WindowEvaluator ev(t, box_for(t, LatticeWindow{p, p}, degree));
    return gamma_character(ev, gens, p);
}

// ---------------------------------------------------------------- conditions

std::vector<ConditionForm> condition_forms(const ParameterPoint& pp) {
    const ParameterPoint p = make_parameters(pp.family, pp.values, pp.checked);
    Ctx c{p.family, &p};
    std::vector<ConditionForm> out;
    switch (p.algebra()) {
        case AlgebraId::A2: {
            A2Forms a(c);
            out.push_back({"S+_ijk", a.Sp(I, J, K)});
            out.push_back({"S-_ik", a.Sm(I, K)});
            auto fm = a.Qm_factors(J, K);
            auto fp = a.Qp_factors(K);
            for (int m = 0; m < 3; ++m)
                out.push_back({"T-_{j,k-1} - t" + std::to_string(m + 1), fm[static_cast<std::size_t>(m)], true});
            for (int m = 0; m < 3; ++m)
                out.push_back({"T+_{k-1} + t" + std::to_string(m + 1), fp[static_cast<std::size_t>(m)], true});
            break;
        }
        case AlgebraId::C2: {
            C2Forms a(c);
            out.push_back({"S+_ijk", a.Sp(I, J, K)});
            out.push_back({"S-_ik", a.Sm(I, K)});
            out.push_back({"T-_{j+1,k}", a.Tm(J + q(1), K)});
            out.push_back({"T+_{k-1}", a.Tp(K - q(1))});
            if (!p.at(Sym::upsilon).is_zero()) {
                out.push_back({"s_{j+1,k} + upsilon (Q+)", a.s(J + q(1), K) + a.u, true});
                out.push_back({"s_{j+1,k} - upsilon (Q-)", a.s(J + q(1), K) - a.u, true});
            }
            break;
        }
        case AlgebraId::G2: {
            G2Forms a(c);
            out.push_back({"S+_ijk", a.Sp(I, J, K)});
            out.push_back({"S-_ik", a.Sm(I, K)});
            out.push_back({"T+_jk", a.Tp(J, K)});
            out.push_back({"T-_jk", a.Tm(J, K)});
            break;
        }
    }
    return out;
}

bool has_integer_zero(const RationalFunction& f) {
    if (!f.den().is_constant()) throw ModuleError("condition form is not affine: " + f.str());
    const Polynomial& n = f.num();
    if (n.total_degree() > 1) throw ModuleError("condition form is not affine: " + f.str());
    for (Sym s : n.symbols())
        if (s != Sym::i && s != Sym::j && s != Sym::k) throw ModuleError("unbound parameter in " + f.str());
    Rational c;
    std::vector<Rational> coeffs;
    for (const auto& [e, v] : n.terms()) {
        int deg = 0;
        for (auto x : e) deg += x;
        if (deg == 0) c = v;
        else coeffs.push_back(v);
    }
    if (coeffs.empty()) return c.is_zero();
    mpz_class l = 1;
    for (const auto& v : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& v : coeffs) {
        mpz_class ni = (v * Rational(mpz_class(l))).num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ni.get_mpz_t());
    }
    const Rational scaled = c * Rational(mpz_class(l)) / Rational(mpz_class(g));
    return scaled.is_integer();
}

nlohmann::json ConditionResult::to_json() const {
    nlohmann::json j{{"holds", holds}};
    if (!holds) {
        j["witness"] = witness;
        j["form"] = witness_form;
    }
    if (precondition_failed) j["precondition_failed"] = true;
    return j;
}

ConditionResult torsion_free_condition(const ParameterPoint& p) {
    ConditionResult r;
    r.holds = true;
    for (const auto& f : condition_forms(p)) {
        if (f.simplicity_only) continue;
        if (has_integer_zero(f.form)) {
            r.holds = false;
            r.witness = f.name;
            r.witness_form = f.form.str();
            break;
        }
    }
    return r;
}

ConditionResult simplicity_condition(const ParameterPoint& p) {
    ConditionResult r = torsion_free_condition(p);
    if (!r.holds) {
        r.precondition_failed = true;
        return r;
    }
    for (const auto& f : condition_forms(p)) {
        if (!f.simplicity_only) continue;
        if (has_integer_zero(f.form)) {
            r.holds = false;
            r.witness = f.name;
            r.witness_form = f.form.str();
            break;
        }
    }
    return r;
}

ZeroScan scan_coefficient_zeros(const ActionTable& t, const LatticeWindow& w) {
    ZeroScan z;
    const auto& g = t.lie();
    for (int x = 0; x < g.dimension(); ++x) {
        if (g.gens[x].cartan) continue;
        const auto& terms = t.gens[x].terms;
        for (int n = 0; n < static_cast<int>(terms.size()); ++n) {
            const auto& term = terms[static_cast<std::size_t>(n)];
            if (term.factors.empty()) continue;
            for (const auto& p : w.points()) {
                const Bindings b{{Sym::i, Rational(p[0])}, {Sym::j, Rational(p[1])}, {Sym::k, Rational(p[2])}};
                try {
                    if (rf_eval(term.coeff, b).is_zero()) z.coefficient_zeros.emplace_back(g.gens[x].label, n, p);
                } catch (const MathError&) {
                    ++z.poles;
                }
                for (const auto& f : term.factors) {
                    if (rf_eval(f, b).is_zero()) {
                        z.predicted_zeros.emplace_back(g.gens[x].label, n, p);
                        break;
                    }
                }
            }
        }
    }
    z.agree = z.coefficient_zeros == z.predicted_zeros;
    return z;
}

// ---------------------------------------------------------------- splitting

nlohmann::json SplittingAnalysis::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["t"] = {t[0].str(), t[1].str(), t[2].str()};
    j["a3"] = a3.str();
    j["parameters"] = params.to_json();
    j["hyperplanes"] = {hyperplanes[0].str(), hyperplanes[1].str(), hyperplanes[2].str()};
    nlohmann::json dims = nlohmann::json::array();
    for (int d : slice_dims) dims.push_back(d < 0 ? nlohmann::json("infinite") : nlohmann::json(d));
    j["subquotient_slice_dims"] = dims;
    j["regions"] = {"k >= k1", "k >= k2", "k >= k3"};
    return j;
}

SplittingAnalysis splitting_analysis(const std::array<int, 3>& k, const Rational& a1, const Rational& a2) {
    if (!(k[0] > k[1] && k[1] > k[2])) throw ModuleError("splitting roots must satisfy k1 > k2 > k3");
    SplittingAnalysis s;
    s.k = k;
    const Rational sum(k[0] + k[1] + k[2]);
    for (int m = 0; m < 3; ++m) s.t[static_cast<std::size_t>(m)] = sum / Rational(3) - Rational(k[static_cast<std::size_t>(m)]);
    s.a3 = Rational(3) - (Rational(2) * sum + a1 + Rational(2) * a2) / Rational(3);
    s.params = a2_parameters(a1, a2, s.a3, s.t[0], s.t[1]);
    Ctx c{Family::A2, &s.params};
    A2Forms f(c);
    auto fp = f.Qp_factors(K);
    for (int m = 0; m < 3; ++m) s.hyperplanes[static_cast<std::size_t>(m)] = fp[static_cast<std::size_t>(m)];
    s.slice_dims = {-1, k[0] - k[1], k[1] - k[2], -1};
    return s;
}

RegionPredicate splitting_region(const SplittingAnalysis& s, int m) {
    RF f = s.hyperplanes.at(static_cast<std::size_t>(m));
    return [f](const Point& p) {
        const Bindings b{{Sym::i, Rational(p[0])}, {Sym::j, Rational(p[1])}, {Sym::k, Rational(p[2])}};
        return rf_eval(f, b).sign() >= 0;
    };
}

Case1Analysis case1_analysis(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& t1,
                             const Rational& t2) {
    const Rational s = a1 + a3;
    if (!s.is_integer() || (s.num() % 2) == 0) throw ModuleError("case 1 requires a1 + a3 odd");
    Case1Analysis c;
    c.params = a2_parameters(a1, a2, a3, t1, t2);
    Ctx ctx{Family::A2, &c.params};
    c.hyperplane = A2Forms(ctx).Sp(I, J, K);
    return c;
}

// ---------------------------------------------------------------- branching

Point BranchingMap::psi(const Point& w) const { return {w[0] + w[1], 3 * w[1] + m, w[2] + w[1]}; }

nlohmann::json BranchingMap::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["g2"] = g2.to_json();
    j["a2"] = a2.to_json();
    j["a2_printed"] = a2_printed.to_json();
    j["psi"] = "w_ijk -> v_{i+j, 3j+" + std::to_string(m) + ", k+j}";
    nlohmann::json th = nlohmann::json::object();
    for (const auto& [a, b] : theta) th[a] = b;
    j["theta"] = th;
    return j;
}

BranchingMap branching_map(int m, const ParameterPoint& g2) {
    if (m < 0 || m > 2) throw ModuleError("branching index must be 0, 1 or 2");
    if (g2.algebra() != AlgebraId::G2) throw ModuleError("branching needs a G2 parameter point");
    BranchingMap b;
    b.m = m;
    b.g2 = make_parameters(g2.family, g2.values, g2.checked);
    const Rational a1 = b.g2.at(Sym::a1), a2 = b.g2.at(Sym::a2), a3 = b.g2.at(Sym::a3);
    const Rational am1 = a1 - Rational(m);
    const Rational am2 = (a2 - a1) / Rational(2) + Rational(m);
    // t = (0, 1/3, -1/3) gives xi = -8/9 and mu = 8/9.
    b.a2 = a2_parameters(am1, am2, a3 - Rational(m), Rational(0), Rational(1, 3));
    b.a2_printed = a2_parameters(am1, am2, a3, Rational(0), Rational(1, 3));
    b.theta = tables::g2_embedding();
    return b;
}

}  // namespace gtp
