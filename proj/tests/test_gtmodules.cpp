#include "gtp/gtmodules.hpp"
#include "gtp/tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gtp;

namespace {

const Rational a1(1, 5), a2(1, 7), a3(1, 2);

ParameterPoint a2_point() { return a2_parameters(a1, a2, a3, Rational(1, 3), Rational(1, 11)); }

RationalFunction family_form(Family f, const std::string& name, const ParameterPoint& p) {
    for (const auto& nf : coefficient_family(f))
        if (nf.name == name) return nf.f.partial_eval(p.values);
    throw std::runtime_error("no form " + name);
}

const GeneratorAction& gen(const ActionTable& t, const std::string& label) {
    return t.gens[static_cast<std::size_t>(t.lie().index(label))];
}

Bindings at(const Point& p) { return {{Sym::i, Rational(p[0])}, {Sym::j, Rational(p[1])}, {Sym::k, Rational(p[2])}}; }

}  // namespace

// ---------------------------------------------------------------- parameters

TEST_CASE("A2 parameters derive t3, xi and mu") {
    const auto p = a2_point();
    const Rational t1(1, 3), t2(1, 11), t3 = -t1 - t2;
    CHECK(p.at(Sym::t3) == t3);
    // t1, t2, t3 are the roots of t^3 - (xi + 1) t + mu + xi.
    for (const Rational& t : {t1, t2, t3})
        CHECK((t * t * t - (p.at(Sym::xi) + Rational(1)) * t + p.at(Sym::mu) + p.at(Sym::xi)).is_zero());
}

TEST_CASE("family constraints are enforced") {
    CHECK_THROWS_AS(a2_parameters(a1, a2, Rational(2), Rational(1, 3), Rational(1, 11)), ModuleError);
    CHECK_THROWS_AS(g2_parameters(Family::G2, a1, a2, Rational(-1)), ModuleError);
    CHECK_THROWS_AS(c2_parameters(Family::C2_V2, a1, a2, a3, Rational(2, 9), Rational(1, 3)), ModuleError);
    const auto v1 = c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3));
    CHECK(v1.at(Sym::a4) == a3);
    CHECK(v1.at(Sym::xi) == Rational(-40, 9));
    Bindings b{{Sym::a1, a1}, {Sym::a2, a2}, {Sym::a3, Rational(1)}};
    CHECK_NOTHROW(make_parameters(Family::G2, b, false));
}

TEST_CASE("xi = -4 forces upsilon in {0, 1}") {
    CHECK(upsilon_roots(Rational(-4)) == std::vector<Rational>{Rational(0), Rational(1)});
    for (const auto& u : upsilon_roots(Rational(-4)))
        CHECK(c2_parameters(Family::C2_V2, a1, a2, a3, Rational(2, 9), u).at(Sym::xi) == Rational(-4));
    CHECK(upsilon_roots(Rational(-40, 9)) == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
    CHECK(upsilon_roots(Rational(1)).empty());
}

TEST_CASE("generic sampling avoids degenerate hyperplanes (property)") {
    std::mt19937_64 rng(42);
    for (Family f : {Family::A2, Family::C2_V1, Family::C2_V2, Family::G2}) {
        std::vector<std::string> log;
        for (int n = 0; n < 5; ++n) {
            const auto p = sample_generic_parameters(f, rng, &log);
            CHECK_FALSE(p.at(Sym::a3).is_integer());
            CHECK(simplicity_condition(p).holds);
            if (f == Family::C2_V2) CHECK(p.at(Sym::xi) == Rational(-4));
        }
        for (const auto& line : log) CHECK(line.rfind("rejected", 0) == 0);
    }
}

TEST_CASE("sampling is reproducible from the seed") {
    std::mt19937_64 r1(9), r2(9);
    CHECK(sample_generic_parameters(Family::G2, r1).to_json() == sample_generic_parameters(Family::G2, r2).to_json());
}

// ---------------------------------------------------------------- coefficient tables

TEST_CASE("doubly defined coefficients agree except the known misprints") {
    for (Family f : {Family::A2, Family::C2_V1, Family::G2}) {
        for (const auto& c : closed_form_pairs(f)) {
            INFO(c.name);
            CHECK(rf_simplify_equal(c.composite, c.expanded) == c.printed_agree);
        }
    }
}

TEST_CASE("A2 h01 acts by a1 + 2i - j") {
    const auto t = build_module(a2_point());
    const auto& h = gen(t, "h01");
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0].shift == Shift{0, 0, 0});
    CHECK(h.terms[0].coeff == parse_rf("1/5 + 2*i - j"));
}

TEST_CASE("C2 e21 is a single term 2 T-_{j+1,k}") {
    const auto p = c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3));
    const auto t = build_module(p);
    const auto& e = gen(t, "e21");
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].shift == Shift{1, 2, 1});
    CHECK(e.terms[0].coeff == Rational(2) * family_form(Family::C2_V1, "T-_jk", p).shifted(Sym::j, Rational(1)));
}

TEST_CASE("printed G2 f21 is T-_{j-1,k-1} with shift (-1,-2,-1)") {
    const auto p = g2_parameters(Family::G2_Printed, a1, a2, a3);
    const auto t = build_module(p);
    const auto& f = gen(t, "f21");
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].shift == Shift{-1, -2, -1});
    CHECK(f.terms[0].coeff ==
          family_form(Family::G2_Printed, "T-_jk", p).shifted(Sym::j, Rational(-1)).shifted(Sym::k, Rational(-1)));
}

TEST_CASE("Cartan generators have zero shift and shifts are bounded") {
    std::vector<ActionTable> tables;
    tables.push_back(build_module(a2_point()));
    tables.push_back(build_module(c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3))));
    tables.push_back(build_module(g2_parameters(Family::G2, a1, a2, a3)));
    for (const auto& t : tables) {
        for (int h : t.lie().cartan_indices()) CHECK(t.shifts(h) == std::vector<Shift>{{0, 0, 0}});
        const Shift m = t.max_shift();
        CHECK(m[0] <= 2);
        CHECK(m[1] <= 3);
        CHECK(m[2] <= 2);
    }
    CHECK(tables[2].max_shift() == Shift{2, 3, 2});
}

TEST_CASE("module dump carries coefficients as strings") {
    const auto j = build_module(a2_point()).to_json();
    CHECK(j["schema_version"] == 1);
    CHECK(j["generators"].size() == 8);
    CHECK(j["generators"][0]["terms"][0]["coeff"].is_string());
}

// ---------------------------------------------------------------- windows and application

TEST_CASE("window indexing round trips") {
    const LatticeWindow w{{-1, 0, 2}, {1, 3, 4}};
    CHECK(w.size() == 3 * 4 * 3);
    for (std::size_t n = 0; n < w.size(); ++n) CHECK(w.index(w.point(n)) == n);
    CHECK(w.expanded({1, 1, 1}).size() == 5 * 6 * 5);
    CHECK(LatticeWindow::cube(0).size() == 1);
    CHECK(w.shrunk({2, 0, 0}).empty());
}

TEST_CASE("A2 e01 on v_000 gives (a1 + a3 - 1)/2 v_100") {
    const auto t = build_module(a2_point());
    WindowEvaluator ev(t, LatticeWindow::cube(2));
    const auto r = ev.apply(t.lie().index("e01"), basis_vector({0, 0, 0}));
    CHECK(r == LatticeVec{{{1, 0, 0}, (a1 + a3 - Rational(1)) / Rational(2)}});
}

TEST_CASE("Cartan generators act diagonally") {
    const auto t = build_module(g2_parameters(Family::G2, a1, a2, a3));
    WindowEvaluator ev(t, LatticeWindow::cube(2));
    for (int h : t.lie().cartan_indices())
        for (const auto& p : LatticeWindow::cube(2).points()) {
            const auto r = ev.apply(h, basis_vector(p));
            CHECK(r.size() <= 1);
            if (!r.empty()) CHECK(r.begin()->first == p);
        }
}

TEST_CASE("application never truncates silently") {
    const auto t = build_module(a2_point());
    WindowEvaluator ev(t, LatticeWindow::cube(1));
    CHECK_THROWS_AS(ev.apply(t.lie().index("e01"), basis_vector({30, 0, 0})), ModuleError);
    CHECK_THROWS_AS(ev.image(t.lie().index("f11"), {0, 0, -30}), ModuleError);
}

TEST_CASE("degenerate parameters produce explicit poles") {
    Bindings b{{Sym::a1, a1}, {Sym::a2, a2}, {Sym::a3, Rational(1)}};
    const auto t = build_module(make_parameters(Family::G2, b, false));
    WindowEvaluator ev(t, LatticeWindow::cube(2));
    // s_{00} = a3 - 1 = 0.
    CHECK_THROWS_AS(ev.apply(t.lie().index("e10"), basis_vector({0, 0, 0})), ModuleError);
}

TEST_CASE("C2 e01 f01 acts by S-_ik S+_{i-1,j,k}") {
    const auto p = c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3));
    const auto t = build_module(p);
    WindowEvaluator ev(t, LatticeWindow::cube(3));
    const UEAElement x = uea(AlgebraId::C2).word_to_element("e01 f01");
    for (const auto& q : LatticeWindow::cube(1).points()) {
        const Rational i(q[0]), j(q[1]), k(q[2]);
        const Rational expected = Rational(1, 4) * (-a1 + a3 - Rational(2) * i + Rational(2) * k - Rational(1)) *
                                  (a1 + a3 + Rational(2) * i - Rational(2) * j + Rational(2) * k - Rational(3));
        CHECK(ev.apply_element(x, q) == LatticeVec{{q, expected}});
    }
}

TEST_CASE("evaluation does not depend on the thread count") {
    const auto t = build_module(g2_parameters(Family::G2, a1, a2, a3));
    WindowEvaluator e1(t, LatticeWindow::cube(3), 1), e4(t, LatticeWindow::cube(3), 4);
    for (int x = 0; x < t.lie().dimension(); ++x)
        for (const auto& p : LatticeWindow::cube(2).points()) {
            CHECK(e1.image(x, p).terms == e4.image(x, p).terms);
            CHECK(e1.image(x, p).error == e4.image(x, p).error);
        }
}

// ---------------------------------------------------------------- Gamma characters

TEST_CASE("A2 z1 is xi on every index") {
    const auto p = a2_point();
    const auto t = build_module(p);
    for (const auto& q : LatticeWindow::cube(1).points()) {
        const auto ch = gamma_character(t, q);
        REQUIRE(ch.names[2] == "z1");
        CHECK(ch.values[2] == p.at(Sym::xi));
        CHECK(ch.values[0] == a1 + Rational(2 * q[0] - q[1]));
    }
}

TEST_CASE("equal (i, j) with distinct k give distinct c1 values") {
    const auto t = build_module(c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3)));
    const auto c0 = gamma_character(t, {0, 1, 0}), c1 = gamma_character(t, {0, 1, 2});
    CHECK(c0.values[0] == c1.values[0]);
    CHECK(c0.values[1] == c1.values[1]);
    CHECK(c0.values.back() != c1.values.back());
}

// ---------------------------------------------------------------- conditions

TEST_CASE("integer zeros of affine forms") {
    CHECK(has_integer_zero(parse_rf("i - j + 1/2*k")));         // k = 2(j - i)
    CHECK_FALSE(has_integer_zero(parse_rf("2*i + 4*j + 1")));  // 1/gcd not integral
    CHECK(has_integer_zero(parse_rf("1/3*i - 5/3")));
    CHECK_FALSE(has_integer_zero(parse_rf("1/3*i + 2/3*j + 1/2")));
    CHECK(has_integer_zero(RationalFunction(0)));
    CHECK_FALSE(has_integer_zero(RationalFunction(3)));
    CHECK_THROWS_AS(has_integer_zero(parse_rf("i*j")), ModuleError);
}

TEST_CASE("A2 with a1 + a3 odd fails torsion freeness at S+") {
    const auto p = a2_parameters(Rational(1, 2), a2, Rational(1, 2), Rational(1, 3), Rational(1, 11));
    const auto r = torsion_free_condition(p);
    CHECK_FALSE(r.holds);
    CHECK(r.witness == "S+_ijk");
    CHECK(simplicity_condition(p).precondition_failed);
}

TEST_CASE("generic A2 and C2 points are torsion free and simple") {
    CHECK(torsion_free_condition(a2_point()).holds);
    CHECK(simplicity_condition(a2_point()).holds);
    const auto c2 = c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3));
    CHECK(simplicity_condition(c2).holds);
}

TEST_CASE("A2 splitting roots make simplicity fail") {
    const auto s = splitting_analysis({2, 0, -1}, a1, a2);
    const auto r = simplicity_condition(s.params);
    CHECK(torsion_free_condition(s.params).holds);
    CHECK_FALSE(r.holds);
    CHECK(r.witness.rfind("T+_{k-1}", 0) == 0);
}

TEST_CASE("G2 simplicity adds nothing to torsion freeness") {
    const auto p = g2_parameters(Family::G2, a1, a2, a3);
    for (const auto& f : condition_forms(p)) CHECK_FALSE(f.simplicity_only);
    CHECK(simplicity_condition(p).holds == torsion_free_condition(p).holds);
}

TEST_CASE("coefficient zeros lie on the predicted hyperplanes") {
    const auto s = splitting_analysis({2, 0, -1}, a1, a2);
    const auto z = scan_coefficient_zeros(build_module(s.params), LatticeWindow::cube(3));
    CHECK(z.agree);
    CHECK_FALSE(z.coefficient_zeros.empty());
    const auto g = scan_coefficient_zeros(build_module(a2_point()), LatticeWindow::cube(3));
    CHECK(g.coefficient_zeros.empty());
}

// ---------------------------------------------------------------- splitting and branching

TEST_CASE("splitting analysis for k = (2, 0, -1)") {
    const auto s = splitting_analysis({2, 0, -1}, a1, a2);
    CHECK(s.t == std::array<Rational, 3>{Rational(-5, 3), Rational(1, 3), Rational(4, 3)});
    CHECK(s.a3 == Rational(3) - (Rational(2) + a1 + Rational(2) * a2) / Rational(3));
    CHECK(s.slice_dims == std::array<int, 4>{-1, 2, 1, -1});
    for (int m = 0; m < 3; ++m) {
        const auto region = splitting_region(s, m);
        CHECK(region({0, 0, s.k[static_cast<std::size_t>(m)]}));
        CHECK_FALSE(region({0, 0, s.k[static_cast<std::size_t>(m)] - 1}));
    }
    CHECK_THROWS_AS(splitting_analysis({1, 1, 0}, a1, a2), ModuleError);
}

TEST_CASE("case 1 needs a1 + a3 odd") {
    CHECK_THROWS_AS(case1_analysis(a1, a2, a3, Rational(1, 3), Rational(1, 11)), ModuleError);
    const auto c = case1_analysis(Rational(1, 2), a2, Rational(1, 2), Rational(1, 3), Rational(1, 11));
    CHECK(c.hyperplane == parse_rf("i - j + k"));
}

TEST_CASE("branching index map and generator table") {
    const auto g2 = g2_parameters(Family::G2, a1, a2, a3);
    CHECK(branching_map(0, g2).psi({0, 0, 0}) == Point{0, 0, 0});
    const auto b1 = branching_map(1, g2);
    CHECK(b1.psi({1, 1, 0}) == Point{2, 4, 1});
    CHECK(b1.a2.at(Sym::a1) == a1 - Rational(1));
    CHECK(b1.a2.at(Sym::a2) == (a2 - a1) / Rational(2) + Rational(1));
    CHECK(b1.a2.at(Sym::xi) == Rational(-8, 9));
    CHECK(b1.a2.at(Sym::mu) == Rational(8, 9));
    bool found = false;
    for (const auto& [hat, lab] : b1.theta)
        if (hat == "h10") found = lab == "h31";
    CHECK(found);
    CHECK_THROWS_AS(branching_map(3, g2), ModuleError);
}
