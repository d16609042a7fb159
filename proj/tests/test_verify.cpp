#include "gtp/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gtp;

namespace {

const Rational a1(1, 5), a2(1, 7), a3(1, 2);
const LatticeWindow kSmall = LatticeWindow::cube(1);

bool all_pass(const Suite& s) {
    for (const auto& c : s.cases)
        if (c.status != Status::Pass) return false;
    return true;
}

}  // namespace

TEST_CASE("suite verdicts follow the control flag") {
    Suite s{"x", false, false, {{"a", Status::Pass, 1, nullptr}}};
    CHECK(s.passed());
    s.cases.push_back({"b", Status::Fail, 0, nlohmann::json{{"point", {0, 0, 0}}}});
    CHECK_FALSE(s.passed());
    s.control = true;
    CHECK(s.passed());
    VerificationReport r;
    r.suites = {s, Suite{"info", false, true, {{"c", Status::Fail, 0, nullptr}}}};
    CHECK(r.ok());
}

TEST_CASE("A2 brackets hold for all 28 pairs") {
    const auto t = build_module(a2_parameters(a1, a2, a3, Rational(1, 3), Rational(1, 11)));
    const auto s = check_brackets(t, LatticeWindow::cube(2));
    CHECK(s.cases.size() == 28);
    CHECK(all_pass(s));
    for (const auto& c : s.cases) CHECK(c.count == LatticeWindow::cube(2).size());
}

TEST_CASE("module brackets hold at sampled generic points (property)") {
    std::mt19937_64 rng(17);
    for (Family f : {Family::A2, Family::C2_V1, Family::C2_V2, Family::G2}) {
        const auto p = sample_generic_parameters(f, rng);
        INFO(p.to_json().dump());
        CHECK(check_brackets(build_module(p), kSmall).passed());
        CHECK(check_weights(build_module(p), kSmall).passed());
    }
}

TEST_CASE("C2 outside V1 and V2 violates some bracket") {
    const auto p = c2_parameters(Family::C2_General, a1, a2, a3, Rational(2, 9), Rational(1, 3));
    const auto s = check_brackets(build_module(p), kSmall, 1, true);
    CHECK(s.any_fail());
    CHECK(s.passed());
    for (const auto& c : s.cases)
        if (c.status == Status::Fail) CHECK(c.witness.contains("point"));
}

TEST_CASE("printed G2 table violates brackets; reconstructed table satisfies them") {
    const auto printed = check_brackets(build_module(g2_parameters(Family::G2_Printed, a1, a2, a3)), kSmall);
    CHECK(printed.any_fail());
    const auto fixed = check_brackets(build_module(g2_parameters(Family::G2, a1, a2, a3)), kSmall);
    CHECK(all_pass(fixed));
}

TEST_CASE("Casimir scalars on A2 and C2 modules") {
    const auto a = check_casimirs(build_module(a2_parameters(a1, a2, a3, Rational(1, 3), Rational(1, 11))), kSmall);
    CHECK(all_pass(a));
    const auto v1 = check_casimirs(build_module(c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3))), kSmall);
    CHECK(all_pass(v1));
    for (const Rational u : {Rational(0), Rational(1)}) {
        const auto p = c2_parameters(Family::C2_V2, a1, a2, a3, Rational(2, 9), u);
        const auto v2 = check_casimirs(build_module(p), kSmall);
        CHECK(all_pass(v2));
        CHECK(expected_casimirs(p)[0].value == Rational(-1271, 324));
    }
}

TEST_CASE("G2 z1 acts by -14/3; the embedded A2 Casimirs by -8/9 and 8/9") {
    const auto t = build_module(g2_parameters(Family::G2, a1, a2, a3));
    const auto s = check_casimirs(t, kSmall);
    REQUIRE(s.cases.size() == 3);
    CHECK(s.cases[0].status == Status::Fail);
    CHECK(s.cases[0].witness["actual"] == "-14/3");
    CHECK(s.cases[0].witness["observed_values"].size() == 1);
    CHECK(s.cases[1].status == Status::Pass);
    CHECK(s.cases[2].status == Status::Pass);
    const auto corrected = check_scalars(t, kSmall, {{"z1", casimir(AlgebraId::G2, 1), Rational(-14, 3), "-14/3"}});
    CHECK(all_pass(corrected));
}

TEST_CASE("Gamma spectrum separates for a3 not in Z and collides for a3 in Z") {
    const auto good = build_module(c2_parameters(Family::C2_V1, a1, a2, a3, a3, Rational(1, 3)));
    CHECK(all_pass(check_gamma_spectrum(good, LatticeWindow::cube(2))));
    Bindings b{{Sym::a1, a1}, {Sym::a2, a2}, {Sym::a3, Rational(1)}, {Sym::upsilon, Rational(1, 3)}};
    const auto bad = build_module(make_parameters(Family::C2_V1, b, false));
    const auto s = check_gamma_spectrum(bad, LatticeWindow::cube(2), 1, true);
    CHECK(s.any_fail());
    CHECK(s.passed());
    CHECK(s.cases[0].witness.contains("first"));
}

TEST_CASE("Gamma spectrum on a single-k window passes trivially") {
    const auto t = build_module(g2_parameters(Family::G2, a1, a2, a3));
    CHECK(all_pass(check_gamma_spectrum(t, LatticeWindow{{-1, -1, 0}, {1, 1, 0}})));
}

TEST_CASE("splitting regions are submodules with slice dimensions 2 and 1") {
    const auto s = check_splitting(splitting_analysis({2, 0, -1}, a1, a2), LatticeWindow::cube(3));
    CHECK(all_pass(s));
}

TEST_CASE("case 1: the side S+ <= 0 is closed") {
    const auto c = case1_analysis(Rational(1, 2), a2, Rational(1, 2), Rational(1, 3), Rational(1, 11));
    CHECK(all_pass(check_case1(c, LatticeWindow::cube(3))));
}

TEST_CASE("generic modules have no proper half-space submodule") {
    const auto t = build_module(a2_parameters(a1, a2, a3, Rational(1, 3), Rational(1, 11)));
    const auto s = check_submodule_closure(t, kSmall, [](const Point& p) { return p[2] >= 0; }, "k >= 0", true);
    CHECK(s.any_fail());
    const auto whole = check_submodule_closure(t, kSmall, [](const Point&) { return true; }, "all");
    CHECK(all_pass(whole));
}

TEST_CASE("branching intertwines for m = 0, 1, 2") {
    const auto g2 = g2_parameters(Family::G2, a1, a2, a3);
    for (int m = 0; m < 3; ++m) {
        const auto s = check_branching(g2, m, kSmall);
        INFO("m = " << m);
        CHECK(s.cases.size() == 10);
        CHECK(all_pass(s));
    }
}

TEST_CASE("branching with the unshifted third parameter fails for m > 0") {
    const auto g2 = g2_parameters(Family::G2, a1, a2, a3);
    CHECK(all_pass(check_branching(g2, 0, kSmall, 1, true)));
    CHECK(check_branching(g2, 1, kSmall, 1, true).any_fail());
}

TEST_CASE("relation table suites") {
    CHECK(check_relation_tables(AlgebraId::A2).passed());
    CHECK(check_relation_tables(AlgebraId::C2).passed());
}

TEST_CASE("conditions suite agrees with the scan") {
    const auto t = build_module(g2_parameters(Family::G2, a1, a2, a3));
    CHECK(all_pass(check_conditions(t, LatticeWindow::cube(2))));
}

TEST_CASE("reports are deterministic and thread independent") {
    const auto p = c2_parameters(Family::C2_V2, a1, a2, a3, Rational(2, 9), Rational(1));
    VerifyOptions o1{kSmall, 1, 5}, o3{kSmall, 3, 5};
    const auto r1 = verify_module(p, o1).to_json(), r3 = verify_module(p, o3).to_json();
    CHECK(r1 == r3);
    CHECK(r1["meta"]["schema_version"] == kReportSchemaVersion);
    CHECK(r1["meta"]["tool_version"] == kToolVersion);
    CHECK(r1["meta"]["seed"] == 5);
    CHECK(r1["summary"]["ok"] == true);
    CHECK(verify_module(p, o1).text().find("summary:") != std::string::npos);
}

TEST_CASE("every failing case carries a witness") {
    const auto r = verify_module(g2_parameters(Family::G2_Printed, a1, a2, a3), {kSmall, 1, std::nullopt});
    for (const auto& s : r.suites)
        for (const auto& c : s.cases)
            if (c.status == Status::Fail) CHECK_FALSE(c.witness.is_null());
    CHECK(r.ok());  // the bracket suite is a control for the printed table
}
