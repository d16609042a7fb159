// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--threads N] [--expect-fail 5,7] [--json FILE]
// Without --expect-fail the exit status is 0 iff every criterion passes. With it, the
// exit status is 0 iff the failing criteria are exactly the listed ones.

#include "gtp/centralizer.hpp"
#include "gtp/gtmodules.hpp"
#include "gtp/tables.hpp"
#include "gtp/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace gtp;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

int g_threads = 1;
const LatticeWindow kWindow = LatticeWindow::cube(3);

std::string first_failure(const Suite& s) {
    for (const auto& c : s.cases)
        if (c.status == Status::Fail) return s.name + " " + c.case_id + " " + c.witness.dump();
    return s.name;
}

Outcome enumeration() {
    const std::array<std::size_t, 3> expected{5, 12, 64};
    std::ostringstream os;
    bool ok = true;
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        const auto lists = enumerate_indecomposable(g).lists;
        std::set<MultVec> got(lists.begin(), lists.end()), printed;
        if (id == AlgebraId::G2) {
            for (const auto& p : centralizer(id).perfect())
                if (!p.cartan) printed.insert(p.list);
        } else {
            const auto alpha = tables::alpha_roots(id);
            for (const auto& l : tables::printed_lists(id)) {
                std::vector<Root> rs;
                for (int a : l) rs.push_back(alpha[static_cast<std::size_t>(a - 1)]);
                printed.insert(list_from_roots(g, rs));
            }
        }
        const std::size_t want = expected[static_cast<std::size_t>(id)];
        const bool match = lists.size() == want && got.size() == lists.size() && got == printed;
        ok = ok && match;
        os << algebra_name(id) << "=" << lists.size() << (match ? "" : "(mismatch)") << " ";
    }
    return {ok, os.str()};
}

Outcome primitivity() {
    std::ostringstream os;
    bool ok = true;
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        std::size_t good = 0, total = 0;
        for (const auto& l : enumerate_indecomposable(g).lists) {
            ++total;
            const auto r = is_primitive(g, list_roots(g, l));
            // Re-check the witness independently of the search.
            int pos = 0, neg = 0;
            for (const auto& root : list_roots(g, l)) (weyl_apply(g, r.witness, root).positive() ? pos : neg)++;
            if (r.primitive && (pos == 1 || neg == 1)) ++good;
        }
        ok = ok && good == total;
        os << algebra_name(id) << " " << good << "/" << total << " ";
    }
    return {ok, os.str()};
}

Outcome relation_tables() {
    std::ostringstream os;
    bool ok = true;
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2}) {
        const Suite s = check_relation_tables(id);
        std::size_t errata = 0;
        for (const auto& c : s.cases)
            if (c.witness.is_object() && c.witness.value("erratum", false)) ++errata;
        ok = ok && s.passed();
        os << algebra_name(id) << ": " << s.cases.size() << " checks, " << errata << " errata"
           << (s.passed() ? "" : " FAILED " + first_failure(s)) << "; ";
    }
    return {ok, os.str()};
}

Outcome semi_perfect_basis() {
    std::ostringstream os;
    bool ok = true;
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2}) {
        const Centralizer& c = centralizer(id);
        const auto basis = c.semi_perfect_basis(6);
        const auto standard = c.weight_zero_standard(6);
        // omega(y) = X_y + lower degree with distinct X_y: triangular, hence independent.
        std::set<Mono> leads;
        bool triangular = true;
        for (const auto& y : basis) {
            const Mono lead = c.leading_monomial(y);
            const UEAElement top = c.omega(y)->homogeneous_part(c.degree(y));
            if (top != UEAElement::monomial(lead)) triangular = false;
            leads.insert(lead);
        }
        const std::set<Mono> std_set(standard.begin(), standard.end());
        const bool match = basis.size() == standard.size() && leads.size() == basis.size() && leads == std_set;
        ok = ok && match && triangular;
        os << algebra_name(id) << " " << basis.size() << "/" << standard.size() << (triangular ? "" : " not triangular")
           << " ";
    }
    return {ok, os.str()};
}

Outcome casimir_centrality() {
    std::ostringstream os;
    bool ok = true;
    const std::vector<std::pair<AlgebraId, int>> items{
        {AlgebraId::A2, 1}, {AlgebraId::A2, 2}, {AlgebraId::C2, 1}, {AlgebraId::C2, 2}, {AlgebraId::G2, 1}};
    for (const auto& [id, n] : items) {
        const auto& info = casimir_info(id, n);
        ok = ok && info.printed_central;
        os << algebra_name(id) << " z" << n << ":" << (info.printed_central ? "central" : "NOT central");
        if (!info.printed_central)
            os << "(fails with " << info.printed_failures.size() << " generators; corrected form central="
               << (info.central ? "yes" : "no") << ", " << info.mismatches << " coefficients differ)";
        os << " ";
    }
    return {ok, os.str()};
}

std::vector<ParameterPoint> generic_points(Family f, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ParameterPoint> out;
    for (int k = 0; k < n; ++k) out.push_back(sample_generic_parameters(f, rng));
    return out;
}

Outcome module_axioms() {
    std::ostringstream os;
    bool ok = true;
    std::uint64_t seed = 1;
    for (Family f : {Family::A2, Family::C2_V1, Family::C2_V2, Family::G2}) {
        int good = 0;
        for (const auto& p : generic_points(f, 3, seed++)) {
            const Suite s = check_brackets(build_module(p), kWindow, g_threads);
            if (s.passed()) ++good;
            else os << "[" << p.to_json().dump() << " " << first_failure(s) << "] ";
        }
        ok = ok && good == 3;
        os << family_name(f) << " " << good << "/3 ";
    }
    const auto ctrl = c2_parameters(Family::C2_General, Rational(1, 5), Rational(1, 7), Rational(1, 2), Rational(2, 9),
                                    Rational(1, 3));
    const Suite s = check_brackets(build_module(ctrl), kWindow, g_threads, true);
    std::size_t bad = 0;
    for (const auto& c : s.cases) bad += c.status == Status::Fail;
    ok = ok && s.passed();
    os << "control C2 a3!=a4, xi=" << ctrl.at(Sym::xi).str() << ": " << bad << " failing pairs";
    return {ok, os.str()};
}

Outcome casimir_eigenvalues() {
    std::ostringstream os;
    bool ok = true;
    std::uint64_t seed = 101;
    for (Family f : {Family::A2, Family::C2_V1, Family::C2_V2, Family::G2}) {
        const auto p = generic_points(f, 1, seed++).front();
        const Suite s = check_casimirs(build_module(p), kWindow, g_threads);
        for (const auto& c : s.cases) {
            if (f == Family::G2 && c.case_id.rfind("z1", 0) != 0) continue;  // criterion is about z1
            const bool good = c.status == Status::Pass;
            ok = ok && good;
            os << family_name(f) << " " << c.case_id << ":" << (good ? "ok" : "FAIL");
            if (!good) os << c.witness.dump();
            os << " ";
        }
    }
    return {ok, os.str()};
}

Outcome gamma_spectrum() {
    std::ostringstream os;
    bool ok = true;
    std::uint64_t seed = 201;
    for (Family f : {Family::A2, Family::C2_V1, Family::C2_V2, Family::G2}) {
        const auto p = generic_points(f, 1, seed++).front();
        const Suite s = check_gamma_spectrum(build_module(p), kWindow, g_threads);
        ok = ok && s.passed();
        os << family_name(f) << ":" << (s.passed() ? "separated" : "COLLISION") << " ";
    }
    Bindings c2{{Sym::a1, Rational(1, 5)}, {Sym::a2, Rational(1, 7)}, {Sym::a3, Rational(1)}, {Sym::upsilon, Rational(1, 3)}};
    Bindings g2{{Sym::a1, Rational(1, 5)}, {Sym::a2, Rational(1, 7)}, {Sym::a3, Rational(1)}};
    for (const auto& p : {make_parameters(Family::C2_V1, c2, false), make_parameters(Family::G2, g2, false)}) {
        const Suite s = check_gamma_spectrum(build_module(p), kWindow, g_threads, true);
        ok = ok && s.passed();
        os << "control " << family_name(p.family) << " a3=1:" << (s.passed() ? "collision found" : "NO collision") << " ";
    }
    return {ok, os.str()};
}

Outcome conditions() {
    std::ostringstream os;
    bool ok = true;
    std::mt19937_64 rng(301);
    const std::array<Family, 4> fams{Family::A2, Family::C2_V1, Family::C2_V2, Family::G2};
    int good = 0;
    for (int n = 0; n < 10; ++n) {
        const auto p = sample_generic_parameters(fams[static_cast<std::size_t>(n % 4)], rng);
        const Suite s = check_conditions(build_module(p), kWindow);
        if (s.passed()) ++good;
        else os << "[" << first_failure(s) << "] ";
    }
    ok = good == 10;
    os << "generic " << good << "/10; ";

    const auto c1 = case1_analysis(Rational(1, 2), Rational(1, 7), Rational(1, 2), Rational(1, 3), Rational(1, 11));
    const auto t1 = build_module(c1.params);
    const auto z1 = scan_coefficient_zeros(t1, kWindow);
    const auto tf1 = torsion_free_condition(c1.params);
    const bool case1 = z1.agree && !z1.coefficient_zeros.empty() && !tf1.holds && tf1.witness == "S+_ijk";
    os << "case 1: " << z1.coefficient_zeros.size() << " zeros, agree=" << z1.agree << ", witness " << tf1.witness << "; ";

    const auto sa = splitting_analysis({2, 0, -1}, Rational(1, 5), Rational(1, 7));
    const auto t2 = build_module(sa.params);
    const auto z2 = scan_coefficient_zeros(t2, kWindow);
    const auto si2 = simplicity_condition(sa.params);
    const bool case2 = z2.agree && !z2.coefficient_zeros.empty() && !si2.holds && !si2.precondition_failed;
    os << "case 2: " << z2.coefficient_zeros.size() << " zeros, agree=" << z2.agree << ", witness " << si2.witness;
    return {ok && case1 && case2, os.str()};
}

Outcome splitting() {
    const auto sa = splitting_analysis({2, 0, -1}, Rational(1, 5), Rational(1, 7));
    const Suite s = check_splitting(sa, kWindow, g_threads);
    std::ostringstream os;
    os << "t=(" << sa.t[0].str() << "," << sa.t[1].str() << "," << sa.t[2].str() << ") a3=" << sa.a3.str() << "; ";
    for (const auto& c : s.cases) os << c.case_id << ":" << status_name(c.status) << " ";
    if (!s.passed()) os << first_failure(s);
    return {s.passed(), os.str()};
}

Outcome branching() {
    std::ostringstream os;
    bool ok = true;
    const auto g2 = g2_parameters(Family::G2, Rational(1, 5), Rational(1, 7), Rational(1, 2));
    for (int m = 0; m < 3; ++m) {
        const Suite s = check_branching(g2, m, LatticeWindow::cube(2), g_threads);
        ok = ok && s.passed();
        os << "m=" << m << ":" << (s.passed() ? "ok" : "FAIL " + first_failure(s)) << " ";
    }
    return {ok, os.str()};
}

std::set<int> parse_ids(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.insert(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string expect;
    std::string json_path;
    g_threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--threads", g_threads, "worker threads");
    app.add_option("--expect-fail", expect, "comma separated criteria known to fail");
    app.add_option("--json", json_path, "write results as JSON");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "enumeration counts", 10, enumeration},
        {2, "primitivity", 10, primitivity},
        {3, "relation tables", 120, relation_tables},
        {4, "semi-perfect basis", 300, semi_perfect_basis},
        {5, "Casimir centrality", 300, casimir_centrality},
        {6, "module axioms", 300, module_axioms},
        {7, "Casimir eigenvalues", 300, casimir_eigenvalues},
        {8, "Gamma simple spectrum", 300, gamma_spectrum},
        {9, "torsion-free and simplicity predicates", 300, conditions},
        {10, "splitting", 300, splitting},
        {11, "branching", 120, branching},
    };
    std::set<int> failed;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) {
            o.pass = false;
            o.detail += " (time limit exceeded)";
        }
        if (!o.pass) failed.insert(c.id);
        std::printf("%s %2d %-40s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
        out.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", o.pass}, {"seconds", secs}, {"detail", o.detail}});
    }
    if (!json_path.empty()) std::ofstream(json_path) << out.dump(2) << "\n";
    const std::set<int> expected = parse_ids(expect);
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (!expect.empty()) {
        std::printf("known failures: %s; observed failures match: %s\n", expect.c_str(), failed == expected ? "yes" : "no");
        return failed == expected ? 0 : 1;
    }
    return failed.empty() ? 0 : 1;
}
