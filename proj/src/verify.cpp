#include "gtp/verify.hpp"

#include "gtp/parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gtp {

namespace {

nlohmann::json vec_json(const LatticeVec& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [p, c] : v) j[point_str(p)] = c.str();
    return j;
}

CheckResult pass(std::string id, std::size_t count, nlohmann::json details = nullptr) {
    return {std::move(id), Status::Pass, count, std::move(details)};
}

CheckResult fail(std::string id, std::size_t count, nlohmann::json witness) {
    return {std::move(id), Status::Fail, count, std::move(witness)};
}

CheckResult skipped(std::string id, std::string reason) {
    return {std::move(id), Status::Skipped, 0, nlohmann::json{{"reason", std::move(reason)}}};
}

// Diagonal value of x at p, or nullopt with a reason.
std::optional<Rational> diagonal(const LatticeVec& r, const Point& p) {
    Rational v;
    for (const auto& [q, c] : r) {
        if (q != p) return std::nullopt;
        v = c;
    }
    return v;
}

int max_degree(AlgebraId id, const std::vector<UEAElement>& xs) {
    int d = 1;
    for (const auto& x : xs) d = std::max(d, uea(id).degree_of(x));
    return d;
}

Bindings at_point(const Point& p) {
    return {{Sym::i, Rational(p[0])}, {Sym::j, Rational(p[1])}, {Sym::k, Rational(p[2])}};
}

}  // namespace

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

nlohmann::json CheckResult::to_json() const {
    nlohmann::json j{{"case", case_id}, {"status", status_name(status)}, {"count", count}};
    if (!witness.is_null()) j[status == Status::Fail ? "witness" : "details"] = witness;
    return j;
}

bool Suite::any_fail() const {
    return std::any_of(cases.begin(), cases.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

bool Suite::passed() const { return control ? any_fail() : !any_fail(); }

nlohmann::json Suite::to_json() const {
    nlohmann::json j{{"name", name}, {"control", control}, {"informational", informational}, {"passed", passed()}};
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases) j["cases"].push_back(c.to_json());
    return j;
}

bool VerificationReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const Suite& s) { return s.informational || s.passed(); });
}

nlohmann::json VerificationReport::summary() const {
    std::size_t passed = 0, failed = 0, info = 0, cases = 0, case_fail = 0;
    for (const auto& s : suites) {
        cases += s.cases.size();
        for (const auto& c : s.cases) case_fail += c.status == Status::Fail;
        if (s.informational) ++info;
        else if (s.passed()) ++passed;
        else ++failed;
    }
    return {{"suites", suites.size()}, {"suites_passed", passed}, {"suites_failed", failed},
            {"informational", info},   {"cases", cases},           {"cases_failed", case_fail},
            {"ok", ok()}};
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j{{"meta", meta}};
    j["suites"] = nlohmann::json::array();
    for (const auto& s : suites) j["suites"].push_back(s.to_json());
    j["summary"] = summary();
    return j;
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    if (meta.contains("algebra")) os << "algebra " << meta["algebra"].get<std::string>();
    if (meta.contains("family") && meta["family"].is_string()) os << "  family " << meta["family"].get<std::string>();
    os << "\n";
    if (meta.contains("parameters") && !meta["parameters"].is_null()) os << "parameters " << meta["parameters"].dump() << "\n";
    if (meta.contains("window") && !meta["window"].is_null()) os << "window " << meta["window"].dump() << "\n";
    for (const auto& s : suites) {
        std::string tag = s.informational ? "INFO" : (s.passed() ? "PASS" : "FAIL");
        os << "[" << tag << "] " << s.name;
        if (s.control) os << " (control, expected to fail)";
        os << "\n";
        for (const auto& c : s.cases) {
            os << "    " << status_name(c.status) << "  " << c.case_id << "  n=" << c.count;
            if (c.status == Status::Fail && !c.witness.is_null()) os << "  " << c.witness.dump();
            os << "\n";
        }
    }
    const auto sum = summary();
    os << "summary: " << sum["suites_passed"] << " passed, " << sum["suites_failed"] << " failed, "
       << sum["informational"] << " informational; " << (ok() ? "OK" : "FAILED") << "\n";
    return os.str();
}

nlohmann::json report_meta(const std::string& algebra, const std::string& family, const nlohmann::json& params,
                           const std::optional<LatticeWindow>& window, std::optional<std::uint64_t> seed) {
    nlohmann::json j{{"schema_version", kReportSchemaVersion}, {"tool_version", kToolVersion}, {"algebra", algebra}};
    j["family"] = family.empty() ? nlohmann::json(nullptr) : nlohmann::json(family);
    j["parameters"] = params;
    j["window"] = window ? window->to_json() : nlohmann::json(nullptr);
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return j;
}

// ---------------------------------------------------------------- brackets and weights

Suite check_brackets(const ActionTable& t, const LatticeWindow& w, int threads, bool control) {
    Suite s{"brackets", control, false, {}};
    const auto& g = t.lie();
    WindowEvaluator ev(t, box_for(t, w, 2), threads);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < g.dimension(); ++x)
        for (int y = x + 1; y < g.dimension(); ++y) pairs.emplace_back(x, y);
    const auto points = w.points();
    s.cases.resize(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t n) {
        const auto [x, y] = pairs[n];
        const std::string id = "[" + g.gens[x].label + "," + g.gens[y].label + "]";
        std::size_t count = 0;
        for (const auto& p : points) {
            const LatticeVec v = basis_vector(p);
            LatticeVec lhs, rhs;
            try {
                lhs = ev.apply_combination(g.bracket[x][y], v);
                rhs = ev.apply(x, ev.apply(y, v));
                vec_add(rhs, Rational(-1), ev.apply(y, ev.apply(x, v)));
            } catch (const ModuleError& e) {
                s.cases[n] = fail(id, count, {{"point", p}, {"error", e.what()}});
                return;
            }
            if (lhs != rhs) {
                s.cases[n] = fail(id, count, {{"point", p}, {"bracket_action", vec_json(lhs)}, {"commutator_action", vec_json(rhs)}});
                return;
            }
            ++count;
        }
        s.cases[n] = pass(id, count);
    });
    return s;
}

Suite check_weights(const ActionTable& t, const LatticeWindow& w, int threads) {
    Suite s{"weights", false, false, {}};
    const auto& g = t.lie();
    WindowEvaluator ev(t, box_for(t, w, 1), threads);
    const auto hs = g.cartan_indices();
    const auto points = w.points();
    auto weight = [&](const Point& p) {
        std::vector<Rational> out;
        for (int h : hs) {
            const auto& img = ev.image(h, p);
            if (!img.error.empty()) throw ModuleError(img.error);
            auto d = diagonal(LatticeVec(img.terms.begin(), img.terms.end()), p);
            if (!d) throw ModuleError(g.gens[h].label + " is not diagonal at " + point_str(p));
            out.push_back(*d);
        }
        return out;
    };
    for (int h : hs) {
        std::size_t count = 0;
        std::optional<CheckResult> bad;
        for (const auto& p : w.points()) {
            const auto& img = ev.image(h, p);
            if (!img.error.empty() || img.terms.size() > 1 || (img.terms.size() == 1 && img.terms[0].first != p)) {
                bad = fail(g.gens[h].label + " diagonal", count, {{"point", p}});
                break;
            }
            ++count;
        }
        s.cases.push_back(bad ? *bad : pass(g.gens[h].label + " diagonal", count));
    }
    const auto roots = g.root_indices();
    std::vector<CheckResult> cases(roots.size());
    parallel_for(roots.size(), threads, [&](std::size_t n) {
        const int x = roots[n];
        const std::string id = g.gens[x].label + " weight shift";
        std::size_t count = 0;
        try {
            for (const auto& p : points) {
                const auto wp = weight(p);
                const auto& img = ev.image(x, p);
                if (!img.error.empty()) throw ModuleError(img.error);
                for (const auto& [q, c] : img.terms) {
                    const auto wq = weight(q);
                    for (std::size_t a = 0; a < hs.size(); ++a) {
                        if (wq[a] - wp[a] != g.eigenvalue(hs[a], x)) {
                            cases[n] = fail(id, count, {{"point", p}, {"target", q}, {"cartan", g.gens[hs[a]].label},
                                                        {"expected", g.eigenvalue(hs[a], x).str()},
                                                        {"actual", (wq[a] - wp[a]).str()}});
                            return;
                        }
                    }
                    ++count;
                }
            }
        } catch (const ModuleError& e) {
            cases[n] = fail(id, count, {{"error", e.what()}});
            return;
        }
        cases[n] = pass(id, count);
    });
    for (auto& c : cases) s.cases.push_back(std::move(c));
    return s;
}

// ---------------------------------------------------------------- Casimirs

std::vector<ExpectedScalar> expected_casimirs(const ParameterPoint& p) {
    std::vector<ExpectedScalar> out;
    const AlgebraId id = p.algebra();
    switch (p.family) {
        case Family::A2:
            out.push_back({"z1", casimir(id, 1), p.at(Sym::xi), "xi"});
            out.push_back({"z2", casimir(id, 2), p.at(Sym::mu), "mu"});
            break;
        case Family::C2_V1: {
            const Rational xi = p.at(Sym::xi);
            out.push_back({"z1", casimir(id, 1), xi, "xi"});
            out.push_back({"z2", casimir(id, 2), Rational(-1, 4) * xi * (xi + Rational(4)), "-(1/4) xi (xi + 4)"});
            break;
        }
        case Family::C2_V2: {
            const Rational d = p.at(Sym::a3) - p.at(Sym::a4);
            out.push_back({"z1", casimir(id, 1), d * d - Rational(4), "(a3 - a4)^2 - 4"});
            out.push_back({"z2", casimir(id, 2), Rational(0), "0"});
            break;
        }
        case Family::G2: {
            out.push_back({"z1", casimir(id, 1), Rational(14, 3), "14/3"});
            const auto emb = g2_embedded_casimirs();
            out.push_back({emb.at(0).name, emb.at(0).element, Rational(-8, 9), "-8/9"});
            out.push_back({emb.at(1).name, emb.at(1).element, Rational(8, 9), "8/9"});
            break;
        }
        case Family::C2_General:
        case Family::G2_Printed: break;
    }
    return out;
}

Suite check_scalars(const ActionTable& t, const LatticeWindow& w, const std::vector<ExpectedScalar>& xs, int threads,
                    const std::string& name) {
    Suite s{name, false, false, {}};
    if (xs.empty()) {
        s.cases.push_back(skipped("all", "no Casimir values are claimed for this family"));
        return s;
    }
    std::vector<UEAElement> els;
    for (const auto& x : xs) els.push_back(x.element);
    WindowEvaluator ev(t, box_for(t, w, max_degree(t.params.algebra(), els)), threads);
    const auto points = w.points();
    for (const auto& x : xs) {
        std::vector<std::optional<nlohmann::json>> bad(points.size());
        std::vector<std::string> values(points.size());
        parallel_for(points.size(), threads, [&](std::size_t n) {
            const Point& p = points[n];
            try {
                auto d = diagonal(ev.apply_element(x.element, p), p);
                if (!d) bad[n] = nlohmann::json{{"point", p}, {"error", "not diagonal"}};
                else if (*d != x.value)
                    bad[n] = nlohmann::json{{"point", p}, {"expected", x.value.str()}, {"actual", d->str()}};
                if (d) values[n] = d->str();
            } catch (const ModuleError& e) {
                bad[n] = nlohmann::json{{"point", p}, {"error", e.what()}};
            }
        });
        const std::string id = x.name + " = " + x.claim;
        auto it = std::find_if(bad.begin(), bad.end(), [](const auto& b) { return b.has_value(); });
        if (it == bad.end()) {
            s.cases.push_back(pass(id, points.size(), {{"value", x.value.str()}}));
        } else {
            nlohmann::json wit = **it;
            std::map<std::string, std::size_t> seen;
            for (const auto& v : values)
                if (!v.empty()) ++seen[v];
            wit["observed_values"] = seen;
            s.cases.push_back(fail(id, static_cast<std::size_t>(it - bad.begin()), wit));
        }
    }
    return s;
}

Suite check_casimirs(const ActionTable& t, const LatticeWindow& w, int threads) {
    return check_scalars(t, w, expected_casimirs(t.params), threads);
}

// ---------------------------------------------------------------- Gamma spectrum

Suite check_gamma_spectrum(const ActionTable& t, const LatticeWindow& w, int threads, bool control) {
    Suite s{"gamma_spectrum", control, false, {}};
    const AlgebraId id = t.params.algebra();
    const auto gens = gamma_generators(id);
    std::vector<UEAElement> els;
    for (const auto& g : gens) els.push_back(g.element);
    WindowEvaluator ev(t, box_for(t, w, max_degree(id, els)), threads);
    const auto points = w.points();
    std::vector<std::optional<GammaCharacter>> chars(points.size());
    std::vector<std::string> errors(points.size());
    parallel_for(points.size(), threads, [&](std::size_t n) {
        try {
            chars[n] = gamma_character(ev, gens, points[n]);
        } catch (const ModuleError& e) {
            errors[n] = e.what();
        }
    });
    std::size_t skipped_points = 0;
    std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> slices;
    for (std::size_t n = 0; n < points.size(); ++n) {
        if (!chars[n]) {
            ++skipped_points;
            continue;
        }
        slices[{chars[n]->values[0], chars[n]->values[1]}].push_back(n);
    }
    std::size_t compared = 0;
    std::optional<nlohmann::json> collision;
    for (const auto& [key, idx] : slices) {
        std::map<std::vector<Rational>, std::size_t> seen;
        for (std::size_t n : idx) {
            auto [it, inserted] = seen.emplace(chars[n]->values, n);
            if (!inserted && !collision) {
                nlohmann::json vals = nlohmann::json::array();
                for (const auto& v : chars[n]->values) vals.push_back(v.str());
                collision = nlohmann::json{{"first", points[it->second]}, {"second", points[n]},
                                           {"names", chars[n]->names}, {"character", vals}};
            }
        }
        compared += idx.size();
    }
    nlohmann::json details{{"slices", slices.size()}, {"skipped_points", skipped_points}};
    if (skipped_points > 0) {
        auto first = std::find_if(errors.begin(), errors.end(), [](const std::string& e) { return !e.empty(); });
        details["first_skip_reason"] = *first;
    }
    if (collision) {
        (*collision)["slices"] = slices.size();
        (*collision)["skipped_points"] = skipped_points;
        s.cases.push_back(fail("slice separation", compared, *collision));
    } else {
        s.cases.push_back(pass("slice separation", compared, details));
    }
    return s;
}

// ---------------------------------------------------------------- submodules

CheckResult region_closure(const WindowEvaluator& ev, const LatticeWindow& w, const RegionPredicate& region,
                           const std::string& case_id) {
    const auto& g = ev.table().lie();
    std::size_t count = 0;
    for (const auto& p : w.points()) {
        if (!region(p)) continue;
        for (int x = 0; x < g.dimension(); ++x) {
            const auto& img = ev.image(x, p);
            if (!img.error.empty()) return fail(case_id, count, {{"point", p}, {"generator", g.gens[x].label}, {"error", img.error}});
            for (const auto& [q, c] : img.terms) {
                if (!region(q))
                    return fail(case_id, count, {{"point", p}, {"generator", g.gens[x].label}, {"target", q},
                                                 {"coefficient", c.str()}});
            }
            ++count;
        }
    }
    return pass(case_id, count);
}

Suite check_submodule_closure(const ActionTable& t, const LatticeWindow& w, const RegionPredicate& region,
                              const std::string& case_id, bool control, int threads) {
    Suite s{"submodule_closure", control, false, {}};
    WindowEvaluator ev(t, box_for(t, w, 1), threads);
    s.cases.push_back(region_closure(ev, w, region, case_id));
    return s;
}

Suite check_splitting(const SplittingAnalysis& sa, const LatticeWindow& w, int threads) {
    Suite s{"splitting", false, false, {}};
    const ActionTable t = build_module(sa.params);
    WindowEvaluator ev(t, box_for(t, w, 1), threads);
    std::array<RegionPredicate, 3> regions;
    for (int m = 0; m < 3; ++m) {
        regions[static_cast<std::size_t>(m)] = splitting_region(sa, m);
        s.cases.push_back(region_closure(ev, w, regions[static_cast<std::size_t>(m)],
                                         "closure of I+(F" + std::to_string(m + 1) + ")"));
    }
    {
        std::size_t count = 0;
        std::optional<CheckResult> bad;
        for (const auto& p : w.points())
            for (int m = 0; m + 1 < 3 && !bad; ++m) {
                if (regions[static_cast<std::size_t>(m)](p) && !regions[static_cast<std::size_t>(m + 1)](p))
                    bad = fail("nesting", count, {{"point", p}, {"inner", m + 1}});
                ++count;
            }
        s.cases.push_back(bad ? *bad : pass("nesting", count));
    }
    // Subquotient counts on each weight slice; the slice is read off the Cartan eigenvalues.
    const auto hs = t.lie().cartan_indices();
    std::map<std::vector<Rational>, std::array<int, 4>> slices;
    for (const auto& p : w.points()) {
        std::vector<Rational> wt;
        for (int h : hs) wt.push_back(ev.image(h, p).terms.empty() ? Rational(0) : ev.image(h, p).terms[0].second);
        int layer = 3;
        for (int m = 0; m < 3; ++m)
            if (regions[static_cast<std::size_t>(m)](p)) {
                layer = m;
                break;
            }
        ++slices[wt][static_cast<std::size_t>(layer)];
    }
    for (int layer = 1; layer <= 2; ++layer) {
        const int expected = sa.slice_dims[static_cast<std::size_t>(layer)];
        const std::string id = "slice dimension of V" + std::to_string(layer + 1) + "'/V" + std::to_string(layer) + "'";
        std::optional<CheckResult> bad;
        for (const auto& [wt, counts] : slices) {
            if (counts[static_cast<std::size_t>(layer)] != expected) {
                nlohmann::json key = nlohmann::json::array();
                for (const auto& v : wt) key.push_back(v.str());
                bad = fail(id, slices.size(), {{"weight", key}, {"expected", expected},
                                               {"actual", counts[static_cast<std::size_t>(layer)]}});
                break;
            }
        }
        s.cases.push_back(bad ? *bad : pass(id, slices.size(), {{"dimension", expected}}));
    }
    return s;
}

Suite check_case1(const Case1Analysis& c, const LatticeWindow& w, int threads) {
    Suite s{"case1_submodule", false, false, {}};
    const ActionTable t = build_module(c.params);
    WindowEvaluator ev(t, box_for(t, w, 1), threads);
    const RationalFunction f = c.hyperplane;
    RegionPredicate neg = [f](const Point& p) { return rf_eval(f, at_point(p)).sign() <= 0; };
    s.cases.push_back(region_closure(ev, w, neg, "closure of S+ <= 0"));
    return s;
}

// ---------------------------------------------------------------- branching

Suite check_branching(const ParameterPoint& g2, int m, const LatticeWindow& w, int threads, bool printed) {
    const BranchingMap b = branching_map(m, g2);
    Suite s{std::string(printed ? "branching_printed" : "branching") + " m=" + std::to_string(m), false, printed, {}};
    const ActionTable tg = build_module(b.g2);
    const ActionTable ta = build_module(printed ? b.a2_printed : b.a2);
    const auto& ga = ta.lie();
    const auto& gg = tg.lie();

    Point lo = b.psi(w.lo), hi = lo;
    for (const auto& p : w.points()) {
        const Point q = b.psi(p);
        for (int a = 0; a < 3; ++a) {
            lo[a] = std::min(lo[a], q[a]);
            hi[a] = std::max(hi[a], q[a]);
        }
    }
    const LatticeWindow image_box{lo, hi};
    const auto emb = g2_embedded_casimirs();
    const int deg = max_degree(AlgebraId::G2, {emb.at(0).element, emb.at(1).element});
    WindowEvaluator eg(tg, box_for(tg, image_box, deg), threads);
    WindowEvaluator ea(ta, box_for(ta, w, 1), threads);
    const auto points = w.points();

    for (const auto& [xa, xg] : b.theta) {
        const int ia = ga.index(xa);
        const LinComb target = gg.find(xg) ? LinComb{{gg.index(xg), Rational(1)}} : *gg.cartan_element(xg);
        const std::string id = xa + " -> " + xg;
        std::optional<CheckResult> bad;
        std::size_t count = 0;
        for (const auto& p : points) {
            try {
                LatticeVec lhs;
                for (const auto& [q, c] : ea.apply(ia, basis_vector(p))) vec_add(lhs, c, basis_vector(b.psi(q)));
                const LatticeVec rhs = eg.apply_combination(target, basis_vector(b.psi(p)));
                if (lhs != rhs) {
                    bad = fail(id, count, {{"point", p}, {"psi_of_action", vec_json(lhs)}, {"action_of_psi", vec_json(rhs)}});
                    break;
                }
            } catch (const ModuleError& e) {
                bad = fail(id, count, {{"point", p}, {"error", e.what()}});
                break;
            }
            ++count;
        }
        s.cases.push_back(bad ? *bad : pass(id, count));
    }
    const std::array<Rational, 2> values{Rational(-8, 9), Rational(8, 9)};
    for (int n = 0; n < 2; ++n) {
        const auto& z = emb.at(static_cast<std::size_t>(n));
        const std::string id = z.name + " = " + values[static_cast<std::size_t>(n)].str();
        std::optional<CheckResult> bad;
        for (std::size_t c = 0; c < points.size() && !bad; ++c) {
            const Point q = b.psi(points[c]);
            try {
                auto d = diagonal(eg.apply_element(z.element, q), q);
                if (!d || *d != values[static_cast<std::size_t>(n)])
                    bad = fail(id, c, {{"point", q}, {"expected", values[static_cast<std::size_t>(n)].str()},
                                       {"actual", d ? d->str() : "not diagonal"}});
            } catch (const ModuleError& e) {
                bad = fail(id, c, {{"point", q}, {"error", e.what()}});
            }
        }
        s.cases.push_back(bad ? *bad : pass(id, points.size()));
    }
    return s;
}

// ---------------------------------------------------------------- conditions and closed forms

Suite check_conditions(const ActionTable& t, const LatticeWindow& w) {
    Suite s{"conditions", false, false, {}};
    const ConditionResult tf = torsion_free_condition(t.params);
    const ConditionResult si = simplicity_condition(t.params);
    const ZeroScan z = scan_coefficient_zeros(t, w);
    nlohmann::json details{{"torsion_free", tf.to_json()},
                           {"simple", si.to_json()},
                           {"coefficient_zeros", z.coefficient_zeros.size()},
                           {"predicted_zeros", z.predicted_zeros.size()},
                           {"poles", z.poles}};
    const std::size_t count = w.size();
    if (!z.agree) {
        nlohmann::json wit = details;
        for (const auto& [g, n, p] : z.coefficient_zeros)
            if (std::find(z.predicted_zeros.begin(), z.predicted_zeros.end(), std::make_tuple(g, n, p)) ==
                z.predicted_zeros.end()) {
                wit["unpredicted_zero"] = {{"generator", g}, {"term", n}, {"point", p}};
                break;
            }
        for (const auto& [g, n, p] : z.predicted_zeros)
            if (std::find(z.coefficient_zeros.begin(), z.coefficient_zeros.end(), std::make_tuple(g, n, p)) ==
                z.coefficient_zeros.end()) {
                wit["missed_zero"] = {{"generator", g}, {"term", n}, {"point", p}};
                break;
            }
        s.cases.push_back(fail("zeros on predicted hyperplanes", count, wit));
    } else {
        s.cases.push_back(pass("zeros on predicted hyperplanes", count, details));
    }
    // A generic decision must leave no coefficient zero at all.
    if (si.holds && !z.coefficient_zeros.empty()) {
        const auto& [g, n, p] = z.coefficient_zeros.front();
        s.cases.push_back(fail("generic point has no zeros", count,
                               {{"generator", g}, {"term", n}, {"point", p}, {"simple", si.to_json()}}));
    } else if (si.holds) {
        s.cases.push_back(pass("generic point has no zeros", count, details));
    } else {
        s.cases.push_back(skipped("generic point has no zeros", "simplicity fails at " + si.witness));
    }
    return s;
}

Suite check_closed_forms(Family f) {
    Suite s{"closed_forms", false, true, {}};
    for (const auto& c : closed_form_pairs(f)) {
        const bool equal = rf_simplify_equal(c.composite, c.expanded);
        nlohmann::json d{{"composite", c.composite.str()}, {"expanded", c.expanded.str()}};
        if (equal) s.cases.push_back(pass(c.name, 1, d));
        else {
            d["known_misprint"] = !c.printed_agree;
            s.cases.push_back(fail(c.name, 1, d));
        }
    }
    if (s.cases.empty()) s.cases.push_back(skipped("all", "no doubly defined coefficients"));
    return s;
}

// ---------------------------------------------------------------- relations

Suite check_relation_tables(AlgebraId id) {
    Suite s{"relation_tables", false, false, {}};
    const auto& c = centralizer(id);
    for (const auto& r : check_printed_relations(id)) {
        const std::string case_id = r.lhs + " = " + r.rhs;
        nlohmann::json d{{"denominator", r.denominator}};
        if (r.holds) {
            s.cases.push_back(pass(case_id, 1, d));
        } else if (r.correction_verified) {
            d["erratum"] = true;
            d["corrected_rhs"] = r.corrected_rhs;
            d["printed_residual"] = c.str(r.residual);
            s.cases.push_back(pass(case_id + "  [erratum, corrected: " + r.corrected_rhs + "]", 1, d));
        } else {
            d["residual"] = c.str(r.residual);
            d["corrected_rhs"] = r.corrected_rhs;
            s.cases.push_back(fail(case_id, 1, d));
        }
    }
    const auto ex = extract_relations(id, 2);
    std::size_t verified = 0, matched = 0, mismatched = 0;
    std::optional<nlohmann::json> bad;
    for (const auto& r : ex) {
        if (r.verified) ++verified;
        else if (!bad) bad = nlohmann::json{{"lhs", word_str(c, r.lhs)}, {"rhs", c.str(r.rhs)}};
        if (r.matches_printed) (*r.matches_printed ? matched : mismatched)++;
    }
    nlohmann::json d{{"relations", ex.size()}, {"verified", verified}, {"matches_printed", matched},
                     {"differs_from_printed", mismatched}};
    if (bad) {
        (*bad)["summary"] = d;
        s.cases.push_back(fail("extracted length-2 relations", ex.size(), *bad));
    } else {
        s.cases.push_back(pass("extracted length-2 relations", ex.size(), d));
    }
    return s;
}

// ---------------------------------------------------------------- driver

VerificationReport verify_module(const ParameterPoint& p, const VerifyOptions& opts) {
    VerificationReport r;
    r.meta = report_meta(std::string(algebra_name(p.algebra())), std::string(family_name(p.family)), p.to_json(),
                         opts.window, opts.seed);
    const ActionTable t = build_module(p);
    const bool broken_table = p.family == Family::C2_General || p.family == Family::G2_Printed;
    r.suites.push_back(check_brackets(t, opts.window, opts.threads, broken_table));
    if (broken_table) return r;
    r.suites.push_back(check_weights(t, opts.window, opts.threads));
    r.suites.push_back(check_casimirs(t, opts.window, opts.threads));
    const bool degenerate = p.at(Sym::a3).is_integer();
    // With a3 in Z the coefficients have poles on the window; only the Gamma control is decisive.
    if (degenerate)
        for (auto& s : r.suites) s.informational = true;
    r.suites.push_back(check_gamma_spectrum(t, opts.window, opts.threads, degenerate));
    if (p.checked) r.suites.push_back(check_conditions(t, opts.window));
    r.suites.push_back(check_closed_forms(p.family));
    return r;
}

}  // namespace gtp
