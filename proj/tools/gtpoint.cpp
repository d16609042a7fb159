// gtpoint: command-line front end for the centralizer and module computations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include "gtp/centralizer.hpp"
#include "gtp/gtmodules.hpp"
#include "gtp/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gtp;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    std::string algebra;
    std::string family;
    std::string params_file;
    std::vector<std::string> params;
    std::string window;
    std::optional<std::uint64_t> seed;
    bool random_params = false;
    bool unchecked = false;
    std::string format = "text";
    std::string out;
    int threads = 1;
    // subcommand specific
    int max_len = 2;
    std::string m = "all";
    std::string split_case = "2";
    std::string k = "2,0,-1";
};

struct Output {
    json doc;
    std::string text;
    int code = 0;
};

Output from_report(const VerificationReport& r, json data = nullptr, std::string extra_text = {}) {
    Output o;
    o.doc = r.to_json();
    if (!data.is_null()) o.doc["data"] = std::move(data);
    o.text = r.text() + extra_text;
    o.code = r.ok() ? 0 : 1;
    return o;
}

AlgebraId parse_algebra(const std::string& s) {
    auto id = algebra_from_name(s);
    if (!id) throw UsageError("unknown algebra '" + s + "' (expected a2, c2 or g2)");
    return *id;
}

// "r" for the cube [-r, r]^3, or "i0:i1,j0:j1,k0:k1".
LatticeWindow parse_window(const std::string& s) {
    if (s.find(':') == std::string::npos) {
        int r = 0;
        try {
            r = std::stoi(s);
        } catch (const std::exception&) {
            throw UsageError("bad window '" + s + "'");
        }
        if (r < 0) throw UsageError("window radius must be nonnegative");
        return LatticeWindow::cube(r);
    }
    LatticeWindow w;
    std::stringstream ss(s);
    std::string part;
    int axis = 0;
    while (std::getline(ss, part, ',')) {
        if (axis > 2) throw UsageError("bad window '" + s + "'");
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw UsageError("bad window '" + s + "'");
        try {
            w.lo[axis] = std::stoi(part.substr(0, colon));
            w.hi[axis] = std::stoi(part.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("bad window '" + s + "'");
        }
        ++axis;
    }
    if (axis != 3 || w.empty()) throw UsageError("bad window '" + s + "'");
    return w;
}

LatticeWindow window_from_json(const json& j) {
    if (j.is_number_integer()) return LatticeWindow::cube(j.get<int>());
    if (j.is_string()) return parse_window(j.get<std::string>());
    LatticeWindow w;
    w.lo = j.at("lo").get<Point>();
    w.hi = j.at("hi").get<Point>();
    if (w.empty()) throw UsageError("empty window in parameter file");
    return w;
}

Rational parse_value(const std::string& name, const json& v) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) return Rational::parse(v.get<std::string>());
    } catch (const std::exception&) {
    }
    throw UsageError("parameter " + name + " must be an integer or a rational string such as \"1/3\"");
}

struct Loaded {
    std::optional<ParameterPoint> point;
    std::optional<LatticeWindow> window;
    std::string algebra;
};

// Parameter file (JSON) first, then --param overrides, then --random-params.
Loaded load(RunConfig& cfg, bool need_point) {
    Loaded l;
    json file;
    if (!cfg.params_file.empty()) {
        std::ifstream in(cfg.params_file);
        if (!in) throw UsageError("cannot open parameter file " + cfg.params_file);
        try {
            in >> file;
        } catch (const json::exception& e) {
            throw UsageError("parameter file is not valid JSON: " + std::string(e.what()));
        }
        if (file.contains("algebra") && cfg.algebra.empty()) cfg.algebra = file["algebra"].get<std::string>();
        if (file.contains("family") && cfg.family.empty()) cfg.family = file["family"].get<std::string>();
        if (file.contains("window") && cfg.window.empty()) l.window = window_from_json(file["window"]);
        if (file.contains("seed") && !cfg.seed) cfg.seed = file["seed"].get<std::uint64_t>();
    }
    if (!cfg.window.empty()) l.window = parse_window(cfg.window);

    std::optional<Family> fam;
    if (!cfg.family.empty()) {
        fam = family_from_name(cfg.family);
        if (!fam) throw UsageError("unknown family '" + cfg.family + "'");
        if (!cfg.algebra.empty() && parse_algebra(cfg.algebra) != family_algebra(*fam))
            throw UsageError("family " + cfg.family + " does not belong to algebra " + cfg.algebra);
    } else if (!cfg.algebra.empty()) {
        switch (parse_algebra(cfg.algebra)) {
            case AlgebraId::A2: fam = Family::A2; break;
            case AlgebraId::C2: fam = Family::C2_V1; break;
            case AlgebraId::G2: fam = Family::G2; break;
        }
    }
    if (fam) l.algebra = std::string(algebra_name(family_algebra(*fam)));
    if (!need_point) return l;
    if (!fam) throw UsageError("--algebra or --family is required");

    Bindings b;
    auto put = [&](const std::string& name, const json& v) {
        auto s = sym_from_name(name);
        if (!s) throw UsageError("unknown parameter '" + name + "'");
        b[*s] = parse_value(name, v);
    };
    if (file.contains("parameters"))
        for (const auto& [k, v] : file["parameters"].items()) put(k, v);
    for (const auto& kv : cfg.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + kv + "'");
        put(kv.substr(0, eq), json(kv.substr(eq + 1)));
    }
    if (cfg.random_params) {
        if (!cfg.seed) cfg.seed = 0;
        std::mt19937_64 rng(*cfg.seed);
        l.point = sample_generic_parameters(*fam, rng);
        return l;
    }
    if (b.empty()) throw UsageError("no parameters given (use --params FILE, --param k=v or --random-params)");
    try {
        l.point = make_parameters(*fam, b, !cfg.unchecked);
    } catch (const ModuleError& e) {
        throw UsageError(e.what());
    }
    return l;
}

// ---------------------------------------------------------------- subcommands

Output cmd_enumerate(RunConfig& cfg) {
    const AlgebraId id = parse_algebra(cfg.algebra);
    const auto& g = algebra(id);
    const auto res = enumerate_indecomposable(g);
    const std::size_t expected = id == AlgebraId::A2 ? 5 : id == AlgebraId::C2 ? 12 : 64;
    VerificationReport r;
    r.meta = report_meta(cfg.algebra, "", nullptr, std::nullopt, cfg.seed);
    Suite count{"enumeration", false, false, {}};
    const bool ok = res.lists.size() == expected;
    count.cases.push_back({"indecomposable count", ok ? Status::Pass : Status::Fail, res.lists.size(),
                           json{{"expected", expected}, {"found", res.lists.size()}, {"visited", res.visited}}});
    Suite prim{"primitivity", false, false, {}};
    json lists = json::array();
    std::ostringstream text;
    for (const auto& l : res.lists) {
        json roots = json::array();
        std::string rs;
        for (const auto& root : list_roots(g, l)) {
            roots.push_back(root.str());
            rs += root.str() + " ";
        }
        const auto p = is_primitive(g, list_roots(g, l));
        json img = json::array();
        for (const auto& x : p.image) img.push_back(x.str());
        prim.cases.push_back({rs, p.primitive ? Status::Pass : Status::Fail, p.tried,
                              json{{"weyl_word", p.witness.word}, {"image", img}}});
        lists.push_back({{"roots", roots}, {"multiplicities", l}, {"primitive", p.primitive}, {"weyl_word", p.witness.word}});
        text << "  " << rs << "\n";
    }
    r.suites = {count, prim};
    return from_report(r, json{{"lists", lists}}, "lists:\n" + text.str());
}

Output cmd_relations(RunConfig& cfg) {
    const AlgebraId id = parse_algebra(cfg.algebra);
    if (id == AlgebraId::G2) throw UsageError("relations are supported for a2 and c2 only");
    if (cfg.max_len < 2) throw UsageError("--max-len must be at least 2");
    const Centralizer& c = centralizer(id);
    VerificationReport r;
    r.meta = report_meta(cfg.algebra, "", nullptr, std::nullopt, cfg.seed);
    r.suites.push_back(check_relation_tables(id));
    Suite ex{"extracted_relations", false, false, {}};
    json rels = json::array();
    std::ostringstream text;
    for (const auto& rel : extract_relations(id, cfg.max_len)) {
        const std::string lhs = word_str(c, rel.lhs);
        json d{{"rhs", c.str(rel.rhs)}};
        if (rel.matches_printed) d["matches_printed"] = *rel.matches_printed;
        ex.cases.push_back({lhs, rel.verified ? Status::Pass : Status::Fail, 1, d});
        rels.push_back({{"lhs", lhs}, {"rhs", c.str(rel.rhs)}, {"verified", rel.verified}});
        text << "  " << lhs << " = " << c.str(rel.rhs) << "\n";
    }
    r.suites.push_back(ex);
    return from_report(r, json{{"relations", rels}}, "relations:\n" + text.str());
}

Output cmd_casimir(RunConfig& cfg) {
    const AlgebraId id = parse_algebra(cfg.algebra);
    const Centralizer& c = centralizer(id);
    VerificationReport r;
    r.meta = report_meta(cfg.algebra, "", nullptr, std::nullopt, cfg.seed);
    Suite printed{"printed_centrality", false, false, {}};
    Suite corrected{"corrected_centrality", false, false, {}};
    json data = json::array();
    std::ostringstream text;
    for (int n = 1; n <= (id == AlgebraId::G2 ? 1 : 2); ++n) {
        const auto& info = casimir_info(id, n);
        printed.cases.push_back({info.name, info.printed_central ? Status::Pass : Status::Fail, 1,
                                 json{{"printed", info.printed}, {"noncommuting", info.printed_failures}}});
        corrected.cases.push_back({info.name, info.central ? Status::Pass : Status::Fail, 1,
                                   json{{"corrected", c.str(info.corrected)}, {"differing_terms", info.mismatch_terms}}});
        data.push_back({{"name", info.name},
                        {"printed", info.printed},
                        {"printed_central", info.printed_central},
                        {"corrected", c.str(info.corrected)},
                        {"differing_terms", info.mismatch_terms}});
        text << info.name << " printed: " << info.printed << "\n";
        if (!info.printed_central) text << info.name << " central form: " << c.str(info.corrected) << "\n";
    }
    if (id == AlgebraId::G2) {
        Suite emb{"embedded_a2_casimirs", false, false, {}};
        for (const auto& e : g2_embedded_casimirs())
            emb.cases.push_back({e.name, e.subalgebra_failures.empty() ? Status::Pass : Status::Fail, 1,
                                 json{{"noncommuting", e.subalgebra_failures}}});
        r.suites.push_back(emb);
    }
    r.suites.insert(r.suites.begin(), {printed, corrected});
    return from_report(r, json{{"casimirs", data}}, text.str());
}

Output cmd_module_build(RunConfig& cfg) {
    auto l = load(cfg, true);
    const ActionTable t = build_module(*l.point);
    Output o;
    o.doc = {{"meta", report_meta(l.algebra, std::string(family_name(l.point->family)), l.point->to_json(), l.window, cfg.seed)},
             {"module", t.to_json()}};
    std::ostringstream text;
    const auto& g = t.lie();
    text << "family " << family_name(t.params.family) << "  " << t.params.to_json()["values"].dump() << "\n";
    for (int x = 0; x < g.dimension(); ++x) {
        const auto& a = t.gens[static_cast<std::size_t>(x)];
        text << g.gens[x].label << ":";
        if (a.composite)
            text << " " << a.composite->scale.str() << " [" << g.gens[a.composite->x].label << ", "
                 << g.gens[a.composite->y].label << "]";
        for (const auto& term : a.terms) text << "  (" << point_str(term.shift) << ") " << term.coeff.str();
        text << "\n";
    }
    for (const auto& n : t.notes) text << "note: " << n << "\n";
    o.text = text.str();
    return o;
}

Output cmd_module_verify(RunConfig& cfg) {
    auto l = load(cfg, true);
    VerifyOptions opts;
    if (l.window) opts.window = *l.window;
    opts.threads = cfg.threads;
    opts.seed = cfg.seed;
    return from_report(verify_module(*l.point, opts));
}

Output cmd_conditions(RunConfig& cfg) {
    auto l = load(cfg, true);
    const LatticeWindow w = l.window.value_or(LatticeWindow{});
    VerificationReport r;
    r.meta = report_meta(l.algebra, std::string(family_name(l.point->family)), l.point->to_json(), w, cfg.seed);
    r.suites.push_back(check_conditions(build_module(*l.point), w));
    json forms = json::array();
    for (const auto& f : condition_forms(*l.point))
        forms.push_back({{"name", f.name}, {"form", f.form.str()}, {"simplicity_only", f.simplicity_only},
                         {"integer_zero", has_integer_zero(f.form)}});
    return from_report(r, json{{"forms", forms},
                               {"torsion_free", torsion_free_condition(*l.point).to_json()},
                               {"simple", simplicity_condition(*l.point).to_json()}});
}

std::array<int, 3> parse_k(const std::string& s) {
    std::array<int, 3> k{};
    std::stringstream ss(s);
    std::string tok;
    int n = 0;
    while (std::getline(ss, tok, ',')) {
        if (n > 2) throw UsageError("--k expects three integers");
        try {
            k[static_cast<std::size_t>(n++)] = std::stoi(tok);
        } catch (const std::exception&) {
            throw UsageError("--k expects three integers");
        }
    }
    if (n != 3) throw UsageError("--k expects three integers");
    return k;
}

Output cmd_submodules(RunConfig& cfg) {
    if (cfg.algebra.empty() && cfg.family.empty()) cfg.algebra = "a2";
    auto l = load(cfg, false);
    if (l.algebra != "A2") throw UsageError("submodules are supported for a2 only");
    const LatticeWindow w = l.window.value_or(LatticeWindow::cube(3));
    Bindings b;
    for (const auto& kv : cfg.params) {
        const auto eq = kv.find('=');
        auto s = eq == std::string::npos ? std::nullopt : sym_from_name(kv.substr(0, eq));
        if (!s) throw UsageError("bad --param '" + kv + "'");
        b[*s] = parse_value(kv.substr(0, eq), json(kv.substr(eq + 1)));
    }
    auto get = [&](Sym s, Rational d) { return b.count(s) ? b[s] : d; };
    const Rational a1 = get(Sym::a1, Rational(1, 5)), a2 = get(Sym::a2, Rational(1, 7));
    VerificationReport r;
    try {
        if (cfg.split_case == "1") {
            const auto c = case1_analysis(get(Sym::a1, Rational(1, 2)), a2, get(Sym::a3, Rational(1, 2)),
                                          get(Sym::t1, Rational(1, 3)), get(Sym::t2, Rational(1, 11)));
            r.meta = report_meta("A2", "A2", c.params.to_json(), w, cfg.seed);
            r.suites.push_back(check_case1(c, w, cfg.threads));
            return from_report(r, json{{"hyperplane", c.hyperplane.str()}});
        }
        if (cfg.split_case == "generic") {
            const auto p = a2_parameters(a1, a2, get(Sym::a3, Rational(1, 2)), get(Sym::t1, Rational(1, 3)),
                                         get(Sym::t2, Rational(1, 11)));
            r.meta = report_meta("A2", "A2", p.to_json(), w, cfg.seed);
            RegionPredicate half = [](const Point& q) { return q[2] >= 0; };
            r.suites.push_back(check_submodule_closure(build_module(p), w, half, "closure of k >= 0", true, cfg.threads));
            return from_report(r);
        }
        if (cfg.split_case != "2") throw UsageError("--case must be 1, 2 or generic");
        const auto sa = splitting_analysis(parse_k(cfg.k), a1, a2);
        r.meta = report_meta("A2", "A2", sa.params.to_json(), w, cfg.seed);
        r.suites.push_back(check_splitting(sa, w, cfg.threads));
        return from_report(r, sa.to_json());
    } catch (const ModuleError& e) {
        throw UsageError(e.what());
    }
}

Output cmd_branch(RunConfig& cfg) {
    if (cfg.algebra.empty() && cfg.family.empty()) cfg.algebra = "g2";
    auto l = load(cfg, true);
    if (l.point->family != Family::G2) throw UsageError("branch needs the G2 family");
    const LatticeWindow w = l.window.value_or(LatticeWindow::cube(2));
    std::vector<int> ms;
    if (cfg.m == "all") ms = {0, 1, 2};
    else if (cfg.m == "0" || cfg.m == "1" || cfg.m == "2") ms = {std::stoi(cfg.m)};
    else throw UsageError("--m must be 0, 1, 2 or all");
    VerificationReport r;
    r.meta = report_meta("G2", "G2", l.point->to_json(), w, cfg.seed);
    json maps = json::array();
    for (int m : ms) {
        r.suites.push_back(check_branching(*l.point, m, w, cfg.threads));
        r.suites.push_back(check_branching(*l.point, m, w, cfg.threads, true));
        maps.push_back(branching_map(m, *l.point).to_json());
    }
    return from_report(r, json{{"maps", maps}});
}

void emit(const Output& o, const RunConfig& cfg) {
    const std::string body = cfg.format == "json" ? o.doc.dump(2) + "\n" : o.text;
    std::string path = cfg.out;
    if (path.empty()) {
        if (const char* dir = std::getenv("GTP_OUT_DIR"); dir && *dir)
            path = (std::filesystem::path(dir) / (cfg.subcommand + (cfg.format == "json" ? ".json" : ".txt"))).string();
    } else if (std::filesystem::path(path).is_relative()) {
        if (const char* dir = std::getenv("GTP_OUT_DIR"); dir && *dir) path = (std::filesystem::path(dir) / path).string();
    }
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << body;
    std::cerr << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartan centralizers and Gelfand-Tsetlin lattice modules for A2, C2 and G2"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::uint64_t seed = 0;

    auto common = [&](CLI::App* sub, bool params) {
        sub->add_option("--algebra", cfg.algebra, "a2, c2 or g2");
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out, "output file (relative paths resolve against GTP_OUT_DIR)");
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "seed for --random-params");
        if (params) {
            sub->add_option("--family", cfg.family, "A2, C2_V1, C2_V2, C2_General, G2 or G2_Printed");
            sub->add_option("--params", cfg.params_file, "JSON parameter file");
            sub->add_option("--param", cfg.params, "name=value, repeatable");
            sub->add_option("--window", cfg.window, "radius r or i0:i1,j0:j1,k0:k1");
            sub->add_flag("--random-params", cfg.random_params, "sample a generic parameter point");
            sub->add_flag("--unchecked", cfg.unchecked, "skip the a3 constraint (control runs)");
        }
    };
    auto* en = app.add_subcommand("enumerate", "indecomposable zero-weight lists and primitivity");
    common(en, false);
    auto* rel = app.add_subcommand("relations", "printed and extracted centralizer relations");
    common(rel, false);
    rel->add_option("--max-len", cfg.max_len, "maximum relation length");
    auto* cas = app.add_subcommand("casimir", "Casimir centrality");
    common(cas, false);
    auto* mb = app.add_subcommand("module-build", "instantiate and dump an action table");
    common(mb, true);
    auto* mv = app.add_subcommand("module-verify", "run the module verification suites");
    common(mv, true);
    auto* co = app.add_subcommand("conditions", "torsion-free and simplicity predicates");
    common(co, true);
    auto* sm = app.add_subcommand("submodules", "splitting hyperplanes and submodule closure (A2)");
    common(sm, true);
    sm->add_option("--case", cfg.split_case, "1, 2 or generic");
    sm->add_option("--k", cfg.k, "k1,k2,k3 for case 2");
    auto* br = app.add_subcommand("branch", "restriction of G2 modules to the A2 subalgebra");
    common(br, true);
    br->add_option("--m", cfg.m, "0, 1, 2 or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (app.get_subcommands().front()->count("--seed")) cfg.seed = seed;

    try {
        if ((cfg.subcommand == "enumerate" || cfg.subcommand == "relations" || cfg.subcommand == "casimir") &&
            cfg.algebra.empty())
            throw UsageError("--algebra is required");
        Output o;
        if (cfg.subcommand == "enumerate") o = cmd_enumerate(cfg);
        else if (cfg.subcommand == "relations") o = cmd_relations(cfg);
        else if (cfg.subcommand == "casimir") o = cmd_casimir(cfg);
        else if (cfg.subcommand == "module-build") o = cmd_module_build(cfg);
        else if (cfg.subcommand == "module-verify") o = cmd_module_verify(cfg);
        else if (cfg.subcommand == "conditions") o = cmd_conditions(cfg);
        else if (cfg.subcommand == "submodules") o = cmd_submodules(cfg);
        else o = cmd_branch(cfg);
        emit(o, cfg);
        return o.code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
