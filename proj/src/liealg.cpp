#include "gtp/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gtp {

std::string_view algebra_name(AlgebraId id) {
    switch (id) {
        case AlgebraId::A2: return "A2";
        case AlgebraId::C2: return "C2";
        case AlgebraId::G2: return "G2";
    }
    return "?";
}

std::optional<AlgebraId> algebra_from_name(std::string_view name) {
    std::string s(name);
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "A2") return AlgebraId::A2;
    if (s == "C2") return AlgebraId::C2;
    if (s == "G2") return AlgebraId::G2;
    return std::nullopt;
}

std::string Root::str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const Rational& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < x.n; ++j)
                if (!y.at(k, j).is_zero()) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t t = 0; t < r.a.size(); ++t) r.a[t] += y.a[t];
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t t = 0; t < r.a.size(); ++t) r.a[t] -= y.a[t];
    return r;
}

Matrix operator*(const Rational& c, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a) v *= c;
    return r;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix parse_matrix_units(std::string_view text, int size) {
    Matrix m(size);
    std::size_t p = 0;
    auto skip = [&] {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    while (true) {
        skip();
        if (p >= text.size()) break;
        int sign = 1;
        if (text[p] == '+' || text[p] == '-') {
            sign = text[p] == '-' ? -1 : 1;
            ++p;
            skip();
        }
        long coeff = 1;
        if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            coeff = 0;
            while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
                coeff = coeff * 10 + (text[p++] - '0');
        }
        if (p + 3 > text.size()) throw MathError("bad matrix unit expression");
        if (text[p] != 'E') throw MathError("expected E in matrix unit expression: " + std::string(text));
        int r = text[p + 1] - '0', c = text[p + 2] - '0';
        if (r < 1 || r > size || c < 1 || c > size) throw MathError("matrix unit out of range");
        m.at(r - 1, c - 1) += Rational(sign * coeff);
        p += 3;
    }
    return m;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<Matrix>& basis, const Matrix& target) {
    const int rows = target.n * target.n;
    const int cols = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows), std::vector<Rational>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) a[r][c] = basis[c].a[r];
        a[r][cols] = target.a[r];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        Rational inv = Rational(1) / a[row][c];
        for (auto& v : a[row]) v *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (int t = c; t <= cols; ++t) a[r][t] -= f * a[row][t];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (!a[r][cols].is_zero()) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(cols));
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = a[r][cols];
    return x;
}

// ---------------------------------------------------------------- tables

namespace {

struct GenData {
    const char* label;
    const char* units;
};

struct AlgebraData {
    int size;
    std::vector<GenData> gens;  // PBW order
    std::vector<std::string> aliases;
};

const AlgebraData& data_for(AlgebraId id) {
    static const AlgebraData a2{3,
                                {{"h01", "E22 - E33"},
                                 {"h10", "E11 - E22"},
                                 {"f01", "E32"},
                                 {"f10", "E21"},
                                 {"f11", "E31"},
                                 {"e11", "E13"},
                                 {"e10", "E12"},
                                 {"e01", "E23"}},
                                {}};
    static const AlgebraData c2{4,
                                {{"h10", "E11 - E22 - E33 + E44"},
                                 {"h01", "-E11 + E33"},
                                 {"f10", "E21 - E34"},
                                 {"f01", "E13"},
                                 {"f11", "-E14 - E23"},
                                 {"f21", "2E24"},
                                 {"e21", "2E42"},
                                 {"e11", "-E32 - E41"},
                                 {"e01", "E31"},
                                 {"e10", "E12 - E43"}},
                                {"h11", "h21"}};
    static const AlgebraData g2{7,
                                {{"h01", "-E11 + E33 - E44 + E66"},
                                 {"h21", "E11 + 2E22 + E33 - E44 - 2E55 - E66"},
                                 {"f01", "E13 + E46"},
                                 {"f10", "E32 - E54 - 2E67 + E71"},
                                 {"f11", "-E12 + 2E47 - E56 + E73"},
                                 {"f21", "E41 + 2E57 + E63 + E72"},
                                 {"f31", "E51 + E62"},
                                 {"f32", "-E42 + E53"},
                                 {"e32", "-E24 + E35"},
                                 {"e31", "E15 + E26"},
                                 {"e21", "E14 + 2E27 + E36 + E75"},
                                 {"e11", "-E21 + 2E37 - E65 + E74"},
                                 {"e10", "2E17 + E23 - E45 - E76"},
                                 {"e01", "E31 + E64"}},
                                {"h10", "h11", "h31", "h32"}};
    switch (id) {
        case AlgebraId::A2: return a2;
        case AlgebraId::C2: return c2;
        case AlgebraId::G2: break;
    }
    return g2;
}

Root root_from_label(std::string_view label) {
    int m = label[1] - '0', n = label[2] - '0';
    return label[0] == 'f' ? Root{-m, -n} : Root{m, n};
}

}  // namespace

int ChevalleyAlgebra::index(std::string_view label) const {
    auto f = find(label);
    if (!f) throw MathError("unknown generator label " + std::string(label));
    return *f;
}

std::optional<int> ChevalleyAlgebra::find(std::string_view label) const {
    for (std::size_t t = 0; t < gens.size(); ++t)
        if (gens[t].label == label) return static_cast<int>(t);
    return std::nullopt;
}

std::vector<int> ChevalleyAlgebra::cartan_indices() const {
    std::vector<int> out;
    for (std::size_t t = 0; t < gens.size(); ++t)
        if (gens[t].cartan) out.push_back(static_cast<int>(t));
    return out;
}

std::vector<int> ChevalleyAlgebra::root_indices() const {
    std::vector<int> out;
    for (std::size_t t = 0; t < gens.size(); ++t)
        if (!gens[t].cartan) out.push_back(static_cast<int>(t));
    return out;
}

std::optional<LinComb> ChevalleyAlgebra::cartan_element(std::string_view label) const {
    if (auto f = find(label); f && gens[*f].cartan) return LinComb{{*f, Rational(1)}};
    for (const auto& [name, lc] : cartan_aliases)
        if (name == label) return lc;
    return std::nullopt;
}

Rational ChevalleyAlgebra::eigenvalue(int h, int x) const {
    Matrix c = commutator(gens[h].mat, gens[x].mat);
    const Matrix& m = gens[x].mat;
    for (std::size_t t = 0; t < m.a.size(); ++t)
        if (!m.a[t].is_zero()) return c.a[t] / m.a[t];
    throw MathError("zero generator matrix");
}

nlohmann::json ChevalleyAlgebra::to_json() const {
    nlohmann::json j;
    j["algebra"] = std::string(algebra_name(id));
    j["dimension"] = dimension();
    j["matrix_size"] = matrix_size;
    auto& gj = j["generators"];
    gj = nlohmann::json::array();
    for (const auto& g : gens) {
        nlohmann::json e;
        e["label"] = g.label;
        e["cartan"] = g.cartan;
        if (!g.cartan) e["root"] = {g.root.m, g.root.n};
        e["printed"] = g.printed;
        std::vector<std::vector<std::string>> rows;
        for (int r = 0; r < g.mat.n; ++r) {
            std::vector<std::string> row;
            for (int c = 0; c < g.mat.n; ++c) row.push_back(g.mat.at(r, c).str());
            rows.push_back(row);
        }
        e["matrix"] = rows;
        gj.push_back(e);
    }
    auto& sc = j["structure_constants"];
    sc = nlohmann::json::object();
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = x + 1; y < gens.size(); ++y) {
            if (bracket[x][y].empty()) continue;
            nlohmann::json terms = nlohmann::json::object();
            for (const auto& [g, c] : bracket[x][y]) terms[gens[g].label] = c.str();
            sc["[" + gens[x].label + "," + gens[y].label + "]"] = terms;
        }
    for (const auto& [name, lc] : cartan_aliases) {
        nlohmann::json terms = nlohmann::json::object();
        for (const auto& [g, c] : lc) terms[gens[g].label] = c.str();
        j["cartan_aliases"][name] = terms;
    }
    j["normalization"] = normalization;
    j["cartan_integers"] = cartan_integers;
    return j;
}

ChevalleyAlgebra build_algebra(AlgebraId id, bool normalize) {
    const AlgebraData& data = data_for(id);
    ChevalleyAlgebra g;
    g.id = id;
    g.matrix_size = data.size;
    for (const auto& gs : data.gens) {
        Generator gen;
        gen.label = gs.label;
        gen.cartan = gs.label[0] == 'h';
        if (!gen.cartan) gen.root = root_from_label(gen.label);
        gen.printed = gs.units;
        gen.mat = parse_matrix_units(gs.units, data.size);
        g.gens.push_back(std::move(gen));
    }
    if (normalize && id == AlgebraId::A2) {
        // The centralizer relations and z2 hold for e11 = [e01,e10], f11 = [f10,f01].
        for (const char* l : {"e11", "f11"}) {
            auto& gen = g.gens[static_cast<std::size_t>(g.index(l))];
            gen.mat = Rational(-1) * gen.mat;
        }
        g.normalization.push_back("e11 = -E13 (= [e01,e10]) and f11 = -E31 (= [f10,f01]); printed e11 = E13, f11 = E31");
    }
    std::vector<Matrix> basis;
    for (const auto& gen : g.gens) basis.push_back(gen.mat);
    const int d = g.dimension();
    g.bracket.assign(static_cast<std::size_t>(d), std::vector<LinComb>(static_cast<std::size_t>(d)));
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            Matrix c = commutator(basis[x], basis[y]);
            if (c.is_zero()) continue;
            auto sol = solve_in_span(basis, c);
            if (!sol)
                throw MathError("commutator [" + g.gens[x].label + "," + g.gens[y].label + "] leaves the span");
            LinComb lc;
            for (int t = 0; t < d; ++t)
                if (!(*sol)[t].is_zero()) lc.emplace_back(t, (*sol)[t]);
            g.bracket[x][y] = lc;
        }
    // Weight data: [h, e_alpha] must be a multiple of e_alpha.
    for (int h : g.cartan_indices())
        for (int x : g.root_indices()) {
            const auto& lc = g.bracket[h][x];
            if (!(lc.empty() || (lc.size() == 1 && lc[0].first == x)))
                throw MathError("generator " + g.gens[x].label + " is not a Cartan eigenvector");
        }
    // Coroot aliases h_ab = [e_ab, f_ab] for labels outside the basis.
    for (const auto& name : data.aliases) {
        std::string e = "e" + name.substr(1), f = "f" + name.substr(1);
        if (!g.find(e)) continue;
        g.cartan_aliases.emplace_back(name, g.bracket[g.index(e)][g.index(f)]);
    }
    // Cartan integers <alpha_j, alpha_i^vee> = 2 alpha_j(h_i) / alpha_i(h_i), h_i = [e_i, f_i].
    const std::array<std::string, 2> simple = {"10", "01"};
    for (int i = 0; i < 2; ++i) {
        Matrix hi = commutator(g.gen("e" + simple[i]).mat, g.gen("f" + simple[i]).mat);
        auto eig = [&](const std::string& lab) {
            const Matrix& m = g.gen(lab).mat;
            Matrix c = commutator(hi, m);
            for (std::size_t t = 0; t < m.a.size(); ++t)
                if (!m.a[t].is_zero()) return c.a[t] / m.a[t];
            throw MathError("zero matrix");
        };
        Rational self = eig("e" + simple[i]);
        for (int j = 0; j < 2; ++j) {
            Rational v = Rational(2) * eig("e" + simple[j]) / self;
            if (!v.is_integer()) throw MathError("non-integral Cartan integer");
            g.cartan_integers[i][j] = static_cast<int>(v.num().get_si());
        }
    }
    return g;
}

const ChevalleyAlgebra& algebra(AlgebraId id) {
    static const ChevalleyAlgebra a2 = build_algebra(AlgebraId::A2);
    static const ChevalleyAlgebra c2 = build_algebra(AlgebraId::C2);
    static const ChevalleyAlgebra g2 = build_algebra(AlgebraId::G2);
    switch (id) {
        case AlgebraId::A2: return a2;
        case AlgebraId::C2: return c2;
        case AlgebraId::G2: break;
    }
    return g2;
}

RootOrCartan root_of(const ChevalleyAlgebra& g, std::string_view label) {
    if (g.cartan_element(label)) return {true, {}};
    const auto& gen = g.gen(label);
    return {false, gen.root};
}

std::vector<Root> roots(const ChevalleyAlgebra& g) {
    std::vector<Root> out;
    for (int x : g.root_indices()) out.push_back(g.gens[x].root);
    return out;
}

Root simple_reflection(const ChevalleyAlgebra& g, int s, const Root& r) {
    const auto& a = g.cartan_integers[s - 1];
    int pairing = r.m * a[0] + r.n * a[1];
    return s == 1 ? Root{r.m - pairing, r.n} : Root{r.m, r.n - pairing};
}

Root weyl_apply(const ChevalleyAlgebra& g, const WeylElement& w, const Root& r) {
    Root out = r;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = simple_reflection(g, *it, out);
    return out;
}

std::vector<WeylElement> weyl_group(const ChevalleyAlgebra& g) {
    std::vector<WeylElement> out{{}};
    std::set<std::pair<Root, Root>> seen{{Root{1, 0}, Root{0, 1}}};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int s : {1, 2}) {
            WeylElement w = out[head];
            w.word.insert(w.word.begin(), s);
            auto key = std::make_pair(weyl_apply(g, w, {1, 0}), weyl_apply(g, w, {0, 1}));
            if (seen.insert(key).second) out.push_back(w);
        }
    return out;
}

}  // namespace gtp
