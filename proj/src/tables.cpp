#include "gtp/tables.hpp"

namespace gtp::tables {

std::vector<Root> alpha_roots(AlgebraId id) {
    switch (id) {
        case AlgebraId::A2: return {{1, 0}, {0, 1}, {1, 1}, {-1, -1}, {0, -1}, {-1, 0}};
        case AlgebraId::C2: return {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {-2, -1}, {-1, -1}, {0, -1}, {-1, 0}};
        case AlgebraId::G2: break;
    }
    return {};
}

std::vector<std::vector<int>> printed_lists(AlgebraId id) {
    switch (id) {
        case AlgebraId::A2: return {{1, 6}, {2, 5}, {3, 4}, {1, 2, 4}, {3, 5, 6}};
        case AlgebraId::C2:
            return {{1, 8},       {2, 7},       {3, 6},       {4, 5},       {1, 2, 6},    {3, 7, 8},
                    {1, 3, 5},    {4, 6, 8},    {1, 1, 2, 5}, {4, 7, 8, 8}, {3, 3, 5, 7}, {2, 4, 6, 6}};
        case AlgebraId::G2: break;
    }
    return {};
}

std::vector<PerfectEntry> perfect(AlgebraId id) {
    switch (id) {
        case AlgebraId::A2:
            return {{"h1", "h01"},         {"h2", "h10"},         {"c1", "f01 e01"},     {"c2", "f10 e10"},
                    {"c3", "f11 e11"},     {"c4", "f11 e10 e01"}, {"c5", "f01 f10 e11"}};
        case AlgebraId::C2:
            return {{"h1", "h01"},
                    {"h2", "h10"},
                    {"c1", "f01 e01"},
                    {"c2", "f21 e21"},
                    {"c3", "f10 e10"},
                    {"c4", "f11 e11"},
                    {"c5", "f11 e01 e10"},
                    {"c6", "f10 f01 e11"},
                    {"c7", "f21 e11 e10"},
                    {"c8", "f10 f11 e21"},
                    {"c9", "f21 e01 e10 e10"},
                    {"c10", "f10 f10 f01 e21"},
                    {"c11", "f01 f21 e11 e11"},
                    {"c12", "f11 f11 e21 e01"}};
        case AlgebraId::G2: break;
    }
    return {{"h1", "h01"},
            {"h2", "h21"},
            {"c1", "f01 e01"},
            {"c2", "f10 e10"},
            {"c3", "f11 e11"},
            {"c4", "f11 e10 e01"},
            {"c5", "f01 f10 e11"},
            {"c6", "f21 e21"},
            {"c7", "f21 e11 e10"},
            {"c8", "f10 f11 e21"},
            {"c9", "f21 e10^2 e01"},
            {"c10", "f01 f10^2 e21"},
            {"c11", "f11^2 e21 e01"},
            {"c12", "f01 f21 e11^2"},
            {"c13", "f31 e31"},
            {"c14", "f31 e21 e10"},
            {"c15", "f10 f21 e31"},
            {"c16", "f31 e11 e10^2"},
            {"c17", "f10^2 f11 e31"},
            {"c18", "f31 e10^3 e01"},
            {"c19", "f01 f10^3 e31"},
            {"c20", "f32 e32"},
            {"c21", "f32 e31 e01"},
            {"c22", "f32 e21 e11"},
            {"c23", "f01 f31 e32"},
            {"c24", "f11 f21 e32"},
            {"c25", "f32 e21 e10 e01"},
            {"c26", "f11 f21 e31 e01"},
            {"c27", "f32 e11^2 e10"},
            {"c28", "f01 f31 e21 e11"},
            {"c29", "f01 f10 f21 e32"},
            {"c30", "f10 f11^2 e32"},
            {"c31", "f32 e11 e10^2 e01"},
            {"c32", "f10 f11^2 e31 e01"},
            {"c33", "f01 f31 e11^2 e10"},
            {"c34", "f01 f10^2 f11 e32"},
            {"c35", "f32 e10^3 e01^2"},
            {"c36", "f01^2 f10^3 e32"},
            {"c37", "f11^3 e32 e01"},
            {"c38", "f01 f32 e11^3"},
            {"c39", "f11^3 e31 e01^2"},
            {"c40", "f01^2 f31 e11^3"},
            {"c41", "f11 f31 e32 e10"},
            {"c42", "f21^2 e32 e10"},
            {"c43", "f10 f32 e31 e11"},
            {"c44", "f21^2 e31 e11"},
            {"c45", "f10 f32 e21^2"},
            {"c46", "f11 f31 e21^2"},
            {"c47", "f21^2 e31 e10 e01"},
            {"c48", "f01 f10 f31 e21^2"},
            {"c49", "f11 f32 e21^2 e01"},
            {"c50", "f01 f21^2 e32 e11"},
            {"c51", "f21 f31 e32 e10^2"},
            {"c52", "f10^2 f32 e31 e21"},
            {"c53", "f21 f32 e31 e11^2"},
            {"c54", "f11^2 f31 e32 e21"},
            {"c55", "f31^2 e32 e10^3"},
            {"c56", "f10^3 f32 e31^2"},
            {"c57", "f31 f32 e21^3"},
            {"c58", "f21^3 e32 e31"},
            {"c59", "f21^3 e31^2 e01"},
            {"c60", "f01 f31^2 e21^3"},
            {"c61", "f32^2 e21^3 e01"},
            {"c62", "f32^2 e31 e11^3"},
            {"c63", "f11^3 f31 e32^2"},
            {"c64", "f01 f21^3 e32^2"}};
}

std::vector<RelationEntry> relations(AlgebraId id) {
    if (id == AlgebraId::A2) {
        std::vector<RelationEntry> r;
        for (int j = 1; j <= 5; ++j)
            for (int i = 1; i <= 2; ++i) {
                std::string c = "c" + std::to_string(j), h = "h" + std::to_string(i);
                r.push_back({c + " " + h, h + " " + c});
            }
        r.push_back({"c2 c1", "-c5 + c4 + c1 c2"});
        r.push_back({"c3 c1", "c5 - c4 + c1 c3"});
        r.push_back({"c4 c1", "-2 c5 + (2 + h1) c4 + c1 c4 - c1 c3 + c1 c2"});
        r.push_back({"c5 c1", "-h1 c5 + c1 c5 + c1 c3 - c1 c2", 1});
        r.push_back({"c3 c2", "-c5 + c4 + c2 c3"});
        r.push_back({"c4 c2", "h2 c3 + h2 c4 + c2 c4 + c2 c3 - c1 c2"});
        r.push_back({"c5 c2", "-h2 c3 - h2 c5 + c2 c5 - c2 c3 + c1 c2", 2});
        r.push_back({"c4 c3", "2 c5 - (h2 + h1 + 2) c4 + c3 c4 - h2 c3 - c2 c3 + c1 c3"});
        r.push_back({"c5 c3", "(h2 + h1) c5 + c3 c5 + h2 c3 + c2 c3 - c1 c3"});
        r.push_back({"c5 c4",
                     "-(2 h2 + h1) c5 - c3 c5 - 2 h2 c3 + c2 c5 - 2 c2 c3 - c1 c5 + c1 c2 c3 + (h2 + h1 + 2) c1 c2",
                     2});
        r.push_back(
            {"c4 c5", "-h1 c5 - c3 c5 + h1 h2 c3 + c2 c5 + h1 c2 c3 - c1 c5 + h2 c1 c3 + c1 c2 c3"});
        return r;
    }
    if (id == AlgebraId::C2) {
        return {{"c5 c1", "-c6 + (h1 + 1) c5 + h1 c4 + c1 c5 + c1 c4 - c1 c3", 1},
                {"c7 c2", "-4 h3 c7 + c2 c7 - 2 c2 c4 + 2 c2 c3 + (-2 h3 - 2 h1) c2", 1},
                {"c5 c3", "c9 + c8 - 2 c6 + (h3 - h1) c5 + c3 c5 - c3 c4 + 2 c1 c3", 2},
                {"c7 c3", "-2 c9 - 2 c8 + (h3 - h1) c7 + 4 c6 + c3 c7 + 2 c3 c4 - c2 c3", 2},
                {"c6 c5",
                 "c10 + 2 c8 - c7 + (h3 - h1 - 2) c6 - c4 c5 - c3 c6 - 2 c3 c4 - c1 c8 + 2 c1 c6 + c1 c3 c4 + "
                 "(h3 + h1 + 2) c1 c3",
                 2}};
    }
    return {};
}

std::vector<RelationEntry> c2_eliminations() {
    return {{"c12", "-c10 - c2 - 2 c8 + [c1, c8]"},
            {"c11", "-c9 - 2 c7 + c2 - [c1, c7]"},
            {"c10", "c9 - c8 + c7 + 1/2 [c5, c2] + [c1, c8]"},
            {"c9", "1/(2 h1) ([c1, [c1, c7]] - 2 c1 c2 - 2 c7 c1 - 2 c1 c7) + 1/2 [c7, c1] - 2 c7 - c2"},
            {"c8", "c7 + 1/2 [c2, c3]"},
            {"c7", "1/(16 h3) (-[c2, [c2, c3]] + 8 c3 c2 - 8 c2 c4 - 8 h1 c2) + 1/4 [c3, c2] - 1/2 c2"},
            {"c6", "c5 + [c3, c1]"},
            {"c5", "-c4 + c1 c3 + 1/(2 h1) (-[c1, c1, c3] - c3 c1 (h1 - 2) - 2 c1 c4)"}};
}

std::vector<FormulaEntry> casimirs(AlgebraId id) {
    switch (id) {
        case AlgebraId::A2:
            return {{"z1", "c3 + c2 + c1 + 1/3 (h2^2 + 3 h2 + h1^2 + 3 h1 + h2 h1)"},
                    {"z2",
                     "c5 + c4 + 1/3 (h1 - h2) c3 - 1/3 (6 + 2 h1 + h2) c2 + 1/3 (h1 + 2 h2) c1 + "
                     "1/27 (-h2 - 3 + h1) (6 + 2 h1 + h2) (h1 + 2 h2)"}};
        case AlgebraId::C2:
            return {{"z1", "4 c1 + c2 + 2 c3 + 2 c4 + 2 h1^2 + 2 h3^2 + 2 h1 + 4 h3"},
                    {"z2",
                     "2 c12 + 2 c11 - 2 c10 - 2 c9 + (2 h1 + 1) c8 + (2 h1 - 1) c7 + (4 h3 + 6) c6 + "
                     "(4 h3 + 10) c5 - c4^2 + (-2 h1 h3 - 4 h1 + 2 h3 + 6) c4 - 2 c3 c4 - c3^2 + "
                     "(2 h1 h3 + 4 h1 + 2 h3 + 6) c3 - (h1 - 1) (h1 + 1) c2 - 4 c1 c2 - "
                     "4 (h2 + 3) (h2 + 1) c1 - h1 (h3 + 3) (h3 + 1) (h1 + 2)"}};
        case AlgebraId::G2: break;
    }
    return {{"z1", "3 c1 + c2 + c3 + c6 + 3 c13 + 3 c20 + h01^2 + h01 h10 + h10^2 + 4 h01 + 5 h10"}};
}

std::vector<FormulaEntry> g2_embedded_casimirs() {
    return {{"Z1", "c20 + c13 + c1 + 1/3 (h31^2 + 3 h31 + h01^2 + 3 h01 + h31 h01)"},
            {"Z2",
             "c23 + c21 + 1/3 (h01 - h31) c20 - 1/3 (6 + 2 h01 + h31) c13 + 1/3 (h01 + 2 h31) c1 + "
             "1/27 (-h31 - 3 + h01) (6 + 2 h01 + h31) (h01 + 2 h31)"}};
}

std::vector<std::pair<std::string, std::string>> g2_embedding() {
    return {{"h01", "h01"}, {"h10", "h31"}, {"e01", "e01"}, {"f01", "f01"},
            {"e10", "e31"}, {"f10", "f31"}, {"e11", "e32"}, {"f11", "f32"}};
}

}  // namespace gtp::tables
