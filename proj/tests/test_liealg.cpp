#include "gtp/liealg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gtp;

namespace {

Matrix combo(const ChevalleyAlgebra& g, const LinComb& x) {
    Matrix m(g.matrix_size);
    for (const auto& [i, c] : x) m = m + c * g.gens[static_cast<std::size_t>(i)].mat;
    return m;
}

}  // namespace

TEST_CASE("dimensions, roots and Weyl groups") {
    const std::array<int, 3> dims{8, 10, 14}, roots_n{6, 8, 12}, weyl{6, 8, 12};
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        const auto n = static_cast<std::size_t>(id);
        CHECK(g.dimension() == dims[n]);
        CHECK(static_cast<int>(roots(g).size()) == roots_n[n]);
        CHECK(static_cast<int>(weyl_group(g).size()) == weyl[n]);
        CHECK(g.cartan_indices().size() == 2);
    }
}

TEST_CASE("bracket table matches the matrix commutators") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        for (int x = 0; x < g.dimension(); ++x)
            for (int y = 0; y < g.dimension(); ++y)
                CHECK(commutator(g.gens[x].mat, g.gens[y].mat) == combo(g, g.bracket[x][y]));
    }
}

TEST_CASE("Jacobi identity on the structure constants") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        const int n = g.dimension();
        auto br = [&](const LinComb& a, int z) {
            std::map<int, Rational> out;
            for (const auto& [i, c] : a)
                for (const auto& [k, d] : g.bracket[i][z]) out[k] += c * d;
            return out;
        };
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    std::map<int, Rational> total;
                    for (const auto& [k, c] : br(g.bracket[x][y], z)) total[k] += c;
                    for (const auto& [k, c] : br(g.bracket[y][z], x)) total[k] += c;
                    for (const auto& [k, c] : br(g.bracket[z][x], y)) total[k] += c;
                    for (const auto& [k, c] : total) CHECK(c.is_zero());
                }
    }
}

TEST_CASE("root vectors are Cartan eigenvectors") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        for (int h : g.cartan_indices())
            for (int x : g.root_indices()) {
                const Rational ev = g.eigenvalue(h, x);
                CHECK(g.bracket[h][x] == (ev.is_zero() ? LinComb{} : LinComb{{x, ev}}));
            }
    }
}

TEST_CASE("normalized A2 basis uses the commutator root vectors") {
    const auto& g = algebra(AlgebraId::A2);
    CHECK(g.bracket[g.index("e01")][g.index("e10")] == LinComb{{g.index("e11"), Rational(1)}});
    CHECK(g.bracket[g.index("f10")][g.index("f01")] == LinComb{{g.index("f11"), Rational(1)}});
}

TEST_CASE("C2 simple reflections are involutions") {
    const auto& g = algebra(AlgebraId::C2);
    for (const auto& r : roots(g))
        for (int s : {1, 2}) CHECK(simple_reflection(g, s, simple_reflection(g, s, r)) == r);
    CHECK(simple_reflection(g, 2, Root{2, 1}) == Root{2, 1});
}

TEST_CASE("G2 Cartan aliases are coroots") {
    const auto& g = algebra(AlgebraId::G2);
    for (const auto& [name, lc] : g.cartan_aliases) {
        const auto n = name.substr(1);
        const int e = g.index("e" + n), f = g.index("f" + n);
        CHECK(g.bracket[e][f] == lc);
    }
    CHECK(g.cartan_element("h31").has_value());
}

TEST_CASE("unknown labels are rejected") {
    CHECK_THROWS(algebra(AlgebraId::A2).index("e99"));
    CHECK_FALSE(algebra_from_name("b2").has_value());
    CHECK(algebra_from_name("g2") == AlgebraId::G2);
}
