#include "gtp/uea.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gtp;

namespace {

UEAElement random_element(const UEA& u, std::mt19937_64& rng) {
    const int n = u.lie().dimension();
    std::uniform_int_distribution<int> gen(0, n - 1), len(0, 3), coef(-3, 3);
    UEAElement x;
    for (int t = 0; t < 3; ++t) {
        std::vector<int> w;
        for (int l = len(rng); l > 0; --l) w.push_back(gen(rng));
        x += u.word_to_element(w) * Rational(coef(rng));
    }
    return x;
}

}  // namespace

TEST_CASE("generator commutators reproduce the Lie bracket") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const UEA& u = uea(id);
        const auto& g = u.lie();
        for (int x = 0; x < g.dimension(); ++x)
            for (int y = 0; y < g.dimension(); ++y) {
                UEAElement b;
                for (const auto& [k, c] : g.bracket[x][y]) b += u.gen(k) * c;
                CHECK(u.commutator(u.gen(x), u.gen(y)) == b);
            }
    }
}

TEST_CASE("multiplication is associative (property)") {
    std::mt19937_64 rng(3);
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const UEA& u = uea(id);
        for (int n = 0; n < 15; ++n) {
            const UEAElement a = random_element(u, rng), b = random_element(u, rng), c = random_element(u, rng);
            CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
        }
    }
}

TEST_CASE("standard monomials multiply in order without correction") {
    const UEA& u = uea(AlgebraId::A2);
    const UEAElement x = u.word_to_element("f01 e01");
    CHECK(x.size() == 1);
    CHECK(u.word_to_element("e01 f01") == x + u.gen("h01"));
    CHECK(u.degree_of(u.word_to_element("e10^2 f10")) == 3);
}

TEST_CASE("weights of monomials") {
    const UEA& u = uea(AlgebraId::C2);
    CHECK(u.weight_of(u.word_to_element("f21 e21")) == Root{0, 0});
    CHECK(u.weight_of(u.gen("e21")) == Root{2, 1});
    CHECK_FALSE(u.weight_of(u.gen("e21") + u.gen("f21")).has_value());
}
