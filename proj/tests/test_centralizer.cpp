#include "gtp/centralizer.hpp"
#include "gtp/tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace gtp;

TEST_CASE("indecomposable zero-weight list counts") {
    CHECK(enumerate_indecomposable(algebra(AlgebraId::A2)).lists.size() == 5);
    CHECK(enumerate_indecomposable(algebra(AlgebraId::C2)).lists.size() == 12);
    CHECK(enumerate_indecomposable(algebra(AlgebraId::G2)).lists.size() == 64);
}

TEST_CASE("enumerated lists are minimal zero-sum solutions (property)") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        const auto lists = enumerate_indecomposable(g).lists;
        for (const auto& l : lists) CHECK(list_weight(g, l).is_zero());
        for (std::size_t a = 0; a < lists.size(); ++a)
            for (std::size_t b = 0; b < lists.size(); ++b)
                if (a != b) CHECK_FALSE(dominates(lists[b], lists[a]));
    }
}

TEST_CASE("printed A2 and C2 lists agree with the enumeration") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2}) {
        const auto& g = algebra(id);
        const auto alpha = tables::alpha_roots(id);
        std::set<MultVec> printed;
        for (const auto& l : tables::printed_lists(id)) {
            std::vector<Root> rs;
            for (int a : l) rs.push_back(alpha[static_cast<std::size_t>(a - 1)]);
            printed.insert(list_from_roots(g, rs));
        }
        const auto lists = enumerate_indecomposable(g).lists;
        CHECK(printed == std::set<MultVec>(lists.begin(), lists.end()));
    }
}

TEST_CASE("every indecomposable list is primitive with a Weyl witness") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2}) {
        const auto& g = algebra(id);
        for (const auto& l : enumerate_indecomposable(g).lists) {
            const auto r = is_primitive(g, list_roots(g, l));
            REQUIRE(r.primitive);
            int pos = 0;
            for (const auto& x : r.image) pos += x.positive();
            const int neg = static_cast<int>(r.image.size()) - pos;
            CHECK((pos == 1 || neg == 1));
        }
    }
}

TEST_CASE("semi-perfect basis matches weight-zero standard monomials") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2}) {
        const Centralizer& c = centralizer(id);
        for (int d = 0; d <= 4; ++d) CHECK(c.semi_perfect_basis(d).size() == c.weight_zero_standard(d).size());
    }
    const Centralizer& c = centralizer(AlgebraId::G2);
    CHECK(c.semi_perfect_basis(3).size() == c.weight_zero_standard(3).size());
}

TEST_CASE("normal form expands back to the input (property)") {
    std::mt19937_64 rng(5);
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2}) {
        const Centralizer& c = centralizer(id);
        const auto words = c.weight_zero_standard(4);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (int n = 0; n < 10; ++n) {
            const UEAElement a = UEAElement::monomial(words[pick(rng)]);
            const UEAElement b = UEAElement::monomial(words[pick(rng)]);
            const UEAElement x = c.uea().multiply(a, b) + a * Rational(3, 2);
            CHECK(c.expand(c.normal_form(x)) == x);
        }
    }
}

TEST_CASE("normal form rejects nonzero weight") {
    const Centralizer& c = centralizer(AlgebraId::A2);
    CHECK_THROWS(c.normal_form(c.uea().gen("e01")));
}

TEST_CASE("printed A2 relations hold") {
    for (const auto& r : check_printed_relations(AlgebraId::A2)) {
        INFO(r.lhs << " = " << r.rhs);
        CHECK(r.holds);
    }
}

TEST_CASE("C2 relations hold or carry a verified correction") {
    std::size_t errata = 0;
    for (const auto& r : check_printed_relations(AlgebraId::C2)) {
        INFO(r.lhs << " = " << r.rhs);
        CHECK((r.holds || r.correction_verified));
        errata += !r.holds;
    }
    CHECK(errata == 2);
}

TEST_CASE("extracted length-two relations verify") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2}) {
        const auto rels = extract_relations(id, 2);
        CHECK(rels.size() >= 12);
        for (const auto& r : rels) CHECK(r.verified);
    }
}

TEST_CASE("A2 Casimirs are central as printed") {
    for (int n : {1, 2}) {
        const auto& info = casimir_info(AlgebraId::A2, n);
        CHECK(info.printed_central);
        CHECK(noncentral_generators(uea(AlgebraId::A2), info.element).empty());
    }
}

TEST_CASE("C2 and G2 printed Casimirs fail centrality; the corrections are central") {
    for (auto [id, n] : {std::pair{AlgebraId::C2, 1}, std::pair{AlgebraId::C2, 2}, std::pair{AlgebraId::G2, 1}}) {
        const auto& info = casimir_info(id, n);
        CHECK_FALSE(info.printed_central);
        CHECK(info.central);
        CHECK(noncentral_generators(uea(id), info.element).empty());
        CHECK(info.mismatches > 0);
    }
}

TEST_CASE("central elements of low degree") {
    // Degree <= 2: 1 and z1.
    CHECK(central_elements(AlgebraId::A2, 2).size() == 2);
    CHECK(central_elements(AlgebraId::C2, 2).size() == 2);
}

TEST_CASE("embedded A2 Casimirs commute with the subalgebra") {
    const auto emb = g2_embedded_casimirs();
    REQUIRE(emb.size() == 2);
    for (const auto& e : emb) CHECK(e.subalgebra_failures.empty());
}

TEST_CASE("width decomposition") {
    for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2}) {
        const auto w = width_decomposition(id);
        CHECK(w.s1_central);
        CHECK(w.s12_commutative);
        for (const auto& r : w.relations) {
            INFO(r.lhs);
            CHECK(r.width == r.expected);
        }
        for (bool h : w.elimination_holds) CHECK(h);
    }
}
