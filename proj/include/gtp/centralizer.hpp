#pragma once

#include "gtp/expr.hpp"
#include "gtp/tables.hpp"
#include "gtp/uea.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtp {

// Root multiplicities indexed by the root generators in generator order.
using MultVec = std::vector<int>;

// Semi-perfect monomial: nondecreasing list of perfect-monomial indices (Cartans first).
using SMono = std::vector<std::uint8_t>;
using SElement = std::map<SMono, Rational>;

struct EnumerationResult {
    std::vector<MultVec> lists;
    std::size_t visited = 0;
};

// Minimal nonzero solutions of sum n_i alpha_i = 0, n_i >= 0 (Contejean-Devie completion).
EnumerationResult enumerate_indecomposable(const ChevalleyAlgebra& g);
std::vector<Root> list_roots(const ChevalleyAlgebra& g, const MultVec& v);
Root list_weight(const ChevalleyAlgebra& g, const MultVec& v);
MultVec list_from_roots(const ChevalleyAlgebra& g, const std::vector<Root>& roots);
bool dominates(const MultVec& a, const MultVec& b);

struct PrimitivityResult {
    bool primitive = false;
    WeylElement witness;
    std::vector<Root> image;
    std::size_t tried = 0;
};

// Searches the Weyl group for w with w(r) having exactly one positive or one negative root.
PrimitivityResult is_primitive(const ChevalleyAlgebra& g, const std::vector<Root>& list);

struct PerfectMonomial {
    std::string label;
    bool cartan = false;
    Mono word;  // standard monomial of the generators
    MultVec list;
    std::string printed;
};

// Element of U(g) localized at central Cartan polynomials: den^{-1} * num.
struct LocalElement {
    UEAElement den;
    UEAElement num;
};

class Centralizer {
public:
    explicit Centralizer(AlgebraId id);
    Centralizer(const Centralizer&) = delete;
    Centralizer& operator=(const Centralizer&) = delete;

    AlgebraId id() const { return id_; }
    const ChevalleyAlgebra& lie() const { return g_; }
    const UEA& uea() const { return u_; }
    const std::vector<PerfectMonomial>& perfect() const { return perfect_; }
    int perfect_index(std::string_view label) const;
    const std::vector<MultVec>& indecomposable() const { return lists_; }
    int num_cartan() const { return 2; }

    // Lexicographically smallest nondecreasing factorization into indecomposables.
    SMono canonical_factorization(const MultVec& v) const;
    bool is_semi_perfect(const SMono& y) const;
    SMono semi_perfect_of(const Mono& x) const;
    Mono leading_monomial(const SMono& y) const;
    int degree(const SMono& y) const;
    MultVec smono_list(const SMono& y) const;

    // Semi-perfect monomials of degree <= D, enumerated over perfect labels.
    std::vector<SMono> semi_perfect_basis(int max_degree) const;
    // Weight-zero standard monomials of degree <= D.
    std::vector<Mono> weight_zero_standard(int max_degree) const;

    std::shared_ptr<const UEAElement> omega(const SMono& y) const;
    UEAElement expand(const SElement& x) const;
    // Expansion in the semi-perfect basis; throws on nonzero weight.
    SElement normal_form(const UEAElement& x) const;

    std::string smono_str(const SMono& y) const;
    std::string str(const SElement& x) const;

    // Perfect labels, generator labels, Cartan aliases and h3 = h1 + h2.
    std::optional<UEAElement> symbol(const std::string& name) const;
    using SymbolTable = std::map<std::string, LocalElement>;
    LocalElement eval_local(const Expr& e, const SymbolTable* extra = nullptr) const;
    LocalElement eval_local(std::string_view text, const SymbolTable* extra = nullptr) const;
    // Throws when a denominator survives.
    UEAElement eval(std::string_view text) const;

private:
    bool feasible(const MultVec& v, int min_label) const;

    AlgebraId id_;
    const ChevalleyAlgebra& g_;
    const UEA& u_;
    std::vector<int> root_gens_;       // generator index per MultVec slot
    std::vector<int> slot_of_gen_;     // -1 for Cartan
    std::vector<int> perfect_of_cartan_gen_;
    std::vector<PerfectMonomial> perfect_;
    std::vector<MultVec> lists_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<MultVec, int>, bool> feasible_memo_;
    mutable std::map<SMono, std::shared_ptr<const UEAElement>> omega_memo_;
};

const Centralizer& centralizer(AlgebraId id);

bool is_cartan_polynomial(const ChevalleyAlgebra& g, const UEAElement& x);
// Generators x with [z, x] != 0.
std::vector<std::string> noncentral_generators(const UEA& u, const UEAElement& z);

// ---------------------------------------------------------------- relations

struct RelationCheck {
    std::string lhs;
    std::string rhs;
    bool holds = false;
    std::string denominator;   // "1" when no localization is involved
    SElement residual;          // normal form of den * (lhs - rhs)
    std::string corrected_rhs;  // set when the printed identity fails
    bool correction_verified = false;
};

// Printed relation checks: A2 length-two table; C2 solved forms followed by the reduced relations.
std::vector<RelationCheck> check_printed_relations(AlgebraId id);
RelationCheck check_relation(const Centralizer& c, const std::string& lhs, const std::string& rhs);

struct ExtractedRelation {
    std::vector<int> lhs;  // perfect indices, left to right
    SElement rhs;
    bool verified = false;
    std::optional<bool> matches_printed;
};

// lhs - N(lhs) for every out-of-order pair and every non semi-perfect sorted word up to max_length.
std::vector<ExtractedRelation> extract_relations(AlgebraId id, int max_length);
std::string word_str(const Centralizer& c, const std::vector<int>& word);

// ---------------------------------------------------------------- Casimirs

// Basis of the central elements among the semi-perfect monomials of degree <= D.
std::vector<SElement> central_elements(AlgebraId id, int max_degree);

struct CasimirInfo {
    std::string name;
    std::string printed;
    UEAElement printed_element;
    std::vector<std::string> printed_failures;  // generators not commuting with the printed form
    bool printed_central = false;
    SElement corrected;           // nearest central element in the semi-perfect basis
    std::size_t mismatches = 0;   // coordinates where corrected and printed differ
    std::vector<std::string> mismatch_terms;
    UEAElement element;           // printed if central, else corrected
    bool central = false;
};

// index 1 or 2; G2 supports index 1 only.
const CasimirInfo& casimir_info(AlgebraId id, int index);
const UEAElement& casimir(AlgebraId id, int index);

struct EmbeddedCasimir {
    std::string name;
    UEAElement element;
    std::vector<std::string> subalgebra_failures;  // subalgebra generators not commuting
};
std::vector<EmbeddedCasimir> g2_embedded_casimirs();

// ---------------------------------------------------------------- width decomposition

struct WidthRelation {
    std::string lhs;
    int width = -1;
    int expected = -1;
    std::size_t terms = 0;
};

struct WidthDecomposition {
    std::vector<std::string> s1, s2, s3;
    std::vector<std::pair<std::string, std::string>> eliminations;
    std::vector<bool> elimination_corrected;  // printed solved form replaced by its verified correction
    std::vector<bool> elimination_holds;
    std::vector<WidthRelation> relations;
    bool s1_central = false;
    bool s12_commutative = false;
};

WidthDecomposition width_decomposition(AlgebraId id);

}  // namespace gtp
