#pragma once

#include "gtp/liealg.hpp"

#include <string>
#include <vector>

// Printed data for the rank-2 centralizers, transcribed verbatim.
namespace gtp::tables {

struct PerfectEntry {
    std::string label;
    std::string word;  // generator labels, "e10^2" for repeats
};

struct RelationEntry {
    std::string lhs;
    std::string rhs;
    int expected_width = -1;  // -1 when the relation is not part of the width decomposition
};

struct FormulaEntry {
    std::string name;
    std::string formula;
};

// Roots alpha_1, alpha_2, ... in the printed numbering (A2, C2 only).
std::vector<Root> alpha_roots(AlgebraId id);
// Printed indecomposable lists as alpha indices (1-based); empty for G2.
std::vector<std::vector<int>> printed_lists(AlgebraId id);

std::vector<PerfectEntry> perfect(AlgebraId id);

// Length-two relations for A2, and the relations between the reduced generators for C2.
std::vector<RelationEntry> relations(AlgebraId id);
// C2 solved forms expressing c12, ..., c5 in lower generators (printed order).
std::vector<RelationEntry> c2_eliminations();

std::vector<FormulaEntry> casimirs(AlgebraId id);
// G2 images of the A2 Casimirs under the embedding.
std::vector<FormulaEntry> g2_embedded_casimirs();

// Generator table of the A2 subalgebra inside G2: A2 label -> G2 label.
std::vector<std::pair<std::string, std::string>> g2_embedding();

}  // namespace gtp::tables
