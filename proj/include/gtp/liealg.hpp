#pragma once

#include "gtp/exactmath.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtp {

enum class AlgebraId { A2, C2, G2 };

std::string_view algebra_name(AlgebraId id);
std::optional<AlgebraId> algebra_from_name(std::string_view name);

// m*beta_1 + n*beta_2 in the simple-root basis, beta_1 = alpha_10, beta_2 = alpha_01.
struct Root {
    int m = 0;
    int n = 0;
    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
    Root operator-() const { return {-m, -n}; }
    Root operator+(const Root& o) const { return {m + o.m, n + o.n}; }
    bool is_zero() const { return m == 0 && n == 0; }
    bool positive() const { return m > 0 || (m == 0 && n > 0); }
    std::string str() const;
};

// Dense square matrix over Q.
struct Matrix {
    int n = 0;
    std::vector<Rational> a;
    Matrix() = default;
    explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size * size)) {}
    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }
    bool is_zero() const;
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Rational& c, const Matrix& x);
    friend bool operator==(const Matrix& x, const Matrix& y) { return x.n == y.n && x.a == y.a; }
};

Matrix commutator(const Matrix& x, const Matrix& y);

// Parses "2E17 + E23 - E45" style matrix-unit expressions (1-based, single-digit indices).
Matrix parse_matrix_units(std::string_view text, int size);

// Linear combination of generators, as (generator index, coefficient), sorted by index.
using LinComb = std::vector<std::pair<int, Rational>>;

struct Generator {
    std::string label;
    bool cartan = false;
    Root root;  // zero for Cartan generators
    Matrix mat;
    std::string printed;  // matrix-unit expression as printed
};

struct RootOrCartan {
    bool cartan = false;
    Root root;
};

struct WeylElement {
    std::vector<int> word;  // simple reflection indices 1 or 2, applied right to left
};

class ChevalleyAlgebra {
public:
    AlgebraId id{};
    int matrix_size = 0;
    std::vector<Generator> gens;  // in the PBW generator order
    std::vector<std::vector<LinComb>> bracket;
    // Named Cartan elements outside the basis (e.g. h10, h31 for G2), as [e,f] coroots.
    std::vector<std::pair<std::string, LinComb>> cartan_aliases;
    // Sign changes relative to the printed matrices, with the reason.
    std::vector<std::string> normalization;
    std::array<std::array<int, 2>, 2> cartan_integers{};  // [i][j] = <alpha_j, alpha_i^vee>

    int dimension() const { return static_cast<int>(gens.size()); }
    int index(std::string_view label) const;  // throws on an unknown label
    std::optional<int> find(std::string_view label) const;
    const Generator& gen(std::string_view label) const { return gens[static_cast<std::size_t>(index(label))]; }
    std::vector<int> cartan_indices() const;
    std::vector<int> root_indices() const;
    std::optional<LinComb> cartan_element(std::string_view label) const;
    // Eigenvalue of ad(h) on the root generator x.
    Rational eigenvalue(int h, int x) const;
    nlohmann::json to_json() const;
};

// Builds the algebra from the printed matrix realization; with normalize=true the sign
// normalization used by the centralizer tables is applied (recorded in `normalization`).
ChevalleyAlgebra build_algebra(AlgebraId id, bool normalize = true);

// Shared normalized instance per algebra.
const ChevalleyAlgebra& algebra(AlgebraId id);

RootOrCartan root_of(const ChevalleyAlgebra& g, std::string_view label);
std::vector<Root> roots(const ChevalleyAlgebra& g);
Root simple_reflection(const ChevalleyAlgebra& g, int s, const Root& r);
Root weyl_apply(const ChevalleyAlgebra& g, const WeylElement& w, const Root& r);
// All Weyl group elements as reduced words, identity first.
std::vector<WeylElement> weyl_group(const ChevalleyAlgebra& g);

// Solves target = sum x_i basis_i exactly; nullopt if target leaves the span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Matrix>& basis, const Matrix& target);

}  // namespace gtp
