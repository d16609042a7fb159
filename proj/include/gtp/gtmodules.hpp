#pragma once

#include "gtp/exactmath.hpp"
#include "gtp/liealg.hpp"
#include "gtp/uea.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtp {

class ModuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Point = std::array<int, 3>;
using Shift = std::array<int, 3>;
using LatticeVec = std::map<Point, Rational>;

std::string point_str(const Point& p);
Point operator+(const Point& a, const Point& b);

// C2_General is V(a1,a2,a3,a4,xi) without the module constraint; G2_Printed is the
// action table exactly as printed (the G2 family uses the reconstructed table).
enum class Family { A2, C2_V1, C2_V2, C2_General, G2, G2_Printed };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
AlgebraId family_algebra(Family f);
// Names of the free parameters the caller supplies.
std::vector<std::string> family_parameters(Family f);

struct ParameterPoint {
    Family family = Family::A2;
    Bindings values;       // free and derived parameters
    bool checked = true;   // false for control points that skip the a3 constraint

    AlgebraId algebra() const { return family_algebra(family); }
    Rational at(Sym s) const;
    nlohmann::json to_json() const;
};

// Fills derived values (A2: t3, xi, mu; C2: xi or upsilon) and checks the family constraints.
// With check_a3 = false the a3 not in Z requirement is skipped (control runs).
ParameterPoint make_parameters(Family f, const Bindings& given, bool check_a3 = true);
ParameterPoint a2_parameters(Rational a1, Rational a2, Rational a3, Rational t1, Rational t2);
ParameterPoint c2_parameters(Family f, Rational a1, Rational a2, Rational a3, Rational a4, Rational upsilon);
ParameterPoint g2_parameters(Family f, Rational a1, Rational a2, Rational a3);
// Rational roots of 2(u+1)(u-2) = xi, ascending.
std::vector<Rational> upsilon_roots(const Rational& xi);

// Random generic point: small-denominator rationals, rejecting any draw for which a
// torsion or simplicity form has an integer zero. Rejected draws are appended to `log`.
ParameterPoint sample_generic_parameters(Family f, std::mt19937_64& rng, std::vector<std::string>* log = nullptr);

// ---------------------------------------------------------------- coefficient families

struct NamedForm {
    std::string name;
    RationalFunction f;
};

// Symbolic coefficient functions in the index symbols and the family parameters.
std::vector<NamedForm> coefficient_family(Family f);

struct ClosedFormPair {
    std::string name;
    RationalFunction composite;
    RationalFunction expanded;
    bool printed_agree = true;  // false for the known printed misprints
};
// Variables defined twice in print: composite and expanded closed forms.
std::vector<ClosedFormPair> closed_form_pairs(Family f);

// ---------------------------------------------------------------- action tables

struct ActionTerm {
    Shift shift{};
    RationalFunction coeff;               // in i, j, k after parameter substitution
    std::vector<RationalFunction> factors;  // affine factors whose zeros are zeros of coeff
};

// scale * [x, y], evaluated numerically through the table.
struct Composite {
    Rational scale;
    int x = -1;
    int y = -1;
};

struct GeneratorAction {
    std::vector<ActionTerm> terms;
    std::optional<Composite> composite;
};

struct ActionTable {
    ParameterPoint params;
    std::vector<GeneratorAction> gens;  // indexed like the algebra generators
    std::vector<std::string> notes;

    const ChevalleyAlgebra& lie() const { return algebra(params.algebra()); }
    std::vector<Shift> shifts(int gen) const;
    // Componentwise maximum of |shift| over all generators.
    Shift max_shift() const;
    nlohmann::json to_json() const;
};

ActionTable build_module(const ParameterPoint& p);

// ---------------------------------------------------------------- windows

struct LatticeWindow {
    Point lo{-4, -4, -4};
    Point hi{4, 4, 4};

    static LatticeWindow cube(int r) { return {{-r, -r, -r}, {r, r, r}}; }
    bool contains(const Point& p) const;
    std::size_t size() const;
    std::size_t index(const Point& p) const;
    Point point(std::size_t index) const;
    LatticeWindow expanded(const Shift& m) const;
    LatticeWindow shrunk(const Shift& m) const;
    bool empty() const;
    std::vector<Point> points() const;
    nlohmann::json to_json() const;
};

// Generator images on every point of a box, precomputed in parallel.
class WindowEvaluator {
public:
    WindowEvaluator(const ActionTable& table, LatticeWindow box, int threads = 1);

    const ActionTable& table() const { return table_; }
    const LatticeWindow& box() const { return box_; }

    struct Image {
        std::vector<std::pair<Point, Rational>> terms;  // absolute target points
        std::string error;                               // nonempty when undefined
    };
    const Image& image(int gen, const Point& p) const;

    // Throws ModuleError on a pole or when the support leaves the box.
    LatticeVec apply(int gen, const LatticeVec& v) const;
    LatticeVec apply_combination(const LinComb& x, const LatticeVec& v) const;
    // x1 x2 ... xn acts as x1(x2(...(xn v))).
    LatticeVec apply_word(const Mono& m, const LatticeVec& v) const;
    LatticeVec apply_element(const UEAElement& x, const LatticeVec& v) const;
    LatticeVec apply_element(const UEAElement& x, const Point& p) const;

private:
    const ActionTable& table_;
    LatticeWindow box_;
    std::vector<std::vector<Image>> images_;
};

// Box around `window` deep enough for words of length `degree`.
LatticeWindow box_for(const ActionTable& t, const LatticeWindow& window, int degree);

LatticeVec basis_vector(const Point& p);
void vec_add(LatticeVec& y, const Rational& a, const LatticeVec& x);

// ---------------------------------------------------------------- Gamma characters

struct GammaGenerator {
    std::string name;
    UEAElement element;
};
// h1, h2, z1, z2, c1 for A2 and C2; h1, h2, z1, c1 for G2.
std::vector<GammaGenerator> gamma_generators(AlgebraId id);

struct GammaCharacter {
    Point index{};
    std::vector<Rational> values;
    std::vector<std::string> names;
};

// Throws ModuleError if some generator does not act diagonally.
GammaCharacter gamma_character(const WindowEvaluator& ev, const std::vector<GammaGenerator>& gens,
                               const Point& p);
GammaCharacter gamma_character(const ActionTable& t, const Point& p);

// ---------------------------------------------------------------- conditions

struct ConditionForm {
    std::string name;
    RationalFunction form;  // affine in i, j, k
    bool simplicity_only = false;
};

// Affine forms whose integer zeros obstruct torsion freeness or simplicity.
std::vector<ConditionForm> condition_forms(const ParameterPoint& p);

// Whether c + n.x has an integer zero x in Z^3 (c rational, n rational).
bool has_integer_zero(const RationalFunction& affine);

struct ConditionResult {
    bool holds = false;
    std::string witness;             // name of the first violated form
    std::string witness_form;
    bool precondition_failed = false;  // simplicity asked while torsion freeness fails
    nlohmann::json to_json() const;
};

ConditionResult torsion_free_condition(const ParameterPoint& p);
ConditionResult simplicity_condition(const ParameterPoint& p);

struct ZeroScan {
    std::vector<std::tuple<std::string, int, Point>> coefficient_zeros;  // generator, term, point
    std::vector<std::tuple<std::string, int, Point>> predicted_zeros;
    std::size_t poles = 0;
    bool agree = false;
};
// Zeros of the explicit root-generator coefficients on the window versus the zeros of their factors.
ZeroScan scan_coefficient_zeros(const ActionTable& t, const LatticeWindow& w);

// ---------------------------------------------------------------- splitting

struct SplittingAnalysis {
    std::array<int, 3> k{};
    ParameterPoint params;
    std::array<Rational, 3> t;
    Rational a3;
    std::array<RationalFunction, 3> hyperplanes;  // F_m, zero at k = k_m
    std::array<int, 4> slice_dims{-1, -1, -1, -1};  // -1 for infinite
    nlohmann::json to_json() const;
};

// Case 2: Q+ vanishing at k1 > k2 > k3.
SplittingAnalysis splitting_analysis(const std::array<int, 3>& k, const Rational& a1, const Rational& a2);

using RegionPredicate = std::function<bool(const Point&)>;
// Region I+ of the m-th hyperplane (m = 0, 1, 2).
RegionPredicate splitting_region(const SplittingAnalysis& s, int m);

// Case 1: a1 + a3 odd, the negative side of S+ spans a submodule.
struct Case1Analysis {
    ParameterPoint params;
    RationalFunction hyperplane;  // S+
};
Case1Analysis case1_analysis(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& t1,
                             const Rational& t2);

// ---------------------------------------------------------------- branching

struct BranchingMap {
    int m = 0;
    ParameterPoint g2;
    ParameterPoint a2;          // W, with the third parameter shifted by m
    ParameterPoint a2_printed;  // W with the third parameter as printed
    std::vector<std::pair<std::string, std::string>> theta;  // A2 label -> G2 label
    Point psi(const Point& w) const;
    nlohmann::json to_json() const;
};

BranchingMap branching_map(int m, const ParameterPoint& g2);

}  // namespace gtp
