#pragma once

#include "gtp/centralizer.hpp"
#include "gtp/gtmodules.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtp {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class Status { Pass, Fail, Skipped };
std::string_view status_name(Status s);

struct CheckResult {
    std::string case_id;
    Status status = Status::Skipped;
    std::size_t count = 0;    // instances checked
    nlohmann::json witness;   // counterexample on failure, details otherwise
    nlohmann::json to_json() const;
};

// A control suite is run on inputs violating a required hypothesis and passes when some
// case fails. Informational suites never affect the verdict.
struct Suite {
    std::string name;
    bool control = false;
    bool informational = false;
    std::vector<CheckResult> cases;

    bool any_fail() const;
    bool passed() const;
    nlohmann::json to_json() const;
};

struct VerificationReport {
    nlohmann::json meta;
    std::vector<Suite> suites;

    bool ok() const;
    nlohmann::json summary() const;
    nlohmann::json to_json() const;
    std::string text() const;
};

nlohmann::json report_meta(const std::string& algebra, const std::string& family, const nlohmann::json& params,
                           const std::optional<LatticeWindow>& window, std::optional<std::uint64_t> seed);

// ---------------------------------------------------------------- module suites

// [x, y] v = x(y v) - y(x v) for every unordered generator pair and window point.
Suite check_brackets(const ActionTable& t, const LatticeWindow& w, int threads = 1, bool control = false);
// Root generators shift the Cartan eigenvalues by their root.
Suite check_weights(const ActionTable& t, const LatticeWindow& w, int threads = 1);

struct ExpectedScalar {
    std::string name;
    UEAElement element;
    Rational value;
    std::string claim;
};
std::vector<ExpectedScalar> expected_casimirs(const ParameterPoint& p);
Suite check_scalars(const ActionTable& t, const LatticeWindow& w, const std::vector<ExpectedScalar>& xs,
                    int threads = 1, const std::string& name = "casimirs");
Suite check_casimirs(const ActionTable& t, const LatticeWindow& w, int threads = 1);

// Characters on each (h1, h2) slice are pairwise distinct. Points hitting a pole are skipped.
Suite check_gamma_spectrum(const ActionTable& t, const LatticeWindow& w, int threads = 1, bool control = false);

// Every generator maps region vectors into the span of region vectors.
CheckResult region_closure(const WindowEvaluator& ev, const LatticeWindow& w, const RegionPredicate& region,
                           const std::string& case_id);
Suite check_submodule_closure(const ActionTable& t, const LatticeWindow& w, const RegionPredicate& region,
                              const std::string& case_id, bool control = false, int threads = 1);
// Closure of the three nested regions plus the subquotient slice counts.
Suite check_splitting(const SplittingAnalysis& s, const LatticeWindow& w, int threads = 1);
Suite check_case1(const Case1Analysis& c, const LatticeWindow& w, int threads = 1);

// psi(x w) = theta(x) psi(w) for the A2 generators, plus the embedded Casimir scalars.
// With printed = true the A2 module keeps the unshifted third parameter.
Suite check_branching(const ParameterPoint& g2, int m, const LatticeWindow& w, int threads = 1,
                      bool printed = false);

// Symbolic torsion/simplicity decisions against a scan of coefficient zeros.
Suite check_conditions(const ActionTable& t, const LatticeWindow& w);
Suite check_closed_forms(Family f);

// ---------------------------------------------------------------- centralizer suites

Suite check_relation_tables(AlgebraId id);

// ---------------------------------------------------------------- drivers

struct VerifyOptions {
    LatticeWindow window = LatticeWindow::cube(3);
    int threads = 1;
    std::optional<std::uint64_t> seed;
};

VerificationReport verify_module(const ParameterPoint& p, const VerifyOptions& opts);

}  // namespace gtp
