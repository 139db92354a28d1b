#ifndef DEGEN_IDENTITIES_HPP
#define DEGEN_IDENTITIES_HPP

#include "degen/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace degen {

// One parameter point of an identity grid. Identities read the fields they
// care about; describe() prints the ones that differ from the defaults.
struct Point {
    long long n = 0;
    long long m = 0;
    long long k = 0;
    long long p = 1;
    Rational lambda = 0;
    Rational lambda1 = 1;
    Rational x = 0;
    Rational y = 0;
    Rational b = 0;
    Rational c = 0;
    Rational z = 0;

    std::string describe() const;
};

enum class Comparison { ExactEqual, RelTol };

// An executable identity: two or more ways of computing the same quantity,
// compared over a grid. expect_fail marks the "as printed" sides of the
// documented errata, which are kept failing on purpose.
struct IdentitySpec {
    std::string id;
    Comparison comparison = Comparison::ExactEqual;
    double tol = 0.0;
    std::vector<Point> grid;
    std::vector<std::function<Value(const Point&)>> sides;
    std::optional<std::string> erratum;
    bool expect_fail = false;
};

struct PointFailure {
    std::string point;
    std::vector<std::string> side_values;
    double residual = 0.0;
    std::string error; // non-empty when a side threw instead of disagreeing
};

struct IdentityReport {
    std::string id;
    std::size_t points_checked = 0;
    std::vector<PointFailure> failures;
    double max_residual = 0.0;
    bool exact_comparison = true;
    std::optional<std::string> erratum;
    bool expected_failure = false;

    bool passed() const { return failures.empty(); }
};

// Evaluates every side at every grid point. Side errors become per-point
// failures, never aborts. Same grid, same report.
IdentityReport run_identity(const IdentitySpec& spec);

// Every identity and theorem of the catalogue, plus the paired red specs
// for the errata E1..E6.
const std::vector<IdentitySpec>& default_registry();

const IdentitySpec* find_identity(const std::string& id);

// Convenience groups mirroring the two sub-suites of the catalogue.
std::vector<IdentityReport> classical_binomial_suite();
std::vector<IdentityReport> stirling_cross_suite();

nlohmann::json report_to_json(const IdentityReport& report);

} // namespace degen

#endif
