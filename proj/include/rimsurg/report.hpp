#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rimsurg/cyclic.hpp"
#include "rimsurg/invariants.hpp"
#include "rimsurg/surgery.hpp"

namespace rimsurg {

inline constexpr const char* kReportSchema = "rimsurg.report/1";
inline constexpr const char* kBatchSchema = "rimsurg.batch/1";

struct RunLimits {
    std::size_t max_cosets = kDefaultMaxCosets;
    /// Seconds per spec; 0 means unbounded.
    double timeout_seconds = 60.0;

    /// Defaults overridden by RIMSURG_MAX_COSETS and RIMSURG_TIMEOUT.
    static RunLimits from_environment();
    void validate() const;
    nlohmann::json to_json() const;
};

struct KnotInvariants {
    LaurentPolynomial alexander;
    mpz_class determinant;
    int arf = 0;
    NormalInvariantReport normal;

    bool alexander_trivial() const;
    nlohmann::json to_json() const;
};

KnotInvariants knot_invariants(const BraidWord& b);

struct Conclusions {
    std::string topological;
    /// Isotopy form, only for certified cyclic surgeries.
    std::optional<std::string> isotopy;
    bool smoothly_knotted = false;
    std::string smooth_note;
    std::string normal_invariant;

    nlohmann::json to_json() const;
};

inline constexpr const char* kTopologicallyStandard = "topologically standard (pairwise homeomorphism)";
inline constexpr const char* kIsotopic = "isotopic to the original surface (simply connected ambient)";
inline constexpr const char* kNotApplicable = "theorems do not apply (complement group is not Z_d)";
inline constexpr const char* kUndecided = "undecided within the enumeration limits";
inline constexpr const char* kSmoothCondition = "conditional on nontrivial Seiberg-Witten hypothesis";

/// Pure function of the verdict and the knot invariants.
Conclusions draw_conclusions(VerdictKind verdict, const KnotInvariants& inv);

struct Report {
    SurgerySpec spec;
    CyclicityVerdict verdict;
    int generators = 0;
    std::size_t relators = 0;
    KnotInvariants invariants;
    Conclusions conclusions;
    RunLimits limits;
    double seconds = 0.0;

    /// Timing is left out when include_timing is false.
    nlohmann::json to_json(bool include_timing = true) const;
    std::string to_text() const;
};

Report certify(const SurgerySpec& spec, const RunLimits& limits = {});

/// Exit status for a verdict: 0 certified either way, 2 inconclusive.
int exit_code(VerdictKind k);

struct SweepRange {
    long lo = 0;
    long hi = 0;
};

/// Cartesian product of knots and parameter ranges (inclusive).
struct Sweep {
    std::vector<std::string> knots;
    SurgeryKind kind = SurgeryKind::Rim;
    SweepRange d, m, n;
    int framing = 0;
    bool coprime_only = false;

    std::vector<SurgerySpec> expand() const;
};

struct BatchConfig {
    std::vector<SurgerySpec> specs;
    std::vector<Sweep> sweeps;
    RunLimits limits;
    int parallelism = 1;
    std::string output;

    /// Explicit specs plus expanded sweeps, sorted, duplicates removed.
    std::vector<SurgerySpec> all_specs() const;
    void validate() const;
    static BatchConfig from_json(const nlohmann::json& j, const RunLimits& defaults = {});
};

struct BatchRow {
    SurgerySpec spec;
    std::optional<Report> report;
    std::string error;
};

struct BatchResult {
    std::vector<BatchRow> rows;
    RunLimits limits;
    std::size_t cyclic = 0, noncyclic = 0, inconclusive = 0, errors = 0;

    /// Deterministic: no timing, rows in sorted spec order.
    nlohmann::json to_json() const;
    int exit_code() const;
};

/// Runs every spec of the config on `parallelism` threads; a failing spec
/// becomes an error row.
BatchResult batch(const BatchConfig& config);

/// Human-readable construction trace for a spec.
std::string explain(const SurgerySpec& spec);

}  // namespace rimsurg
