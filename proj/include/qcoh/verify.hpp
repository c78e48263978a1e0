// Randomized property suites that numerically stress-test the theorems,
// measure axioms and observations at desk scale. Reports are deterministic
// per (name, trials, dims, seed, tol); counterexamples replay standalone.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcoh/optim.hpp"

namespace qcoh {

struct VerifyDims {
    Eigen::Index d_a = 2;
    Eigen::Index d_b = 2;
    std::optional<Eigen::Index> d_c;  // only eq5_flag uses the third party
};

/// Full reproduction data for one extremal/violating trial: rerunning the
/// suite body with `trial_seed` reproduces `margin` exactly.
struct CounterexampleRecord {
    std::uint64_t trial_index;
    std::uint64_t trial_seed;
    double margin;
    std::string description;
    /// Sampled instances (states, Kraus operators) with labels.
    std::vector<std::pair<std::string, ComplexMatrix>> instances;
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    int violations = 0;
    /// Worst observed margin over all trials (signed; a trial violates its
    /// check when margin > tolerance).
    double max_violation_margin = 0.0;
    /// Smallest observed (tolerance - margin): how close the suite came to
    /// a violation.
    double min_slack = 0.0;
    std::uint64_t seed = 0;
    VerifyDims dims;
    double tolerance = 0.0;
    std::string notes;  // sampler family, coverage caveats, extra counters
    std::vector<CounterexampleRecord> counterexamples;  // capped at 10
};

std::vector<std::string> suite_names();

/// Suites whose checks are proved facts in (or cited by) the paper: any
/// violation is a defect, and the CLI maps it to the property-violation
/// exit code. The remaining suites only report.
bool is_proved_fact_suite(const std::string& name);

/// Per-suite default tolerance (the value the acceptance criteria pin).
double default_tolerance(const std::string& name);

SuiteReport run_suite(const std::string& name, int trials,
                      const VerifyDims& dims, std::uint64_t seed, double tol);

/// Re-executes a single recorded trial and returns its margin.
double replay_counterexample(const std::string& name, const VerifyDims& dims,
                             double tol, std::uint64_t trial_seed);

}  // namespace qcoh
