#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <permga/algorithms.hpp>
#include <permga/bounds.hpp>
#include <permga/policies.hpp>
#include <permga/stats.hpp>
#include <permga/verifier.hpp>

namespace permga {

enum class AlgorithmId { rls, ea, ollga };

const char* to_string(AlgorithmId id);

/// Algorithm selection for a sweep. Policy applies to ollga only; the family
/// applies to ea and ollga (rls always uses single exchanges).
struct AlgorithmSpec {
    AlgorithmId id = AlgorithmId::rls;
    LambdaPolicy policy = LambdaPolicy::fixed(1.0);
    MutationKind family = MutationKind::exchange;
};

/// Evaluation cap used by sweeps and scans: ceil(multiplier · n² · ln n).
std::uint64_t evaluation_budget(double multiplier, int n);

/// Runtime sweep over problem sizes.
struct SweepConfig {
    AlgorithmSpec algorithm;
    std::string policy_label = "-"; ///< echoed into the CSV policy column
    std::vector<int> sizes;         ///< each ≥ 2
    int runs = 100;
    std::uint64_t master_seed = 1;
    double budget_multiplier = 50.0;
    bool include_unfinished = false; ///< include capped runs in the summaries
    unsigned threads = 1;
};

struct SweepRunRow {
    int n = 0;
    int run = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t iterations = 0;
    bool finished = false;
};

struct SweepSummaryRow {
    int n = 0;
    int runs = 0; ///< runs included in the statistics
    double mean_evals_over_n2 = 0.0;
    double std_evals_over_n2 = 0.0;
};

struct SweepResult {
    std::string algo_label;
    std::string policy_label;
    std::vector<SweepRunRow> rows;
    std::vector<SweepSummaryRow> summaries;
};

/// Runs the sweep; run index i at size n always uses the stream derived from
/// (master seed, n, i), so output is identical at any thread count.
SweepResult run_sweep(const SweepConfig& config);

void write_sweep_rows_csv(const SweepResult& result, std::ostream& out);
void write_sweep_summary_csv(const SweepResult& result, std::ostream& out);

/// Per-λ, per-distance cost scan at one problem size. λ values come from the
/// multiplicative lattice λ_min, λ_min·step, … up to λ_max.
struct LandscapeConfig {
    int n = 256;
    double lambda_min = 1.0;
    double lambda_max = 64.0;
    double step = 1.05;
    int runs = 200; ///< per λ
    std::uint64_t master_seed = 1;
    double budget_multiplier = 50.0;
    unsigned threads = 1;
    MutationKind family = MutationKind::exchange;
};

struct LandscapeRow {
    int n = 0;
    double lambda = 0.0;
    int distance = 0;
    std::uint64_t samples = 0;           ///< runs whose stay at this distance ended upward
    double mean_evals_to_improve = 0.0;  ///< mean evaluations those runs spent there
    double improve_prob = 0.0;           ///< improvements / iterations at this distance
    double rel_perf = 0.0;               ///< best mean over λ at this distance / this mean
};

struct LandscapeResult {
    std::vector<double> lambdas;
    std::vector<LandscapeRow> rows;
};

LandscapeResult run_landscape(const LandscapeConfig& config);
void write_landscape_csv(const LandscapeResult& result, std::ostream& out);

/// Bound-vs-estimate verification over the cross product of the lists.
struct VerifyConfig {
    int tau = 0;
    std::vector<int> sizes;
    std::vector<int> fitnesses;
    std::vector<std::uint64_t> lambdas;
    std::vector<std::uint64_t> ells;
    std::uint64_t trials = 1000000;
    SamplingMode mode = SamplingMode::with_replacement;
    ParentShape parent = ParentShape::cycle;
    std::uint64_t master_seed = 1;
    unsigned threads = 1;
};

struct VerifyRow {
    int tau = 0;
    int n = 0;
    int fitness = 0;
    std::uint64_t lambda = 1;
    std::uint64_t ell = 1;
    SamplingMode mode = SamplingMode::with_replacement;
    bool skipped = false;
    std::string skip_reason;
    double bound = 0.0;
    double estimate = 0.0;
    double half_width = 0.0;
    bool pass = false;
};

struct VerifyResult {
    std::vector<VerifyRow> rows;
    std::size_t failures = 0;
    std::size_t skipped = 0;
};

/// Each row's stream is derived from the master seed and the row parameters,
/// so a row's verdict does not depend on the rest of the grid.
VerifyResult run_verify(const VerifyConfig& config);

void write_verify_csv(const VerifyResult& result, std::ostream& out);

} // namespace permga
