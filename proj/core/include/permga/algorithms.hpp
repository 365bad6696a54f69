#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <permga/ham.hpp>
#include <permga/mutation.hpp>
#include <permga/policies.hpp>
#include <permga/rng.hpp>

namespace permga {

/// Per-distance accounting of where a run spent its effort. The entry at
/// index d covers iterations that began with the parent at distance d from
/// the optimum; a distance skipped by a two-step improvement gets no entry.
struct LevelCost {
    std::uint64_t evaluations = 0;
    std::uint64_t iterations = 0;
    std::uint64_t improvements = 0;
};

struct RunResult {
    std::uint64_t evaluations = 0; ///< fitness queries, including the initial one
    std::uint64_t iterations = 0;
    int final_fitness = 0;
    std::uint64_t seed = 0;
    bool finished = false; ///< the optimum was evaluated within budget
    std::vector<LevelCost> per_level; ///< index = distance; empty unless requested
};

struct RunOptions {
    std::uint64_t max_evaluations = 0; ///< hard evaluation cap, must be ≥ 1
    bool record_level_costs = false;
    std::optional<Permutation> start; ///< fixed start instead of a uniform draw
    std::optional<std::uint64_t> fixed_mutation_count; ///< EA: force ℓ (1 makes it RLS)
};

/// Randomized local search: one uniform exchange per iteration, accepted iff
/// the fitness does not decrease.
RunResult rls_run(const HamProblem& problem, RandomSource& rng, const RunOptions& options);

/// (1+1) EA: ℓ ~ [B(m, 1/m) | ℓ > 0] distinct mutations applied in shuffled
/// order, accepted iff the fitness does not decrease.
RunResult opl_ea_run(const HamProblem& problem, const MutationSpace& space, RandomSource& rng,
                     const RunOptions& options);

/// Parameters of one two-phase iteration, fixed before the mutant loop.
struct OllgaIterationParams {
    double lambda = 1.0;
    std::uint64_t lambda_prime = 1; ///< ⌈λ⌉, offspring count in each phase
    double mutation_rate = 0.0;     ///< p = λ/m, capped at 1
    double crossover_bias = 0.0;    ///< c = 1/λ
    std::uint64_t ell = 1;          ///< shared mutation count from [B(m, p) | ℓ > 0]
};

/// Samples ℓ and fills in the derived quantities for one iteration.
OllgaIterationParams make_ollga_params(double lambda, const MutationSpace& space,
                                       RandomSource& rng);

/// Mutable run state: the parent (1-based values) and its fitness.
struct SearchState {
    std::vector<int> x;
    int fitness = 0;
};

struct IterationOutcome {
    std::uint64_t evaluations = 0; ///< consumed by this iteration, within [λ', 2λ']
    bool improved = false;         ///< offspring fitness strictly above the parent's
    bool solved = false;           ///< an evaluation hit the optimum; state holds it
    bool out_of_budget = false;    ///< stopped mid-iteration; state is unchanged
};

/// Reusable buffers that keep the iteration allocation-free.
struct OllgaScratch {
    std::vector<MutationCode> mutant;
    std::vector<MutationCode> winner;
    std::vector<MutationCode> offspring;
    std::vector<MutationCode> offspring_winner;
};

/// One two-phase iteration. Phase 1 builds λ' mutants from fresh ℓ-mutation
/// lists (ties broken uniformly); phase 2 re-applies order-preserving random
/// subsets of the winning list to the parent. An offspring that takes the
/// whole list is identical to the phase-1 winner, so it is not re-evaluated
/// and not counted. Survival selection is elitist (accept iff not worse).
IterationOutcome ollga_iteration(SearchState& state, const HamProblem& problem,
                                 const MutationSpace& space, const OllgaIterationParams& params,
                                 RandomSource& rng, OllgaScratch& scratch,
                                 std::uint64_t evaluations_used, std::uint64_t max_evaluations);

/// Full run of the two-phase GA under a λ-control policy. The schedule policy
/// re-queries λ from the current fitness every iteration; the self-adjusting
/// policy updates after each iteration from the pre-selection comparison.
RunResult ollga_run(const HamProblem& problem, const MutationSpace& space,
                    const LambdaPolicy& policy, RandomSource& rng, const RunOptions& options);

} // namespace permga
