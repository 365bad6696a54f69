#include <permga/algorithms.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <permga/sampling.hpp>

namespace permga {

namespace {

// Sets up the start permutation and charges the initial evaluation.
RunResult begin_run(const HamProblem& problem, RandomSource& rng, const RunOptions& options,
                    SearchState& state) {
    if (options.max_evaluations < 1)
        throw std::invalid_argument("run: need max_evaluations >= 1");
    const int n = problem.size();
    if (options.start) {
        if (options.start->size() != n)
            throw std::invalid_argument("run: start permutation size mismatch");
        state.x.assign(options.start->elements().begin(), options.start->elements().end());
    } else {
        const Permutation start = random_permutation(n, rng);
        state.x.assign(start.elements().begin(), start.elements().end());
    }
    state.fitness = problem.evaluate(state.x);
    RunResult result;
    result.seed = rng.seed();
    result.evaluations = 1;
    result.final_fitness = state.fitness;
    result.finished = (state.fitness == n);
    if (options.record_level_costs)
        result.per_level.assign(static_cast<std::size_t>(n) + 1, LevelCost{});
    return result;
}

void record_level(RunResult& result, int distance, std::uint64_t evaluations, bool improved) {
    if (result.per_level.empty())
        return;
    auto& level = result.per_level[static_cast<std::size_t>(distance)];
    level.evaluations += evaluations;
    level.iterations += 1;
    level.improvements += improved ? 1 : 0;
}

} // namespace

RunResult opl_ea_run(const HamProblem& problem, const MutationSpace& space, RandomSource& rng,
                     const RunOptions& options) {
    if (space.problem_size() != problem.size())
        throw std::invalid_argument("opl_ea_run: mutation space size mismatch");
    const std::uint64_t m = space.size();
    if (options.fixed_mutation_count &&
        (*options.fixed_mutation_count < 1 || *options.fixed_mutation_count > m))
        throw std::invalid_argument("opl_ea_run: fixed mutation count out of range");

    SearchState state;
    RunResult result = begin_run(problem, rng, options, state);
    if (result.finished)
        return result;

    const int n = problem.size();
    const auto target = problem.target_elements();
    const double p = 1.0 / static_cast<double>(m);
    std::vector<MutationCode> list;
    while (result.evaluations < options.max_evaluations) {
        ++result.iterations;
        const int start_distance = n - state.fitness;
        const std::uint64_t ell = options.fixed_mutation_count
                                      ? *options.fixed_mutation_count
                                      : sample_mutation_count(m, p, rng);
        sample_mutation_list(space, ell, rng, list);
        int delta = 0;
        for (const MutationCode code : list)
            delta += apply_with_delta(state.x, target, space, code);
        ++result.evaluations;
        const int candidate = state.fitness + delta;
        const bool improved = candidate > state.fitness;
        if (candidate >= state.fitness)
            state.fitness = candidate;
        else
            undo_mutation_list(state.x, space, list);
        record_level(result, start_distance, 1, improved);
        if (state.fitness == n) {
            result.finished = true;
            break;
        }
    }
    result.final_fitness = state.fitness;
    return result;
}

RunResult rls_run(const HamProblem& problem, RandomSource& rng, const RunOptions& options) {
    RunOptions rls_options = options;
    rls_options.fixed_mutation_count = 1;
    if (problem.size() < 2) {
        // A single-point space has no exchanges; the start is the optimum.
        SearchState state;
        return begin_run(problem, rng, rls_options, state);
    }
    const MutationSpace space(MutationKind::exchange, problem.size());
    return opl_ea_run(problem, space, rng, rls_options);
}

OllgaIterationParams make_ollga_params(double lambda, const MutationSpace& space,
                                       RandomSource& rng) {
    if (!(lambda >= 1.0))
        throw std::invalid_argument("make_ollga_params: need lambda >= 1");
    OllgaIterationParams params;
    params.lambda = lambda;
    params.lambda_prime = static_cast<std::uint64_t>(std::ceil(lambda));
    params.mutation_rate = std::min(1.0, lambda / static_cast<double>(space.size()));
    params.crossover_bias = 1.0 / lambda;
    params.ell = sample_mutation_count(space.size(), params.mutation_rate, rng);
    return params;
}

IterationOutcome ollga_iteration(SearchState& state, const HamProblem& problem,
                                 const MutationSpace& space, const OllgaIterationParams& params,
                                 RandomSource& rng, OllgaScratch& scratch,
                                 std::uint64_t evaluations_used, std::uint64_t max_evaluations) {
    IterationOutcome outcome;
    const int n = problem.size();
    const auto target = problem.target_elements();
    const int parent_fitness = state.fitness;
    const auto can_evaluate = [&] {
        return evaluations_used + outcome.evaluations < max_evaluations;
    };

    // Phase 1: λ' mutants, all built from params.ell mutations. The winner's
    // list is kept; ties are resolved uniformly by reservoir replacement.
    int best_mutant = std::numeric_limits<int>::min();
    std::uint64_t mutant_ties = 0;
    for (std::uint64_t i = 0; i < params.lambda_prime; ++i) {
        if (!can_evaluate()) {
            outcome.out_of_budget = true;
            return outcome;
        }
        sample_mutation_list(space, params.ell, rng, scratch.mutant);
        int delta = 0;
        for (const MutationCode code : scratch.mutant)
            delta += apply_with_delta(state.x, target, space, code);
        ++outcome.evaluations;
        const int fitness = parent_fitness + delta;
        if (fitness == n) {
            // The optimum was just evaluated; state.x already holds it.
            state.fitness = fitness;
            outcome.solved = true;
            outcome.improved = fitness > parent_fitness;
            return outcome;
        }
        undo_mutation_list(state.x, space, scratch.mutant);
        if (fitness > best_mutant) {
            best_mutant = fitness;
            mutant_ties = 1;
            std::swap(scratch.winner, scratch.mutant);
        } else if (fitness == best_mutant && rng.below(++mutant_ties) == 0) {
            std::swap(scratch.winner, scratch.mutant);
        }
    }

    // Phase 2: λ' offspring by order-preserving subsampling of the winning
    // list, applied to the parent. s = ℓ duplicates the phase-1 winner and is
    // neither re-evaluated nor counted.
    int best_offspring = std::numeric_limits<int>::min();
    bool best_is_full_copy = false;
    std::uint64_t offspring_ties = 0;
    for (std::uint64_t i = 0; i < params.lambda_prime; ++i) {
        const std::uint64_t s = sample_crossover_size(params.ell, params.crossover_bias, rng);
        int fitness;
        bool full_copy;
        if (s == params.ell) {
            fitness = best_mutant;
            full_copy = true;
        } else {
            if (!can_evaluate()) {
                outcome.out_of_budget = true;
                return outcome;
            }
            subsample_preserving_order(scratch.winner, s, rng, scratch.offspring);
            int delta = 0;
            for (const MutationCode code : scratch.offspring)
                delta += apply_with_delta(state.x, target, space, code);
            ++outcome.evaluations;
            fitness = parent_fitness + delta;
            if (fitness == n) {
                state.fitness = fitness;
                outcome.solved = true;
                outcome.improved = fitness > parent_fitness;
                return outcome;
            }
            undo_mutation_list(state.x, space, scratch.offspring);
            full_copy = false;
        }
        bool take = false;
        if (fitness > best_offspring) {
            offspring_ties = 1;
            take = true;
        } else if (fitness == best_offspring && rng.below(++offspring_ties) == 0) {
            take = true;
        }
        if (take) {
            best_offspring = fitness;
            best_is_full_copy = full_copy;
            if (!full_copy)
                std::swap(scratch.offspring_winner, scratch.offspring);
        }
    }

    // Adaptation hooks read this flag between offspring selection and the
    // elitist survival selection below.
    outcome.improved = best_offspring > parent_fitness;
    if (best_offspring >= parent_fitness) {
        const auto& chosen = best_is_full_copy ? scratch.winner : scratch.offspring_winner;
        int delta = 0;
        for (const MutationCode code : chosen)
            delta += apply_with_delta(state.x, target, space, code);
        state.fitness = parent_fitness + delta;
        if (state.fitness != best_offspring)
            throw std::logic_error("ollga_iteration: fitness accounting mismatch");
    }
    return outcome;
}

RunResult ollga_run(const HamProblem& problem, const MutationSpace& space,
                    const LambdaPolicy& policy, RandomSource& rng, const RunOptions& options) {
    if (space.problem_size() != problem.size())
        throw std::invalid_argument("ollga_run: mutation space size mismatch");

    SearchState state;
    RunResult result = begin_run(problem, rng, options, state);
    if (result.finished)
        return result;

    const int n = problem.size();
    LambdaController controller(policy, n);
    OllgaScratch scratch;
    while (result.evaluations < options.max_evaluations) {
        ++result.iterations;
        const int start_distance = n - state.fitness;
        const OllgaIterationParams params =
            make_ollga_params(controller.current(state.fitness), space, rng);
        const IterationOutcome outcome = ollga_iteration(
            state, problem, space, params, rng, scratch, result.evaluations,
            options.max_evaluations);
        result.evaluations += outcome.evaluations;
        controller.on_selection(outcome.improved);
        record_level(result, start_distance, outcome.evaluations, outcome.improved);
        if (outcome.solved) {
            result.finished = true;
            break;
        }
        if (outcome.out_of_budget)
            break;
    }
    result.final_fitness = state.fitness;
    return result;
}

} // namespace permga
