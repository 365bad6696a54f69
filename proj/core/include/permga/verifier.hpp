#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <permga/bounds.hpp>
#include <permga/ham.hpp>
#include <permga/mutation.hpp>
#include <permga/rng.hpp>

namespace permga {

/// Effect counts of every exchange applied alone to one permutation:
/// counts[k] holds the number of exchanges with fitness delta k-2.
struct ExchangeCensus {
    std::array<std::uint64_t, 5> counts{};

    std::uint64_t count(int delta) const { return counts[static_cast<std::size_t>(delta + 2)]; }
    std::uint64_t total() const;
    std::uint64_t improving() const { return count(1) + count(2); }
    /// Σ max(0, delta) over all exchanges; equals the distance to the optimum.
    std::uint64_t positive_mass() const { return count(1) + 2 * count(2); }
};

/// Applies every exchange alone to x and tallies the deltas. O(n²), n ≥ 2.
ExchangeCensus enumerate_exchange_effects(const HamProblem& problem, const Permutation& x);

/// Good-iteration predicate for a threshold τ ∈ {-2, -1, 0}: exactly one
/// mutant contains a mutation that improves the parent in isolation, some
/// such witness shares no position with the rest of its own list while those
/// apply with fitness deltas ≥ τ, and in every other mutant all mutations
/// apply with deltas ≤ τ. Exchange family only.
bool classify_iteration(const HamProblem& problem, const Permutation& parent,
                        const MutationSpace& space,
                        std::span<const std::vector<MutationCode>> mutants, int tau);

/// Shape of the synthetic parent used by the estimator.
enum class ParentShape {
    cycle,  ///< one canonical cycle over the first n-f positions
    random, ///< fresh uniform wrong-position set and derangement per trial
};

/// A permutation at the requested fitness against the identity target.
/// Fitness n-1 is impossible for this fitness family; throws for it.
Permutation make_parent_at_fitness(int n, int fitness, ParentShape shape, RandomSource& rng);

struct GoodProbabilityEstimate {
    double estimate = 0.0;
    double half_width = 0.0; ///< 99% normal-approximation confidence half-width
    std::uint64_t trials = 0;
    std::uint64_t good = 0;
};

/// Monte-Carlo estimate of the good-iteration probability for a fixed parent.
/// Each trial draws λ mutants of ℓ exchange mutations under model.mode and
/// classifies the iteration. Also checks, for every good trial, that the good
/// mutant's fitness is strictly maximal; a violation throws, since it would
/// mean the classifier contradicts itself.
GoodProbabilityEstimate estimate_good_probability(const HamProblem& problem,
                                                  const Permutation& parent,
                                                  const IterationModel& model, int tau,
                                                  std::uint64_t trials, RandomSource& rng);

/// Convenience form that builds the parent at model.fitness over the identity
/// target. With ParentShape::random a fresh parent is drawn every trial.
GoodProbabilityEstimate estimate_good_probability_at_fitness(const IterationModel& model, int tau,
                                                             std::uint64_t trials,
                                                             ParentShape shape, RandomSource& rng);

} // namespace permga
