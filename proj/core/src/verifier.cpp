#include <permga/verifier.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <permga/sampling.hpp>

namespace permga {

namespace {

constexpr double kZ99 = 2.5758293035489004; // Φ⁻¹(0.995)

int isolated_exchange_delta(std::span<const int> x, std::span<const int> target,
                            const IndexPair& pair) {
    const auto a = static_cast<std::size_t>(pair.i) - 1;
    const auto b = static_cast<std::size_t>(pair.j) - 1;
    return (x[b] == target[a]) + (x[a] == target[b]) - (x[a] == target[a]) - (x[b] == target[b]);
}

bool touches(const IndexPair& a, const IndexPair& b) {
    return a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
}

struct TrialWorkspace {
    std::vector<int> buffer;       // parent copy mutated and restored per mutant
    std::vector<IndexPair> pairs;  // decoded mutations of the candidate good mutant
    std::vector<int> isolated;     // their deltas applied alone to the parent
    std::vector<int> in_context;   // their deltas in list order
    std::vector<int> other_totals; // full fitness deltas of the remaining mutants
};

// Core predicate. `mutant_at(i)` yields the i-th mutation list. Leaves
// ws.buffer equal to the parent. When the iteration is good, ws holds the
// good mutant's total (sum of in_context) and all other totals, so callers
// can cross-check the selection consequence.
template <typename MutantAt>
bool classify_core(std::span<const int> target, const MutationSpace& space, MutantAt&& mutant_at,
                   std::size_t count, int tau, TrialWorkspace& ws, std::size_t& good_index) {
    // Exactly one mutant may contain a mutation that is good in isolation.
    std::size_t good_count = 0;
    for (std::size_t i = 0; i < count; ++i) {
        for (const MutationCode code : mutant_at(i)) {
            if (isolated_exchange_delta(ws.buffer, target, space.decode(code)) > 0) {
                ++good_count;
                good_index = i;
                break;
            }
        }
        if (good_count > 1)
            return false;
    }
    if (good_count != 1)
        return false;

    // Every other mutant must apply all its mutations with deltas <= tau.
    ws.other_totals.clear();
    for (std::size_t i = 0; i < count; ++i) {
        if (i == good_index)
            continue;
        const auto list = mutant_at(i);
        std::size_t applied = 0;
        int total = 0;
        bool ok = true;
        for (const MutationCode code : list) {
            const int delta = apply_with_delta(ws.buffer, target, space, code);
            ++applied;
            total += delta;
            if (delta > tau) {
                ok = false;
                break;
            }
        }
        undo_mutation_list(ws.buffer, space, list.first(applied));
        if (!ok)
            return false;
        ws.other_totals.push_back(total);
    }

    // The good mutant needs a witness: a mutation that improves the parent in
    // isolation, with every other mutation in the list avoiding both of its
    // positions and applying with delta >= tau.
    const auto good_list = mutant_at(good_index);
    const std::size_t len = good_list.size();
    ws.pairs.clear();
    ws.isolated.clear();
    ws.in_context.clear();
    for (const MutationCode code : good_list) {
        const IndexPair pair = space.decode(code);
        ws.pairs.push_back(pair);
        ws.isolated.push_back(isolated_exchange_delta(ws.buffer, target, pair));
    }
    for (const MutationCode code : good_list)
        ws.in_context.push_back(apply_with_delta(ws.buffer, target, space, code));
    undo_mutation_list(ws.buffer, space, good_list);

    for (std::size_t k = 0; k < len; ++k) {
        if (ws.isolated[k] <= 0)
            continue;
        bool witness = true;
        for (std::size_t j = 0; j < len; ++j) {
            if (j == k)
                continue;
            if (touches(ws.pairs[j], ws.pairs[k]) || ws.in_context[j] < tau) {
                witness = false;
                break;
            }
        }
        if (witness)
            return true;
    }
    return false;
}

void validate_tau(int tau) {
    if (tau != 0 && tau != -1 && tau != -2)
        throw std::invalid_argument("classify_iteration: tau must be 0, -1 or -2");
}

} // namespace

std::uint64_t ExchangeCensus::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ExchangeCensus enumerate_exchange_effects(const HamProblem& problem, const Permutation& x) {
    const int n = problem.size();
    if (n < 2)
        throw std::invalid_argument("enumerate_exchange_effects: need n >= 2");
    if (x.size() != n)
        throw std::invalid_argument("enumerate_exchange_effects: size mismatch");
    ExchangeCensus census;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            ++census.counts[static_cast<std::size_t>(problem.delta_exchange(x, i, j) + 2)];
    return census;
}

bool classify_iteration(const HamProblem& problem, const Permutation& parent,
                        const MutationSpace& space,
                        std::span<const std::vector<MutationCode>> mutants, int tau) {
    validate_tau(tau);
    if (space.kind() != MutationKind::exchange)
        throw std::invalid_argument("classify_iteration: exchange mutations only");
    if (space.problem_size() != problem.size() || parent.size() != problem.size())
        throw std::invalid_argument("classify_iteration: size mismatch");
    if (mutants.empty())
        throw std::invalid_argument("classify_iteration: need at least one mutant");
    for (const auto& list : mutants)
        for (const MutationCode code : list)
            if (code >= space.size())
                throw std::invalid_argument("classify_iteration: mutation code out of range");

    TrialWorkspace ws;
    ws.buffer.assign(parent.elements().begin(), parent.elements().end());
    std::size_t good_index = 0;
    return classify_core(
        problem.target_elements(), space,
        [&](std::size_t i) { return std::span<const MutationCode>(mutants[i]); }, mutants.size(),
        tau, ws, good_index);
}

Permutation make_parent_at_fitness(int n, int fitness, ParentShape shape, RandomSource& rng) {
    if (n < 1 || fitness < 0 || fitness > n)
        throw std::invalid_argument("make_parent_at_fitness: need 0 <= fitness <= n");
    if (fitness == n - 1)
        throw std::invalid_argument("make_parent_at_fitness: no permutation differs from the "
                                    "target in exactly one position");
    const int distance = n - fitness;
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    if (distance == 0)
        return Permutation(std::move(elems));

    if (shape == ParentShape::cycle) {
        // One cycle over the first d positions: exactly d wrong positions.
        std::rotate(elems.begin(), elems.begin() + 1, elems.begin() + distance);
        return Permutation(std::move(elems));
    }

    // Uniform wrong-position set, then a uniform derangement on it, drawn by
    // rejection (acceptance probability tends to 1/e).
    std::vector<int> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 0);
    for (int k = 0; k < distance; ++k) {
        const auto j = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - k)));
        std::swap(positions[static_cast<std::size_t>(k)], positions[static_cast<std::size_t>(j)]);
    }
    positions.resize(static_cast<std::size_t>(distance));
    std::vector<int> values(positions.begin(), positions.end());
    while (true) {
        for (std::size_t i = values.size() - 1; i > 0; --i)
            std::swap(values[i], values[static_cast<std::size_t>(rng.below(i + 1))]);
        const bool deranged = [&] {
            for (std::size_t i = 0; i < values.size(); ++i)
                if (values[i] == positions[i])
                    return false;
            return true;
        }();
        if (deranged)
            break;
    }
    for (std::size_t i = 0; i < positions.size(); ++i)
        elems[static_cast<std::size_t>(positions[i])] = values[i] + 1;
    return Permutation(std::move(elems));
}

GoodProbabilityEstimate estimate_good_probability(const HamProblem& problem,
                                                  const Permutation& parent,
                                                  const IterationModel& model, int tau,
                                                  std::uint64_t trials, RandomSource& rng) {
    validate_tau(tau);
    if (trials < 1)
        throw std::invalid_argument("estimate_good_probability: need trials >= 1");
    if (model.n != problem.size() || parent.size() != model.n)
        throw std::invalid_argument("estimate_good_probability: size mismatch");
    if (problem.evaluate(parent) != model.fitness)
        throw std::invalid_argument("estimate_good_probability: parent fitness does not match the model");
    if (model.fitness >= model.n)
        throw std::invalid_argument("estimate_good_probability: need fitness < n");
    if (model.lambda < 1 || model.ell < 1)
        throw std::invalid_argument("estimate_good_probability: need lambda >= 1 and ell >= 1");

    const MutationSpace space(MutationKind::exchange, model.n);
    const std::uint64_t m = space.size();
    if (model.mode == SamplingMode::without_replacement && model.ell > m)
        throw std::invalid_argument("estimate_good_probability: ell exceeds the mutation space");

    const auto target = problem.target_elements();
    const std::size_t lambda = static_cast<std::size_t>(model.lambda);
    const std::size_t ell = static_cast<std::size_t>(model.ell);
    std::vector<MutationCode> slab(lambda * ell);
    std::vector<MutationCode> tmp;
    TrialWorkspace ws;
    ws.buffer.assign(parent.elements().begin(), parent.elements().end());

    std::uint64_t good = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        if (model.mode == SamplingMode::with_replacement) {
            for (auto& code : slab)
                code = rng.below(m);
        } else {
            for (std::size_t i = 0; i < lambda; ++i) {
                sample_mutation_list(space, model.ell, rng, tmp);
                std::copy(tmp.begin(), tmp.end(), slab.begin() + static_cast<std::ptrdiff_t>(i * ell));
            }
        }
        std::size_t good_index = 0;
        const auto mutant_at = [&](std::size_t i) {
            return std::span<const MutationCode>(slab.data() + i * ell, ell);
        };
        if (!classify_core(target, space, mutant_at, lambda, tau, ws, good_index))
            continue;
        ++good;
        // A good iteration must hand the strictly best fitness to the good
        // mutant; anything else is a classifier defect.
        const int good_total =
            std::accumulate(ws.in_context.begin(), ws.in_context.end(), 0);
        for (const int other : ws.other_totals)
            if (other >= good_total)
                throw std::logic_error(
                    "estimate_good_probability: good mutant is not strictly best");
    }

    GoodProbabilityEstimate out;
    out.trials = trials;
    out.good = good;
    out.estimate = static_cast<double>(good) / static_cast<double>(trials);
    out.half_width =
        kZ99 * std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
    return out;
}

GoodProbabilityEstimate estimate_good_probability_at_fitness(const IterationModel& model, int tau,
                                                             std::uint64_t trials,
                                                             ParentShape shape,
                                                             RandomSource& rng) {
    const HamProblem problem = HamProblem::sorted(model.n);
    if (shape == ParentShape::cycle) {
        const Permutation parent = make_parent_at_fitness(model.n, model.fitness, shape, rng);
        return estimate_good_probability(problem, parent, model, tau, trials, rng);
    }
    // Random parent shape: average over parents by redrawing one per trial.
    std::uint64_t good = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const Permutation parent = make_parent_at_fitness(model.n, model.fitness, shape, rng);
        const auto one = estimate_good_probability(problem, parent, model, tau, 1, rng);
        good += one.good;
    }
    GoodProbabilityEstimate out;
    out.trials = trials;
    out.good = good;
    out.estimate = static_cast<double>(good) / static_cast<double>(trials);
    out.half_width =
        kZ99 * std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
    return out;
}

} // namespace permga
