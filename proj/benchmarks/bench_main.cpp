#include <benchmark/benchmark.h>

#include <vector>

#include <permga/algorithms.hpp>
#include <permga/experiments.hpp>
#include <permga/sampling.hpp>

using namespace permga;

namespace {

void BM_HamEvaluateFull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HamProblem problem = HamProblem::sorted(n);
    RandomSource rng(1);
    const Permutation x = random_permutation(n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(problem.evaluate(x));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_HamEvaluateFull)->Arg(256)->Arg(2048);

void BM_ExchangeDelta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HamProblem problem = HamProblem::sorted(n);
    RandomSource rng(2);
    const Permutation x = random_permutation(n, rng);
    int i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(problem.delta_exchange(x, i, i + 1));
        i = i % (n - 1) + 1;
        if (i == n)
            i = 1;
    }
}
BENCHMARK(BM_ExchangeDelta)->Arg(2048);

void BM_SampleMutationList(benchmark::State& state) {
    const MutationSpace space(MutationKind::exchange, 1024);
    RandomSource rng(3);
    std::vector<MutationCode> list;
    for (auto _ : state) {
        sample_mutation_list(space, static_cast<std::uint64_t>(state.range(0)), rng, list);
        benchmark::DoNotOptimize(list.data());
    }
}
BENCHMARK(BM_SampleMutationList)->Arg(4)->Arg(16)->Arg(64);

void BM_PositiveBinomial(benchmark::State& state) {
    const MutationSpace space(MutationKind::exchange, 1024);
    RandomSource rng(4);
    const double p = 12.0 / static_cast<double>(space.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_positive_binomial(space.size(), p, rng));
}
BENCHMARK(BM_PositiveBinomial);

void BM_OllgaIteration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HamProblem problem = HamProblem::sorted(n);
    const MutationSpace space(MutationKind::exchange, n);
    RandomSource rng(5);
    SearchState search;
    const Permutation start = random_permutation(n, rng);
    search.x.assign(start.elements().begin(), start.elements().end());
    search.fitness = problem.evaluate(search.x);
    OllgaScratch scratch;
    std::uint64_t used = 0;
    for (auto _ : state) {
        const OllgaIterationParams params = make_ollga_params(10.0, space, rng);
        const IterationOutcome outcome = ollga_iteration(search, problem, space, params, rng,
                                                         scratch, used, ~std::uint64_t{0});
        used += outcome.evaluations;
        benchmark::DoNotOptimize(search.fitness);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(used));
}
BENCHMARK(BM_OllgaIteration)->Arg(256)->Arg(1024);

void BM_RlsRun(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HamProblem problem = HamProblem::sorted(n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RandomSource rng(++seed);
        RunOptions options;
        options.max_evaluations = evaluation_budget(50.0, n);
        benchmark::DoNotOptimize(rls_run(problem, rng, options).evaluations);
    }
}
BENCHMARK(BM_RlsRun)->Arg(64)->Arg(256);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
