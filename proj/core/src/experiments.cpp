#include <permga/experiments.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <permga/csv.hpp>
#include <permga/parallel.hpp>

namespace permga {

namespace {

std::uint64_t chain_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t value = seed;
    for (const std::uint64_t key : keys)
        value = mix_seed(value, key);
    return value;
}

RunResult dispatch_run(const AlgorithmSpec& spec, const HamProblem& problem, RandomSource& rng,
                       const RunOptions& options) {
    switch (spec.id) {
    case AlgorithmId::rls:
        return rls_run(problem, rng, options);
    case AlgorithmId::ea: {
        const MutationSpace space(spec.family, problem.size());
        return opl_ea_run(problem, space, rng, options);
    }
    case AlgorithmId::ollga: {
        const MutationSpace space(spec.family, problem.size());
        return ollga_run(problem, space, spec.policy, rng, options);
    }
    }
    throw std::invalid_argument("dispatch_run: unknown algorithm");
}

const char* pass_label(const VerifyRow& row) { return row.pass ? "pass" : "fail"; }

} // namespace

const char* to_string(AlgorithmId id) {
    switch (id) {
    case AlgorithmId::rls: return "rls";
    case AlgorithmId::ea: return "ea";
    case AlgorithmId::ollga: return "ollga";
    }
    return "?";
}

std::uint64_t evaluation_budget(double multiplier, int n) {
    if (n < 2 || !(multiplier > 0.0))
        throw std::invalid_argument("evaluation_budget: need n >= 2 and multiplier > 0");
    const double nd = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::ceil(multiplier * nd * nd * std::log(nd)));
}

SweepResult run_sweep(const SweepConfig& config) {
    if (config.runs < 1)
        throw std::invalid_argument("run_sweep: need runs >= 1");
    if (config.sizes.empty())
        throw std::invalid_argument("run_sweep: need at least one size");
    for (const int n : config.sizes)
        if (n < 2)
            throw std::invalid_argument("run_sweep: sizes must be >= 2");

    SweepResult result;
    result.algo_label = to_string(config.algorithm.id);
    result.policy_label = config.policy_label.empty() ? "-" : config.policy_label;

    const std::size_t runs = static_cast<std::size_t>(config.runs);
    result.rows.resize(config.sizes.size() * runs);
    parallel_for(result.rows.size(), config.threads, [&](std::size_t task) {
        const std::size_t size_index = task / runs;
        const int run_index = static_cast<int>(task % runs);
        const int n = config.sizes[size_index];
        const std::uint64_t seed = chain_seed(
            config.master_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(run_index)});
        RandomSource rng(seed);
        const HamProblem problem = HamProblem::sorted(n);
        RunOptions options;
        options.max_evaluations = evaluation_budget(config.budget_multiplier, n);
        const RunResult run = dispatch_run(config.algorithm, problem, rng, options);
        result.rows[task] = SweepRunRow{n,        run_index,      seed,
                                        run.evaluations, run.iterations, run.finished};
    });

    for (std::size_t size_index = 0; size_index < config.sizes.size(); ++size_index) {
        const int n = config.sizes[size_index];
        std::vector<double> values;
        values.reserve(runs);
        for (std::size_t r = 0; r < runs; ++r) {
            const SweepRunRow& row = result.rows[size_index * runs + r];
            if (row.finished || config.include_unfinished)
                values.push_back(static_cast<double>(row.evaluations) /
                                 (static_cast<double>(n) * static_cast<double>(n)));
        }
        SweepSummaryRow summary;
        summary.n = n;
        summary.runs = static_cast<int>(values.size());
        if (values.empty()) {
            summary.mean_evals_over_n2 = std::numeric_limits<double>::quiet_NaN();
            summary.std_evals_over_n2 = std::numeric_limits<double>::quiet_NaN();
        } else {
            const SummaryStat stat = summarize(values);
            summary.mean_evals_over_n2 = stat.mean;
            summary.std_evals_over_n2 = stat.stddev;
        }
        result.summaries.push_back(summary);
    }
    return result;
}

void write_sweep_rows_csv(const SweepResult& result, std::ostream& out) {
    out << "algo,policy,n,run,seed,evaluations,iterations,finished\n";
    for (const SweepRunRow& row : result.rows)
        out << result.algo_label << ',' << result.policy_label << ',' << row.n << ',' << row.run
            << ',' << row.seed << ',' << row.evaluations << ',' << row.iterations << ','
            << (row.finished ? 1 : 0) << '\n';
}

void write_sweep_summary_csv(const SweepResult& result, std::ostream& out) {
    out << "algo,policy,n,runs,mean_evals_over_n2,std_evals_over_n2\n";
    for (const SweepSummaryRow& row : result.summaries)
        out << result.algo_label << ',' << result.policy_label << ',' << row.n << ',' << row.runs
            << ',' << format_double(row.mean_evals_over_n2) << ','
            << format_double(row.std_evals_over_n2) << '\n';
}

LandscapeResult run_landscape(const LandscapeConfig& config) {
    if (config.n < 2)
        throw std::invalid_argument("run_landscape: need n >= 2");
    if (config.runs < 1)
        throw std::invalid_argument("run_landscape: need runs >= 1");
    if (!(config.step > 1.0))
        throw std::invalid_argument("run_landscape: need step > 1");
    if (!(config.lambda_min >= 1.0) || !(config.lambda_max >= config.lambda_min))
        throw std::invalid_argument("run_landscape: need 1 <= lambda_min <= lambda_max");

    LandscapeResult result;
    for (double lambda = config.lambda_min; lambda <= config.lambda_max * (1.0 + 1e-12);
         lambda *= config.step)
        result.lambdas.push_back(lambda);

    struct LevelAgg {
        std::uint64_t upward_runs = 0; ///< runs that left the level with an improvement
        std::uint64_t evaluations = 0; ///< their evaluations at the level
        std::uint64_t iterations = 0;  ///< their iterations at the level
    };
    const std::size_t levels = static_cast<std::size_t>(config.n) + 1;
    std::vector<std::vector<LevelAgg>> per_lambda(result.lambdas.size(),
                                                  std::vector<LevelAgg>(levels));

    // One task per λ keeps aggregation race-free; runs within a task still use
    // per-run derived streams, so the λ-task split never changes the numbers.
    parallel_for(result.lambdas.size(), config.threads, [&](std::size_t lambda_index) {
        const double lambda = result.lambdas[lambda_index];
        const HamProblem problem = HamProblem::sorted(config.n);
        const MutationSpace space(config.family, config.n);
        const LambdaPolicy policy = LambdaPolicy::fixed(lambda);
        auto& agg = per_lambda[lambda_index];
        for (int run_index = 0; run_index < config.runs; ++run_index) {
            const std::uint64_t seed =
                chain_seed(config.master_seed,
                           {static_cast<std::uint64_t>(config.n), lambda_index,
                            static_cast<std::uint64_t>(run_index)});
            RandomSource rng(seed);
            RunOptions options;
            options.max_evaluations = evaluation_budget(config.budget_multiplier, config.n);
            options.record_level_costs = true;
            const RunResult run = ollga_run(problem, space, policy, rng, options);
            for (std::size_t d = 1; d < levels; ++d) {
                const LevelCost& level = run.per_level[d];
                if (level.iterations == 0 || level.improvements == 0)
                    continue; // never visited, or stranded there by the budget
                agg[d].upward_runs += 1;
                agg[d].evaluations += level.evaluations;
                agg[d].iterations += level.iterations;
            }
        }
    });

    std::vector<double> best_mean(levels, std::numeric_limits<double>::infinity());
    for (std::size_t li = 0; li < result.lambdas.size(); ++li)
        for (std::size_t d = 1; d < levels; ++d)
            if (per_lambda[li][d].upward_runs > 0)
                best_mean[d] = std::min(best_mean[d],
                                        static_cast<double>(per_lambda[li][d].evaluations) /
                                            static_cast<double>(per_lambda[li][d].upward_runs));

    for (std::size_t li = 0; li < result.lambdas.size(); ++li) {
        for (std::size_t d = 1; d < levels; ++d) {
            const LevelAgg& agg = per_lambda[li][d];
            if (agg.upward_runs == 0)
                continue;
            LandscapeRow row;
            row.n = config.n;
            row.lambda = result.lambdas[li];
            row.distance = static_cast<int>(d);
            row.samples = agg.upward_runs;
            row.mean_evals_to_improve =
                static_cast<double>(agg.evaluations) / static_cast<double>(agg.upward_runs);
            row.improve_prob =
                static_cast<double>(agg.upward_runs) / static_cast<double>(agg.iterations);
            row.rel_perf = best_mean[d] / row.mean_evals_to_improve;
            result.rows.push_back(row);
        }
    }
    return result;
}

void write_landscape_csv(const LandscapeResult& result, std::ostream& out) {
    out << "n,lambda,distance,samples,mean_evals_to_improve,improve_prob,rel_perf\n";
    for (const LandscapeRow& row : result.rows)
        out << row.n << ',' << format_double(row.lambda) << ',' << row.distance << ','
            << row.samples << ',' << format_double(row.mean_evals_to_improve) << ','
            << format_double(row.improve_prob) << ',' << format_double(row.rel_perf) << '\n';
}

VerifyResult run_verify(const VerifyConfig& config) {
    if (config.tau != 0 && config.tau != -1 && config.tau != -2)
        throw std::invalid_argument("run_verify: tau must be 0, -1 or -2");
    if (config.trials < 1)
        throw std::invalid_argument("run_verify: need trials >= 1");
    if (config.sizes.empty() || config.fitnesses.empty() || config.lambdas.empty() ||
        config.ells.empty())
        throw std::invalid_argument("run_verify: empty grid axis");

    VerifyResult result;
    for (const int n : config.sizes)
        for (const int f : config.fitnesses)
            for (const std::uint64_t lambda : config.lambdas)
                for (const std::uint64_t ell : config.ells) {
                    VerifyRow row;
                    row.tau = config.tau;
                    row.n = n;
                    row.fitness = f;
                    row.lambda = lambda;
                    row.ell = ell;
                    row.mode = config.mode;
                    result.rows.push_back(row);
                }

    parallel_for(result.rows.size(), config.threads, [&](std::size_t index) {
        VerifyRow& row = result.rows[index];
        const auto skip = [&](const char* reason) {
            row.skipped = true;
            row.skip_reason = reason;
        };
        if (row.n < 4)
            return skip("n_lt_4"); // every bound assumes n >= 4
        if (row.fitness < 0 || row.fitness >= row.n)
            return skip("fitness_out_of_range");
        if (row.tau != 0 && row.fitness < 3)
            return skip("fitness_lt_3");
        if (row.fitness == row.n - 1)
            return skip("no_parent_at_fitness");
        if (row.lambda < 1)
            return skip("lambda_lt_1");
        if (row.ell < 1)
            return skip("ell_lt_1");
        const std::uint64_t m =
            static_cast<std::uint64_t>(row.n) * static_cast<std::uint64_t>(row.n - 1) / 2;
        if (config.mode == SamplingMode::without_replacement && row.ell > m)
            return skip("ell_gt_m");

        IterationModel model;
        model.n = row.n;
        model.fitness = row.fitness;
        model.lambda = row.lambda;
        model.ell = row.ell;
        model.mode = config.mode;
        row.bound = bound_for_tau(row.tau, model);
        const std::uint64_t seed = chain_seed(
            config.master_seed,
            {static_cast<std::uint64_t>(row.tau + 2), static_cast<std::uint64_t>(row.n),
             static_cast<std::uint64_t>(row.fitness), row.lambda, row.ell,
             static_cast<std::uint64_t>(config.mode == SamplingMode::with_replacement ? 0 : 1),
             static_cast<std::uint64_t>(config.parent == ParentShape::cycle ? 0 : 1)});
        RandomSource rng(seed);
        const GoodProbabilityEstimate estimate = estimate_good_probability_at_fitness(
            model, row.tau, config.trials, config.parent, rng);
        row.estimate = estimate.estimate;
        row.half_width = estimate.half_width;
        row.pass = row.estimate + row.half_width >= row.bound;
    });

    for (const VerifyRow& row : result.rows) {
        if (row.skipped)
            ++result.skipped;
        else if (!row.pass)
            ++result.failures;
    }
    return result;
}

void write_verify_csv(const VerifyResult& result, std::ostream& out) {
    out << "tau,n,f,lambda,ell,mode,bound,estimate,halfwidth,pass\n";
    for (const VerifyRow& row : result.rows) {
        out << row.tau << ',' << row.n << ',' << row.fitness << ',' << row.lambda << ','
            << row.ell << ',' << to_string(row.mode) << ',';
        if (row.skipped)
            out << ",,,skip:" << row.skip_reason << '\n';
        else
            out << format_double(row.bound) << ',' << format_double(row.estimate) << ','
                << format_double(row.half_width) << ',' << pass_label(row) << '\n';
    }
}

} // namespace permga
