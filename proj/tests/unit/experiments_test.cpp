#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include <permga/experiments.hpp>

using namespace permga;

TEST_CASE("evaluation budget formula") {
    CHECK(evaluation_budget(50.0, 16) ==
          static_cast<std::uint64_t>(std::ceil(50.0 * 256.0 * std::log(16.0))));
    CHECK_THROWS_AS(evaluation_budget(50.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(evaluation_budget(0.0, 16), std::invalid_argument);
}

TEST_CASE("sweep with a single run reports that run as the summary") {
    SweepConfig config;
    config.algorithm.id = AlgorithmId::rls;
    config.sizes = {16};
    config.runs = 1;
    config.master_seed = 9;
    const SweepResult result = run_sweep(config);
    REQUIRE(result.rows.size() == 1);
    REQUIRE(result.summaries.size() == 1);
    CHECK(result.summaries[0].runs == 1);
    CHECK(result.summaries[0].mean_evals_over_n2 ==
          doctest::Approx(static_cast<double>(result.rows[0].evaluations) / 256.0)
              .epsilon(1e-12));
    CHECK(result.summaries[0].std_evals_over_n2 == 0.0);
}

TEST_CASE("sweep output is byte-identical across repeats and thread counts") {
    const auto csv_of = [](unsigned threads) {
        SweepConfig config;
        config.algorithm.id = AlgorithmId::ollga;
        config.algorithm.policy = LambdaPolicy::fixed(5.0);
        config.policy_label = "static:5";
        config.sizes = {16, 32};
        config.runs = 20;
        config.master_seed = 77;
        config.threads = threads;
        const SweepResult result = run_sweep(config);
        std::ostringstream raw;
        std::ostringstream summary;
        write_sweep_rows_csv(result, raw);
        write_sweep_summary_csv(result, summary);
        return raw.str() + "\n" + summary.str();
    };
    const std::string once = csv_of(1);
    CHECK(once == csv_of(1));
    CHECK(once == csv_of(2));
    CHECK(once.rfind("algo,policy,n,run,seed,evaluations,iterations,finished\n", 0) == 0);
}

TEST_CASE("sweep mean for local search at n=16 is near 1.3 n^2") {
    SweepConfig config;
    config.algorithm.id = AlgorithmId::rls;
    config.sizes = {16};
    config.runs = 100;
    config.master_seed = 1;
    config.threads = 2;
    const SweepResult result = run_sweep(config);
    REQUIRE(result.summaries.size() == 1);
    const double mean = result.summaries[0].mean_evals_over_n2;
    CHECK(mean > 1.297 * 0.85);
    CHECK(mean < 1.297 * 1.15);
}

TEST_CASE("unfinished runs are excluded from summaries unless requested") {
    SweepConfig config;
    config.algorithm.id = AlgorithmId::rls;
    config.sizes = {16};
    config.runs = 10;
    config.master_seed = 4;
    config.budget_multiplier = 0.001; // budget of one evaluation
    SweepResult result = run_sweep(config);
    CHECK(result.summaries[0].runs == 0);
    CHECK(std::isnan(result.summaries[0].mean_evals_over_n2));

    config.include_unfinished = true;
    result = run_sweep(config);
    CHECK(result.summaries[0].runs == 10);
    CHECK(result.summaries[0].mean_evals_over_n2 > 0.0);
}

TEST_CASE("landscape scan normalizes the best lambda per distance to 1") {
    LandscapeConfig config;
    config.n = 8;
    config.lambda_min = 1.0;
    config.lambda_max = 2.0;
    config.step = 1.4;
    config.runs = 40;
    config.master_seed = 10;
    config.threads = 2;
    const LandscapeResult result = run_landscape(config);
    REQUIRE(result.lambdas.size() == 3);
    REQUIRE_FALSE(result.rows.empty());
    std::map<int, double> best;
    for (const LandscapeRow& row : result.rows) {
        CHECK(row.rel_perf > 0.0);
        CHECK(row.rel_perf <= 1.0);
        CHECK(row.improve_prob > 0.0);
        CHECK(row.improve_prob <= 1.0);
        CHECK(row.samples >= 1);
        auto [it, inserted] = best.emplace(row.distance, row.rel_perf);
        if (!inserted)
            it->second = std::max(it->second, row.rel_perf);
    }
    for (const auto& [distance, max_rel] : best)
        CHECK(max_rel == doctest::Approx(1.0).epsilon(1e-12));

    // deterministic against a rerun with a different worker count
    LandscapeConfig again = config;
    again.threads = 1;
    const LandscapeResult repeat = run_landscape(again);
    std::ostringstream a;
    std::ostringstream b;
    write_landscape_csv(result, a);
    write_landscape_csv(repeat, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("n,lambda,distance,samples,mean_evals_to_improve,improve_prob,rel_perf\n",
                        0) == 0);
}

TEST_CASE("verify grid row matches the census-derived probability") {
    VerifyConfig config;
    config.tau = 0;
    config.sizes = {100};
    config.fitnesses = {0};
    config.lambdas = {1};
    config.ells = {1};
    config.trials = 200000;
    config.master_seed = 5;
    config.threads = 2;
    const VerifyResult result = run_verify(config);
    REQUIRE(result.rows.size() == 1);
    const VerifyRow& row = result.rows[0];
    CHECK_FALSE(row.skipped);
    CHECK(row.bound == doctest::Approx(0.009400185497811216).epsilon(1e-12));
    // the canonical full-cycle parent has exactly n improving exchanges
    const double exact = 100.0 / 4950.0;
    const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(config.trials));
    CHECK(std::abs(row.estimate - exact) < 3 * sigma);
    CHECK(row.pass);
    CHECK(result.failures == 0);
}

TEST_CASE("verify grid skips infeasible points with a reason") {
    VerifyConfig config;
    config.tau = -1;
    config.sizes = {20};
    config.fitnesses = {0, 19, 10};
    config.lambdas = {1};
    config.ells = {1};
    config.trials = 1000;
    const VerifyResult result = run_verify(config);
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0].skipped);
    CHECK(result.rows[0].skip_reason == "fitness_lt_3");
    CHECK(result.rows[1].skipped);
    CHECK(result.rows[1].skip_reason == "no_parent_at_fitness");
    CHECK_FALSE(result.rows[2].skipped);
    CHECK(result.skipped == 2);

    std::ostringstream csv;
    write_verify_csv(result, csv);
    CHECK(csv.str().rfind("tau,n,f,lambda,ell,mode,bound,estimate,halfwidth,pass\n", 0) == 0);
    CHECK(csv.str().find("skip:fitness_lt_3") != std::string::npos);
}

TEST_CASE("verify results are reproducible for a fixed master seed") {
    VerifyConfig config;
    config.tau = -2;
    config.sizes = {20};
    config.fitnesses = {17};
    config.lambdas = {1, 2};
    config.ells = {1, 2};
    config.trials = 20000;
    config.master_seed = 3;
    const VerifyResult a = run_verify(config);
    config.threads = 2;
    const VerifyResult b = run_verify(config);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].estimate == b.rows[i].estimate);
        CHECK(a.rows[i].bound == b.rows[i].bound);
    }
}
