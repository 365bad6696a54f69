// Command-line front end: runtime sweeps, λ-landscape scans, and
// bound-vs-estimate verification, all emitting CSV.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <permga/experiments.hpp>

namespace {

using namespace permga;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (values.empty())
        throw CLI::ValidationError(std::string(what) + ": empty list");
    return values;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> values;
    for (const int v : parse_int_list(text, what)) {
        if (v < 0)
            throw CLI::ValidationError(std::string(what) + ": negative value");
        values.push_back(static_cast<std::uint64_t>(v));
    }
    return values;
}

MutationKind parse_family(const std::string& name) {
    if (name == "exchange")
        return MutationKind::exchange;
    if (name == "reverse")
        return MutationKind::reverse;
    if (name == "jump")
        return MutationKind::jump;
    throw CLI::ValidationError("--family must be exchange, reverse or jump");
}

LambdaPolicy parse_policy(const std::string& spec) {
    const auto args_of = [&](const std::string& prefix) { return spec.substr(prefix.size()); };
    const auto split_doubles = [](const std::string& text) {
        std::vector<double> values;
        std::stringstream stream(text);
        std::string item;
        while (std::getline(stream, item, ','))
            values.push_back(std::stod(item));
        return values;
    };
    try {
        if (spec == "log")
            return LambdaPolicy::fixed_log();
        if (spec.rfind("static:", 0) == 0)
            return LambdaPolicy::fixed(std::stod(args_of("static:")));
        if (spec.rfind("adjust:", 0) == 0) {
            const auto v = split_doubles(args_of("adjust:"));
            if (v.size() != 3)
                throw std::invalid_argument("adjust needs F,lambda_min,lambda_max");
            return LambdaPolicy::self_adjusting(v[0], v[1], v[2]);
        }
        if (spec.rfind("theory:", 0) == 0) {
            const auto v = split_doubles(args_of("theory:"));
            if (v.size() != 2)
                throw std::invalid_argument("theory needs c1,c2");
            return LambdaPolicy::fitness_schedule(v[0], v[1]);
        }
    } catch (const std::exception& error) {
        throw CLI::ValidationError(std::string("--policy: ") + error.what());
    }
    throw CLI::ValidationError(
        "--policy must be static:<lambda>, log, adjust:<F>,<min>,<max> or theory:<c1>,<c2>");
}

std::string summary_path_for(const std::string& out) {
    const auto dot = out.rfind('.');
    if (dot == std::string::npos || out.find('/', dot) != std::string::npos)
        return out + ".summary.csv";
    return out.substr(0, dot) + ".summary" + out.substr(dot);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream file(path);
    if (!file)
        throw CLI::ValidationError("--out: cannot open '" + path + "' for writing");
    return file;
}

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation search heuristics: sweeps, landscape scans, bound verification"};
    app.require_subcommand(1);

    std::string sweep_algo;
    std::string sweep_policy = "log";
    std::string sweep_sizes = "16,32,64,128,256,512,1024,2048";
    std::string sweep_family = "exchange";
    int sweep_runs = 100;
    std::uint64_t sweep_seed = 1;
    double sweep_budget_mult = 50.0;
    std::string sweep_out;
    unsigned sweep_threads = default_threads();
    bool sweep_include_unfinished = false;

    auto* sweep = app.add_subcommand("sweep", "Run-time sweep over problem sizes");
    sweep->add_option("--algo", sweep_algo, "Algorithm: rls, ea or ollga")->required();
    sweep->add_option("--policy", sweep_policy,
                      "ollga lambda policy: static:<l>|log|adjust:<F>,<min>,<max>|theory:<c1>,<c2>");
    sweep->add_option("--sizes", sweep_sizes, "Comma-separated problem sizes");
    sweep->add_option("--runs", sweep_runs, "Independent runs per size");
    sweep->add_option("--seed", sweep_seed, "Master seed");
    sweep->add_option("--budget-mult", sweep_budget_mult,
                      "Evaluation cap multiplier (cap = mult*n^2*ln n)");
    sweep->add_option("--out", sweep_out, "Raw per-run CSV path")->required();
    sweep->add_option("--threads", sweep_threads, "Worker threads");
    sweep->add_option("--family", sweep_family, "Mutation family: exchange, reverse or jump");
    sweep->add_flag("--include-unfinished", sweep_include_unfinished,
                    "Include budget-capped runs in the summary statistics");

    LandscapeConfig land;
    std::string land_out;
    land.threads = default_threads();
    auto* landscape = app.add_subcommand("landscape", "Per-lambda, per-distance cost scan");
    landscape->add_option("--n", land.n, "Problem size")->required();
    landscape->add_option("--lambda-min", land.lambda_min, "Lattice start");
    landscape->add_option("--lambda-max", land.lambda_max, "Lattice end");
    landscape->add_option("--step", land.step, "Multiplicative lattice step");
    landscape->add_option("--runs", land.runs, "Runs per lambda");
    landscape->add_option("--seed", land.master_seed, "Master seed");
    landscape->add_option("--budget-mult", land.budget_multiplier, "Evaluation cap multiplier");
    landscape->add_option("--out", land_out, "CSV path")->required();
    landscape->add_option("--threads", land.threads, "Worker threads");

    int verify_tau = 0;
    std::string verify_n = "20,50,100";
    std::string verify_f;
    std::string verify_lambda = "1,2,3,5";
    std::string verify_ell = "1,2,3,5";
    std::uint64_t verify_trials = 1000000;
    std::string verify_mode = "proof";
    std::string verify_parent = "cycle";
    std::uint64_t verify_seed = 1;
    std::string verify_out;
    unsigned verify_threads = default_threads();

    auto* verify = app.add_subcommand("verify", "Monte-Carlo check of the probability bounds");
    verify->add_option("--tau", verify_tau, "Threshold: 0, -1 or -2")->required();
    verify->add_option("--n", verify_n, "Comma-separated problem sizes");
    verify->add_option("--f", verify_f, "Comma-separated parent fitness values")->required();
    verify->add_option("--lambda", verify_lambda, "Comma-separated mutant counts");
    verify->add_option("--ell", verify_ell, "Comma-separated mutation counts");
    verify->add_option("--trials", verify_trials, "Trials per grid point");
    verify->add_option("--mode", verify_mode, "Sampling: proof (with repl.) or algo (distinct)");
    verify->add_option("--parent", verify_parent, "Parent shape: cycle or random");
    verify->add_option("--seed", verify_seed, "Master seed");
    verify->add_option("--out", verify_out, "CSV path")->required();
    verify->add_option("--threads", verify_threads, "Worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            SweepConfig config;
            if (sweep_algo == "rls")
                config.algorithm.id = AlgorithmId::rls;
            else if (sweep_algo == "ea")
                config.algorithm.id = AlgorithmId::ea;
            else if (sweep_algo == "ollga")
                config.algorithm.id = AlgorithmId::ollga;
            else
                throw CLI::ValidationError("--algo must be rls, ea or ollga");
            config.algorithm.family = parse_family(sweep_family);
            if (config.algorithm.id == AlgorithmId::ollga) {
                config.algorithm.policy = parse_policy(sweep_policy);
                config.policy_label = sweep_policy;
            }
            config.sizes = parse_int_list(sweep_sizes, "--sizes");
            config.runs = sweep_runs;
            config.master_seed = sweep_seed;
            config.budget_multiplier = sweep_budget_mult;
            config.include_unfinished = sweep_include_unfinished;
            config.threads = sweep_threads;

            const SweepResult result = run_sweep(config);
            auto raw = open_out(sweep_out);
            write_sweep_rows_csv(result, raw);
            auto summary = open_out(summary_path_for(sweep_out));
            write_sweep_summary_csv(result, summary);
            write_sweep_summary_csv(result, std::cout);
            return 0;
        }
        if (landscape->parsed()) {
            const LandscapeResult result = run_landscape(land);
            auto out = open_out(land_out);
            write_landscape_csv(result, out);
            std::cout << "lambda values: " << result.lambdas.size()
                      << ", rows: " << result.rows.size() << '\n';
            return 0;
        }
        if (verify->parsed()) {
            VerifyConfig config;
            config.tau = verify_tau;
            config.sizes = parse_int_list(verify_n, "--n");
            config.fitnesses = parse_int_list(verify_f, "--f");
            config.lambdas = parse_u64_list(verify_lambda, "--lambda");
            config.ells = parse_u64_list(verify_ell, "--ell");
            config.trials = verify_trials;
            if (verify_mode == "proof")
                config.mode = SamplingMode::with_replacement;
            else if (verify_mode == "algo")
                config.mode = SamplingMode::without_replacement;
            else
                throw CLI::ValidationError("--mode must be proof or algo");
            if (verify_parent == "cycle")
                config.parent = ParentShape::cycle;
            else if (verify_parent == "random")
                config.parent = ParentShape::random;
            else
                throw CLI::ValidationError("--parent must be cycle or random");
            config.master_seed = verify_seed;
            config.threads = verify_threads;

            const VerifyResult result = run_verify(config);
            auto out = open_out(verify_out);
            write_verify_csv(result, out);
            std::cout << "rows: " << result.rows.size() << ", skipped: " << result.skipped
                      << ", failures: " << result.failures << '\n';
            return result.failures == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& error) {
        return app.exit(error);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    }
    return 0;
}
