#include <doctest.h>

#include <stdexcept>
#include <cmath>

#include <permga/policies.hpp>
#include <permga/rng.hpp>

using namespace permga;

TEST_CASE("self-adjusting update follows the multiplicative rule") {
    CHECK(self_adjusting_update(4.0, 1.5, 1.0, 100.0, true) ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(self_adjusting_update(4.0, 1.5, 1.0, 100.0, false) ==
          doctest::Approx(4.4267276788012856).epsilon(1e-12));
    CHECK(self_adjusting_update(100.0, 1.5, 1.0, 100.0, false) == 100.0);
    CHECK(self_adjusting_update(1.0, 1.5, 1.0, 100.0, true) == 1.0);
}

TEST_CASE("policy constructors validate their parameters") {
    CHECK_THROWS_AS(LambdaPolicy::fixed(0.5), std::invalid_argument);
    CHECK_THROWS_AS(LambdaPolicy::self_adjusting(1.0, 1.0, 8.0), std::invalid_argument);
    CHECK_THROWS_AS(LambdaPolicy::self_adjusting(2.0, 1.0, 8.0), std::invalid_argument);
    CHECK_THROWS_AS(LambdaPolicy::self_adjusting(1.5, 0.5, 8.0), std::invalid_argument);
    CHECK_THROWS_AS(LambdaPolicy::self_adjusting(1.5, 4.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(LambdaPolicy::fitness_schedule(0.6, 0.7), std::invalid_argument);
    CHECK_THROWS_AS(LambdaPolicy::fitness_schedule(0.4, 0.5), std::invalid_argument);
}

TEST_CASE("fitness-dependent schedule values") {
    CHECK(lambda_schedule(10000, 50, 0.4, 0.6) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(lambda_schedule(10000, 5000, 0.4, 0.6) == 1.0);
    CHECK(lambda_schedule(10000, 9999, 0.4, 0.6) ==
          doctest::Approx(18.820720577620566).epsilon(1e-12));
    // boundary: f = sqrt(n) belongs to the first range
    CHECK(lambda_schedule(10000, 100, 0.4, 0.6) == doctest::Approx(100.0).epsilon(1e-12));
    // just above it the 1/f branch applies
    CHECK(lambda_schedule(10000, 101, 0.4, 0.6) ==
          doctest::Approx(10000.0 / 101.0).epsilon(1e-12));
    CHECK_THROWS_AS(lambda_schedule(10000, 10000, 0.4, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(lambda_schedule(10000, -1, 0.4, 0.6), std::invalid_argument);
}

TEST_CASE("schedule is total and stays within [1, n]") {
    RandomSource rng(139);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4999));
        for (int f = 0; f < n; f += 1 + static_cast<int>(rng.below(7))) {
            const double lambda = lambda_schedule(n, f, 0.4, 0.6);
            CHECK(lambda >= 1.0);
            CHECK(lambda <= static_cast<double>(n));
        }
    }
}

TEST_CASE("lambda controller resolves policies") {
    const int n = 256;
    const LambdaController fixed(LambdaPolicy::fixed(10.0), n);
    CHECK(fixed.current(0) == 10.0);

    const LambdaController log_policy(LambdaPolicy::fixed_log(), n);
    CHECK(log_policy.current(0) == doctest::Approx(2.0 * std::log(257.0)).epsilon(1e-12));

    LambdaController adjusting(LambdaPolicy::self_adjusting(1.5, 1.0, 64.0), n);
    CHECK(adjusting.current(0) == 1.0);
    adjusting.on_selection(false);
    CHECK(adjusting.current(0) == doctest::Approx(std::pow(1.5, 0.25)).epsilon(1e-12));
    adjusting.on_selection(true);
    CHECK(adjusting.current(0) == 1.0); // clamped at lambda_min

    const LambdaController schedule(LambdaPolicy::fitness_schedule(0.4, 0.6), n);
    CHECK(schedule.current(0) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(schedule.current(128) == 1.0);
}
