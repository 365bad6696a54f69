#include <doctest.h>

#include <stdexcept>
#include <permga/bounds.hpp>
#include <permga/rng.hpp>

using namespace permga;

namespace {

IterationModel model_of(int n, int f, std::uint64_t lambda, std::uint64_t ell) {
    IterationModel model;
    model.n = n;
    model.fitness = f;
    model.lambda = lambda;
    model.ell = ell;
    return model;
}

} // namespace

TEST_CASE("tau=0 bound values") {
    CHECK(bound_tau0(model_of(100, 0, 1, 1)) ==
          doctest::Approx(0.009400185497811216).epsilon(1e-12));
    CHECK(bound_tau0(model_of(100, 0, 10, 10)) ==
          doctest::Approx(0.0007676890425695094).epsilon(1e-12));
}

TEST_CASE("tau=0 bound degenerates to zero when the fitness is too high") {
    CHECK(bound_tau0(model_of(100, 97, 1, 1)) == 0.0); // f + 2l + 1 = n
    CHECK(bound_tau0(model_of(100, 98, 1, 1)) == 0.0);
    CHECK(bound_tau0(model_of(100, 99, 2, 3)) == 0.0);
}

TEST_CASE("tau=0 bound preconditions") {
    CHECK_THROWS_AS(bound_tau0(model_of(3, 0, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(bound_tau0(model_of(100, 100, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(bound_tau0(model_of(100, -1, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(bound_tau0(model_of(100, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("tau=-1 bound values") {
    CHECK(bound_tau1(model_of(100, 50, 1, 1)) ==
          doctest::Approx(0.00505050505050505).epsilon(1e-12));
    CHECK(bound_tau1(model_of(100, 50, 2, 1)) ==
          doctest::Approx(0.007397204366901336).epsilon(1e-12));
}

TEST_CASE("tau=-1 middle factor vanishes at lambda=1 regardless of its base") {
    // here the middle base is negative but its exponent is zero
    const double value = bound_tau1(model_of(100, 50, 1, 25));
    CHECK(value == doctest::Approx(1.1179594961799111e-39).epsilon(1e-9));
    CHECK(value > 0.0);
    // with a second mutant the negative base matters and the bound collapses
    CHECK(bound_tau1(model_of(100, 50, 2, 25)) == 0.0);
}

TEST_CASE("tau=-1 bound preconditions") {
    CHECK_THROWS_AS(bound_tau1(model_of(100, 2, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(bound_tau1(model_of(100, 100, 1, 1)), std::invalid_argument);
}

TEST_CASE("tau=-2 bound values") {
    CHECK(bound_tau2(model_of(100, 97, 1, 1)) ==
          doctest::Approx(0.00030303030303030303).epsilon(1e-12));
    CHECK(bound_tau2(model_of(100, 99, 5, 5)) ==
          doctest::Approx(2.512496252696888e-05).epsilon(1e-12));
    // lambda = ell = 1: both exponents vanish, (n-f)/(n(n-1)) remains
    CHECK(bound_tau2(model_of(100, 90, 1, 1)) ==
          doctest::Approx(0.00101010101010101).epsilon(1e-12));
}

TEST_CASE("tau=-2 bound degenerates to zero outside its regime") {
    CHECK(bound_tau2(model_of(20, 17, 5, 5)) == 0.0); // n-1 <= 2 min{...}
}

TEST_CASE("tau=-2 bound preconditions") {
    CHECK_THROWS_AS(bound_tau2(model_of(3, 3, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(bound_tau2(model_of(100, 2, 1, 1)), std::invalid_argument);
}

TEST_CASE("bounds stay within [0, 1] across a random grid") {
    RandomSource rng(301);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(197));
        const int f = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const std::uint64_t lambda = 1 + rng.below(20);
        const std::uint64_t ell = 1 + rng.below(20);
        const IterationModel model = model_of(n, f, lambda, ell);
        const double b0 = bound_tau0(model);
        CHECK(b0 >= 0.0);
        CHECK(b0 <= 1.0);
        if (f >= 3) {
            const double b1 = bound_tau1(model);
            const double b2 = bound_tau2(model);
            CHECK(b1 >= 0.0);
            CHECK(b1 <= 1.0);
            CHECK(b2 >= 0.0);
            CHECK(b2 <= 1.0);
        }
    }
}

TEST_CASE("tau=-1 bound maximizer near f = n/2 is reported, not assumed") {
    // The bound peaks at small lambda*ell; report the grid maximizer instead
    // of trusting any closed-form claim about it.
    const int n = 100;
    const int f = 50;
    double best = 0.0;
    std::uint64_t best_lambda = 1;
    std::uint64_t best_ell = 1;
    for (std::uint64_t lambda = 1; lambda <= 50; ++lambda) {
        for (std::uint64_t ell = 1; ell <= 50; ++ell) {
            const double value = bound_tau1(model_of(n, f, lambda, ell));
            if (value > best) {
                best = value;
                best_lambda = lambda;
                best_ell = ell;
            }
        }
    }
    MESSAGE("tau=-1 bound at n=100, f=50 is maximized at lambda=", best_lambda,
            ", ell=", best_ell, " with value ", best, " (n*value = ", best * n, ")");
    CHECK(best > 0.0);
    CHECK(best_lambda * best_ell >= 1);
    // the maximum beats the all-ones corner or sits there
    CHECK(best >= bound_tau1(model_of(n, f, 1, 1)));
}

TEST_CASE("bound_for_tau dispatches and rejects other thresholds") {
    const IterationModel model = model_of(100, 50, 2, 2);
    CHECK(bound_for_tau(0, model) == bound_tau0(model));
    CHECK(bound_for_tau(-1, model) == bound_tau1(model));
    CHECK(bound_for_tau(-2, model) == bound_tau2(model));
    CHECK_THROWS_AS(bound_for_tau(1, model), std::invalid_argument);
}
