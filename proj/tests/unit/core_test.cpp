#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include <permga/ham.hpp>
#include <permga/permutation.hpp>
#include <permga/rng.hpp>

using namespace permga;

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(elems);
    } while (std::next_permutation(elems.begin(), elems.end()));
    return out;
}

} // namespace

TEST_CASE("random source is deterministic and derivable") {
    RandomSource a(42);
    RandomSource b(42);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next_u64() == b.next_u64());

    RandomSource master(7);
    RandomSource c1 = master.derive(0);
    master.next_u64(); // consuming the master must not affect derivation
    RandomSource c2 = master.derive(0);
    CHECK(c1.next_u64() == c2.next_u64());
    CHECK(master.derive(1).next_u64() != master.derive(2).next_u64());
}

TEST_CASE("random source bounded draws stay in range") {
    RandomSource rng(3);
    for (std::uint64_t bound : {1ULL, 2ULL, 7ULL, 1000ULL}) {
        for (int i = 0; i < 200; ++i)
            CHECK(rng.below(bound) < bound);
    }
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("permutation validates its input") {
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    const Permutation p({2, 1, 3});
    CHECK(p.size() == 3);
    CHECK(p.at(1) == 2);
    CHECK(p.at(3) == 3);
    CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));
}

TEST_CASE("random_permutation edge cases and determinism") {
    CHECK_THROWS_AS([] {
        RandomSource rng(1);
        random_permutation(0, rng);
    }(), std::invalid_argument);

    RandomSource rng(5);
    CHECK(random_permutation(1, rng) == Permutation({1}));

    RandomSource r1(99);
    RandomSource r2(99);
    CHECK(random_permutation(3, r1) == random_permutation(3, r2));
}

TEST_CASE("random_permutation is uniform (chi-square at alpha=0.001)") {
    constexpr int kSamples = 60000;
    RandomSource rng(2024);
    std::map<std::vector<int>, int> counts;
    for (int i = 0; i < kSamples; ++i) {
        const Permutation p = random_permutation(3, rng);
        std::vector<int> key(p.elements().begin(), p.elements().end());
        ++counts[key];
    }
    CHECK(counts.size() == 6);
    const double expected = kSamples / 6.0;
    double statistic = 0.0;
    for (const auto& [key, count] : counts) {
        const double diff = count - expected;
        statistic += diff * diff / expected;
    }
    CHECK(statistic < 20.515005652432873); // df = 5
}

TEST_CASE("ham evaluation examples") {
    const HamProblem problem = HamProblem::sorted(3);
    CHECK(problem.evaluate(Permutation({1, 2, 3})) == 3);
    CHECK(problem.evaluate(Permutation({2, 1, 3})) == 1);
    CHECK(problem.evaluate(Permutation({2, 3, 1})) == 0);
    CHECK_THROWS_AS(problem.evaluate(Permutation({1, 2})), std::invalid_argument);
}

TEST_CASE("ham exchange delta examples") {
    const HamProblem problem = HamProblem::sorted(3);
    const Permutation a({2, 1, 3});
    CHECK(problem.delta_exchange(a, 1, 2) == 2);
    CHECK(problem.delta_exchange(a, 1, 3) == -1);
    CHECK(problem.delta_exchange(Permutation({2, 3, 1}), 1, 3) == 1);
    CHECK_THROWS_AS(problem.delta_exchange(a, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(problem.delta_exchange(a, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(problem.delta_exchange(a, 1, 4), std::invalid_argument);
}

TEST_CASE("exchange delta equals the full-evaluation oracle, exhaustively for n <= 6") {
    RandomSource rng(11);
    for (int n = 2; n <= 6; ++n) {
        const std::vector<HamProblem> problems{HamProblem::sorted(n),
                                               HamProblem(random_permutation(n, rng))};
        for (const HamProblem& problem : problems) {
            for (const auto& elems : all_permutations(n)) {
                const Permutation x(elems);
                const int base = problem.evaluate(x);
                for (int i = 1; i < n; ++i) {
                    for (int j = i + 1; j <= n; ++j) {
                        std::vector<int> swapped = elems;
                        std::swap(swapped[static_cast<std::size_t>(i) - 1],
                                  swapped[static_cast<std::size_t>(j) - 1]);
                        const int oracle = problem.evaluate(Permutation(swapped)) - base;
                        CHECK(problem.delta_exchange(x, i, j) == oracle);
                        // swapping twice restores the permutation
                        std::swap(swapped[static_cast<std::size_t>(i) - 1],
                                  swapped[static_cast<std::size_t>(j) - 1]);
                        CHECK(swapped == elems);
                    }
                }
            }
        }
    }
}

TEST_CASE("fitness is invariant under simultaneous value relabeling") {
    RandomSource rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(29));
        const Permutation x = random_permutation(n, rng);
        const Permutation target = random_permutation(n, rng);
        const Permutation sigma = random_permutation(n, rng);
        const auto relabel = [&](const Permutation& p) {
            std::vector<int> out(static_cast<std::size_t>(n));
            for (int pos = 1; pos <= n; ++pos)
                out[static_cast<std::size_t>(pos) - 1] = sigma.at(p.at(pos));
            return Permutation(out);
        };
        const HamProblem before(target);
        const HamProblem after(relabel(target));
        CHECK(before.evaluate(x) == after.evaluate(relabel(x)));
    }
}

TEST_CASE("sum of positive exchange deltas equals the distance") {
    RandomSource rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(63));
        const Permutation x = random_permutation(n, rng);
        const HamProblem problem(random_permutation(n, rng));
        const int distance = n - problem.evaluate(x);
        long long positive = 0;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                positive += std::max(0, problem.delta_exchange(x, i, j));
        CHECK(positive == distance);
    }
}
