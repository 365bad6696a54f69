#include <permga/sampling.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace permga {

namespace {

// Above this mean the zero outcome is unreachable in double precision and
// (1-p)^n would underflow; split instead.
constexpr double kMaxInversionMean = 256.0;

std::uint64_t binomial_by_inversion(std::uint64_t n, double p, RandomSource& rng) {
    const double u = rng.unit_real();
    const double q = 1.0 - p;
    const double ratio = p / q;
    double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
    double cdf = pmf;
    std::uint64_t k = 0;
    while (u >= cdf && k < n) {
        pmf *= ratio * static_cast<double>(n - k) / static_cast<double>(k + 1);
        ++k;
        cdf += pmf;
    }
    return k;
}

void validate_positive_binomial_args(std::uint64_t n, double p) {
    if (n < 1)
        throw std::invalid_argument("sample_positive_binomial: need n >= 1");
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("sample_positive_binomial: need 0 < p <= 1");
}

} // namespace

std::uint64_t sample_binomial(std::uint64_t n, double p, RandomSource& rng) {
    if (n == 0 || p <= 0.0)
        return 0;
    if (p >= 1.0)
        return n;
    if (p > 0.5)
        return n - sample_binomial(n, 1.0 - p, rng);
    if (static_cast<double>(n) * p > kMaxInversionMean) {
        const std::uint64_t half = n / 2;
        return sample_binomial(half, p, rng) + sample_binomial(n - half, p, rng);
    }
    return binomial_by_inversion(n, p, rng);
}

std::uint64_t sample_positive_binomial(std::uint64_t n, double p, RandomSource& rng) {
    validate_positive_binomial_args(n, p);
    if (p >= 1.0)
        return n;
    for (int attempt = 0; attempt < 100; ++attempt) {
        const std::uint64_t value = sample_binomial(n, p, rng);
        if (value > 0)
            return value;
    }
    // Exact inverse CDF of the conditional law. Reached only when P(0) is
    // large, i.e. np well below 1, so the linear-space walk cannot underflow.
    if (static_cast<double>(n) * p > kMaxInversionMean)
        return std::max<std::uint64_t>(1, sample_binomial(n, p, rng)); // unreachable: P(0) < e^-256
    const double log_p0 = static_cast<double>(n) * std::log1p(-p);
    const double tail = -std::expm1(log_p0); // P(value >= 1), exact even for tiny p
    if (tail <= 0.0)
        return 1; // p so small that the conditional law is numerically degenerate
    const double u = rng.unit_real() * tail;
    const double ratio = p / (1.0 - p);
    double pmf = std::exp(log_p0);
    double cdf = 0.0;
    std::uint64_t k = 0;
    do {
        pmf *= ratio * static_cast<double>(n - k) / static_cast<double>(k + 1);
        ++k;
        cdf += pmf;
    } while (u >= cdf && k < n);
    return k;
}

std::uint64_t sample_mutation_count(std::uint64_t m, double p, RandomSource& rng) {
    return sample_positive_binomial(m, p, rng);
}

std::uint64_t sample_crossover_size(std::uint64_t ell, double c, RandomSource& rng) {
    return sample_positive_binomial(ell, c, rng);
}

void shuffle_codes(std::span<MutationCode> codes, RandomSource& rng) {
    for (std::size_t i = codes.size(); i > 1; --i)
        std::swap(codes[i - 1], codes[static_cast<std::size_t>(rng.below(i))]);
}

void sample_mutation_list(const MutationSpace& space, std::uint64_t ell, RandomSource& rng,
                          std::vector<MutationCode>& out) {
    const std::uint64_t m = space.size();
    if (ell < 1 || ell > m)
        throw std::invalid_argument("sample_mutation_list: need 1 <= ell <= m");
    out.clear();
    out.reserve(static_cast<std::size_t>(ell));
    if (2 * ell >= m) {
        // Dense draw: shuffle the whole space and keep a prefix.
        std::vector<MutationCode> all(static_cast<std::size_t>(m));
        std::iota(all.begin(), all.end(), MutationCode{0});
        shuffle_codes(all, rng);
        out.assign(all.begin(), all.begin() + static_cast<std::size_t>(ell));
    } else if (ell <= 64) {
        // Rejection with linear duplicate scan; lists this short make a set
        // slower than the scan.
        while (out.size() < ell) {
            const MutationCode code = rng.below(m);
            if (std::find(out.begin(), out.end(), code) == out.end())
                out.push_back(code);
        }
    } else {
        std::unordered_set<MutationCode> chosen;
        chosen.reserve(static_cast<std::size_t>(ell) * 2);
        while (out.size() < ell) {
            const MutationCode code = rng.below(m);
            if (chosen.insert(code).second)
                out.push_back(code);
        }
    }
    shuffle_codes(out, rng);
}

void subsample_preserving_order(std::span<const MutationCode> list, std::uint64_t s,
                                RandomSource& rng, std::vector<MutationCode>& out) {
    if (s < 1 || s > list.size())
        throw std::invalid_argument("subsample_preserving_order: need 1 <= s <= |list|");
    out.clear();
    out.reserve(static_cast<std::size_t>(s));
    std::uint64_t needed = s;
    std::uint64_t remaining = list.size();
    for (const MutationCode code : list) {
        if (rng.below(remaining) < needed) {
            out.push_back(code);
            if (--needed == 0)
                break;
        }
        --remaining;
    }
}

} // namespace permga
