#pragma once

#include <cstdint>
#include <random>

namespace permga {

/// Mixes a seed and an index into a decorrelated child seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Seedable deterministic random source.
///
/// Every stochastic operation in this library takes a RandomSource explicitly;
/// there is no global generator. Identical seeds produce identical streams.
/// Child streams for independent runs come from derive(), which depends only
/// on the construction seed, never on how much of this stream was consumed.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Independent child stream for (seed, index).
    RandomSource derive(std::uint64_t index) const { return RandomSource(mix_seed(seed_, index)); }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1).
    double unit_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit_real() < p; }

    /// Underlying engine, for use with standard distributions.
    std::mt19937_64& engine() { return engine_; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace permga
