#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <permga/mutation.hpp>
#include <permga/rng.hpp>

namespace permga {

/// Exact Binomial(n, p) sample via CDF inversion. Large-mean cases are split
/// into independent halves so the walk stays O(np) and the pmf never
/// underflows.
std::uint64_t sample_binomial(std::uint64_t n, double p, RandomSource& rng);

/// Sample from [Binomial(n, p) | value > 0]. Draws the plain binomial and
/// rejects zeros, which costs O(1) draws expected whenever np ≥ 1; after 100
/// rejections it switches to exact inverse-CDF sampling of the conditional
/// distribution, bounding the latency when np is far below 1.
/// Requires n ≥ 1 and 0 < p ≤ 1.
std::uint64_t sample_positive_binomial(std::uint64_t n, double p, RandomSource& rng);

/// Number of elementary mutations for one mutant: [B(m, p) | ℓ > 0].
std::uint64_t sample_mutation_count(std::uint64_t m, double p, RandomSource& rng);

/// Number of mutations a crossover offspring inherits: [B(ℓ, c) | s > 0].
std::uint64_t sample_crossover_size(std::uint64_t ell, double c, RandomSource& rng);

/// In-place Fisher-Yates shuffle driven by `rng`.
void shuffle_codes(std::span<MutationCode> codes, RandomSource& rng);

/// ℓ distinct codes drawn uniformly without replacement from `space`, then
/// explicitly shuffled so all ℓ! orders are equally likely. 1 ≤ ℓ ≤ m.
void sample_mutation_list(const MutationSpace& space, std::uint64_t ell, RandomSource& rng,
                          std::vector<MutationCode>& out);

/// Uniformly random s-subset of `list`, emitted in the original relative
/// order (selection sampling). 1 ≤ s ≤ |list|.
void subsample_preserving_order(std::span<const MutationCode> list, std::uint64_t s,
                                RandomSource& rng, std::vector<MutationCode>& out);

} // namespace permga
