#include <permga/rng.hpp>

#include <stdexcept>

namespace permga {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    std::uint64_t h = splitmix64(state);
    state = h ^ index;
    return splitmix64(state);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
    // Run the raw seed through the mixer so nearby seeds do not produce
    // correlated engine states.
    std::uint64_t state = seed;
    engine_.seed(splitmix64(state));
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("RandomSource::below: bound must be positive");
    // Lemire's multiply-shift method with rejection for exact uniformity.
    unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(next_u64()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

} // namespace permga
