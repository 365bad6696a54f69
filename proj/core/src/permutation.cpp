#include <permga/permutation.hpp>

#include <numeric>
#include <stdexcept>
#include <utility>

namespace permga {

Permutation::Permutation(std::vector<int> elements) : elems_(std::move(elements)) {
    const auto n = elems_.size();
    if (n == 0)
        throw std::invalid_argument("Permutation: size must be at least 1");
    std::vector<bool> seen(n, false);
    for (int value : elems_) {
        if (value < 1 || static_cast<std::size_t>(value) > n)
            throw std::invalid_argument("Permutation: value out of [1..n]");
        if (seen[static_cast<std::size_t>(value) - 1])
            throw std::invalid_argument("Permutation: duplicate value");
        seen[static_cast<std::size_t>(value) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1)
        throw std::invalid_argument("Permutation: size must be at least 1");
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    return Permutation(already_valid{}, std::move(elems));
}

Permutation random_permutation(int n, RandomSource& rng) {
    if (n < 1)
        throw std::invalid_argument("random_permutation: size must be at least 1");
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    for (std::size_t i = elems.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(elems[i], elems[j]);
    }
    return Permutation(Permutation::already_valid{}, std::move(elems));
}

} // namespace permga
