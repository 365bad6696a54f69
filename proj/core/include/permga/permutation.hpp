#pragma once

#include <span>
#include <vector>

#include <permga/rng.hpp>

namespace permga {

/// A bijection on [1..n]. Positions and values are both 1-based at this
/// interface. Instances are immutable after construction and safe to share
/// across threads.
class Permutation {
  public:
    /// Validates that `elements` is a bijection of [1..n] with n ≥ 1;
    /// throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> elements);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(elems_.size()); }

    /// Value at position `pos`, 1 ≤ pos ≤ size().
    int at(int pos) const { return elems_[static_cast<std::size_t>(pos) - 1]; }

    std::span<const int> elements() const { return elems_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    struct already_valid {};
    Permutation(already_valid, std::vector<int> elements) : elems_(std::move(elements)) {}

    friend Permutation random_permutation(int n, RandomSource& rng);

    std::vector<int> elems_;
};

/// Uniform sample over all n! permutations (unbiased Fisher-Yates). n ≥ 1.
Permutation random_permutation(int n, RandomSource& rng);

} // namespace permga
