#pragma once

#include <span>
#include <stdexcept>

#include <permga/permutation.hpp>

namespace permga {

/// Fitness family over permutations: the number of positions at which a
/// candidate agrees with a fixed target permutation. Fitness is in [0, n]
/// and reaches n exactly at the target; distance to the optimum is n - f.
class HamProblem {
  public:
    explicit HamProblem(Permutation target) : target_(std::move(target)) {}

    /// Instance whose target is the identity permutation (sorting).
    static HamProblem sorted(int n) { return HamProblem(Permutation::identity(n)); }

    int size() const { return target_.size(); }
    const Permutation& target() const { return target_; }
    std::span<const int> target_elements() const { return target_.elements(); }

    /// Full evaluation, O(n). Throws on size mismatch.
    int evaluate(const Permutation& x) const { return evaluate(x.elements()); }
    int evaluate(std::span<const int> x) const;

    /// Fitness change caused by exchanging positions i and j of x, computed
    /// in O(1) from those two positions only. Equals
    /// evaluate(x after the swap) - evaluate(x). Requires 1 ≤ i < j ≤ n.
    int delta_exchange(const Permutation& x, int i, int j) const {
        return delta_exchange(x.elements(), i, j);
    }
    int delta_exchange(std::span<const int> x, int i, int j) const;

  private:
    Permutation target_;
};

inline int HamProblem::evaluate(std::span<const int> x) const {
    const auto target = target_.elements();
    if (x.size() != target.size())
        throw std::invalid_argument("HamProblem::evaluate: size mismatch");
    int fitness = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        fitness += (x[k] == target[k]);
    return fitness;
}

inline int HamProblem::delta_exchange(std::span<const int> x, int i, int j) const {
    const auto target = target_.elements();
    if (x.size() != target.size())
        throw std::invalid_argument("HamProblem::delta_exchange: size mismatch");
    if (i < 1 || i >= j || static_cast<std::size_t>(j) > x.size())
        throw std::invalid_argument("HamProblem::delta_exchange: need 1 <= i < j <= n");
    const std::size_t a = static_cast<std::size_t>(i) - 1;
    const std::size_t b = static_cast<std::size_t>(j) - 1;
    const int before = (x[a] == target[a]) + (x[b] == target[b]);
    const int after = (x[b] == target[a]) + (x[a] == target[b]);
    return after - before;
}

} // namespace permga
