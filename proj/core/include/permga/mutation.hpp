#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <permga/permutation.hpp>

namespace permga {

/// Families of minimal local moves on permutations.
enum class MutationKind { exchange, reverse, jump };

const char* to_string(MutationKind kind);

/// An elementary mutation encoded as an integer in [0..m-1].
using MutationCode = std::uint64_t;

/// Decoded form of an elementary mutation. Exchange and reverse hold i < j;
/// jump holds an ordered pair i ≠ j (move the element at index i so that it
/// comes to rest at index j).
struct IndexPair {
    int i = 0;
    int j = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// The space M of all elementary mutations of one family at problem size n,
/// with the integer codec over [0..m-1].
///
/// Exchange and reverse enumerate unordered pairs i < j lexicographically
/// (m = n(n-1)/2); reversing a segment twice is the identity, so directed
/// segments would only duplicate moves. Jump enumerates ordered pairs
/// (m = n(n-1)).
class MutationSpace {
  public:
    MutationSpace(MutationKind kind, int n); // throws if n < 2

    MutationKind kind() const { return kind_; }
    int problem_size() const { return n_; }

    /// m, the number of elementary mutations in this family.
    std::uint64_t size() const { return m_; }

    IndexPair decode(MutationCode code) const; // throws if code >= m
    MutationCode encode(IndexPair pair) const; // exact inverse of decode

  private:
    MutationKind kind_;
    int n_;
    std::uint64_t m_;
};

/// Applies one elementary mutation, returning the changed permutation.
Permutation apply_mutation(const Permutation& x, const MutationSpace& space, MutationCode code);

/// Applies a mutation list left to right. Order is significant: applying the
/// same codes in a different order generally yields a different permutation.
Permutation apply_mutation_list(const Permutation& x, const MutationSpace& space,
                                std::span<const MutationCode> list);

/// In-place application on a working buffer, returning the fitness delta with
/// respect to `target` (same-size spans). O(1) for exchange, O(|j-i|) for
/// reverse and jump.
int apply_with_delta(std::span<int> x, std::span<const int> target, const MutationSpace& space,
                     MutationCode code);

/// Applies the inverse move, reverting a previous apply.
void undo_mutation(std::span<int> x, const MutationSpace& space, MutationCode code);

/// Reverts a whole list application (inverse moves in reverse order).
void undo_mutation_list(std::span<int> x, const MutationSpace& space,
                        std::span<const MutationCode> list);

} // namespace permga
