#include <permga/mutation.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permga {

namespace {

// Number of pairs (a, b), a < b, whose first index is below i (1-based).
std::uint64_t pairs_before(std::uint64_t i, std::uint64_t n) {
    return (i - 1) * n - i * (i - 1) / 2;
}

int count_matches(std::span<const int> x, std::span<const int> target, std::size_t lo,
                  std::size_t hi) {
    int matches = 0;
    for (std::size_t k = lo; k <= hi; ++k)
        matches += (x[k] == target[k]);
    return matches;
}

void apply_jump(std::span<int> x, int i, int j) {
    const auto a = static_cast<std::size_t>(i) - 1;
    const auto b = static_cast<std::size_t>(j) - 1;
    if (a < b)
        std::rotate(x.begin() + a, x.begin() + a + 1, x.begin() + b + 1);
    else
        std::rotate(x.begin() + b, x.begin() + a, x.begin() + a + 1);
}

} // namespace

const char* to_string(MutationKind kind) {
    switch (kind) {
    case MutationKind::exchange: return "exchange";
    case MutationKind::reverse: return "reverse";
    case MutationKind::jump: return "jump";
    }
    return "?";
}

MutationSpace::MutationSpace(MutationKind kind, int n) : kind_(kind), n_(n) {
    if (n < 2)
        throw std::invalid_argument("MutationSpace: no elementary mutations exist for n < 2");
    const auto un = static_cast<std::uint64_t>(n);
    m_ = (kind == MutationKind::jump) ? un * (un - 1) : un * (un - 1) / 2;
}

IndexPair MutationSpace::decode(MutationCode code) const {
    if (code >= m_)
        throw std::invalid_argument("MutationSpace::decode: code out of range");
    const auto n = static_cast<std::uint64_t>(n_);
    if (kind_ == MutationKind::jump) {
        const auto i = static_cast<int>(code / (n - 1)) + 1;
        const auto r = static_cast<int>(code % (n - 1));
        const int j = (r + 1 < i) ? r + 1 : r + 2;
        return {i, j};
    }
    // Pairs i < j in lexicographic order; invert the triangular offset.
    const double nd = static_cast<double>(n);
    auto i = static_cast<std::uint64_t>(nd + 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(code)));
    i = std::clamp<std::uint64_t>(i, 1, n - 1);
    while (i > 1 && pairs_before(i, n) > code)
        --i;
    while (i < n - 1 && pairs_before(i + 1, n) <= code)
        ++i;
    const auto j = i + 1 + (code - pairs_before(i, n));
    return {static_cast<int>(i), static_cast<int>(j)};
}

MutationCode MutationSpace::encode(IndexPair pair) const {
    const auto n = static_cast<std::uint64_t>(n_);
    const bool ordered = kind_ == MutationKind::jump;
    if (pair.i < 1 || pair.j < 1 || pair.i > n_ || pair.j > n_ || pair.i == pair.j ||
        (!ordered && pair.i > pair.j))
        throw std::invalid_argument("MutationSpace::encode: invalid index pair");
    if (ordered) {
        const auto r = static_cast<std::uint64_t>(pair.j < pair.i ? pair.j - 1 : pair.j - 2);
        return static_cast<std::uint64_t>(pair.i - 1) * (n - 1) + r;
    }
    return pairs_before(static_cast<std::uint64_t>(pair.i), n) +
           static_cast<std::uint64_t>(pair.j - pair.i - 1);
}

Permutation apply_mutation(const Permutation& x, const MutationSpace& space, MutationCode code) {
    return apply_mutation_list(x, space, std::span<const MutationCode>(&code, 1));
}

Permutation apply_mutation_list(const Permutation& x, const MutationSpace& space,
                                std::span<const MutationCode> list) {
    if (x.size() != space.problem_size())
        throw std::invalid_argument("apply_mutation_list: size mismatch");
    std::vector<int> elems(x.elements().begin(), x.elements().end());
    for (MutationCode code : list) {
        const IndexPair pair = space.decode(code);
        switch (space.kind()) {
        case MutationKind::exchange:
            std::swap(elems[static_cast<std::size_t>(pair.i) - 1],
                      elems[static_cast<std::size_t>(pair.j) - 1]);
            break;
        case MutationKind::reverse:
            std::reverse(elems.begin() + (pair.i - 1), elems.begin() + pair.j);
            break;
        case MutationKind::jump:
            apply_jump(elems, pair.i, pair.j);
            break;
        }
    }
    return Permutation(std::move(elems));
}

int apply_with_delta(std::span<int> x, std::span<const int> target, const MutationSpace& space,
                     MutationCode code) {
    const IndexPair pair = space.decode(code);
    const auto a = static_cast<std::size_t>(pair.i) - 1;
    const auto b = static_cast<std::size_t>(pair.j) - 1;
    switch (space.kind()) {
    case MutationKind::exchange: {
        const int before = (x[a] == target[a]) + (x[b] == target[b]);
        std::swap(x[a], x[b]);
        return (x[a] == target[a]) + (x[b] == target[b]) - before;
    }
    case MutationKind::reverse: {
        const int before = count_matches(x, target, a, b);
        std::reverse(x.begin() + a, x.begin() + b + 1);
        return count_matches(x, target, a, b) - before;
    }
    case MutationKind::jump: {
        const auto lo = std::min(a, b);
        const auto hi = std::max(a, b);
        const int before = count_matches(x, target, lo, hi);
        apply_jump(x, pair.i, pair.j);
        return count_matches(x, target, lo, hi) - before;
    }
    }
    return 0;
}

void undo_mutation(std::span<int> x, const MutationSpace& space, MutationCode code) {
    const IndexPair pair = space.decode(code);
    const auto a = static_cast<std::size_t>(pair.i) - 1;
    const auto b = static_cast<std::size_t>(pair.j) - 1;
    switch (space.kind()) {
    case MutationKind::exchange:
        std::swap(x[a], x[b]);
        break;
    case MutationKind::reverse:
        std::reverse(x.begin() + a, x.begin() + b + 1);
        break;
    case MutationKind::jump:
        apply_jump(x, pair.j, pair.i);
        break;
    }
}

void undo_mutation_list(std::span<int> x, const MutationSpace& space,
                        std::span<const MutationCode> list) {
    for (auto it = list.rbegin(); it != list.rend(); ++it)
        undo_mutation(x, space, *it);
}

} // namespace permga
