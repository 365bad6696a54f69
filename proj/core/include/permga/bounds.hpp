#pragma once

#include <cstdint>

namespace permga {

/// How the ℓ elementary mutations of one mutant are drawn.
enum class SamplingMode {
    with_replacement,    ///< ℓ independent uniform draws (the product-bound model)
    without_replacement, ///< ℓ distinct codes (what the algorithm samples)
};

const char* to_string(SamplingMode mode);

/// One-iteration model for the good-iteration probability bounds: λ mutants,
/// each built from ℓ elementary exchange mutations, parent fitness f.
struct IterationModel {
    int n = 0;
    int fitness = 0;
    std::uint64_t lambda = 1;
    std::uint64_t ell = 1;
    SamplingMode mode = SamplingMode::with_replacement;
};

/// Closed-form lower bounds on the probability that an iteration is good with
/// respect to a threshold τ (see classify_iteration). The expressions return
/// 0 whenever an intermediate base or denominator leaves the regime where the
/// algebra is meaningful — a zero lower bound is always sound — and the final
/// value is clamped into [0, 1].

/// τ = 0 bound. Requires n ≥ 4.
double bound_tau0(const IterationModel& model);

/// τ = -1 bound. Requires parent fitness ≥ 3.
double bound_tau1(const IterationModel& model);

/// τ = -2 bound. Requires parent fitness ≥ 3 and n ≥ 4.
double bound_tau2(const IterationModel& model);

/// Dispatch on τ ∈ {0, -1, -2}.
double bound_for_tau(int tau, const IterationModel& model);

} // namespace permga
