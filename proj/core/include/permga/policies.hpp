#pragma once

namespace permga {

/// Control policy for the offspring-count parameter λ.
struct LambdaPolicy {
    enum class Kind {
        fixed,            ///< λ constant for the whole run
        fixed_log,        ///< λ = 2 ln(n+1), constant once the size is known
        self_adjusting,   ///< multiplicative one-fifth-style control
        fitness_schedule, ///< piecewise fitness-dependent λ
    };

    Kind kind = Kind::fixed;
    double lambda0 = 1.0;    ///< fixed: the constant; self_adjusting: initial λ
    double step = 1.5;       ///< self_adjusting: F, in (1, 2)
    double lambda_min = 1.0; ///< self_adjusting clamp, ≥ 1
    double lambda_max = 1.0;
    double c1 = 0.4; ///< fitness_schedule thresholds, 0 < c1 < 1/2 < c2 < 1
    double c2 = 0.6;

    static LambdaPolicy fixed(double lambda);
    static LambdaPolicy fixed_log();
    static LambdaPolicy self_adjusting(double step, double lambda_min, double lambda_max);
    static LambdaPolicy fitness_schedule(double c1, double c2);
};

/// Multiplicative λ update: divide by F on improvement, multiply by F^(1/4)
/// otherwise, clamped to [lambda_min, lambda_max].
double self_adjusting_update(double lambda, double step, double lambda_min, double lambda_max,
                             bool improved);

/// Piecewise fitness-dependent λ, all leading constants 1:
///   f ≤ √n            → √n
///   √n < f < c1·n     → n/f
///   c1·n ≤ f ≤ c2·n   → 1
///   c2·n < f < n−n^⅓  → √(n/(n−f))
///   f ≥ n−n^⅓         → (2n/3)^⅓
/// The ranges are checked in this order, which makes the function total on
/// 0 ≤ f < n for every n ≥ 2. Throws for f = n (the run is already over).
double lambda_schedule(int n, int fitness, double c1, double c2);

/// Per-run λ state: resolves fixed_log from the problem size, re-queries the
/// schedule from the current fitness, applies the self-adjusting update.
class LambdaController {
  public:
    LambdaController(const LambdaPolicy& policy, int n);

    double current(int fitness) const;
    void on_selection(bool improved);

  private:
    LambdaPolicy policy_;
    int n_;
    double lambda_;
};

} // namespace permga
