#include <permga/policies.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permga {

LambdaPolicy LambdaPolicy::fixed(double lambda) {
    if (!(lambda >= 1.0))
        throw std::invalid_argument("LambdaPolicy::fixed: need lambda >= 1");
    LambdaPolicy policy;
    policy.kind = Kind::fixed;
    policy.lambda0 = lambda;
    return policy;
}

LambdaPolicy LambdaPolicy::fixed_log() {
    LambdaPolicy policy;
    policy.kind = Kind::fixed_log;
    return policy;
}

LambdaPolicy LambdaPolicy::self_adjusting(double step, double lambda_min, double lambda_max) {
    if (!(step > 1.0) || !(step < 2.0))
        throw std::invalid_argument("LambdaPolicy::self_adjusting: need F in (1, 2)");
    if (!(lambda_min >= 1.0) || !(lambda_max >= lambda_min))
        throw std::invalid_argument("LambdaPolicy::self_adjusting: need 1 <= lambda_min <= lambda_max");
    LambdaPolicy policy;
    policy.kind = Kind::self_adjusting;
    policy.step = step;
    policy.lambda_min = lambda_min;
    policy.lambda_max = lambda_max;
    policy.lambda0 = lambda_min;
    return policy;
}

LambdaPolicy LambdaPolicy::fitness_schedule(double c1, double c2) {
    if (!(c1 > 0.0) || !(c1 < 0.5) || !(c2 > 0.5) || !(c2 < 1.0))
        throw std::invalid_argument("LambdaPolicy::fitness_schedule: need 0 < c1 < 1/2 < c2 < 1");
    LambdaPolicy policy;
    policy.kind = Kind::fitness_schedule;
    policy.c1 = c1;
    policy.c2 = c2;
    return policy;
}

double self_adjusting_update(double lambda, double step, double lambda_min, double lambda_max,
                             bool improved) {
    const double next = improved ? lambda / step : lambda * std::pow(step, 0.25);
    return std::clamp(next, lambda_min, lambda_max);
}

double lambda_schedule(int n, int fitness, double c1, double c2) {
    if (n < 2)
        throw std::invalid_argument("lambda_schedule: need n >= 2");
    if (fitness < 0 || fitness >= n)
        throw std::invalid_argument("lambda_schedule: need 0 <= fitness < n");
    const double nd = static_cast<double>(n);
    const double f = static_cast<double>(fitness);
    const double root = std::sqrt(nd);
    if (f <= root)
        return root;
    if (f < c1 * nd)
        return nd / f;
    if (f <= c2 * nd)
        return 1.0;
    if (f < nd - std::cbrt(nd))
        return std::sqrt(nd / (nd - f));
    return std::cbrt(2.0 * nd / 3.0);
}

LambdaController::LambdaController(const LambdaPolicy& policy, int n) : policy_(policy), n_(n) {
    switch (policy_.kind) {
    case LambdaPolicy::Kind::fixed:
        lambda_ = policy_.lambda0;
        break;
    case LambdaPolicy::Kind::fixed_log:
        lambda_ = 2.0 * std::log(static_cast<double>(n) + 1.0);
        break;
    case LambdaPolicy::Kind::self_adjusting:
        lambda_ = std::clamp(policy_.lambda0, policy_.lambda_min, policy_.lambda_max);
        break;
    case LambdaPolicy::Kind::fitness_schedule:
        lambda_ = 1.0;
        break;
    }
}

double LambdaController::current(int fitness) const {
    if (policy_.kind == LambdaPolicy::Kind::fitness_schedule)
        return lambda_schedule(n_, fitness, policy_.c1, policy_.c2);
    return lambda_;
}

void LambdaController::on_selection(bool improved) {
    if (policy_.kind != LambdaPolicy::Kind::self_adjusting)
        return;
    lambda_ = self_adjusting_update(lambda_, policy_.step, policy_.lambda_min, policy_.lambda_max,
                                    improved);
}

} // namespace permga
