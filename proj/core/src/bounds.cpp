#include <permga/bounds.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permga {

namespace {

void validate_common(const IterationModel& model) {
    if (model.fitness < 0 || model.fitness >= model.n)
        throw std::invalid_argument("bound: need 0 <= fitness < n");
    if (model.lambda < 1 || model.ell < 1)
        throw std::invalid_argument("bound: need lambda >= 1 and ell >= 1");
}

double clamp01(double value) { return std::clamp(value, 0.0, 1.0); }

} // namespace

const char* to_string(SamplingMode mode) {
    return mode == SamplingMode::with_replacement ? "proof" : "algo";
}

double bound_tau0(const IterationModel& model) {
    if (model.n < 4)
        throw std::invalid_argument("bound_tau0: need n >= 4");
    validate_common(model);
    const double n = model.n;
    const double f = model.fitness;
    const double lambda = static_cast<double>(model.lambda);
    const double ell = static_cast<double>(model.ell);
    const double reach = std::min(n, f + 2.0 * ell + 1.0);
    if (n - reach <= 0.0)
        return 0.0;
    const double exponent =
        -2.0 * ell * (lambda - 1.0) / (n - 3.0) - 2.0 * ell * reach / (n - reach);
    return clamp01(lambda * ell / n * std::exp(exponent));
}

double bound_tau1(const IterationModel& model) {
    if (model.fitness < 3)
        throw std::invalid_argument("bound_tau1: need fitness >= 3");
    validate_common(model);
    const double n = model.n;
    const double f = model.fitness;
    const double lambda = static_cast<double>(model.lambda);
    const double ell = static_cast<double>(model.ell);
    const double lead = lambda * ell / (n + f - 3.0);
    const double down_base = (f + 1.0) / (n - 1.0) * (2.0 - f / n) - 4.0 * ell / (n - 1.0);
    const double up_base =
        1.0 - (2.0 * ell * (n + f - 3.0) + (f - 2.0) * (f - 3.0)) / (n * (n - 1.0));
    if (up_base <= 0.0)
        return 0.0;
    const double down_exponent = (lambda - 1.0) * ell;
    double down_factor = 1.0; // zero exponent: 1 regardless of the base
    if (down_exponent > 0.0) {
        if (down_base <= 0.0)
            return 0.0;
        down_factor = std::pow(down_base, down_exponent);
    }
    return clamp01(lead * down_factor * std::pow(up_base, ell));
}

double bound_tau2(const IterationModel& model) {
    if (model.n < 4)
        throw std::invalid_argument("bound_tau2: need n >= 4");
    if (model.fitness < 3)
        throw std::invalid_argument("bound_tau2: need fitness >= 3");
    validate_common(model);
    const double n = model.n;
    const double f = model.fitness;
    const double lambda = static_cast<double>(model.lambda);
    const double ell = static_cast<double>(model.ell);
    const double reach = std::min(n, (n - f) + 2.0 * (ell - 1.0));
    if (n - 1.0 - 2.0 * reach <= 0.0)
        return 0.0;
    const double lead = lambda * ell * std::max(1.0, (n - f) - 2.0 * (ell - 1.0)) / (n * (n - 1.0));
    const double exponent = -2.0 * (ell - 1.0) * (2.0 * n - 3.0) / ((n - 2.0) * (n - 3.0)) -
                            2.0 * (lambda - 1.0) * ell * reach / (n - 1.0 - 2.0 * reach);
    return clamp01(lead * std::exp(exponent));
}

double bound_for_tau(int tau, const IterationModel& model) {
    switch (tau) {
    case 0: return bound_tau0(model);
    case -1: return bound_tau1(model);
    case -2: return bound_tau2(model);
    default: throw std::invalid_argument("bound_for_tau: tau must be 0, -1 or -2");
    }
}

} // namespace permga
