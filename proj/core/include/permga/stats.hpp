#pragma once

#include <cstddef>
#include <span>

namespace permga {

/// Five-number summary used by the experiment harness.
struct SummaryStat {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0; ///< sample standard deviation (n-1 denominator); 0 for one value
    double min = 0.0;
    double max = 0.0;
};

/// Throws std::invalid_argument on empty input.
SummaryStat summarize(std::span<const double> values);

} // namespace permga
