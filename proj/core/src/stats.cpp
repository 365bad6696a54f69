#include <permga/stats.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permga {

SummaryStat summarize(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("summarize: empty input");
    SummaryStat stat;
    stat.count = values.size();
    stat.min = values.front();
    stat.max = values.front();
    double sum = 0.0;
    for (const double value : values) {
        sum += value;
        stat.min = std::min(stat.min, value);
        stat.max = std::max(stat.max, value);
    }
    stat.mean = sum / static_cast<double>(stat.count);
    if (stat.count >= 2) {
        double squares = 0.0;
        for (const double value : values) {
            const double centered = value - stat.mean;
            squares += centered * centered;
        }
        stat.stddev = std::sqrt(squares / static_cast<double>(stat.count - 1));
    }
    return stat;
}

} // namespace permga
