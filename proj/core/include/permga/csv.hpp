#pragma once

#include <charconv>
#include <string>

namespace permga {

/// Shortest round-trip decimal form of a double; byte-stable across runs.
inline std::string format_double(double value) {
    char buffer[32];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec;
    return std::string(buffer, end);
}

} // namespace permga
