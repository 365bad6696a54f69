#pragma once

#include <cstddef>
#include <functional>

namespace permga {

/// Runs task(i) for every i in [0, count) on up to `threads` workers. Tasks
/// must write only into their own preassigned result slots; the i→work
/// mapping is fixed, so aggregated output is deterministic regardless of
/// scheduling. The first exception thrown by a task is rethrown here.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& task);

} // namespace permga
