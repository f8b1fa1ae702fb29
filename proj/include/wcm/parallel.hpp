#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace wcm {

/// Worker count used by parallelFor; 1 runs inline.
void setThreadCount(int threads);
int threadCount();

/// Runs body(i) for i in [0, n) on the configured number of threads. Results
/// must be written to per-index slots so the outcome does not depend on
/// scheduling. If bodies throw, the exception of the smallest index is rethrown.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wcm
