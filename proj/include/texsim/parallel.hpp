#pragma once

#include <functional>

namespace texsim {

// Runs fn(0..n-1) across `jobs` worker threads (inline when jobs <= 1).
// The first exception thrown by a task is rethrown after all workers join.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace texsim
