#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace freewidth {

// Worker count: FREEWIDTH_THREADS if set (>= 1), else hardware concurrency
// clamped to 8. Callers must write results indexed by task id so the output
// is identical for any worker count.
int worker_count();

void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace freewidth
