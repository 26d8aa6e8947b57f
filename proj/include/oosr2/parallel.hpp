#pragma once

#include <functional>

namespace oosr2 {

/// Worker cap used by parallel_for. Defaults to the hardware thread count.
int max_threads();
void set_max_threads(int n);

/// Run body(0..n_tasks-1) across up to max_threads() workers. Tasks must be
/// independent and write only to their own output slots; aggregation stays
/// with the caller in index order, so results never depend on the thread
/// count. Nested calls run serially. The first exception thrown by a task is
/// rethrown after all workers finish.
void parallel_for(int n_tasks, const std::function<void(int)>& body);

}  // namespace oosr2
