#include "oosr2/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace oosr2 {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = use hardware concurrency
thread_local bool t_inside_parallel = false;

int hardware_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}
}  // namespace

int max_threads() {
  const int n = g_max_threads.load();
  return n > 0 ? n : hardware_threads();
}

void set_max_threads(int n) { g_max_threads.store(n); }

void parallel_for(int n_tasks, const std::function<void(int)>& body) {
  if (n_tasks <= 0) return;
  const int workers = std::min(max_threads(), n_tasks);
  if (workers <= 1 || t_inside_parallel) {
    const bool prev = t_inside_parallel;
    t_inside_parallel = true;
    struct Reset {
      bool& flag;
      bool prev;
      ~Reset() { flag = prev; }
    } reset{t_inside_parallel, prev};
    for (int i = 0; i < n_tasks; ++i) body(i);
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    t_inside_parallel = true;
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n_tasks) break;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace oosr2
