#include "nichols/thread_pool.hpp"

#include <atomic>
#include <mutex>
#include <exception>
#include <thread>
#include <vector>

namespace nichols {

ThreadPool::ThreadPool(int threads) : threads_(threads < 1 ? 1 : threads) {}

void ThreadPool::parallel_for(size_t count, const std::function<void(size_t)>& fn) const {
  if (count == 0) return;
  size_t workers = static_cast<size_t>(threads_);
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto run = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace nichols
