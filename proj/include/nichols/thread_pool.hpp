#pragma once

#include <functional>

namespace nichols {

/// Fork-join helper: runs fn(0..count-1) on up to `threads` workers. Results
/// must be written to per-index slots so the outcome is schedule-independent.
class ThreadPool {
public:
  explicit ThreadPool(int threads);
  void parallel_for(size_t count, const std::function<void(size_t)>& fn) const;
  int size() const { return threads_; }

private:
  int threads_;
};

}  // namespace nichols
