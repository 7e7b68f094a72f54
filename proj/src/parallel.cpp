/**
 * @file parallel.cpp
 * @brief Thread-strided index dispatcher with BP_JOBS-aware sizing.
 */

#include "bp/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bp {

int effective_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BP_JOBS")) {
    try {
      const int n = std::stoi(std::string(env));
      if (n > 0) return n;
    } catch (const std::exception&) {
      // malformed value: fall through to hardware concurrency
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(long n, const std::function<void(long)>& fn, int jobs) {
  if (n <= 0) return;
  const int workers = std::min<long>(effective_jobs(jobs), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (long i = w; i < n; i += workers) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace bp
