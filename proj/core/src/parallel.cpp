#include "kneser/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace kneser {

int thread_count() {
  const char* env = std::getenv("KNESER_THREADS");
  if (!env || !*env) return 1;
  try {
    return std::clamp(std::stoi(env), 1, 256);
  } catch (...) {
    return 1;
  }
}

void parallel_chunks(std::size_t n, std::size_t chunk, const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mutex;
  std::size_t failed_chunk = chunks;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks && !failed; c = next++) {
        try {
          body(c * chunk, std::min(n, (c + 1) * chunk));
        } catch (...) {
          // Keep the failure from the lowest chunk.
          std::lock_guard lock(mutex);
          if (c < failed_chunk) {
            failed_chunk = c;
            error = std::current_exception();
          }
          failed = true;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kneser
