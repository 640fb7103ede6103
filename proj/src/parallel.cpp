#include "dotconf/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace dotconf {

std::size_t chunk_count(unsigned threads, std::size_t count) {
  if (count == 0) return 0;
  return std::min<std::size_t>(std::max(1u, threads), count);
}

std::size_t parallel_chunks(unsigned threads, std::size_t count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  const std::size_t chunks = chunk_count(threads, count);
  if (chunks == 0) return 0;
  auto bounds = [&](std::size_t c) { return count * c / chunks; };
  if (chunks == 1) {
    fn(0, count, 0);
    return 1;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(chunks - 1);
  auto run = [&](std::size_t c) {
    try {
      fn(bounds(c), bounds(c + 1), c);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  for (std::size_t c = 1; c < chunks; ++c) pool.emplace_back(run, c);
  run(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return chunks;
}

void parallel_for(unsigned threads, std::size_t count, const std::function<void(std::size_t)>& fn) {
  parallel_chunks(threads, count, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace dotconf
