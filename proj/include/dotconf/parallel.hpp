#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dotconf {

/// Options shared by every counter.
struct ExecPolicy {
  unsigned threads = 1;
  bool include_zero = false;
};

/// Splits [0, count) into at most `threads` contiguous chunks and runs
/// fn(begin, end, chunk) for each, chunk indices in increasing order of
/// `begin`. Returns the number of chunks. Chunking depends on `threads`, so
/// callers must reduce per-chunk results with an associative, commutative
/// exact operation (or in chunk order) to stay thread-count independent.
std::size_t parallel_chunks(unsigned threads, std::size_t count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Number of chunks parallel_chunks would use.
std::size_t chunk_count(unsigned threads, std::size_t count);

/// Runs fn(i) for every i in [0, count); fn must only write to slot i of
/// caller-owned storage.
void parallel_for(unsigned threads, std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace dotconf
