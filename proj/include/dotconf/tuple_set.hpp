#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <span>
#include <vector>

#include "dotconf/scalar.hpp"

namespace dotconf {

/// Set of fixed-width tuples of value ids. Inserts are buffered and
/// periodically sorted and deduplicated; with a nonzero spill threshold the
/// deduplicated buffer is written out as a sorted run to an anonymous
/// temporary file whenever it exceeds the threshold, so memory stays
/// bounded. Counting merges the runs.
class TupleSet {
 public:
  TupleSet(std::size_t width, std::size_t spill_threshold = 0);

  std::size_t width() const { return width_; }
  void insert(std::span<const std::uint32_t> ids);

  /// Moves every tuple of `other` (same width) into this set.
  void absorb(TupleSet&& other);

  /// Number of distinct tuples.
  BigInt count();

  /// Distinct tuples in lexicographic id order.
  std::vector<std::vector<std::uint32_t>> sorted_tuples();

  std::size_t spilled_runs() const { return runs_.size(); }

 private:
  struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
  };
  using RunFile = std::unique_ptr<std::FILE, FileCloser>;

  void compact();
  void spill();
  template <class Visit>
  void merge_all(Visit&& visit);

  std::size_t width_;
  std::size_t words_;
  std::size_t spill_threshold_;
  std::vector<std::uint64_t> buffer_;
  std::size_t unique_records_ = 0;  // prefix of buffer_ that is sorted and unique
  std::vector<RunFile> runs_;
};

}  // namespace dotconf
