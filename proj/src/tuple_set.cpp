#include "dotconf/tuple_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dotconf {

namespace {

constexpr std::size_t kCompactFloor = 1u << 16;

}  // namespace

TupleSet::TupleSet(std::size_t width, std::size_t spill_threshold)
    : width_(width), words_(std::max<std::size_t>(1, (width + 1) / 2)), spill_threshold_(spill_threshold) {}

void TupleSet::insert(std::span<const std::uint32_t> ids) {
  if (ids.size() != width_) throw std::invalid_argument("tuple width mismatch");
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint64_t hi = 2 * w < width_ ? ids[2 * w] : 0;
    const std::uint64_t lo = 2 * w + 1 < width_ ? ids[2 * w + 1] : 0;
    buffer_.push_back(hi << 32 | lo);
  }
  const std::size_t records = buffer_.size() / words_;
  const std::size_t floor =
      spill_threshold_ > 0 ? std::min(kCompactFloor, spill_threshold_) : kCompactFloor;
  if (records >= std::max(floor, 2 * unique_records_)) {
    compact();
    if (spill_threshold_ > 0 && unique_records_ > spill_threshold_) spill();
  }
}

void TupleSet::absorb(TupleSet&& other) {
  if (other.width_ != width_) throw std::invalid_argument("tuple width mismatch");
  buffer_.insert(buffer_.end(), other.buffer_.begin(), other.buffer_.end());
  for (auto& run : other.runs_) runs_.push_back(std::move(run));
  other.buffer_.clear();
  other.runs_.clear();
  other.unique_records_ = 0;
  compact();
  if (spill_threshold_ > 0 && unique_records_ > spill_threshold_) spill();
}

void TupleSet::compact() {
  const std::size_t records = buffer_.size() / words_;
  if (words_ == 1) {
    std::sort(buffer_.begin(), buffer_.end());
    buffer_.erase(std::unique(buffer_.begin(), buffer_.end()), buffer_.end());
    unique_records_ = buffer_.size();
    return;
  }
  std::vector<std::size_t> order(records);
  std::iota(order.begin(), order.end(), 0);
  const auto record = [&](std::size_t r) { return buffer_.begin() + static_cast<std::ptrdiff_t>(r * words_); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(record(a), record(a) + static_cast<std::ptrdiff_t>(words_),
                                        record(b), record(b) + static_cast<std::ptrdiff_t>(words_));
  });
  std::vector<std::uint64_t> sorted;
  sorted.reserve(buffer_.size());
  for (std::size_t r : order) {
    const auto begin = record(r);
    const auto end = begin + static_cast<std::ptrdiff_t>(words_);
    if (!sorted.empty() && std::equal(begin, end, sorted.end() - static_cast<std::ptrdiff_t>(words_))) continue;
    sorted.insert(sorted.end(), begin, end);
  }
  buffer_ = std::move(sorted);
  unique_records_ = buffer_.size() / words_;
}

void TupleSet::spill() {
  RunFile file(std::tmpfile());
  if (!file) throw std::runtime_error("cannot create temporary spill file");
  if (!buffer_.empty() &&
      std::fwrite(buffer_.data(), sizeof(std::uint64_t), buffer_.size(), file.get()) != buffer_.size()) {
    throw std::runtime_error("short write to spill file");
  }
  runs_.push_back(std::move(file));
  buffer_.clear();
  buffer_.shrink_to_fit();
  unique_records_ = 0;
}

template <class Visit>
void TupleSet::merge_all(Visit&& visit) {
  compact();
  struct Source {
    std::FILE* file = nullptr;  // null for the in-memory buffer
    std::size_t pos = 0;
    std::vector<std::uint64_t> head;
    bool live = false;
  };
  std::vector<Source> sources;
  auto advance = [&](Source& s) {
    if (s.file) {
      s.live = std::fread(s.head.data(), sizeof(std::uint64_t), words_, s.file) == words_;
    } else {
      s.live = s.pos < buffer_.size();
      if (s.live) {
        std::copy_n(buffer_.begin() + static_cast<std::ptrdiff_t>(s.pos), words_, s.head.begin());
        s.pos += words_;
      }
    }
  };
  for (auto& run : runs_) {
    std::rewind(run.get());
    sources.push_back({run.get(), 0, std::vector<std::uint64_t>(words_), false});
  }
  sources.push_back({nullptr, 0, std::vector<std::uint64_t>(words_), false});
  for (auto& s : sources) advance(s);

  std::vector<std::uint64_t> last;
  while (true) {
    Source* best = nullptr;
    for (auto& s : sources) {
      if (s.live && (!best || s.head < best->head)) best = &s;
    }
    if (!best) break;
    if (last != best->head) {
      last = best->head;
      visit(last);
    }
    advance(*best);
  }
}

BigInt TupleSet::count() {
  if (runs_.empty()) {
    compact();
    return BigInt(static_cast<unsigned long>(unique_records_));
  }
  BigInt n = 0;
  merge_all([&](const std::vector<std::uint64_t>&) { ++n; });
  return n;
}

std::vector<std::vector<std::uint32_t>> TupleSet::sorted_tuples() {
  std::vector<std::vector<std::uint32_t>> out;
  merge_all([&](const std::vector<std::uint64_t>& rec) {
    std::vector<std::uint32_t> ids(width_);
    for (std::size_t i = 0; i < width_; ++i) {
      const std::uint64_t word = rec[i / 2];
      ids[i] = static_cast<std::uint32_t>(i % 2 == 0 ? word >> 32 : word & 0xffffffffu);
    }
    out.push_back(std::move(ids));
  });
  return out;
}

}  // namespace dotconf
