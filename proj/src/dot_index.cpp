#include "dotconf/dot_index.hpp"

#include <limits>
#include <stdexcept>

#include "dotconf/frame.hpp"
#include "dotconf/simd/kernels.hpp"

namespace dotconf {

DotProductIndex::DotProductIndex(const PointSet& rows, const PointSet& cols, const ExecPolicy& policy)
    : rows_(rows.size()), cols_(cols.size()), same_set_(false), include_zero_(policy.include_zero) {
  if (rows.dim() != cols.dim()) throw std::invalid_argument("dot index: dimension mismatch");
  build(rows, cols, policy.threads);
}

DotProductIndex::DotProductIndex(const PointSet& points, const ExecPolicy& policy)
    : rows_(points.size()), cols_(points.size()), same_set_(true), include_zero_(policy.include_zero) {
  build(points, points, policy.threads);
}

void DotProductIndex::build(const PointSet& rows, const PointSet& cols, unsigned threads) {
  if (rows_ * cols_ >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("dot index too large");
  }
  ids_.assign(rows_ * cols_, 0);

  const auto row_frame = make_integer_frame(rows);
  const auto col_frame = same_set_ ? row_frame : make_integer_frame(cols);
  if (row_frame && col_frame && fits_product(*row_frame, *col_frame)) {
    const simd::KernelTable& kernels = simd::active_kernels();
    backend_ = kernels.name;
    std::vector<std::int64_t> raw(rows_ * cols_);
    parallel_for(threads, rows_, [&](std::size_t i) {
      const std::vector<std::int64_t> pin = row_frame->point(i);
      kernels.dot_row(pin.data(), row_frame->dim, col_frame->coords.data(), col_frame->size, cols_,
                      raw.data() + i * cols_);
    });
    std::unordered_map<std::int64_t, std::uint32_t> interned;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      const auto [it, inserted] = interned.emplace(raw[k], static_cast<std::uint32_t>(values_.size()));
      if (inserted) values_.push_back(frame_value(raw[k], *row_frame, *col_frame));
      ids_[k] = it->second;
    }
  } else {
    backend_ = "exact";
    std::vector<ExactScalar> exact(rows_ * cols_);
    parallel_for(threads, rows_, [&](std::size_t i) {
      for (std::size_t j = 0; j < cols_; ++j) exact[i * cols_ + j] = dot(rows[i], cols[j]);
    });
    std::unordered_map<ExactScalar, std::uint32_t> interned;
    for (std::size_t k = 0; k < exact.size(); ++k) {
      const auto [it, inserted] = interned.emplace(exact[k], static_cast<std::uint32_t>(values_.size()));
      if (inserted) values_.push_back(exact[k]);
      ids_[k] = it->second;
    }
  }

  lookup_.reserve(values_.size());
  for (std::uint32_t id = 0; id < values_.size(); ++id) {
    lookup_.emplace(values_[id], id);
    if (values_[id].is_zero()) zero_id_ = id;
  }

  offsets_.assign(values_.size() + 1, 0);
  for (std::uint32_t id : ids_) {
    if (counted(id)) ++offsets_[id + 1];
  }
  for (std::size_t v = 0; v < values_.size(); ++v) offsets_[v + 1] += offsets_[v];
  pairs_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::uint32_t id = ids_[i * cols_ + j];
      if (counted(id)) pairs_[cursor[id]++] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
    }
  }
}

std::optional<std::uint32_t> DotProductIndex::find(const ExactScalar& v) const {
  const auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const DotProductIndex::Pair> DotProductIndex::pairs(std::uint32_t id) const {
  return std::span<const Pair>(pairs_).subspan(offsets_[id], offsets_[id + 1] - offsets_[id]);
}

}  // namespace dotconf
