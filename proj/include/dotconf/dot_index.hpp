#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dotconf/geometry.hpp"
#include "dotconf/parallel.hpp"

namespace dotconf {

/// Every dot product between a row set E and a column set F, interned to
/// dense value ids. Ids are assigned in row-major first-seen order, so the
/// index is identical for any thread count. Pair lists per value are kept
/// in row-major order; zero-valued pairs are left out of them unless the
/// policy includes zeros.
class DotProductIndex {
 public:
  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  DotProductIndex(const PointSet& rows, const PointSet& cols, const ExecPolicy& policy);
  /// Square index of a set against itself (diagonal included).
  DotProductIndex(const PointSet& points, const ExecPolicy& policy);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool same_set() const { return same_set_; }
  bool include_zero() const { return include_zero_; }

  std::uint32_t id(std::size_t i, std::size_t j) const { return ids_[i * cols_ + j]; }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return std::span<const std::uint32_t>(ids_).subspan(i * cols_, cols_);
  }

  std::size_t value_count() const { return values_.size(); }
  const ExactScalar& value(std::uint32_t id) const { return values_[id]; }
  std::optional<std::uint32_t> find(const ExactScalar& v) const;
  std::optional<std::uint32_t> zero_id() const { return zero_id_; }

  /// False only for the zero value when zeros are excluded.
  bool counted(std::uint32_t id) const { return include_zero_ || !zero_id_ || id != *zero_id_; }

  std::span<const Pair> pairs(std::uint32_t id) const;
  std::size_t multiplicity(std::uint32_t id) const { return pairs(id).size(); }

  /// Name of the kernel table used for the integer fast path, or "exact"
  /// when the coordinates did not fit a 32-bit integer frame.
  const std::string& backend() const { return backend_; }

 private:
  void build(const PointSet& rows, const PointSet& cols, unsigned threads);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool same_set_ = false;
  bool include_zero_ = false;
  std::vector<std::uint32_t> ids_;
  std::vector<ExactScalar> values_;
  std::unordered_map<ExactScalar, std::uint32_t> lookup_;
  std::optional<std::uint32_t> zero_id_;
  std::vector<std::size_t> offsets_;
  std::vector<Pair> pairs_;
  std::string backend_;
};

}  // namespace dotconf
