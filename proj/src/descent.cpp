#include "dotconf/descent.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dotconf/counting.hpp"
#include "dotconf/dot_index.hpp"

namespace dotconf {

std::size_t affine_dimension(std::span<const Point> points) {
  if (points.size() < 2) return 0;
  const std::size_t d = points[0].dim();
  std::vector<std::vector<ExactScalar>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<ExactScalar> r(d);
    for (std::size_t c = 0; c < d; ++c) r[c] = points[i][c] - points[0][c];
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const ExactScalar f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < d; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<Point> gather(const PointSet& E, const std::vector<std::size_t>& ids) {
  std::vector<Point> out;
  out.reserve(ids.size());
  for (std::size_t i : ids) out.push_back(E[i]);
  return out;
}

}  // namespace

DescentTrace hyperplane_descent(const PointSet& E, const ExecPolicy& policy) {
  if (E.dim() < 3) throw std::invalid_argument("hyperplane descent needs d >= 3");
  if (E.size() < E.dim()) throw std::invalid_argument("hyperplane descent needs |E| >= d");
  for (const auto& p : E) {
    if (p.is_origin()) throw std::invalid_argument("the origin cannot be a pin");
  }

  DescentTrace trace;
  trace.n = E.size();
  trace.dim = E.dim();

  std::vector<std::size_t> current(E.size());
  std::iota(current.begin(), current.end(), 0);
  const auto overall = pinned_counts(E, policy);
  for (std::size_t i = 0; i < overall.size(); ++i) {
    if (overall[i] > trace.overall_max) {
      trace.overall_max = overall[i];
      trace.overall_pin = i;
    }
  }

  while (true) {
    const PointSet sub(E.dim(), gather(E, current));
    const std::size_t adim = affine_dimension(sub.points());
    const DotProductIndex index(sub, policy);
    const auto counts = pinned_counts(index, policy.threads);
    std::size_t best = 0;
    for (std::size_t i = 1; i < counts.size(); ++i) {
      if (counts[i] > counts[best]) best = i;
    }
    if (adim <= 2) {
      trace.stop_reason = "planar";
      trace.final_points = current;
      trace.final_affine_dim = adim;
      trace.planar_pin = current[best];
      trace.planar_max = counts[best];
      break;
    }

    DescentLevel level;
    level.pin = current[best];
    level.t = counts[best];
    level.points_before = current.size();
    level.affine_dim_before = adim;

    // level sets of the pin; keyed by value id, members in index order
    std::map<std::uint32_t, std::vector<std::size_t>> levels;
    const auto row = index.row(best);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!index.counted(row[j])) continue;
      levels[row[j]].push_back(j);
      ++level.counted_before;
    }
    const std::vector<std::size_t>* heaviest = nullptr;
    std::uint32_t heaviest_id = 0;
    for (const auto& [id, members] : levels) {
      if (!heaviest || members.size() > heaviest->size() ||
          (members.size() == heaviest->size() && members.front() < heaviest->front())) {
        heaviest = &members;
        heaviest_id = id;
      }
    }
    if (!heaviest || level.t < 2) {
      trace.stop_reason = !heaviest ? "no counted dot products" : "every pin sees a single level";
      trace.final_points = current;
      trace.final_affine_dim = adim;
      trace.planar_pin = current[best];
      trace.planar_max = counts[best];
      break;
    }
    level.level = index.value(heaviest_id);
    std::vector<std::size_t> next;
    for (std::size_t j : *heaviest) next.push_back(current[j]);
    level.points_after = next.size();
    level.pigeonhole_ok = level.points_after * level.t >= level.counted_before;
    trace.pigeonhole_ok = trace.pigeonhole_ok && level.pigeonhole_ok;
    trace.levels.push_back(level);
    current = std::move(next);
  }

  double denom = 1;
  bool dominated = trace.overall_max >= trace.planar_max;
  for (const auto& l : trace.levels) {
    denom *= static_cast<double>(l.t);
    dominated = dominated && trace.overall_max >= l.t;
  }
  trace.dominates_components = dominated;
  trace.planar_component = std::cbrt(std::pow(static_cast<double>(trace.n) / denom, 2.0));
  return trace;
}

}  // namespace dotconf
