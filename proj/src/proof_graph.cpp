#include "dotconf/proof_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "dotconf/dot_index.hpp"
#include "dotconf/frame.hpp"

namespace dotconf {

namespace {

int sign_of(const ExactScalar& v) { return v.sign(); }
int sign_of(__int128 v) { return (v > 0) - (v < 0); }

template <class T>
int orientation(const T& ax, const T& ay, const T& bx, const T& by, const T& cx, const T& cy) {
  return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

template <class T>
bool cross_properly(const T* a, const T* b, const T* c, const T* d) {
  const int o1 = orientation(a[0], a[1], b[0], b[1], c[0], c[1]);
  const int o2 = orientation(a[0], a[1], b[0], b[1], d[0], d[1]);
  if (o1 * o2 >= 0) return false;
  const int o3 = orientation(c[0], c[1], d[0], d[1], a[0], a[1]);
  const int o4 = orientation(c[0], c[1], d[0], d[1], b[0], b[1]);
  return o3 * o4 < 0;
}

template <class T>
void count_crossings(const std::vector<std::array<T, 2>>& xy, const std::vector<ProofGraphEdge>& edges,
                     unsigned threads, std::size_t& plain, BigInt& weighted) {
  const std::size_t s = edges.size();
  const std::size_t chunks = chunk_count(threads, s);
  std::vector<std::size_t> count(chunks, 0);
  std::vector<BigInt> weight(chunks, 0);
  parallel_chunks(threads, s, [&](std::size_t begin, std::size_t end, std::size_t c) {
    for (std::size_t i = begin; i < end; ++i) {
      const ProofGraphEdge& e = edges[i];
      for (std::size_t j = i + 1; j < s; ++j) {
        const ProofGraphEdge& f = edges[j];
        if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
        if (!cross_properly(xy[e.a].data(), xy[e.b].data(), xy[f.a].data(), xy[f.b].data())) continue;
        ++count[c];
        weight[c] += BigInt(static_cast<unsigned long>(e.multiplicity)) *
                     BigInt(static_cast<unsigned long>(f.multiplicity));
      }
    }
  });
  plain = 0;
  weighted = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    plain += count[c];
    weighted += weight[c];
  }
}

}  // namespace

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
  for (const Point* p : {&a, &b, &c, &d}) {
    if (p->dim() != 2) throw std::invalid_argument("segments must be planar");
  }
  const ExactScalar pa[2] = {a[0], a[1]}, pb[2] = {b[0], b[1]}, pc[2] = {c[0], c[1]}, pd[2] = {d[0], d[1]};
  return cross_properly(pa, pb, pc, pd);
}

ProofGraphStats proof_multigraph(const PointSet& E, const PointSet& F, const ExecPolicy& policy) {
  if (E.dim() != 2 || F.dim() != 2) throw std::invalid_argument("proof multigraph is planar only");
  for (const PointSet* s : {&E, &F}) {
    for (const auto& p : *s) {
      if (p.is_origin()) throw std::invalid_argument("the origin may not be in E or F");
    }
  }

  ProofGraphStats stats;
  stats.vertices.assign(E.begin(), E.end());
  std::vector<std::uint32_t> vertex_of(F.size());
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (const auto i = E.index_of(F[j])) {
      vertex_of[j] = static_cast<std::uint32_t>(*i);
    } else {
      vertex_of[j] = static_cast<std::uint32_t>(stats.vertices.size());
      stats.vertices.push_back(F[j]);
    }
  }
  stats.v = stats.vertices.size();

  const DotProductIndex index(E, F, policy);
  struct RowResult {
    std::size_t distinct = 0;
    std::size_t lines = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> joins;
  };
  std::vector<RowResult> rows(E.size());
  parallel_for(policy.threads, E.size(), [&](std::size_t i) {
    const Point& p = E[i];
    // direction of every alpha-line of p
    const ExactScalar dx = -p[1];
    const ExactScalar dy = p[0];
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_value;
    const auto row = index.row(i);
    for (std::uint32_t j = 0; j < row.size(); ++j) {
      if (index.counted(row[j])) by_value[row[j]].push_back(j);
    }
    RowResult& out = rows[i];
    out.distinct = by_value.size();
    for (auto& [id, members] : by_value) {
      if (members.size() < 2) continue;
      ++out.lines;
      std::vector<std::pair<ExactScalar, std::uint32_t>> along;
      along.reserve(members.size());
      for (std::uint32_t j : members) along.emplace_back(F[j][0] * dx + F[j][1] * dy, j);
      std::sort(along.begin(), along.end());
      for (std::size_t r = 1; r < along.size(); ++r) {
        std::uint32_t a = vertex_of[along[r - 1].second];
        std::uint32_t b = vertex_of[along[r].second];
        if (a > b) std::swap(a, b);
        out.joins.emplace_back(a, b);
      }
    }
  });

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> multiplicity;
  for (const auto& r : rows) {
    stats.t = std::max(stats.t, r.distinct);
    stats.lines += r.lines;
    stats.e += r.joins.size();
    for (const auto& j : r.joins) ++multiplicity[j];
  }
  for (const auto& [ab, mult] : multiplicity) {
    stats.edges.push_back({ab.first, ab.second, mult});
    stats.m = std::max(stats.m, mult);
  }
  stats.segments = stats.edges.size();

  const auto frame = make_integer_frame(PointSet(2, stats.vertices));
  if (frame) {
    std::vector<std::array<__int128, 2>> xy(stats.v);
    for (std::size_t i = 0; i < stats.v; ++i) xy[i] = {frame->at(0, i), frame->at(1, i)};
    count_crossings(xy, stats.edges, policy.threads, stats.drawing_crossings, stats.weighted_crossings);
  } else {
    std::vector<std::array<ExactScalar, 2>> xy(stats.v);
    for (std::size_t i = 0; i < stats.v; ++i) xy[i] = {stats.vertices[i][0], stats.vertices[i][1]};
    count_crossings(xy, stats.edges, policy.threads, stats.drawing_crossings, stats.weighted_crossings);
  }

  const BigInt n = static_cast<unsigned long>(E.size());
  const BigInt t = static_cast<unsigned long>(stats.t);
  stats.crossing_bound = n * n * t * t;
  stats.bound_holds = BigInt(static_cast<unsigned long>(stats.drawing_crossings)) <= stats.crossing_bound;
  return stats;
}

}  // namespace dotconf
