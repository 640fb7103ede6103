#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dotconf/geometry.hpp"
#include "dotconf/parallel.hpp"

namespace dotconf {

// Multigraph on E u F: for each pin p in E and each alpha in Pi_p(F), the
// points of F on the alpha-line of p are sorted along the line and
// consecutive ones are joined. Pins on a common radial line can produce
// the same line, hence parallel edges.

struct ProofGraphEdge {
  std::uint32_t a = 0;  // vertex ids into ProofGraphStats::vertices
  std::uint32_t b = 0;
  std::size_t multiplicity = 0;
};

struct ProofGraphStats {
  std::size_t v = 0;  // |E u F|
  std::size_t e = 0;  // edges counted with multiplicity
  std::size_t m = 0;  // largest multiplicity
  std::size_t t = 0;  // max pinned cardinality max_p |Pi_p(F)|
  std::size_t lines = 0;           // alpha-lines with at least two points of F
  std::size_t segments = 0;        // distinct vertex pairs joined
  std::size_t drawing_crossings = 0;   // distinct segment pairs crossing properly
  BigInt weighted_crossings = 0;       // same, weighted by both multiplicities
  BigInt crossing_bound = 0;           // |E|^2 t^2
  bool bound_holds = false;
  std::vector<Point> vertices;         // E then the points of F not in E
  std::vector<ProofGraphEdge> edges;   // sorted by (a, b)
};

/// Planar only; throws std::invalid_argument for d != 2 or if the origin
/// is in E or F.
ProofGraphStats proof_multigraph(const PointSet& E, const PointSet& F, const ExecPolicy& policy = {});

/// True if the closed segments [a,b] and [c,d] cross at a single point
/// interior to both.
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace dotconf
