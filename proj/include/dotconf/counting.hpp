#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "dotconf/dot_index.hpp"
#include "dotconf/geometry.hpp"
#include "dotconf/parallel.hpp"
#include "dotconf/tree.hpp"

namespace dotconf {

// Exact counters. "Copies" of a weighted tree are injective maps of the
// labeled tree's vertices into the point set (no quotient by tree
// automorphisms), and weight tuples follow the canonical edge order. Zero
// dot products are excluded unless ExecPolicy::include_zero is set.

/// {p . q : q in E}. Throws std::invalid_argument if p is the origin.
std::set<ExactScalar> pinned_set(const Point& p, const PointSet& points, bool include_zero = false);

struct DotProductStats {
  std::size_t distinct = 0;          // distinct counted values
  std::size_t max_multiplicity = 0;  // largest pair count of one counted value
  std::optional<ExactScalar> most_frequent;  // smallest value attaining max_multiplicity
  std::size_t pairs = 0;             // pairs considered
  std::size_t zero_pairs = 0;        // pairs with product zero
};

/// Over ordered pairs (p, q) of distinct points of E.
DotProductStats distinct_dot_products(const PointSet& points, const ExecPolicy& policy = {});
DotProductStats distinct_dot_products(const DotProductIndex& index);

/// Over all pairs (e, f) in E x F.
DotProductStats distinct_dot_products(const PointSet& rows, const PointSet& cols,
                                      const ExecPolicy& policy = {});

/// Number of pairs (e, f) in E x F with e . f == alpha.
std::size_t pair_multiplicity(const PointSet& rows, const PointSet& cols, const ExactScalar& alpha,
                              const ExecPolicy& policy = {});

/// Number of injective maps realizing every edge weight exactly.
BigInt count_embeddings(const WeightedTree& wt, const PointSet& points, const ExecPolicy& policy = {});
BigInt count_embeddings(const WeightedTree& wt, const DotProductIndex& index, unsigned threads = 1);

/// Same without injectivity (dynamic programming over the tree); always at
/// least count_embeddings.
BigInt count_homomorphisms(const WeightedTree& wt, const PointSet& points,
                           const ExecPolicy& policy = {});
BigInt count_homomorphisms(const WeightedTree& wt, const DotProductIndex& index,
                           unsigned threads = 1);

struct TupleOptions {
  bool collect = false;             // return the tuples themselves
  std::size_t spill_threshold = 0;  // >0: spill sorted runs to disk beyond this many tuples
};

struct TupleCount {
  BigInt count = 0;
  std::vector<std::vector<ExactScalar>> tuples;  // sorted by exact value, when collected
  std::size_t spilled_runs = 0;
};

/// Distinct k-tuples of edge dot products over all embeddings of t.
TupleCount distinct_weight_tuples(const Tree& t, const PointSet& points, const ExecPolicy& policy = {},
                                  const TupleOptions& options = {});

/// Same, restricted to embeddings mapping vertex v to x. Throws
/// std::invalid_argument if x is not in E.
TupleCount pinned_weight_tuples(const Tree& t, int v, const Point& x, const PointSet& points,
                                const ExecPolicy& policy = {}, const TupleOptions& options = {});

/// {a * b : a in A, b in B}.
std::set<ExactScalar> product_set(std::span<const ExactScalar> a, std::span<const ExactScalar> b);

/// Number of (point, line) pairs with the point on the line; planar only.
std::size_t incidences(const PointSet& points, std::span<const AlphaHyperplane> lines,
                       const ExecPolicy& policy = {});

struct RadialHistogram {
  std::map<Direction, std::size_t> buckets;
  std::size_t max = 0;
  std::size_t total = 0;          // points other than the origin
  bool origin_present = false;
  ExactScalar constant = 1;       // C in max <= C * n^(2/3)
  bool hypothesis_holds = false;  // with n = total
};

RadialHistogram radial_histogram(const PointSet& points, const ExactScalar& constant = 1);

struct PinnedMax {
  std::size_t index = 0;
  std::size_t count = 0;
};

/// |Pi_x(E)| for every x in E, in point order.
std::vector<std::size_t> pinned_counts(const DotProductIndex& index, unsigned threads = 1);
std::vector<std::size_t> pinned_counts(const PointSet& points, const ExecPolicy& policy = {});

/// Pin with the most distinct dot products against E; ties go to the
/// lowest index.
PinnedMax max_pinned(const PointSet& points, const ExecPolicy& policy = {});

}  // namespace dotconf
