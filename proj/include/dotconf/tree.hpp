#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dotconf/scalar.hpp"

namespace dotconf {

/// Tree edge between 1-based vertices a < b.
struct Edge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled tree on vertices 1..num_vertices. Edges are kept in canonical
/// lexicographic order; the i-th edge carries the i-th weight of any
/// weight vector paired with the tree.
class Tree {
 public:
  /// Throws std::invalid_argument unless the edges form a spanning tree.
  /// Edge endpoints may be given in either order.
  Tree(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Sorted neighbor list of v.
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool is_leaf(int v) const { return degree(v) == 1; }
  bool has_vertex(int v) const { return v >= 1 && v <= num_vertices_; }

  /// Index of edge {a, b} in canonical order.
  std::optional<std::size_t> edge_index(int a, int b) const;

  /// Breadth-first order from `root`, visiting neighbors in increasing order.
  std::vector<int> bfs_order(int root) const;

  /// parent[v] in the BFS tree from `root` (0 for the root).
  std::vector<int> parents(int root) const;

  std::string str() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Tree plus edge weights aligned with the canonical edge order. An empty
/// weight vector means "unweighted" (e.g. a .tree file without weights).
class WeightedTree {
 public:
  WeightedTree(Tree tree, std::vector<ExactScalar> weights);

  /// Builds from edges in any order; weights follow their edges into the
  /// canonical order.
  static WeightedTree from_edges(int num_vertices, const std::vector<Edge>& edges,
                                 const std::vector<ExactScalar>& weights);

  const Tree& tree() const { return tree_; }
  std::span<const ExactScalar> weights() const { return weights_; }
  bool has_weights() const { return !weights_.empty() || tree_.num_edges() == 0; }

  /// Throws std::invalid_argument when unweighted, or when a weight is zero
  /// and zeros are not allowed.
  void require_weights(bool include_zero) const;

  friend bool operator==(const WeightedTree&, const WeightedTree&) = default;

 private:
  Tree tree_;
  std::vector<ExactScalar> weights_;
};

/// Proper 2-coloring with |U| >= |V|. Vertex lists are sorted.
struct Bipartition {
  std::vector<int> U;
  std::vector<int> V;
  int k1() const { return static_cast<int>(U.size()); }
  int k2() const { return static_cast<int>(V.size()); }
  bool in_u(int v) const;
};

/// BFS parity coloring from vertex 1; classes are swapped if needed so
/// that |U| >= |V| (on a tie, vertex 1's class is U).
Bipartition bipartition(const Tree& t);

struct RootedTree {
  Tree tree;
  int root;
};

/// One side of a split: a relabeled tree plus the map back to the parent.
struct TreePart {
  Tree tree;
  std::vector<int> labels;           // labels[local - 1] = original vertex
  std::vector<std::size_t> edges;    // indices into the original canonical edge list
  int pivot = 0;                     // local label of the split vertex
};

/// Splits t into two edge-disjoint trees sharing only v. The first part is
/// everything reachable from v through its lowest-numbered incident edge.
/// Throws std::invalid_argument when v has degree < 2.
std::pair<TreePart, TreePart> split_at_vertex(const Tree& t, int v);

/// Path 1-2-...-(k+1). Throws for k < 1.
Tree make_path(int k);
/// Star with center 1 and leaves 2..k+1. Throws for k < 1.
Tree make_star(int k);
/// Perfect binary tree of height h in heap numbering (children of i are
/// 2i and 2i+1). Throws for h < 0.
Tree make_perfect_binary(int h);

/// "path:K", "star:K", "binary:H" (an optional "builtin:" prefix is
/// accepted). Throws std::invalid_argument on anything else.
Tree parse_builtin_tree(std::string_view spec);

// .tree format:
//   k <num_edges>
//   i j [w]     1 <= i < j <= k+1, optional rational weight
// '#' comments and blank lines are ignored. Weights must be given on every
// edge or on none.
WeightedTree read_tree(std::istream& in);
void write_tree(const WeightedTree& t, std::ostream& out);
WeightedTree load_tree(const std::filesystem::path& path);
std::string to_tree_string(const WeightedTree& t);

}  // namespace dotconf
