#include "dotconf/tree.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace dotconf {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

}  // namespace

Tree::Tree(int num_vertices, std::vector<Edge> edges) : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1) throw std::invalid_argument("a tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != num_vertices_ - 1) {
    throw std::invalid_argument("a tree on " + std::to_string(num_vertices_) + " vertices needs " +
                                std::to_string(num_vertices_ - 1) + " edges, got " +
                                std::to_string(edges_.size()));
  }
  for (auto& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 1 || e.b > num_vertices_) {
      throw std::invalid_argument("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                  ") has a vertex outside 1.." + std::to_string(num_vertices_));
    }
    if (e.a == e.b) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.a));
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<int> parent(static_cast<std::size_t>(num_vertices_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : edges_) {
    const int ra = find_root(parent, e.a);
    const int rb = find_root(parent, e.b);
    if (ra == rb) {
      throw std::invalid_argument("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                  ") closes a cycle");
    }
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  // n - 1 acyclic edges on n vertices are necessarily connected
  adjacency_.assign(static_cast<std::size_t>(num_vertices_) + 1, {});
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<std::size_t> Tree::edge_index(int a, int b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> Tree::bfs_order(int root) const {
  if (!has_vertex(root)) throw std::invalid_argument("no vertex " + std::to_string(root));
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(num_vertices_) + 1, 0);
  std::deque<int> queue{root};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return order;
}

std::vector<int> Tree::parents(int root) const {
  std::vector<int> parent(static_cast<std::size_t>(num_vertices_) + 1, 0);
  std::vector<char> seen(parent.size(), 0);
  for (int v : bfs_order(root)) {
    seen[static_cast<std::size_t>(v)] = 1;
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) parent[static_cast<std::size_t>(w)] = v;
    }
  }
  return parent;
}

std::string Tree::str() const {
  std::string out = std::to_string(num_vertices_) + " vertices:";
  for (const auto& e : edges_) out += " " + std::to_string(e.a) + "-" + std::to_string(e.b);
  return out;
}

WeightedTree::WeightedTree(Tree tree, std::vector<ExactScalar> weights)
    : tree_(std::move(tree)), weights_(std::move(weights)) {
  if (!weights_.empty() && static_cast<int>(weights_.size()) != tree_.num_edges()) {
    throw std::invalid_argument("weight vector has " + std::to_string(weights_.size()) +
                                " entries for a tree with " + std::to_string(tree_.num_edges()) +
                                " edges");
  }
}

WeightedTree WeightedTree::from_edges(int num_vertices, const std::vector<Edge>& edges,
                                      const std::vector<ExactScalar>& weights) {
  if (!weights.empty() && weights.size() != edges.size()) {
    throw std::invalid_argument("weights must be given for every edge or for none");
  }
  Tree tree(num_vertices, edges);
  if (weights.empty()) return WeightedTree(std::move(tree), {});
  std::vector<ExactScalar> ordered(weights.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ordered[*tree.edge_index(edges[i].a, edges[i].b)] = weights[i];
  }
  return WeightedTree(std::move(tree), std::move(ordered));
}

void WeightedTree::require_weights(bool include_zero) const {
  if (!has_weights()) throw std::invalid_argument("tree has no edge weights");
  if (include_zero) return;
  for (const auto& w : weights_) {
    if (w.is_zero()) throw std::invalid_argument("zero edge weight requires include_zero");
  }
}

bool Bipartition::in_u(int v) const { return std::binary_search(U.begin(), U.end(), v); }

Bipartition bipartition(const Tree& t) {
  std::vector<int> depth(static_cast<std::size_t>(t.num_vertices()) + 1, -1);
  Bipartition b;
  const std::vector<int> parent = t.parents(1);
  for (int v : t.bfs_order(1)) {
    const int p = parent[static_cast<std::size_t>(v)];
    depth[static_cast<std::size_t>(v)] = p == 0 ? 0 : depth[static_cast<std::size_t>(p)] + 1;
  }
  for (int v = 1; v <= t.num_vertices(); ++v) {
    (depth[static_cast<std::size_t>(v)] % 2 == 0 ? b.U : b.V).push_back(v);
  }
  if (b.U.size() < b.V.size()) std::swap(b.U, b.V);
  return b;
}

std::pair<TreePart, TreePart> split_at_vertex(const Tree& t, int v) {
  if (!t.has_vertex(v)) throw std::invalid_argument("no vertex " + std::to_string(v));
  if (t.degree(v) < 2) {
    throw std::invalid_argument("cannot split at vertex " + std::to_string(v) + ": it is a leaf");
  }
  // Vertices reachable from v's lowest neighbor without passing through v.
  const int first_neighbor = t.neighbors(v).front();
  std::vector<char> in_first(static_cast<std::size_t>(t.num_vertices()) + 1, 0);
  std::vector<int> stack{first_neighbor};
  in_first[static_cast<std::size_t>(first_neighbor)] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(u)) {
      if (w != v && !in_first[static_cast<std::size_t>(w)]) {
        in_first[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }

  auto make_part = [&](bool first) {
    std::vector<int> labels;
    std::vector<int> local(static_cast<std::size_t>(t.num_vertices()) + 1, 0);
    for (int u = 1; u <= t.num_vertices(); ++u) {
      if (u == v || static_cast<bool>(in_first[static_cast<std::size_t>(u)]) == first) {
        labels.push_back(u);
        local[static_cast<std::size_t>(u)] = static_cast<int>(labels.size());
      }
    }
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_ids;
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
      const Edge& e = t.edge(i);
      const int other = e.a == v ? e.b : e.a;
      if (static_cast<bool>(in_first[static_cast<std::size_t>(other)]) == first) {
        edge_ids.push_back(i);
        edges.push_back({local[static_cast<std::size_t>(e.a)], local[static_cast<std::size_t>(e.b)]});
      }
    }
    const int pivot = local[static_cast<std::size_t>(v)];
    const int size = static_cast<int>(labels.size());
    return TreePart{Tree(size, std::move(edges)), std::move(labels), std::move(edge_ids), pivot};
  };
  return {make_part(true), make_part(false)};
}

Tree make_path(int k) {
  if (k < 1) throw std::invalid_argument("path needs at least one edge");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({i, i + 1});
  return Tree(k + 1, std::move(edges));
}

Tree make_star(int k) {
  if (k < 1) throw std::invalid_argument("star needs at least one edge");
  std::vector<Edge> edges;
  for (int i = 2; i <= k + 1; ++i) edges.push_back({1, i});
  return Tree(k + 1, std::move(edges));
}

Tree make_perfect_binary(int h) {
  if (h < 0) throw std::invalid_argument("height must be non-negative");
  if (h > 20) throw std::invalid_argument("height too large");
  const int n = (1 << (h + 1)) - 1;
  std::vector<Edge> edges;
  for (int i = 2; i <= n; ++i) edges.push_back({i / 2, i});
  return Tree(n, std::move(edges));
}

Tree parse_builtin_tree(std::string_view spec) {
  if (spec.rfind("builtin:", 0) == 0) spec.remove_prefix(8);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("tree spec must look like path:K, star:K or binary:H");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    throw std::invalid_argument("bad size in tree spec '" + std::string(spec) + "'");
  }
  if (kind == "path") return make_path(value);
  if (kind == "star") return make_star(value);
  if (kind == "binary") return make_perfect_binary(value);
  throw std::invalid_argument("unknown tree kind '" + std::string(kind) + "'");
}

}  // namespace dotconf
