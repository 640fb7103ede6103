#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "dotconf/error.hpp"
#include "dotconf/tree.hpp"

using namespace dotconf;

namespace {

WeightedTree tree_text(const std::string& s) {
  std::istringstream in(s);
  return read_tree(in);
}

// uniform-ish random labeled tree: each vertex v > 1 attaches to an earlier one,
// then labels are shuffled
Tree random_tree(int vertices, std::mt19937_64& rng) {
  std::vector<int> label(static_cast<std::size_t>(vertices));
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (int v = 2; v <= vertices; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    edges.push_back({label[static_cast<std::size_t>(pick(rng) - 1)], label[static_cast<std::size_t>(v - 1)]});
  }
  return Tree(vertices, edges);
}

void check_proper(const Tree& t, const Bipartition& bp) {
  CHECK(bp.k1() + bp.k2() == t.num_vertices());
  CHECK(bp.k1() >= bp.k2());
  for (const Edge& e : t.edges()) CHECK(bp.in_u(e.a) != bp.in_u(e.b));
}

}  // namespace

TEST_CASE("bipartition of a path puts the ends together") {
  const auto bp = bipartition(make_path(2));
  CHECK(bp.U == std::vector<int>{1, 3});
  CHECK(bp.V == std::vector<int>{2});
}

TEST_CASE("bipartition of a star puts the leaves in U") {
  const auto bp = bipartition(make_star(3));
  CHECK(bp.U == std::vector<int>{2, 3, 4});
  CHECK(bp.V == std::vector<int>{1});
}

TEST_CASE("bipartition of the height-2 binary tree splits by level parity") {
  const auto bp = bipartition(make_perfect_binary(2));
  // levels have 1, 2 and 4 vertices, so the even levels hold 5
  CHECK(bp.k1() == 5);
  CHECK(bp.k2() == 2);
  CHECK(bp.U == std::vector<int>{1, 4, 5, 6, 7});
  CHECK(bp.V == std::vector<int>{2, 3});
}

TEST_CASE("bipartition is a proper coloring on random trees") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Tree t = random_tree(1 + i % 15, rng);
    check_proper(t, bipartition(t));
  }
}

TEST_CASE("splitting a path at its middle vertex") {
  const auto [a, b] = split_at_vertex(make_path(2), 2);
  CHECK(a.tree.num_edges() == 1);
  CHECK(b.tree.num_edges() == 1);
  CHECK(a.labels == std::vector<int>{1, 2});
  CHECK(b.labels == std::vector<int>{2, 3});
  CHECK(a.labels[static_cast<std::size_t>(a.pivot - 1)] == 2);
  CHECK(b.labels[static_cast<std::size_t>(b.pivot - 1)] == 2);
}

TEST_CASE("splitting a star at the center takes the first edge against the rest") {
  const auto [a, b] = split_at_vertex(make_star(4), 1);
  CHECK(a.tree.num_edges() == 1);
  CHECK(b.tree.num_edges() == 3);
  CHECK(a.edges == std::vector<std::size_t>{0});
  CHECK(b.edges == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("splitting at a leaf is an error") {
  CHECK_THROWS_AS(split_at_vertex(make_path(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(split_at_vertex(make_path(3), 4), std::invalid_argument);
}

TEST_CASE("split parts partition the edges and share only the split vertex") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Tree t = random_tree(3 + i % 12, rng);
    for (int v = 1; v <= t.num_vertices(); ++v) {
      if (t.degree(v) < 2) continue;
      const auto [a, b] = split_at_vertex(t, v);
      CHECK(a.tree.num_edges() + b.tree.num_edges() == t.num_edges());
      std::vector<std::size_t> all = a.edges;
      all.insert(all.end(), b.edges.begin(), b.edges.end());
      std::sort(all.begin(), all.end());
      std::vector<std::size_t> want(static_cast<std::size_t>(t.num_edges()));
      std::iota(want.begin(), want.end(), 0);
      CHECK(all == want);
      std::set<int> va(a.labels.begin(), a.labels.end()), vb(b.labels.begin(), b.labels.end());
      std::vector<int> shared;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
      CHECK(shared == std::vector<int>{v});
      // part edges map back onto original edges
      for (const auto* part : {&a, &b}) {
        for (std::size_t e = 0; e < part->edges.size(); ++e) {
          const Edge& local = part->tree.edge(e);
          const Edge& orig = t.edge(part->edges[e]);
          const int x = part->labels[static_cast<std::size_t>(local.a - 1)];
          const int y = part->labels[static_cast<std::size_t>(local.b - 1)];
          CHECK(std::min(x, y) == orig.a);
          CHECK(std::max(x, y) == orig.b);
        }
      }
      // the first part goes through v's lowest-numbered neighbor
      CHECK(va.count(t.neighbors(v).front()) == 1);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("tree generators") {
  CHECK(make_perfect_binary(0).num_vertices() == 1);
  CHECK(make_perfect_binary(0).num_edges() == 0);
  CHECK(make_perfect_binary(1).num_vertices() == 3);
  CHECK(make_perfect_binary(1).num_edges() == 2);
  CHECK(make_perfect_binary(2).num_vertices() == 7);
  CHECK(make_perfect_binary(2).num_edges() == 6);
  CHECK(make_perfect_binary(5).num_vertices() == 63);
  CHECK(make_path(4).str() == make_path(4).str());
  CHECK(make_path(3).edge(2).a == 3);
  CHECK(make_star(3).degree(1) == 3);
  CHECK_THROWS_AS(make_path(0), std::invalid_argument);
  CHECK_THROWS_AS(make_star(-1), std::invalid_argument);
  CHECK_THROWS_AS(make_perfect_binary(-1), std::invalid_argument);
}

TEST_CASE("builtin tree names") {
  CHECK(parse_builtin_tree("path:2") == make_path(2));
  CHECK(parse_builtin_tree("builtin:star:3") == make_star(3));
  CHECK(parse_builtin_tree("binary:2") == make_perfect_binary(2));
  CHECK_THROWS_AS(parse_builtin_tree("cycle:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_builtin_tree("path:x"), std::invalid_argument);
}

TEST_CASE("reading a weighted path") {
  const WeightedTree wt = tree_text("k 2\n1 2 2\n2 3 6\n");
  CHECK(wt.tree() == make_path(2));
  REQUIRE(wt.weights().size() == 2);
  CHECK(wt.weights()[0] == ExactScalar(2));
  CHECK(wt.weights()[1] == ExactScalar(6));
}

TEST_CASE("edge order in the file does not matter") {
  CHECK(tree_text("k 2\n2 3 6\n1 2 2\n") == tree_text("k 2\n1 2 2\n2 3 6\n"));
}

TEST_CASE("malformed trees are rejected") {
  CHECK_THROWS(tree_text("k 2\n1 2\n3 4\n"));           // disconnected / out of range
  CHECK_THROWS(tree_text("k 3\n1 2\n2 3\n1 3\n"));      // cycle
  CHECK_THROWS(tree_text("k 2\n1 2 2\n2 3\n"));         // weights on some edges only
  CHECK_THROWS(tree_text("k 1\n2 1\n"));                // i < j required
  CHECK_THROWS(tree_text("k 2\n1 2\n"));                // too few edges
  CHECK_THROWS(tree_text("k 1\n1 2 1/0\n"));
  CHECK_THROWS_AS(Tree(4, {{1, 2}, {3, 4}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("any edge permutation writes identical bytes") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const Tree t = random_tree(2 + i % 10, rng);
    std::vector<Edge> edges(t.edges().begin(), t.edges().end());
    std::vector<ExactScalar> w;
    for (std::size_t e = 0; e < edges.size(); ++e) w.emplace_back(static_cast<long>(e + 1));
    const std::string want = to_tree_string(WeightedTree(t, w));
    for (int perm = 0; perm < 5; ++perm) {
      std::vector<std::size_t> order(edges.size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Edge> pe;
      std::vector<ExactScalar> pw;
      for (std::size_t o : order) {
        Edge e = edges[o];
        if (rng() & 1) std::swap(e.a, e.b);
        pe.push_back(e);
        pw.push_back(w[o]);
      }
      CHECK(to_tree_string(WeightedTree::from_edges(t.num_vertices(), pe, pw)) == want);
    }
    CHECK(tree_text(want) == WeightedTree(t, w));
  }
}

TEST_CASE("weights must be nonzero unless zeros are allowed") {
  const WeightedTree wt(make_path(2), {ExactScalar(2), ExactScalar(0)});
  CHECK_THROWS_AS(wt.require_weights(false), std::invalid_argument);
  CHECK_NOTHROW(wt.require_weights(true));
  CHECK_THROWS_AS(WeightedTree(make_path(2), {ExactScalar(1)}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree(make_path(2), {}).require_weights(true), std::invalid_argument);
}
