#include "dotconf/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "dotconf/frame.hpp"
#include "dotconf/simd/kernels.hpp"
#include "dotconf/tuple_set.hpp"

namespace dotconf {

namespace {

// Tree vertices in BFS order from a root; every non-root position has its
// parent at a smaller position.
struct SearchPlan {
  std::vector<int> order;
  std::vector<int> parent_pos;
  std::vector<std::size_t> edge;  // canonical index of the edge to the parent
  std::vector<std::vector<std::size_t>> children;
};

SearchPlan make_plan(const Tree& t, int root) {
  SearchPlan plan;
  plan.order = t.bfs_order(root);
  const std::vector<int> parent = t.parents(root);
  std::vector<int> pos_of(static_cast<std::size_t>(t.num_vertices()) + 1, -1);
  for (std::size_t p = 0; p < plan.order.size(); ++p) pos_of[static_cast<std::size_t>(plan.order[p])] = static_cast<int>(p);
  plan.parent_pos.assign(plan.order.size(), -1);
  plan.edge.assign(plan.order.size(), 0);
  plan.children.assign(plan.order.size(), {});
  for (std::size_t p = 1; p < plan.order.size(); ++p) {
    const int v = plan.order[p];
    const int u = parent[static_cast<std::size_t>(v)];
    plan.parent_pos[p] = pos_of[static_cast<std::size_t>(u)];
    plan.edge[p] = *t.edge_index(u, v);
    plan.children[static_cast<std::size_t>(plan.parent_pos[p])].push_back(p);
  }
  return plan;
}

using Adjacency = std::vector<std::vector<std::uint32_t>>;

// adjacency[p][i] = columns j with point_i . point_j equal to the weight of
// the edge from position p to its parent. Empty optional when some weight
// never occurs.
std::optional<std::vector<const Adjacency*>> weight_adjacency(const WeightedTree& wt,
                                                              const DotProductIndex& index,
                                                              const SearchPlan& plan,
                                                              std::vector<Adjacency>& storage) {
  const auto weights = wt.weights();
  std::vector<std::uint32_t> ids;
  for (const auto& w : weights) {
    const auto id = index.find(w);
    if (!id || !index.counted(*id)) return std::nullopt;
    ids.push_back(*id);
  }
  std::vector<std::uint32_t> distinct = ids;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  storage.assign(distinct.size(), Adjacency(index.rows()));
  for (std::size_t s = 0; s < distinct.size(); ++s) {
    for (const auto& [i, j] : index.pairs(distinct[s])) storage[s][i].push_back(j);
  }
  std::vector<const Adjacency*> by_pos(plan.order.size(), nullptr);
  for (std::size_t p = 1; p < plan.order.size(); ++p) {
    const std::uint32_t id = ids[plan.edge[p]];
    const auto s = std::lower_bound(distinct.begin(), distinct.end(), id) - distinct.begin();
    by_pos[p] = &storage[static_cast<std::size_t>(s)];
  }
  return by_pos;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const SearchPlan& plan, const std::vector<const Adjacency*>& adj, std::size_t n)
      : plan_(plan), adj_(adj), used_(n, 0), phi_(plan.order.size(), 0) {}

  std::uint64_t from_root(std::uint32_t i) {
    if (!children_feasible(0, i)) return 0;
    used_[i] = 1;
    phi_[0] = i;
    const std::uint64_t total = extend(1);
    used_[i] = 0;
    return total;
  }

 private:
  bool children_feasible(std::size_t pos, std::uint32_t point) const {
    for (std::size_t c : plan_.children[pos]) {
      if ((*adj_[c])[point].empty()) return false;
    }
    return true;
  }

  std::uint64_t extend(std::size_t pos) {
    if (pos == plan_.order.size()) return 1;
    const auto& candidates = (*adj_[pos])[phi_[static_cast<std::size_t>(plan_.parent_pos[pos])]];
    std::uint64_t total = 0;
    for (std::uint32_t j : candidates) {
      if (used_[j] || !children_feasible(pos, j)) continue;
      used_[j] = 1;
      phi_[pos] = j;
      total += extend(pos + 1);
      used_[j] = 0;
    }
    return total;
  }

  const SearchPlan& plan_;
  const std::vector<const Adjacency*>& adj_;
  std::vector<char> used_;
  std::vector<std::uint32_t> phi_;
};

void require_square(const DotProductIndex& index) {
  if (!index.same_set()) throw std::invalid_argument("tree counting needs a square dot index");
}

class TupleSearch {
 public:
  TupleSearch(const SearchPlan& plan, const DotProductIndex& index, TupleSet& out)
      : plan_(plan), index_(index), out_(out), used_(index.rows(), 0),
        phi_(plan.order.size(), 0), ids_(plan.order.size() - 1, 0) {}

  void from_root(std::uint32_t i) {
    used_[i] = 1;
    phi_[0] = i;
    extend(1);
    used_[i] = 0;
  }

 private:
  void extend(std::size_t pos) {
    if (pos == plan_.order.size()) {
      out_.insert(ids_);
      return;
    }
    const std::uint32_t anchor = phi_[static_cast<std::size_t>(plan_.parent_pos[pos])];
    const auto row = index_.row(anchor);
    for (std::uint32_t j = 0; j < row.size(); ++j) {
      if (used_[j]) continue;
      const std::uint32_t id = row[j];
      if (!index_.counted(id)) continue;
      ids_[plan_.edge[pos]] = id;
      used_[j] = 1;
      phi_[pos] = j;
      extend(pos + 1);
      used_[j] = 0;
    }
  }

  const SearchPlan& plan_;
  const DotProductIndex& index_;
  TupleSet& out_;
  std::vector<char> used_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint32_t> ids_;
};

TupleCount finish_tuples(TupleSet& set, const DotProductIndex& index, const TupleOptions& options) {
  TupleCount result;
  result.count = set.count();
  result.spilled_runs = set.spilled_runs();
  if (options.collect) {
    for (const auto& ids : set.sorted_tuples()) {
      std::vector<ExactScalar> tuple;
      tuple.reserve(ids.size());
      for (std::uint32_t id : ids) tuple.push_back(index.value(id));
      result.tuples.push_back(std::move(tuple));
    }
    std::sort(result.tuples.begin(), result.tuples.end());
  }
  return result;
}

}  // namespace

std::set<ExactScalar> pinned_set(const Point& p, const PointSet& points, bool include_zero) {
  if (p.is_origin()) throw std::invalid_argument("the origin cannot be a pin");
  std::set<ExactScalar> out;
  for (const auto& q : points) {
    ExactScalar v = dot(p, q);
    if (include_zero || !v.is_zero()) out.insert(std::move(v));
  }
  return out;
}

DotProductStats distinct_dot_products(const DotProductIndex& index) {
  std::vector<std::size_t> counts(index.value_count(), 0);
  DotProductStats stats;
  for (std::size_t i = 0; i < index.rows(); ++i) {
    const auto row = index.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (index.same_set() && i == j) continue;
      ++counts[row[j]];
      ++stats.pairs;
    }
  }
  if (const auto z = index.zero_id()) stats.zero_pairs = counts[*z];
  for (std::uint32_t id = 0; id < counts.size(); ++id) {
    if (counts[id] == 0 || !index.counted(id)) continue;
    ++stats.distinct;
    if (counts[id] > stats.max_multiplicity ||
        (counts[id] == stats.max_multiplicity && index.value(id) < *stats.most_frequent)) {
      stats.max_multiplicity = counts[id];
      stats.most_frequent = index.value(id);
    }
  }
  return stats;
}

DotProductStats distinct_dot_products(const PointSet& points, const ExecPolicy& policy) {
  return distinct_dot_products(DotProductIndex(points, policy));
}

DotProductStats distinct_dot_products(const PointSet& rows, const PointSet& cols,
                                      const ExecPolicy& policy) {
  return distinct_dot_products(DotProductIndex(rows, cols, policy));
}

std::size_t pair_multiplicity(const PointSet& rows, const PointSet& cols, const ExactScalar& alpha,
                              const ExecPolicy& policy) {
  if (rows.dim() != cols.dim()) throw std::invalid_argument("pair_multiplicity: dimension mismatch");
  const auto rf = make_integer_frame(rows);
  const auto cf = make_integer_frame(cols);
  const std::size_t chunks = chunk_count(policy.threads, rows.size());
  std::vector<std::size_t> partial(chunks, 0);
  if (rf && cf && fits_product(*rf, *cf)) {
    const auto target = frame_target(alpha, *rf, *cf);
    if (!target) return 0;
    const simd::KernelTable& kernels = simd::active_kernels();
    parallel_chunks(policy.threads, rows.size(), [&](std::size_t begin, std::size_t end, std::size_t c) {
      std::vector<std::int64_t> raw(cols.size());
      for (std::size_t i = begin; i < end; ++i) {
        const auto pin = rf->point(i);
        kernels.dot_row(pin.data(), rf->dim, cf->coords.data(), cf->size, cf->size, raw.data());
        partial[c] += kernels.count_equal(raw.data(), raw.size(), *target);
      }
    });
  } else {
    parallel_chunks(policy.threads, rows.size(), [&](std::size_t begin, std::size_t end, std::size_t c) {
      for (std::size_t i = begin; i < end; ++i) {
        for (const auto& q : cols) partial[c] += dot(rows[i], q) == alpha;
      }
    });
  }
  std::size_t total = 0;
  for (std::size_t v : partial) total += v;
  return total;
}

BigInt count_embeddings(const WeightedTree& wt, const DotProductIndex& index, unsigned threads) {
  require_square(index);
  wt.require_weights(index.include_zero());
  const Tree& t = wt.tree();
  const std::size_t n = index.rows();
  if (static_cast<std::size_t>(t.num_vertices()) > n) return 0;
  const SearchPlan plan = make_plan(t, 1);
  std::vector<Adjacency> storage;
  const auto adj = weight_adjacency(wt, index, plan, storage);
  if (!adj) return t.num_edges() == 0 ? BigInt(static_cast<unsigned long>(n)) : BigInt(0);

  std::vector<BigInt> partial(chunk_count(threads, n));
  parallel_chunks(threads, n, [&](std::size_t begin, std::size_t end, std::size_t c) {
    EmbeddingSearch search(plan, *adj, n);
    BigInt sum = 0;
    for (std::size_t i = begin; i < end; ++i) {
      sum += BigInt(static_cast<unsigned long>(search.from_root(static_cast<std::uint32_t>(i))));
    }
    partial[c] = sum;
  });
  BigInt total = 0;
  for (const auto& v : partial) total += v;
  return total;
}

BigInt count_embeddings(const WeightedTree& wt, const PointSet& points, const ExecPolicy& policy) {
  return count_embeddings(wt, DotProductIndex(points, policy), policy.threads);
}

BigInt count_homomorphisms(const WeightedTree& wt, const DotProductIndex& index, unsigned threads) {
  require_square(index);
  wt.require_weights(index.include_zero());
  const Tree& t = wt.tree();
  const std::size_t n = index.rows();
  const SearchPlan plan = make_plan(t, 1);
  std::vector<Adjacency> storage;
  const auto adj = weight_adjacency(wt, index, plan, storage);
  if (!adj) return t.num_edges() == 0 ? BigInt(static_cast<unsigned long>(n)) : BigInt(0);

  // ways[p][i]: maps of the subtree below position p sending it to point i
  std::vector<std::vector<BigInt>> ways(plan.order.size());
  for (std::size_t p = plan.order.size(); p-- > 0;) {
    ways[p].assign(n, 1);
    parallel_for(threads, n, [&](std::size_t i) {
      BigInt product = 1;
      for (std::size_t c : plan.children[p]) {
        BigInt sum = 0;
        for (std::uint32_t j : (*(*adj)[c])[i]) sum += ways[c][j];
        product *= sum;
        if (product == 0) break;
      }
      ways[p][i] = product;
    });
  }
  BigInt total = 0;
  for (const auto& v : ways[0]) total += v;
  return total;
}

BigInt count_homomorphisms(const WeightedTree& wt, const PointSet& points, const ExecPolicy& policy) {
  return count_homomorphisms(wt, DotProductIndex(points, policy), policy.threads);
}

TupleCount distinct_weight_tuples(const Tree& t, const PointSet& points, const ExecPolicy& policy,
                                  const TupleOptions& options) {
  const std::size_t n = points.size();
  const std::size_t width = static_cast<std::size_t>(t.num_edges());
  if (static_cast<std::size_t>(t.num_vertices()) > n) return {};
  const DotProductIndex index(points, policy);
  const SearchPlan plan = make_plan(t, 1);

  const std::size_t chunks = chunk_count(policy.threads, n);
  std::vector<TupleSet> partial;
  partial.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) partial.emplace_back(width, options.spill_threshold);
  parallel_chunks(policy.threads, n, [&](std::size_t begin, std::size_t end, std::size_t c) {
    TupleSearch search(plan, index, partial[c]);
    for (std::size_t i = begin; i < end; ++i) search.from_root(static_cast<std::uint32_t>(i));
  });
  TupleSet merged(width, options.spill_threshold);
  for (auto& p : partial) merged.absorb(std::move(p));
  return finish_tuples(merged, index, options);
}

TupleCount pinned_weight_tuples(const Tree& t, int v, const Point& x, const PointSet& points,
                                const ExecPolicy& policy, const TupleOptions& options) {
  if (!t.has_vertex(v)) throw std::invalid_argument("no vertex " + std::to_string(v));
  const auto root_point = points.index_of(x);
  if (!root_point) throw std::invalid_argument("pin " + x.str() + " is not in the point set");
  const std::size_t width = static_cast<std::size_t>(t.num_edges());
  if (static_cast<std::size_t>(t.num_vertices()) > points.size()) return {};
  const DotProductIndex index(points, policy);
  const SearchPlan plan = make_plan(t, v);
  TupleSet set(width, options.spill_threshold);
  TupleSearch search(plan, index, set);
  search.from_root(static_cast<std::uint32_t>(*root_point));
  return finish_tuples(set, index, options);
}

std::set<ExactScalar> product_set(std::span<const ExactScalar> a, std::span<const ExactScalar> b) {
  std::set<ExactScalar> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(x * y);
  }
  return out;
}

std::size_t incidences(const PointSet& points, std::span<const AlphaHyperplane> lines,
                       const ExecPolicy& policy) {
  if (points.dim() != 2) throw std::invalid_argument("incidences are counted in the plane only");
  for (const auto& l : lines) {
    if (l.normal().dim() != 2) throw std::invalid_argument("incidences need planar lines");
  }
  const auto frame = make_integer_frame(points);
  const std::size_t chunks = chunk_count(policy.threads, lines.size());
  std::vector<std::size_t> partial(chunks, 0);
  const simd::KernelTable& kernels = simd::active_kernels();
  parallel_chunks(policy.threads, lines.size(), [&](std::size_t begin, std::size_t end, std::size_t c) {
    std::vector<std::int64_t> raw(points.size());
    for (std::size_t l = begin; l < end; ++l) {
      const AlphaHyperplane& line = lines[l];
      std::optional<IntegerFrame> pin;
      if (frame) pin = make_integer_frame(PointSet(2, {line.normal()}));
      if (pin && fits_product(*pin, *frame)) {
        const auto target = frame_target(line.value(), *pin, *frame);
        if (!target) continue;
        kernels.dot_row(pin->coords.data(), 2, frame->coords.data(), frame->size, frame->size, raw.data());
        partial[c] += kernels.count_equal(raw.data(), raw.size(), *target);
      } else {
        for (const auto& p : points) partial[c] += line.contains(p);
      }
    }
  });
  std::size_t total = 0;
  for (std::size_t v : partial) total += v;
  return total;
}

RadialHistogram radial_histogram(const PointSet& points, const ExactScalar& constant) {
  if (constant.sign() < 0) throw std::invalid_argument("radial constant must be non-negative");
  RadialHistogram h;
  h.constant = constant;
  for (const auto& p : points) {
    if (p.is_origin()) {
      h.origin_present = true;
      continue;
    }
    const std::size_t c = ++h.buckets[radial_direction(p)];
    h.max = std::max(h.max, c);
    ++h.total;
  }
  // max <= C * n^(2/3)  <=>  max^3 <= C^3 * n^2
  const mpq_class lhs = mpq_class(BigInt(static_cast<unsigned long>(h.max))) *
                        mpq_class(BigInt(static_cast<unsigned long>(h.max))) *
                        mpq_class(BigInt(static_cast<unsigned long>(h.max)));
  const mpq_class n2 = mpq_class(BigInt(static_cast<unsigned long>(h.total))) *
                       mpq_class(BigInt(static_cast<unsigned long>(h.total)));
  h.hypothesis_holds = lhs <= constant.raw() * constant.raw() * constant.raw() * n2;
  return h;
}

std::vector<std::size_t> pinned_counts(const DotProductIndex& index, unsigned threads) {
  std::vector<std::size_t> counts(index.rows(), 0);
  const std::size_t chunks = chunk_count(threads, index.rows());
  parallel_chunks(threads, index.rows(), [&](std::size_t begin, std::size_t end, std::size_t) {
    std::vector<std::size_t> stamp(index.value_count(), 0);
    for (std::size_t i = begin; i < end; ++i) {
      std::size_t distinct = 0;
      for (std::uint32_t id : index.row(i)) {
        if (!index.counted(id) || stamp[id] == i + 1) continue;
        stamp[id] = i + 1;
        ++distinct;
      }
      counts[i] = distinct;
    }
  });
  (void)chunks;
  return counts;
}

std::vector<std::size_t> pinned_counts(const PointSet& points, const ExecPolicy& policy) {
  return pinned_counts(DotProductIndex(points, policy), policy.threads);
}

PinnedMax max_pinned(const PointSet& points, const ExecPolicy& policy) {
  if (points.size() < 1) throw std::invalid_argument("max_pinned needs a nonempty set");
  for (const auto& p : points) {
    if (p.is_origin()) throw std::invalid_argument("the origin cannot be a pin");
  }
  const auto counts = pinned_counts(points, policy);
  PinnedMax best;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > best.count) best = {i, counts[i]};
  }
  return best;
}

}  // namespace dotconf
