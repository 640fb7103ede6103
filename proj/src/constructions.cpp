#include "dotconf/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "dotconf/bounds.hpp"

namespace dotconf {

namespace {

// Which vertex pairs can have a product equal to some weight. Pairs outside
// this relation are kept above every weight by the large free coordinates.
enum class Exposure { any_with_v, cross_class };

bool exposed(const Bipartition& bp, int a, int b, Exposure rule) {
  const bool ua = bp.in_u(a), ub = bp.in_u(b);
  if (rule == Exposure::cross_class) return ua != ub;
  return !ua || !ub;
}

// Integer abscissas along a BFS from u1: each vertex takes the smallest
// unused positive integer such that no exposed pair's product equals the
// weight of an edge other than the pair's own.
std::vector<long> assign_abscissas(const Tree& t, const Bipartition& bp, int u1, Exposure rule) {
  const int nv = t.num_vertices();
  std::vector<long> abs(static_cast<std::size_t>(nv) + 1, 0);
  std::vector<int> placed;
  std::set<long> used;
  const auto consistent = [&]() {
    std::vector<std::pair<long, std::size_t>> weights;  // (weight, edge index)
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
      const Edge& ed = t.edge(e);
      if (abs[static_cast<std::size_t>(ed.a)] && abs[static_cast<std::size_t>(ed.b)]) {
        weights.emplace_back(abs[static_cast<std::size_t>(ed.a)] * abs[static_cast<std::size_t>(ed.b)], e);
      }
    }
    for (std::size_t x = 0; x < placed.size(); ++x) {
      for (std::size_t y = x + 1; y < placed.size(); ++y) {
        const int a = placed[x], b = placed[y];
        if (!exposed(bp, a, b, rule)) continue;
        const long product = abs[static_cast<std::size_t>(a)] * abs[static_cast<std::size_t>(b)];
        const auto own = t.edge_index(a, b);
        for (const auto& [w, e] : weights) {
          if (w == product && (!own || *own != e)) return false;
        }
      }
    }
    return true;
  };
  for (int v : t.bfs_order(u1)) {
    placed.push_back(v);
    for (long c = 1;; ++c) {
      if (used.count(c)) continue;
      abs[static_cast<std::size_t>(v)] = c;
      if (consistent()) break;
    }
    used.insert(abs[static_cast<std::size_t>(v)]);
  }
  return abs;
}

long isqrt_floor(long v) {
  long r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Distinct positive c with (-c, 0, ...) pairwise products avoiding `weights`.
std::vector<long> filler_offsets(std::size_t count, const std::set<long>& weights) {
  std::vector<long> out;
  for (long c = 1; out.size() < count; ++c) {
    bool ok = true;
    for (long other : out) ok = ok && !weights.count(c * other);
    if (ok) out.push_back(c);
  }
  return out;
}

Point axis_point(std::size_t dim, long x, std::size_t free_axis = 0, long free_value = 0) {
  std::vector<ExactScalar> c(dim, ExactScalar(0));
  c[0] = x;
  if (free_axis) c[free_axis] = free_value;
  return Point(std::move(c));
}

void assert_fillers_isolated(const ConstructionResult& r) {
  std::set<ExactScalar> weights(r.weights.begin(), r.weights.end());
  for (std::size_t f : r.fillers) {
    for (std::size_t j = 0; j < r.points.size(); ++j) {
      if (j == f) continue;
      if (weights.count(dot(r.points[f], r.points[j]))) {
        throw std::logic_error("filler point realizes a construction weight");
      }
    }
  }
}

void check_edge_constancy(const ConstructionResult& r) {
  for (std::size_t e = 0; e < r.tree.edges().size(); ++e) {
    const Edge& ed = r.tree.edge(e);
    const auto& pa = r.vertex_assignment[static_cast<std::size_t>(ed.a - 1)].points;
    const auto& pb = r.vertex_assignment[static_cast<std::size_t>(ed.b - 1)].points;
    for (std::size_t i : pa) {
      for (std::size_t j : pb) {
        if (dot(r.points[i], r.points[j]) != r.weights[e]) {
          throw std::logic_error("edge weight is not constant over its assigned points");
        }
      }
    }
  }
}

nlohmann::json scalar_list(const std::vector<ExactScalar>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

BigInt power(std::size_t base, int exponent) {
  BigInt out;
  const BigInt b = static_cast<unsigned long>(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

struct LineLayout {
  std::string name;
  std::size_t dim;
  Exposure rule;
  std::size_t per_vertex_u;
  std::size_t per_vertex_v;
  std::size_t axis_u;  // free coordinate for U vertices (0: single point)
  std::size_t axis_v;
  std::string kind_u, kind_v;
};

ConstructionResult lay_out(const Tree& t, std::size_t n, const LineLayout& layout, BigInt predicted) {
  const Bipartition bp = bipartition(t);
  const int u1 = bp.U.front();
  const std::vector<long> abs = assign_abscissas(t, bp, u1, layout.rule);

  std::vector<ExactScalar> weights;
  std::set<long> weight_values;
  long max_weight = 0;
  for (const Edge& e : t.edges()) {
    const long w = abs[static_cast<std::size_t>(e.a)] * abs[static_cast<std::size_t>(e.b)];
    weights.emplace_back(w);
    weight_values.insert(w);
    max_weight = std::max(max_weight, w);
  }
  const long y0 = isqrt_floor(max_weight) + 1;  // y0^2 > every weight

  std::vector<Point> pts;
  std::vector<VertexAssignment> assignment;
  for (int v = 1; v <= t.num_vertices(); ++v) {
    const bool in_u = bp.in_u(v);
    const std::size_t count = in_u ? layout.per_vertex_u : layout.per_vertex_v;
    const std::size_t axis = in_u ? layout.axis_u : layout.axis_v;
    VertexAssignment a{v, in_u ? layout.kind_u : layout.kind_v, ExactScalar(abs[static_cast<std::size_t>(v)]), {}};
    for (std::size_t j = 0; j < count; ++j) {
      a.points.push_back(pts.size());
      pts.push_back(axis_point(layout.dim, abs[static_cast<std::size_t>(v)], axis,
                               axis ? y0 + static_cast<long>(j) : 0));
    }
    assignment.push_back(std::move(a));
  }
  if (pts.size() > n) throw std::logic_error("construction overflowed its point budget");
  std::vector<std::size_t> fillers;
  for (long c : filler_offsets(n - pts.size(), weight_values)) {
    fillers.push_back(pts.size());
    pts.push_back(axis_point(layout.dim, -c));
  }

  ConstructionResult r{layout.name, PointSet(layout.dim, std::move(pts)), t, std::move(weights),
                       std::move(predicted), std::move(assignment), std::move(fillers), {}};
  check_edge_constancy(r);
  assert_fillers_isolated(r);

  nlohmann::json abscissas = nlohmann::json::object();
  for (int v = 1; v <= t.num_vertices(); ++v) abscissas[std::to_string(v)] = abs[static_cast<std::size_t>(v)];
  r.metadata = {
      {"construction", layout.name},
      {"n", n},
      {"k", t.num_edges()},
      {"tree", t.str()},
      {"dim", layout.dim},
      {"U", bp.U},
      {"V", bp.V},
      {"u1", u1},
      {"abscissas", abscissas},
      {"free_coordinate_start", y0},
      {"fillers", r.fillers.size()},
  };
  return r;
}

void require_tree(const Tree& t) {
  if (t.num_edges() < 1) throw std::invalid_argument("construction needs a tree with at least one edge");
}

}  // namespace

ConstructionResult build_kms_columns(const Tree& t, std::size_t n) {
  require_tree(t);
  const std::size_t k = static_cast<std::size_t>(t.num_edges());
  const Bipartition bp = bipartition(t);
  const std::size_t k1 = static_cast<std::size_t>(bp.k1()), k2 = static_cast<std::size_t>(bp.k2());
  // every column needs at least two points
  if (n < 2 * k1 + k2) {
    throw std::invalid_argument("column construction needs n >= 2*k1 + k2 = " + std::to_string(2 * k1 + k2));
  }
  const std::size_t m = (n - k2) / k1;
  LineLayout layout{"kms", 2, Exposure::any_with_v, m, 1, 1, 0, "column", "point"};
  ConstructionResult r = lay_out(t, n, layout, power(m, static_cast<int>(k1)));
  r.metadata["column_size"] = m;
  r.metadata["k1"] = k1;
  r.metadata["k2"] = k2;
  r.metadata["count_exponent"] = k1;
  r.metadata["predicted_exponent"] = formulas::kms(static_cast<int>(k)).str();
  r.metadata["weights"] = scalar_list(r.weights);
  r.metadata["predicted_count"] = r.predicted_count.get_str();
  if (k == 1) {
    r.metadata["note"] =
        "single edge: both orientations realize the weight, so labeled embeddings number 2 x predicted_count";
  }
  return r;
}

ConstructionResult build_perp_lines_3d(const Tree& t, std::size_t n) {
  require_tree(t);
  const std::size_t k = static_cast<std::size_t>(t.num_edges());
  if (n < 2 * (k + 1)) {
    throw std::invalid_argument("perpendicular-lines construction needs n >= 2(k+1) = " +
                                std::to_string(2 * (k + 1)));
  }
  const std::size_t m = n / (k + 1);
  LineLayout layout{"perp", 3, Exposure::cross_class, m, m, 1, 2, "y-line", "z-line"};
  ConstructionResult r = lay_out(t, n, layout, power(m, static_cast<int>(k + 1)));
  r.metadata["line_size"] = m;
  r.metadata["count_exponent"] = k + 1;
  r.metadata["stated_exponent"] = k;
  r.metadata["exponent_discrepancy"] =
      "the product count grows like n^(k+1); the stated n^k understates the observed scaling";
  r.metadata["weights"] = scalar_list(r.weights);
  r.metadata["predicted_count"] = r.predicted_count.get_str();
  if (k == 1) {
    r.metadata["note"] =
        "single edge: both orientations realize the weight, so labeled embeddings number 2 x predicted_count";
  }
  return r;
}

LatticeMode parse_lattice_mode(const std::string& s) {
  if (s == "paper") return LatticeMode::paper;
  if (s == "calibrated") return LatticeMode::calibrated;
  throw std::invalid_argument("lattice mode must be 'paper' or 'calibrated', got '" + s + "'");
}

namespace {

// All tuples in {1..q}^len in lexicographic order.
std::vector<std::vector<int>> index_tuples(int q, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(len), 1);
  while (true) {
    out.push_back(cur);
    int pos = len - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == q) cur[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace

LatticeResult build_is_lattice(const LatticeSpec& spec) {
  const int d = spec.d, q = spec.q;
  if (d < 2 || q < 2) throw std::invalid_argument("lattice needs d >= 2 and q >= 2");
  double size = 1;
  for (int i = 0; i < d + 1; ++i) size *= q;
  if (size > 2e6) throw std::invalid_argument("lattice too large: q^(d+1) > 2e6");
  if (spec.window_start && spec.mode != LatticeMode::calibrated) {
    throw std::invalid_argument("a window start only applies to calibrated mode");
  }

  const long dq = static_cast<long>(d) * q;
  const long scale = dq * dq;  // d^2 q^2
  const long q2 = static_cast<long>(q) * q;

  LatticeResult r{spec, PointSet(static_cast<std::size_t>(d)), PointSet(static_cast<std::size_t>(d)),
                  {}, {}, {}, {}, 0, 0, 0, 0, 0, {}};
  for (int i = 1; i <= q; ++i) r.A.emplace_back(BigInt(q + i), BigInt(dq));
  for (long j = 1; j <= q2; ++j) r.B.emplace_back(BigInt(q2 + j), BigInt(scale));

  const auto xs = index_tuples(q, d - 1);  // indices of x' (and of c) in A^(d-1)
  // numerator over d^2 q^2 of c . x' + b, for c-index ci, x'-index xi, b = B[j-1]
  const auto numerator = [&](const std::vector<int>& ci, const std::vector<int>& xi, long j) {
    long s = q2 + j;
    for (std::size_t t = 0; t < ci.size(); ++t) s += static_cast<long>(q + ci[t]) * (q + xi[t]);
    return s;
  };

  // For each f (c-index major, then b) the sorted numerators over all x'.
  std::vector<std::vector<long>> hits;
  hits.reserve(xs.size() * static_cast<std::size_t>(q2));
  for (const auto& ci : xs) {
    for (long j = 1; j <= q2; ++j) {
      std::vector<long> h;
      h.reserve(xs.size());
      for (const auto& xi : xs) h.push_back(numerator(ci, xi, j));
      std::sort(h.begin(), h.end());
      hits.push_back(std::move(h));
    }
  }
  const auto window_score = [&](long m0) {
    std::size_t populated = 0, incidences = 0, rich = 0;
    for (const auto& h : hits) {
      const auto lo = std::lower_bound(h.begin(), h.end(), m0);
      const auto hi = std::upper_bound(h.begin(), h.end(), m0 + q2 - 1);
      const auto c = static_cast<std::size_t>(hi - lo);
      populated += c > 0;
      incidences += c;
      rich += 2 * c >= static_cast<std::size_t>(q);
    }
    return std::tuple{populated, incidences, rich};
  };

  const long n_min = static_cast<long>(d - 1) * (q + 1) * (q + 1) + q2 + 1;
  const long n_max = static_cast<long>(d - 1) * (2L * q) * (2L * q) + 2 * q2;
  long m0 = q2 + 1;  // B as given, numerators q^2+1 .. 2q^2
  if (spec.mode == LatticeMode::calibrated) {
    if (spec.window_start) {
      m0 = *spec.window_start;
      if (m0 < 1) throw std::invalid_argument("window start must be positive");
    } else {
      long best = n_min;
      auto best_score = window_score(n_min);
      for (long s = n_min + 1; s + q2 - 1 <= n_max; ++s) {
        const auto sc = window_score(s);
        if (std::get<0>(sc) > std::get<0>(best_score) ||
            (std::get<0>(sc) == std::get<0>(best_score) && std::get<1>(sc) > std::get<1>(best_score))) {
          best = s;
          best_score = sc;
        }
      }
      m0 = best;
    }
  }
  r.window_start = m0;
  for (long t = 0; t < q2; ++t) r.last.emplace_back(BigInt(m0 + t), BigInt(scale));
  std::tie(r.populated, r.incidences, r.rich) = window_score(m0);

  std::vector<Point> e_pts;
  for (const auto& xi : xs) {
    for (const auto& z : r.last) {
      std::vector<ExactScalar> c;
      for (int i : xi) c.push_back(r.A[static_cast<std::size_t>(i - 1)]);
      c.push_back(z);
      e_pts.emplace_back(std::move(c));
    }
  }
  r.E = PointSet(static_cast<std::size_t>(d), std::move(e_pts));

  std::vector<Point> f_pts;
  for (const auto& ci : xs) {
    for (const auto& b : r.B) {
      std::vector<ExactScalar> c;
      for (int i : ci) c.push_back(-r.A[static_cast<std::size_t>(i - 1)] / b);
      c.push_back(ExactScalar(1) / b);
      f_pts.emplace_back(std::move(c));
    }
  }
  r.F = PointSet(static_cast<std::size_t>(d), std::move(f_pts));

  // f . (x', c . x' + b) = 1 for every f and every x' in A^(d-1)
  std::size_t fi = 0;
  for (const auto& ci : xs) {
    for (const auto& b : r.B) {
      const Point& f = r.F[fi++];
      r.H.push_back(alpha_hyperplane(f, 1));
      for (const auto& xi : xs) {
        std::vector<ExactScalar> x;
        ExactScalar top = b;
        for (std::size_t t = 0; t < xi.size(); ++t) {
          const ExactScalar& xv = r.A[static_cast<std::size_t>(xi[t] - 1)];
          x.push_back(xv);
          top += r.A[static_cast<std::size_t>(ci[t] - 1)] * xv;
        }
        x.push_back(top);
        const Point xp(std::move(x));
        if (dot(f, xp) != ExactScalar(1) || !r.H.back().contains(xp)) {
          throw std::logic_error("unit identity failed for f = " + f.str());
        }
        ++r.identity_checks;
      }
    }
  }

  r.metadata = {
      {"construction", "lattice"},
      {"d", d},
      {"q", q},
      {"mode", spec.mode == LatticeMode::paper ? "paper" : "calibrated"},
      {"E_size", r.E.size()},
      {"F_size", r.F.size()},
      {"A", scalar_list(r.A)},
      {"last_coordinate_scale", scale},
      {"window_start", m0},
      {"window_end", m0 + q2 - 1},
      {"reachable_numerators", {n_min, n_max}},
      {"identity_checks", r.identity_checks},
      {"unit_pairs", r.incidences},
      {"populated_hyperplanes", r.populated},
      {"rich_hyperplanes", r.rich},
      {"predicted_exponent", formulas::lattice(1, d).str()},
  };
  return r;
}

nlohmann::json sidecar(const ConstructionResult& r) {
  nlohmann::json j = r.metadata;
  nlohmann::json va = nlohmann::json::array();
  for (const auto& a : r.vertex_assignment) {
    va.push_back({{"vertex", a.vertex}, {"kind", a.kind}, {"abscissa", a.abscissa.str()}, {"points", a.points}});
  }
  j["vertex_assignment"] = va;
  j["filler_points"] = r.fillers;
  j["weights"] = scalar_list(r.weights);
  j["predicted_count"] = r.predicted_count.get_str();
  j["size"] = r.points.size();
  return j;
}

nlohmann::json sidecar(const LatticeResult& r) { return r.metadata; }

void write_sidecar(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace dotconf
