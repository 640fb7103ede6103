#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dotconf/acceptance.hpp"
#include "dotconf/bounds.hpp"
#include "dotconf/constructions.hpp"
#include "dotconf/counting.hpp"
#include "dotconf/descent.hpp"
#include "dotconf/error.hpp"
#include "dotconf/point_io.hpp"
#include "dotconf/proof_graph.hpp"
#include "dotconf/random.hpp"
#include "dotconf/report.hpp"
#include "dotconf/tree.hpp"

namespace dotconf {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
  bool include_zero = false;
  std::string json;
  bool timing = false;
  ExecPolicy policy() const { return {threads, include_zero}; }
};

using Clock = std::chrono::steady_clock;

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out) : g_(g), out_(out), start_(Clock::now()) {}

  // Writes the report as JSON to --json (or stdout for "-") and otherwise
  // as a text table.
  void emit(CountReport r) const {
    if (g_.timing) {
      r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }
    if (g_.json == "-") {
      out_ << r.to_json().dump(2) << '\n';
      return;
    }
    if (!g_.json.empty()) save_report(r, g_.json);
    out_ << render_text(r);
  }

  const Globals& globals() const { return g_; }
  std::ostream& out() const { return out_; }

 private:
  const Globals& g_;
  std::ostream& out_;
  Clock::time_point start_;
};

std::vector<ExactScalar> parse_weights(const std::string& text) {
  std::vector<ExactScalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty weight in '" + text + "'");
    out.push_back(ExactScalar::parse(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw UsageError("no weights given");
  return out;
}

Point parse_point_arg(const std::string& text, std::size_t dim) {
  const auto coords = parse_weights(text);
  if (coords.size() != dim) {
    throw UsageError("point '" + text + "' needs " + std::to_string(dim) + " coordinates");
  }
  return Point(coords);
}

WeightedTree load_tree_arg(const std::string& spec, const std::string& weights) {
  // "path:2" names a builtin unless a file of that name exists
  const bool prefixed = spec.rfind("builtin:", 0) == 0;
  WeightedTree wt = WeightedTree(make_path(1), {});
  if (prefixed || !std::filesystem::exists(spec)) {
    try {
      wt = WeightedTree(parse_builtin_tree(spec), {});
    } catch (const std::invalid_argument& e) {
      if (prefixed) throw;
      throw UsageError("no tree file '" + spec + "', and not a builtin (path:K, star:K, binary:H)");
    }
  } else {
    wt = load_tree(spec);
  }
  if (!weights.empty()) {
    auto w = parse_weights(weights);
    if (w.size() != static_cast<std::size_t>(wt.tree().num_edges())) {
      throw UsageError("tree has " + std::to_string(wt.tree().num_edges()) + " edges but " +
                       std::to_string(w.size()) + " weights were given");
    }
    wt = WeightedTree(wt.tree(), std::move(w));
  }
  return wt;
}

std::string cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

// Header lines, then one aligned row per input report.
std::string render_comparison(const nlohmann::json& j) {
  std::ostringstream os;
  os << "experiment          " << j["experiment"].get<std::string>() << '\n'
     << "predicted_exponent  " << j["predicted_exponent"].get<std::string>() << '\n'
     << "fit_slope           " << (j["fit_slope"].is_null() ? "-" : cell(j["fit_slope"])) << '\n'
     << "threshold_c         " << j["threshold_c"].get<std::string>() << '\n';
  const bool exact = j["empirical"].front().contains("predicted_count");
  std::vector<std::array<std::string, 4>> rows{{"n", "empirical", exact ? "predicted" : "c*n^p", "pass"}};
  for (const auto& r : j["empirical"]) {
    rows.push_back({cell(r["n"]), cell(r["empirical"]), cell(exact ? r["predicted_count"] : r["threshold"]),
                    r["pass"].get<bool>() ? "yes" : "no"});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      os << std::string(width[c] - r[c].size(), ' ') << r[c] << (c + 1 < 4 ? "  " : "\n");
    }
  }
  os << "pass                " << (j["pass"].get<bool>() ? "yes" : "no") << '\n';
  return os.str();
}

nlohmann::json base_parameters(const PointSet& points) {
  return {{"n", points.size()}, {"dim", points.dim()}};
}

// Copies construction parameters from a generator sidecar.
void merge_sidecar(nlohmann::json& params, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open sidecar " + path);
  nlohmann::json side;
  try {
    in >> side;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  for (const char* key : {"construction", "predicted_count", "d", "q", "mode", "k", "tree"}) {
    if (side.contains(key)) params[key] = side[key];
  }
}

std::filesystem::path sibling(const std::filesystem::path& p, const std::string& suffix) {
  std::filesystem::path out = p;
  out.replace_extension(suffix);
  return out;
}

nlohmann::json histogram_json(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t v : values) ++h[v];
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dot-product tree configurations: constructions, exact counts, and checks", "dotconf"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for counting kernels")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for randomized generators");
  app.add_flag("--include-zero", g.include_zero, "Count zero dot products too");
  app.add_option("--json", g.json, "Write the JSON report to this path ('-' for stdout)");
  app.add_flag("--timing", g.timing, "Record elapsed_ms in reports");

  // generate
  auto* gen = app.add_subcommand("generate", "Write a point set (.pts) and a JSON sidecar");
  std::string construction, tree_spec, mode = "calibrated", output;
  std::optional<std::size_t> n_opt;
  int d = 2, q = 0;
  std::optional<long> window;
  std::size_t side = 0, count = 0;
  std::size_t dim = 2;
  std::int64_t box = 10, offset = 1;
  gen->add_option("--construction", construction, "kms | perp | lattice | grid | random")
      ->required()
      ->check(CLI::IsMember({"kms", "perp", "lattice", "grid", "random"}));
  gen->add_option("--tree", tree_spec, "builtin:path:K | builtin:star:K | builtin:binary:H | file.tree");
  gen->add_option("--n", n_opt, "Number of points (kms, perp)");
  gen->add_option("--d", d, "Dimension (lattice)");
  gen->add_option("--q", q, "Lattice parameter q >= 2");
  gen->add_option("--mode", mode, "paper | calibrated (lattice)");
  gen->add_option("--window-start", window, "First last-coordinate numerator (calibrated lattice)");
  gen->add_option("--side", side, "Grid side length");
  gen->add_option("--dim", dim, "Dimension (grid, random)");
  gen->add_option("--offset", offset, "Smallest grid coordinate");
  gen->add_option("--count", count, "Number of random points");
  gen->add_option("--box", box, "Random coordinates lie in [-box, box]");
  gen->add_option("-o,--output", output, "Output .pts path");

  // count
  auto* cnt = app.add_subcommand("count", "Count labeled embeddings of a weighted tree");
  std::string points_path, weights, sidecar_path;
  bool homs = false;
  cnt->add_option("--tree", tree_spec, "Tree spec or .tree file")->required();
  cnt->add_option("--weights", weights, "Comma-separated weights in canonical edge order");
  cnt->add_option("--points", points_path, "Input .pts")->required()->check(CLI::ExistingFile);
  cnt->add_flag("--homomorphisms", homs, "Also count non-injective maps");
  cnt->add_option("--sidecar", sidecar_path, "Generator sidecar to copy parameters from");

  // distinct
  auto* dst = app.add_subcommand("distinct", "Distinct dot products or distinct weight tuples");
  std::string against;
  std::optional<std::string> alpha_text;
  std::size_t spill = 0;
  bool list = false;
  dst->add_option("--points", points_path, "Input .pts")->required()->check(CLI::ExistingFile);
  dst->add_option("--against", against, "Second set F for products E x F")->check(CLI::ExistingFile);
  dst->add_option("--alpha", alpha_text, "Count pairs with this product (needs --against)");
  dst->add_option("--tree", tree_spec, "Count distinct weight tuples of this tree instead");
  dst->add_option("--spill", spill, "Spill sorted tuple runs to disk beyond this many tuples");
  dst->add_flag("--list", list, "Include the tuples in the JSON report");
  dst->add_option("--sidecar", sidecar_path, "Generator sidecar to copy parameters from");

  // pinned
  auto* pin = app.add_subcommand("pinned", "Pinned dot-product sets, max pin, descent");
  std::string pin_text;
  bool descent = false;
  int vertex = 1;
  pin->add_option("--points", points_path, "Input .pts")->required()->check(CLI::ExistingFile);
  pin->add_option("--pin", pin_text, "Pin coordinates, comma separated");
  pin->add_flag("--descent", descent, "Run the hyperplane descent (d >= 3)");
  pin->add_option("--tree", tree_spec, "With --pin: distinct weight tuples with vertex mapped to the pin");
  pin->add_option("--vertex", vertex, "Tree vertex mapped to the pin");

  // incidence
  auto* inc = app.add_subcommand("incidence", "Point / alpha-line incidences in the plane");
  std::string pins_path;
  std::string alpha_line = "1";
  inc->add_option("--points", points_path, "Input .pts")->required()->check(CLI::ExistingFile);
  inc->add_option("--pins", pins_path, "Pins p defining lines p.x = alpha")->required()->check(CLI::ExistingFile);
  inc->add_option("--alpha", alpha_line, "Line value alpha");

  // radial
  auto* rad = app.add_subcommand("radial", "Histogram of points per line through the origin");
  std::string constant = "1";
  rad->add_option("--points", points_path, "Input .pts")->required()->check(CLI::ExistingFile);
  rad->add_option("--constant", constant, "C in max <= C n^(2/3)");

  // proofgraph
  auto* pg = app.add_subcommand("proofgraph", "Multigraph of consecutive points on alpha-lines");
  pg->add_option("--points", points_path, "Input .pts (E)")->required()->check(CLI::ExistingFile);
  pg->add_option("--against", against, "Second set F (defaults to E)")->check(CLI::ExistingFile);

  // verify
  auto* ver = app.add_subcommand("verify", "Run the acceptance checks on self-generated inputs");
  std::vector<int> criteria;
  bool brief = false;
  ver->add_option("--criterion", criteria, "Run only these criteria");
  ver->add_flag("--brief", brief, "One line per criterion");

  // report
  auto* rep = app.add_subcommand("report", "Compare count reports against exponent formulas");
  std::string experiment, threshold = "1/8";
  std::vector<std::string> inputs;
  rep->add_option("--experiment", experiment, "kms | perp | lattice-unit-pairs | lattice | distinct | tuples | pinned")
      ->required();
  rep->add_option("--inputs", inputs, "CountReport JSON files (space or comma separated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::ExistingFile);
  rep->add_option("--threshold", threshold, "Constant c in the checks empirical >= c n^p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Runner run(g, out);
    const ExecPolicy policy = g.policy();

    if (*gen) {
      if (output.empty()) throw UsageError("generate needs -o/--output");
      const std::filesystem::path pts_path(output);
      const auto side_path = sibling(pts_path, ".json");
      if (construction == "kms" || construction == "perp") {
        if (tree_spec.empty()) throw UsageError(construction + " needs --tree");
        if (!n_opt) throw UsageError(construction + " needs --n");
        const WeightedTree wt = load_tree_arg(tree_spec, "");
        const ConstructionResult r = construction == "kms" ? build_kms_columns(wt.tree(), *n_opt)
                                                           : build_perp_lines_3d(wt.tree(), *n_opt);
        save_point_set(r.points, pts_path);
        write_sidecar(sidecar(r), side_path);
        out << "wrote " << pts_path.string() << " (" << r.points.size() << " points)\n"
            << "weights " << nlohmann::json(sidecar(r)["weights"]).dump() << '\n'
            << "predicted_count " << r.predicted_count.get_str() << '\n';
      } else if (construction == "lattice") {
        if (q == 0) throw UsageError("lattice needs --q");
        LatticeSpec spec{d, q, parse_lattice_mode(mode), window};
        const LatticeResult r = build_is_lattice(spec);
        const auto f_path = sibling(pts_path, ".F.pts");
        save_point_set(r.E, pts_path);
        save_point_set(r.F, f_path);
        nlohmann::json j = sidecar(r);
        j["F_path"] = f_path.filename().string();
        write_sidecar(j, side_path);
        out << "wrote " << pts_path.string() << " (E, " << r.E.size() << " points) and " << f_path.string()
            << " (F, " << r.F.size() << " points)\n"
            << "unit pairs " << r.incidences << ", populated hyperplanes " << r.populated << '\n';
      } else if (construction == "grid") {
        if (side == 0) throw UsageError("grid needs --side");
        const PointSet s = integer_grid(side, dim, offset);
        save_point_set(s, pts_path);
        write_sidecar({{"construction", "grid"}, {"side", side}, {"dim", dim}, {"offset", offset}, {"n", s.size()}},
                      side_path);
        out << "wrote " << pts_path.string() << " (" << s.size() << " points)\n";
      } else {
        if (!g.seed) throw UsageError("random needs --seed");
        if (count == 0) throw UsageError("random needs --count");
        const PointSet s = random_point_set(count, dim, box, *g.seed);
        save_point_set(s, pts_path);
        write_sidecar({{"construction", "random"},
                       {"count", count},
                       {"dim", dim},
                       {"box", box},
                       {"seed", *g.seed},
                       {"generator", "mt19937_64"},
                       {"n", s.size()}},
                      side_path);
        out << "wrote " << pts_path.string() << " (" << s.size() << " points)\n";
      }
      return 0;
    }

    if (*ver) {
      std::vector<CriterionResult> results;
      for (int id : criteria.empty() ? acceptance_ids() : criteria) results.push_back(run_criterion(id, g.threads));
      out << render_acceptance(results, !brief);
      bool ok = true;
      for (const auto& r : results) ok = ok && r.pass;
      return ok ? 0 : 1;
    }

    if (*rep) {
      std::vector<CountReport> reports;
      for (const auto& p : inputs) reports.push_back(load_report(p));
      const nlohmann::json j = compare_report(experiment, reports, ExactScalar::parse(threshold));
      if (!g.json.empty() && g.json != "-") {
        std::ofstream f(g.json);
        if (!f) throw std::runtime_error("cannot write " + g.json);
        f << j.dump(2) << '\n';
      }
      if (g.json == "-") {
        out << j.dump(2) << '\n';
      } else {
        out << render_comparison(j);
      }
      return j["pass"].get<bool>() ? 0 : 1;
    }

    const PointSet points = load_point_set(points_path);
    CountReport report;
    report.parameters = base_parameters(points);
    report.input_digest = point_set_digest(points);
    if (g.include_zero) report.parameters["include_zero"] = true;

    if (*cnt) {
      const WeightedTree wt = load_tree_arg(tree_spec, weights);
      if (!wt.has_weights()) throw UsageError("count needs weights (--weights or a weighted .tree file)");
      merge_sidecar(report.parameters, sidecar_path);
      report.operation = "count_embeddings";
      report.parameters["tree"] = wt.tree().str();
      report.parameters["k"] = wt.tree().num_edges();
      nlohmann::json w = nlohmann::json::array();
      for (const auto& x : wt.weights()) w.push_back(x.str());
      report.parameters["weights"] = w;
      const DotProductIndex index(points, policy);
      report.counts["primary"] = count_value(count_embeddings(wt, index, g.threads));
      report.counts["embeddings"] = report.counts["primary"];
      if (homs) report.counts["homomorphisms"] = count_value(count_homomorphisms(wt, index, g.threads));
      run.emit(report);
      return 0;
    }

    if (*dst) {
      merge_sidecar(report.parameters, sidecar_path);
      if (!tree_spec.empty()) {
        const Tree t = load_tree_arg(tree_spec, "").tree();
        report.operation = "distinct_weight_tuples";
        report.parameters["tree"] = t.str();
        report.parameters["k"] = t.num_edges();
        const TupleCount tc = distinct_weight_tuples(t, points, policy, {list, spill});
        report.counts["primary"] = count_value(tc.count);
        report.counts["spilled_runs"] = tc.spilled_runs;
        if (list) {
          nlohmann::json all = nlohmann::json::array();
          for (const auto& tuple : tc.tuples) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& v : tuple) row.push_back(v.str());
            all.push_back(row);
          }
          report.histograms["tuples"] = all;
        }
      } else if (!against.empty()) {
        const PointSet F = load_point_set(against);
        report.parameters["F_size"] = F.size();
        report.parameters["F_digest"] = point_set_digest(F);
        if (alpha_text) {
          const ExactScalar alpha = ExactScalar::parse(*alpha_text);
          report.operation = "pair_multiplicity";
          report.parameters["alpha"] = alpha.str();
          report.counts["primary"] = pair_multiplicity(points, F, alpha, policy);
        } else {
          report.operation = "distinct_dot_products";
          const DotProductStats st = distinct_dot_products(points, F, policy);
          report.counts["primary"] = st.distinct;
          report.counts["max_multiplicity"] = st.max_multiplicity;
          report.counts["most_frequent"] = st.most_frequent ? st.most_frequent->str() : "";
          report.counts["zero_pairs"] = st.zero_pairs;
        }
      } else {
        if (alpha_text) throw UsageError("--alpha needs --against");
        report.operation = "distinct_dot_products";
        const DotProductStats st = distinct_dot_products(points, policy);
        report.counts["primary"] = st.distinct;
        report.counts["max_multiplicity"] = st.max_multiplicity;
        report.counts["most_frequent"] = st.most_frequent ? st.most_frequent->str() : "";
        report.counts["pairs"] = st.pairs;
        report.counts["zero_pairs"] = st.zero_pairs;
      }
      run.emit(report);
      return 0;
    }

    if (*pin) {
      report.parameters["d"] = points.dim();
      if (!pin_text.empty()) {
        const Point p = parse_point_arg(pin_text, points.dim());
        report.parameters["pin"] = p.str();
        if (!tree_spec.empty()) {
          const Tree t = load_tree_arg(tree_spec, "").tree();
          report.operation = "pinned_weight_tuples";
          report.parameters["tree"] = t.str();
          report.parameters["vertex"] = vertex;
          report.counts["primary"] = count_value(pinned_weight_tuples(t, vertex, p, points, policy).count);
        } else {
          report.operation = "pinned_set";
          const auto s = pinned_set(p, points, g.include_zero);
          report.counts["primary"] = s.size();
          nlohmann::json values = nlohmann::json::array();
          for (const auto& v : s) values.push_back(v.str());
          report.histograms["values"] = values;
        }
      } else if (descent) {
        report.operation = "hyperplane_descent";
        const DescentTrace tr = hyperplane_descent(points, policy);
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& l : tr.levels) {
          levels.push_back({{"pin", l.pin},
                            {"t", l.t},
                            {"level", l.level.str()},
                            {"points_before", l.points_before},
                            {"points_after", l.points_after},
                            {"affine_dim_before", l.affine_dim_before},
                            {"pigeonhole_ok", l.pigeonhole_ok}});
        }
        report.histograms["levels"] = levels;
        report.counts["primary"] = tr.overall_max;
        report.counts["overall_pin"] = tr.overall_pin;
        report.counts["planar_max"] = tr.planar_max;
        report.counts["planar_pin"] = tr.planar_pin;
        report.counts["final_points"] = tr.final_points.size();
        report.counts["final_affine_dim"] = tr.final_affine_dim;
        report.counts["stop_reason"] = tr.stop_reason;
        report.counts["pigeonhole_ok"] = tr.pigeonhole_ok;
        report.counts["dominates_components"] = tr.dominates_components;
        std::ostringstream comp;
        comp.precision(6);
        comp << tr.planar_component;
        report.counts["planar_component"] = comp.str();
      } else {
        report.operation = "max_pinned";
        const auto counts = pinned_counts(points, policy);
        std::size_t best = 0;
        for (std::size_t i = 1; i < counts.size(); ++i) {
          if (counts[i] > counts[best]) best = i;
        }
        report.counts["primary"] = counts.empty() ? 0 : counts[best];
        if (!counts.empty()) report.counts["pin"] = points[best].str();
        report.histograms["pinned_sizes"] = histogram_json(counts);
      }
      run.emit(report);
      return 0;
    }

    if (*inc) {
      const PointSet pins = load_point_set(pins_path);
      const ExactScalar alpha = ExactScalar::parse(alpha_line);
      std::vector<AlphaHyperplane> lines;
      for (const auto& p : pins) lines.push_back(alpha_hyperplane(p, alpha));
      report.operation = "incidences";
      report.parameters["lines"] = lines.size();
      report.parameters["alpha"] = alpha.str();
      report.counts["primary"] = incidences(points, lines, policy);
      run.emit(report);
      return 0;
    }

    if (*rad) {
      const RadialHistogram h = radial_histogram(points, ExactScalar::parse(constant));
      report.operation = "radial_histogram";
      report.parameters["constant"] = h.constant.str();
      report.counts["primary"] = h.max;
      report.counts["directions"] = h.buckets.size();
      report.counts["total"] = h.total;
      report.counts["origin_present"] = h.origin_present;
      report.counts["hypothesis_holds"] = h.hypothesis_holds;
      nlohmann::json b = nlohmann::json::object();
      for (const auto& [dir, c] : h.buckets) b[dir.primitive().str()] = c;
      report.histograms["directions"] = b;
      run.emit(report);
      return 0;
    }

    if (*pg) {
      const PointSet F = against.empty() ? points : load_point_set(against);
      const ProofGraphStats st = proof_multigraph(points, F, policy);
      report.operation = "proof_multigraph";
      if (!against.empty()) report.parameters["F_digest"] = point_set_digest(F);
      report.counts["primary"] = st.drawing_crossings;
      report.counts["v"] = st.v;
      report.counts["e"] = st.e;
      report.counts["m"] = st.m;
      report.counts["t = max pinned cardinality"] = st.t;
      report.counts["lines"] = st.lines;
      report.counts["segments"] = st.segments;
      report.counts["drawing_crossings"] = st.drawing_crossings;
      report.counts["weighted_crossings"] = count_value(st.weighted_crossings);
      report.counts["crossing_bound"] = count_value(st.crossing_bound);
      report.counts["bound_holds"] = st.bound_holds;
      run.emit(report);
      return st.bound_holds ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dotconf
