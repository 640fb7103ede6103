#include "dotconf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dotconf {

namespace formulas {

namespace {
void at_least(int v, int lo, const char* what) {
  if (v < lo) throw std::invalid_argument(std::string(what) + " must be >= " + std::to_string(lo));
}
}  // namespace

ExactScalar main1(int k) {
  at_least(k, 1, "k");
  return ExactScalar(2L * k, 3);
}

ExactScalar highdim_pinned(int d) {
  at_least(d, 2, "d");
  return ExactScalar(2, 2L * d - 1);
}

ExactScalar kms(int k) {
  at_least(k, 1, "k");
  return ExactScalar((k + 2) / 2);
}

ExactScalar lattice(int k, int d) {
  at_least(k, 1, "k");
  at_least(d, 2, "d");
  return ExactScalar(1) + ExactScalar(static_cast<long>(k) * (d - 1), d + 1);
}

ExactScalar gprs_upper(int h) {
  at_least(h, 0, "h");
  if (h > 62) throw std::invalid_argument("h too large");
  return ExactScalar(1L << h);
}

}  // namespace formulas

ExactScalar main2_exponent(int k, int d) {
  return std::max(formulas::lattice(k, d), formulas::kms(k));
}

FitResult loglog_fit(std::span<const std::pair<double, double>> series) {
  std::set<double> ns;
  for (const auto& [n, c] : series) {
    if (!(n > 0) || !(c > 0)) throw std::invalid_argument("loglog_fit needs positive n and counts");
    ns.insert(n);
  }
  if (ns.size() < 3) throw std::invalid_argument("loglog_fit needs at least 3 distinct n");
  FitResult r;
  r.points.assign(series.begin(), series.end());
  const double m = static_cast<double>(series.size());
  double sx = 0, sy = 0;
  for (const auto& [n, c] : series) {
    sx += std::log(n);
    sy += std::log(c);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [n, c] : series) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(c) - my);
  }
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double ss = 0;
  for (const auto& [n, c] : series) {
    const double e = std::log(c) - (r.intercept + r.slope * std::log(n));
    ss += e * e;
  }
  r.residual = std::sqrt(ss / m);
  return r;
}

std::vector<std::string> report_experiments() {
  return {"kms", "perp", "lattice-unit-pairs", "lattice", "distinct", "tuples", "pinned"};
}

namespace {

int int_param(const nlohmann::json& params, const char* key, const std::string& experiment) {
  if (!params.contains(key) || !params[key].is_number_integer()) {
    throw std::invalid_argument(experiment + " reports need an integer parameter '" + key + "'");
  }
  return params[key].get<int>();
}

double to_double(const BigInt& v) { return v.get_d(); }

}  // namespace

nlohmann::json compare_report(const std::string& experiment, std::span<const CountReport> reports,
                              const ExactScalar& threshold_c) {
  const auto known = report_experiments();
  if (std::find(known.begin(), known.end(), experiment) == known.end()) {
    throw std::invalid_argument("unknown experiment '" + experiment + "'");
  }
  if (reports.empty()) throw std::invalid_argument("compare_report needs at least one report");
  if (threshold_c.sign() < 0) throw std::invalid_argument("threshold c must be non-negative");

  // shared parameters must agree wherever they are given
  nlohmann::json shared = nlohmann::json::object();
  for (const auto& r : reports) {
    for (const char* key : {"k", "d", "q", "tree", "construction", "mode"}) {
      if (!r.parameters.contains(key)) continue;
      if (std::string(key) == "q" && experiment.rfind("lattice", 0) == 0) continue;  // q varies with n
      if (!shared.contains(key)) {
        shared[key] = r.parameters[key];
      } else if (shared[key] != r.parameters[key]) {
        throw std::invalid_argument(std::string("mismatched parameter '") + key + "': " + shared[key].dump() +
                                    " vs " + r.parameters[key].dump());
      }
    }
  }

  const nlohmann::json& first = reports.front().parameters;
  std::optional<ExactScalar> exponent;
  nlohmann::json extra = nlohmann::json::object();
  const bool exact_rule = experiment == "kms" || experiment == "perp";
  if (experiment == "kms") {
    exponent = formulas::kms(int_param(first, "k", experiment));
  } else if (experiment == "perp") {
    const int k = int_param(first, "k", experiment);
    exponent = ExactScalar(k + 1);
    extra["stated_exponent"] = std::to_string(k);
    extra["exponent_discrepancy"] = "observed scaling n^(k+1) exceeds the stated n^k";
  } else if (experiment == "lattice-unit-pairs") {
    exponent = formulas::lattice(1, int_param(first, "d", experiment));
  } else if (experiment == "lattice") {
    exponent = formulas::lattice(int_param(first, "k", experiment), int_param(first, "d", experiment));
  } else if (experiment == "distinct") {
    exponent = ExactScalar(2, 3);
  } else if (experiment == "tuples") {
    exponent = formulas::main1(int_param(first, "k", experiment));
  } else {
    exponent = formulas::highdim_pinned(int_param(first, "d", experiment));
  }

  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json ns = nlohmann::json::array();
  std::vector<std::pair<double, double>> series;
  bool all_pass = true;
  for (const auto& r : reports) {
    const long n = int_param(r.parameters, "n", experiment);
    if (n < 1) throw std::invalid_argument("parameter n must be positive");
    if (!r.counts.contains("primary")) throw std::invalid_argument("report lacks counts.primary");
    const BigInt empirical = read_count(r.counts["primary"]);
    nlohmann::json row = {{"n", n}, {"empirical", count_value(empirical)}};
    bool pass = false;
    if (exact_rule) {
      if (!r.parameters.contains("predicted_count")) {
        throw std::invalid_argument(experiment + " reports need parameters.predicted_count");
      }
      const BigInt predicted = read_count(r.parameters["predicted_count"]);
      row["predicted_count"] = count_value(predicted);
      pass = predicted == empirical;
    } else {
      pass = at_least_scaled_power(empirical, threshold_c, BigInt(n), *exponent);
      row["threshold"] = threshold_c.to_double() * std::pow(static_cast<double>(n), exponent->to_double());
    }
    row["pass"] = pass;
    all_pass = all_pass && pass;
    rows.push_back(row);
    ns.push_back(n);
    if (empirical > 0) series.emplace_back(static_cast<double>(n), to_double(empirical));
  }

  nlohmann::json fit_slope = nullptr;
  try {
    fit_slope = loglog_fit(series).slope;
  } catch (const std::invalid_argument&) {
    // fewer than three usable points: no slope
  }

  nlohmann::json params = shared;
  params["n"] = ns;
  for (const char* key : {"k", "d", "q", "tree"}) {
    if (!params.contains(key)) params[key] = nullptr;
  }
  if (experiment.rfind("lattice", 0) == 0) {
    nlohmann::json qs = nlohmann::json::array();
    for (const auto& r : reports) qs.push_back(r.parameters.value("q", nlohmann::json(nullptr)));
    params["q"] = qs;
  }
  nlohmann::json out = {
      {"experiment", experiment},
      {"params", params},
      {"empirical", rows},
      {"predicted_exponent", exponent->numerator().get_str() + "/" + exponent->denominator().get_str()},
      {"fit_slope", fit_slope},
      {"threshold_c", threshold_c.str()},
      {"pass", all_pass},
  };
  for (const auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

}  // namespace dotconf
