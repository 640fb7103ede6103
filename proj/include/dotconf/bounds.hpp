#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dotconf/report.hpp"
#include "dotconf/scalar.hpp"

namespace dotconf {

namespace formulas {
ExactScalar main1(int k);           // 2k/3, distinct k-tuples
ExactScalar highdim_pinned(int d);  // 2/(2d-1)
ExactScalar kms(int k);             // ceil((k+1)/2)
ExactScalar lattice(int k, int d);  // 1 + k(d-1)/(d+1)
ExactScalar gprs_upper(int h);      // 2^h, perfect binary trees of height h
}  // namespace formulas

/// max(lattice(k, d), kms(k)). Throws std::invalid_argument for k < 1 or d < 2.
ExactScalar main2_exponent(int k, int d);

struct FitResult {
  std::vector<std::pair<double, double>> points;  // (n, count)
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root mean square in log space
};

/// Least squares of log(count) against log(n). Throws std::invalid_argument
/// for fewer than 3 distinct n or a non-positive value.
FitResult loglog_fit(std::span<const std::pair<double, double>> series);

/// Side-by-side comparison of empirical counts against the matching
/// exponent. Experiments:
///   kms, perp             counts.primary must equal parameters.predicted_count
///   lattice-unit-pairs    counts.primary >= c * n^(2d/(d+1))
///   lattice               counts.primary >= c * n^lattice(k, d)
///   distinct              counts.primary >= c * n^(2/3)
///   tuples                counts.primary >= c * n^main1(k)
///   pinned                counts.primary >= c * n^highdim_pinned(d)
/// Every report needs parameters.n; k, d and tree must agree across
/// reports when present. Throws std::invalid_argument on an empty input,
/// an unknown experiment, or mismatched parameters.
nlohmann::json compare_report(const std::string& experiment, std::span<const CountReport> reports,
                              const ExactScalar& threshold_c = ExactScalar(1, 8));

std::vector<std::string> report_experiments();

}  // namespace dotconf
