#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "dotconf/geometry.hpp"
#include "dotconf/scalar.hpp"

namespace dotconf {

/// Output record of a counting operation. Counts that fit in int64 are
/// JSON integers, larger ones decimal strings. `counts["primary"]` holds
/// the headline number of the operation.
struct CountReport {
  std::string operation;
  nlohmann::json parameters = nlohmann::json::object();
  std::string input_digest;  // sha256 of the canonical .pts text, or empty
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json histograms = nlohmann::json::object();
  std::optional<double> elapsed_ms;  // only when timing was requested

  nlohmann::json to_json() const;
  static CountReport from_json(const nlohmann::json& j);
};

nlohmann::json count_value(const BigInt& v);
BigInt read_count(const nlohmann::json& v);

std::string sha256_hex(const std::string& data);
/// Digest of the canonical .pts rendering, so equal sets hash equally
/// however their input files were formatted.
std::string point_set_digest(const PointSet& points);

/// Aligned two-column text rendering.
std::string render_text(const CountReport& r);

CountReport load_report(const std::filesystem::path& path);
void save_report(const CountReport& r, const std::filesystem::path& path);

}  // namespace dotconf
