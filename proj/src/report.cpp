#include "dotconf/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dotconf/point_io.hpp"

namespace dotconf {

nlohmann::json CountReport::to_json() const {
  nlohmann::json j;
  j["operation"] = operation;
  j["parameters"] = parameters;
  j["input_digest"] = input_digest;
  j["counts"] = counts;
  j["histograms"] = histograms;
  j["elapsed_ms"] = elapsed_ms ? nlohmann::json(*elapsed_ms) : nlohmann::json(nullptr);
  return j;
}

CountReport CountReport::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("count report must be a JSON object");
  CountReport r;
  r.operation = j.at("operation").get<std::string>();
  r.parameters = j.value("parameters", nlohmann::json::object());
  r.input_digest = j.value("input_digest", std::string());
  r.counts = j.value("counts", nlohmann::json::object());
  r.histograms = j.value("histograms", nlohmann::json::object());
  if (j.contains("elapsed_ms") && !j["elapsed_ms"].is_null()) r.elapsed_ms = j["elapsed_ms"].get<double>();
  return r;
}

nlohmann::json count_value(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt read_count(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-'), s.end(), ::isdigit) &&
                        s.size() > static_cast<std::size_t>(s[0] == '-');
    if (!digits) throw std::invalid_argument("not an integer count: '" + s + "'");
    return BigInt(s);
  }
  throw std::invalid_argument("count must be an integer or a decimal string");
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string point_set_digest(const PointSet& points) { return sha256_hex(to_pts_string(points)); }

namespace {

std::string flat(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void rows_of(const std::string& prefix, const nlohmann::json& obj,
             std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [k, v] : obj.items()) rows.emplace_back(prefix + k, flat(v));
}

}  // namespace

std::string render_text(const CountReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("operation", r.operation);
  rows_of("param.", r.parameters, rows);
  if (!r.input_digest.empty()) rows.emplace_back("input_digest", r.input_digest);
  rows_of("", r.counts, rows);
  for (const auto& [name, h] : r.histograms.items()) {
    rows.emplace_back("histogram." + name, std::to_string(h.size()) + " buckets");
  }
  if (r.elapsed_ms) {
    std::ostringstream ms;
    ms << *r.elapsed_ms;
    rows.emplace_back("elapsed_ms", ms.str());
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

CountReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open report " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return CountReport::from_json(j);
}

void save_report(const CountReport& r, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << r.to_json().dump(2) << '\n';
}

}  // namespace dotconf
