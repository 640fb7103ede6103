#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dotconf/geometry.hpp"
#include "dotconf/tree.hpp"

namespace dotconf {

struct VertexAssignment {
  int vertex = 0;
  std::string kind;                 // "column", "point", "y-line", "z-line"
  ExactScalar abscissa = 0;
  std::vector<std::size_t> points;  // indices into the generated set
};

struct ConstructionResult {
  std::string name;
  PointSet points;
  Tree tree;
  std::vector<ExactScalar> weights;  // canonical edge order
  BigInt predicted_count = 0;
  std::vector<VertexAssignment> vertex_assignment;  // by vertex, 1..k+1
  std::vector<std::size_t> fillers;
  nlohmann::json metadata;

  WeightedTree weighted_tree() const { return WeightedTree(tree, weights); }
};

/// Planar column construction. U vertices get columns of
/// m = floor((n - k2) / k1) points, V vertices single points on the x-axis,
/// abscissas assigned along a BFS from the lowest U vertex. The free
/// coordinates of a column start above sqrt(max weight) and abscissas skip
/// values whose products would collide with another edge's weight, so only
/// the intended point pairs realize any weight. Filler points sit on the
/// negative x-axis. Requires k >= 1 and n >= 2*k1 + k2 (two points per
/// column).
ConstructionResult build_kms_columns(const Tree& t, std::size_t n);

/// Lines perpendicular to the x-axis in R^3: (c, y, 0) for U vertices and
/// (c, 0, z) for V vertices, floor(n / (k+1)) points each. Requires
/// n >= 2(k+1) and k >= 1.
ConstructionResult build_perp_lines_3d(const Tree& t, std::size_t n);

enum class LatticeMode { paper, calibrated };

struct LatticeSpec {
  int d = 2;
  int q = 2;
  LatticeMode mode = LatticeMode::calibrated;
  /// Calibrated mode only: first numerator of E's last-coordinate window.
  /// Chosen automatically when absent.
  std::optional<long> window_start;
};

struct LatticeResult {
  LatticeSpec spec;
  PointSet E;
  PointSet F;
  std::vector<AlphaHyperplane> H;     // H[i] is the unit level set of F[i]
  std::vector<ExactScalar> A;
  std::vector<ExactScalar> B;         // offsets b used by F
  std::vector<ExactScalar> last;      // E's last-coordinate values
  long window_start = 0;              // numerator of last.front() over d^2 q^2
  std::size_t identity_checks = 0;    // (f, x) pairs verified to give f . x = 1
  std::size_t incidences = 0;         // pairs (e, f) with e on h_f
  std::size_t populated = 0;          // f with at least one point of E on h_f
  std::size_t rich = 0;               // f with at least ceil(q/2) points of E on h_f
  nlohmann::json metadata;
};

/// Throws std::invalid_argument unless d >= 2, q >= 2 (and d, q small
/// enough for the sets to fit in memory). Throws std::logic_error if the
/// unit identity ever fails.
LatticeResult build_is_lattice(const LatticeSpec& spec);

LatticeMode parse_lattice_mode(const std::string& s);

nlohmann::json sidecar(const ConstructionResult& r);
nlohmann::json sidecar(const LatticeResult& r);
void write_sidecar(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace dotconf
