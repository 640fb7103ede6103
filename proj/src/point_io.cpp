#include "dotconf/point_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dotconf/error.hpp"

namespace dotconf {

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    long long d = 0;
    std::string extra;
    if (!(ss >> tag >> d) || tag != "d" || (ss >> extra)) {
      throw ParseError(line_no, "expected header 'd <dim>'");
    }
    if (d < 2) throw ParseError(line_no, "dimension must be at least 2");
    dim = static_cast<std::size_t>(d);
    break;
  }
  if (dim == 0) throw ParseError(0, "missing 'd <dim>' header");

  std::vector<Point> points;
  std::unordered_map<Point, std::size_t, PointHash> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::vector<ExactScalar> coords;
    std::string token;
    while (ss >> token) {
      try {
        coords.push_back(ExactScalar::parse(token));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (coords.size() != dim) {
      throw ParseError(line_no, "expected " + std::to_string(dim) + " coordinates, got " +
                                    std::to_string(coords.size()));
    }
    Point p(std::move(coords));
    const auto [it, inserted] = seen.emplace(p, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate point " + p.str() + " (first on line " +
                                    std::to_string(it->second) + ")");
    }
    points.push_back(std::move(p));
  }
  return PointSet(dim, std::move(points));
}

void write_point_set(const PointSet& points, std::ostream& out) {
  out << "d " << points.dim() << '\n';
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) out << ' ';
      out << p[i].str();
    }
    out << '\n';
  }
}

std::string to_pts_string(const PointSet& points) {
  std::ostringstream ss;
  write_point_set(points, ss);
  return ss.str();
}

PointSet load_point_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_point_set(in);
}

void save_point_set(const PointSet& points, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_point_set(points, out);
}

}  // namespace dotconf
