#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dotconf/geometry.hpp"

namespace dotconf {

// .pts text format:
//   d <dim>
//   <c_1> ... <c_dim>      one point per line, integers or a/b fractions
// Blank lines and lines starting with '#' are ignored. Duplicates,
// wrong coordinate counts and malformed numbers raise ParseError.

PointSet read_point_set(std::istream& in);
void write_point_set(const PointSet& points, std::ostream& out);

PointSet load_point_set(const std::filesystem::path& path);
void save_point_set(const PointSet& points, const std::filesystem::path& path);

std::string to_pts_string(const PointSet& points);

}  // namespace dotconf
