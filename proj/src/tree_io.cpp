#include <fstream>
#include <sstream>

#include "dotconf/error.hpp"
#include "dotconf/tree.hpp"

namespace dotconf {

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

WeightedTree read_tree(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long k = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::string tag, extra;
    if (!(ss >> tag >> k) || tag != "k" || k < 0 || (ss >> extra)) {
      throw ParseError(line_no, "expected header 'k <num_edges>'");
    }
    break;
  }
  if (k < 0) throw ParseError(0, "missing 'k <num_edges>' header");

  const int num_vertices = static_cast<int>(k) + 1;
  std::vector<Edge> edges;
  std::vector<ExactScalar> weights;
  std::optional<bool> weighted;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected 'i j [w]'");
    }
    int i = 0, j = 0;
    try {
      std::size_t used_i = 0, used_j = 0;
      i = std::stoi(tokens[0], &used_i);
      j = std::stoi(tokens[1], &used_j);
      if (used_i != tokens[0].size() || used_j != tokens[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(line_no, "vertex indices must be integers");
    }
    if (i < 1 || j <= i || j > num_vertices) {
      throw ParseError(line_no, "edge must satisfy 1 <= i < j <= " + std::to_string(num_vertices));
    }
    const bool has_w = tokens.size() == 3;
    if (weighted && *weighted != has_w) {
      throw ParseError(line_no, "weights must be given on every edge or on none");
    }
    weighted = has_w;
    if (has_w) {
      try {
        weights.push_back(ExactScalar::parse(tokens[2]));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
    }
    edges.push_back({i, j});
  }
  if (static_cast<long long>(edges.size()) != k) {
    throw ParseError(line_no, "header declares " + std::to_string(k) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return WeightedTree::from_edges(num_vertices, edges, weights);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

void write_tree(const WeightedTree& t, std::ostream& out) {
  out << "k " << t.tree().num_edges() << '\n';
  const auto weights = t.weights();
  for (std::size_t i = 0; i < t.tree().edges().size(); ++i) {
    const Edge& e = t.tree().edge(i);
    out << e.a << ' ' << e.b;
    if (!weights.empty()) out << ' ' << weights[i].str();
    out << '\n';
  }
}

std::string to_tree_string(const WeightedTree& t) {
  std::ostringstream ss;
  write_tree(t, ss);
  return ss.str();
}

WeightedTree load_tree(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_tree(in);
}

}  // namespace dotconf
