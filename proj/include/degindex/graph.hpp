#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degindex {

// Normalised edge: first < second.
using Edge = std::pair<int, int>;

// Error raised by the text parsers; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Simple undirected graph on vertices {0, ..., n-1}. Immutable after
// construction; no self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> degrees() const { return degrees_; }
  int degree(int v) const { return degrees_.at(v); }
  bool adjacent(int u, int v) const;

  bool operator==(const Graph& other) const = default;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;  // sorted lexicographically, u < v per edge
  std::vector<int> degrees_;
};

enum class GraphFormat { Graph6, EdgeList };

// graph6: standard 6-bit ASCII encoding, one graph per line.
// edge-list: vertex-count header line, then one "u v" pair per line.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

struct DegreeSummary {
  std::vector<int> degrees;
  std::optional<int> min_degree;  // absent when the graph has no vertices
  std::optional<int> max_degree;
};
DegreeSummary degree_summary(const Graph& g);

// Closed degree interval [min_degree, max_degree], min_degree >= 1.
struct DegreeRange {
  DegreeRange(int min_degree, int max_degree);
  int min_degree;
  int max_degree;
  int span() const { return max_degree - min_degree + 1; }
  bool contains(int d) const { return min_degree <= d && d <= max_degree; }
};

enum class StructureKind { Regular, Biregular, ComponentwiseRegular, Irregular };

struct StructureClass {
  StructureKind kind = StructureKind::Irregular;
  int a = 0;  // Regular: a == b == r; Biregular: a < b
  int b = 0;

  bool operator==(const StructureClass&) const = default;
  std::string to_string() const;
};

// Verdict precedence: Regular > Biregular > ComponentwiseRegular > Irregular.
// Degree-0 vertices rule out Biregular; a graph mixing isolated vertices with
// edges is reported Irregular.
StructureClass classify_structure(const Graph& g);

}  // namespace degindex
