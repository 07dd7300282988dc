#include "degindex/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace degindex {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= order_)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  degrees_.assign(order_, 0);
  for (const auto& [u, v] : edges_) {
    ++degrees_[u];
    ++degrees_[v];
  }
}

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kG6Offset = 63;  // printable range 63..126

void append_bits(std::string& out, std::uint64_t value, int bits) {
  for (int shift = bits - 6; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((value >> shift) & 0x3f) + kG6Offset));
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else if (n <= 258047) {
    out.push_back('~');
    append_bits(out, n, 18);
  } else {
    out.push_back('~');
    out.push_back('~');
    append_bits(out, n, 36);
  }

  // Upper triangle in column order, 6 bits per byte, zero-padded.
  int bit_count = 0;
  int current = 0;
  auto push_bit = [&](int bit) {
    current = (current << 1) | bit;
    if (++bit_count == 6) {
      out.push_back(static_cast<char>(current + kG6Offset));
      current = 0;
      bit_count = 0;
    }
  };
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u) push_bit(g.adjacent(u, v) ? 1 : 0);
  if (bit_count > 0) {
    current <<= (6 - bit_count);
    out.push_back(static_cast<char>(current + kG6Offset));
  }
  return out;
}

class Graph6Reader {
 public:
  explicit Graph6Reader(std::string_view text) : text_(text) {}

  Graph parse() {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text_.substr(pos_, kHeader.size()) == kHeader) pos_ += kHeader.size();

    std::uint64_t n = read_order();
    if (n > 100000000)
      throw ParseError("vertex count too large: " + std::to_string(n), 1, 1);

    const std::uint64_t slots = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<Edge> edges;
    std::uint64_t slot = 0;
    int u = 0, v = 1;
    while (slot < slots) {
      int group = read_group();
      for (int shift = 5; shift >= 0; --shift, ++slot) {
        int bit = (group >> shift) & 1;
        if (slot < slots) {
          if (bit) edges.emplace_back(u, v);
          if (++u == v) {
            u = 0;
            ++v;
          }
        } else if (bit) {
          throw ParseError("nonzero padding bits", 1, static_cast<int>(pos_));
        }
      }
    }
    skip_trailing_whitespace();
    if (pos_ != text_.size())
      throw ParseError("trailing data after graph6 encoding", 1, static_cast<int>(pos_ + 1));
    return Graph(static_cast<int>(n), std::move(edges));
  }

 private:
  std::uint64_t read_order() {
    int c = read_group();
    if (c < 63 - kG6Offset) throw ParseError("invalid graph6 byte", 1, static_cast<int>(pos_));
    if (c != '~' - kG6Offset) return static_cast<std::uint64_t>(c);
    if (peek() == '~') {
      ++pos_;
      return read_fixed_bits(6);
    }
    return read_fixed_bits(3);
  }

  std::uint64_t read_fixed_bits(int groups) {
    std::uint64_t value = 0;
    for (int i = 0; i < groups; ++i) value = (value << 6) | static_cast<std::uint64_t>(read_group());
    return value;
  }

  int read_group() {
    if (pos_ >= text_.size()) throw ParseError("truncated graph6 text", 1, static_cast<int>(pos_ + 1));
    unsigned char byte = static_cast<unsigned char>(text_[pos_]);
    if (byte < 63 || byte > 126)
      throw ParseError("byte outside graph6 alphabet", 1, static_cast<int>(pos_ + 1));
    ++pos_;
    return byte - kG6Offset;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_trailing_whitespace() {
    while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r' ||
                                   text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// edge list

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
  }
  return tokens;
}

long parse_int_token(const Token& tok, int line_no, const char* what) {
  long value = 0;
  if (tok.text.empty()) throw ParseError(std::string("missing ") + what, line_no, tok.column);
  for (char c : tok.text) {
    if (c < '0' || c > '9')
      throw ParseError(std::string("malformed ") + what + ": '" + std::string(tok.text) + "'",
                       line_no, tok.column);
    value = value * 10 + (c - '0');
    if (value > 2000000000)
      throw ParseError(std::string(what) + " too large", line_no, tok.column);
  }
  return value;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  size_t line_index = 0;
  while (line_index < lines.size() && tokenize(lines[line_index]).empty()) ++line_index;
  if (line_index == lines.size()) throw ParseError("missing vertex-count header", 1, 1);

  auto header = tokenize(lines[line_index]);
  if (header.size() != 1)
    throw ParseError("vertex-count header must be a single integer",
                     static_cast<int>(line_index + 1), header[1].column);
  long n = parse_int_token(header[0], static_cast<int>(line_index + 1), "vertex count");
  if (n > 100000000)
    throw ParseError("vertex count too large: " + std::to_string(n),
                     static_cast<int>(line_index + 1), header[0].column);

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (size_t li = line_index + 1; li < lines.size(); ++li) {
    auto tokens = tokenize(lines[li]);
    if (tokens.empty()) continue;
    int line_no = static_cast<int>(li + 1);
    if (tokens.size() != 2)
      throw ParseError("expected 'u v' pair", line_no,
                       tokens.size() > 2 ? tokens[2].column : tokens[0].column);
    long u = parse_int_token(tokens[0], line_no, "vertex index");
    long v = parse_int_token(tokens[1], line_no, "vertex index");
    if (u >= n) throw ParseError("vertex index out of range: " + std::to_string(u), line_no, tokens[0].column);
    if (v >= n) throw ParseError("vertex index out of range: " + std::to_string(v), line_no, tokens[1].column);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no, tokens[0].column);
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no,
                       tokens[0].column);
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6:
      return Graph6Reader(text).parse();
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
  }
  throw std::invalid_argument("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6:
      return encode_graph6(g);
    case GraphFormat::EdgeList:
      return encode_edge_list(g);
  }
  throw std::invalid_argument("unknown graph format");
}

// ---------------------------------------------------------------------------

DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary summary;
  summary.degrees.assign(g.degrees().begin(), g.degrees().end());
  if (g.order() > 0) {
    auto [lo, hi] = std::minmax_element(summary.degrees.begin(), summary.degrees.end());
    summary.min_degree = *lo;
    summary.max_degree = *hi;
  }
  return summary;
}

DegreeRange::DegreeRange(int min_degree_, int max_degree_)
    : min_degree(min_degree_), max_degree(max_degree_) {
  if (min_degree < 1) throw std::invalid_argument("minimum degree must be at least 1");
  if (max_degree < min_degree)
    throw std::invalid_argument("maximum degree must be at least the minimum degree");
}

std::string StructureClass::to_string() const {
  switch (kind) {
    case StructureKind::Regular:
      return "Regular(" + std::to_string(a) + ")";
    case StructureKind::Biregular:
      return "Biregular(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case StructureKind::ComponentwiseRegular:
      return "ComponentwiseRegular";
    case StructureKind::Irregular:
      return "Irregular";
  }
  return "Irregular";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

StructureClass classify_structure(const Graph& g) {
  if (g.order() == 0) return {StructureKind::Regular, 0, 0};

  auto degrees = g.degrees();
  int lo = *std::min_element(degrees.begin(), degrees.end());
  int hi = *std::max_element(degrees.begin(), degrees.end());
  if (lo == hi) return {StructureKind::Regular, lo, lo};
  if (lo == 0) return {StructureKind::Irregular, 0, 0};

  bool two_degrees = std::all_of(degrees.begin(), degrees.end(),
                                 [&](int d) { return d == lo || d == hi; });
  if (two_degrees) {
    bool edges_cross = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return g.degree(e.first) != g.degree(e.second);
    });
    if (edges_cross) return {StructureKind::Biregular, lo, hi};
  }

  UnionFind components(g.order());
  for (const auto& [u, v] : g.edges()) components.unite(u, v);
  std::vector<int> component_degree(static_cast<size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    int root = components.find(v);
    if (component_degree[root] == -1) component_degree[root] = g.degree(v);
    if (component_degree[root] != g.degree(v)) return {StructureKind::Irregular, 0, 0};
  }
  return {StructureKind::ComponentwiseRegular, 0, 0};
}

}  // namespace degindex
