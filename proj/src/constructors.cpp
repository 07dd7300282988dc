#include "degindex/constructors.hpp"

#include <stdexcept>
#include <string>

namespace degindex {

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("part sizes must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(a) * b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph biregular_graph(int a, int b, int t) {
  if (a < 1 || b < a) throw std::invalid_argument("degrees must satisfy 1 <= a <= b");
  if (t < 1) throw std::invalid_argument("repetition factor must be positive");
  const int left = b * t;   // degree-a vertices
  const int right = a * t;  // degree-b vertices
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(a) * b * t);
  for (int i = 0; i < left; ++i)
    for (int j = 0; j < a; ++j) {
      int target = (i * a + j) % right;
      edges.emplace_back(i, left + target);
    }
  return Graph(left + right, std::move(edges));
}

Graph circulant_regular(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("invalid circulant parameters");
  if (r >= n) throw std::invalid_argument("degree must be smaller than the order");
  if (n % 2 == 1 && r % 2 == 1)
    throw std::invalid_argument("no " + std::to_string(r) + "-regular graph on " +
                                std::to_string(n) + " vertices: odd degree sum");
  std::vector<Edge> edges;
  for (int offset = 1; offset <= r / 2; ++offset)
    for (int v = 0; v < n; ++v) {
      int u = (v + offset) % n;
      if (v < u) edges.emplace_back(v, u);
      else edges.emplace_back(u, v);
    }
  if (r % 2 == 1)
    for (int v = 0; v < n / 2; ++v) edges.emplace_back(v, v + n / 2);
  return Graph(n, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  std::vector<Edge> edges;
  for (const Graph& part : parts) {
    for (const auto& [u, v] : part.edges()) edges.emplace_back(total + u, total + v);
    total += part.order();
  }
  return Graph(total, std::move(edges));
}

}  // namespace degindex
