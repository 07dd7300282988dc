#pragma once

#include <random>
#include <utility>
#include <vector>

#include "degindex/graph.hpp"

namespace degindex::testing {

// Erdos-Renyi style sample over a fixed vertex count.
inline Graph random_graph(std::mt19937& rng, int n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Rejection-samples until every vertex has positive degree.
inline Graph random_graph_no_isolated(std::mt19937& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.3, 0.8);
  for (;;) {
    Graph g = random_graph(rng, order(rng), density(rng));
    bool ok = g.order() >= 1;
    for (int v = 0; v < g.order(); ++v) ok = ok && g.degree(v) > 0;
    if (ok) return g;
  }
}

inline Graph relabel(const Graph& g, const std::vector<int>& permutation) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(permutation[u], permutation[v]);
  return Graph(g.order(), std::move(edges));
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace degindex::testing
