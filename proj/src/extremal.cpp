#include "degindex/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degindex {

double pair_objective(const Kernel& k, int a, int b) {
  if (a < 1 || b < 1) throw std::domain_error("pair objective requires positive degrees");
  return static_cast<double>(a) * b * k(a, b) / (a + b);
}

Rational exact_pair_objective(const Kernel& k, int a, int b) {
  if (a < 1 || b < 1) throw std::domain_error("pair objective requires positive degrees");
  return Rational(static_cast<long>(a) * b) * k.exact(a, b) / (a + b);
}

ExtremalResult optimal_pairs(const Kernel& k, const DegreeRange& range, Direction direction) {
  ExtremalResult result;
  result.direction = direction;
  const bool minimise = direction == Direction::Minimise;

  std::vector<std::pair<int, int>> candidates;
  for (int a = range.min_degree; a <= range.max_degree; ++a)
    for (int b = a; b <= range.max_degree; ++b) candidates.emplace_back(a, b);

  if (k.rational_exact()) {
    std::vector<Rational> values;
    values.reserve(candidates.size());
    for (auto [a, b] : candidates) values.push_back(exact_pair_objective(k, a, b));
    size_t best = 0;
    for (size_t i = 1; i < values.size(); ++i)
      if (minimise ? values[i] < values[best] : values[i] > values[best]) best = i;
    for (size_t i = 0; i < values.size(); ++i)
      if (values[i] == values[best]) result.pairs.push_back(candidates[i]);
    result.exact_coefficient = values[best];
    result.coefficient = rational_to_double(values[best]);
  } else {
    std::vector<double> values;
    values.reserve(candidates.size());
    for (auto [a, b] : candidates) values.push_back(pair_objective(k, a, b));
    size_t best = 0;
    for (size_t i = 1; i < values.size(); ++i)
      if (minimise ? values[i] < values[best] : values[i] > values[best]) best = i;
    const double tie = kPairTieTolerance * std::max(1.0, std::abs(values[best]));
    for (size_t i = 0; i < values.size(); ++i)
      if (std::abs(values[i] - values[best]) <= tie) result.pairs.push_back(candidates[i]);
    result.coefficient = values[best];
  }

  result.unique = result.pairs.size() == 1;
  return result;
}

double vertex_bound(const Kernel& k, const DegreeRange& range, Direction direction) {
  return optimal_pairs(k, range, direction).coefficient;
}

Rational weight_certificate(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::domain_error("isolated vertex " + std::to_string(v) +
                              ": edge weights need positive degrees");
  Rational total = 0;
  for (const auto& [u, v] : g.edges())
    total += Rational(1, g.degree(u)) + Rational(1, g.degree(v));
  return total;
}

EqualityCertificate certify_equality(const Graph& g, const Kernel& k,
                                     const DegreeRange& range, Direction direction) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0)
      throw std::domain_error("isolated vertex " + std::to_string(v) +
                              ": equality certification needs positive degrees");
    if (!range.contains(g.degree(v)))
      throw std::domain_error("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + " outside [" +
                              std::to_string(range.min_degree) + "," +
                              std::to_string(range.max_degree) + "]");
  }

  ExtremalResult extremal = optimal_pairs(k, range, direction);

  EqualityCertificate certificate;
  certificate.weight_sum = weight_certificate(g);
  for (const auto& edge : g.edges()) {
    std::pair<int, int> degree_pair =
        std::minmax(g.degree(edge.first), g.degree(edge.second));
    if (!std::binary_search(extremal.pairs.begin(), extremal.pairs.end(), degree_pair))
      certificate.violating_edges.push_back(edge);
  }
  certificate.holds = certificate.violating_edges.empty();
  return certificate;
}

}  // namespace degindex
