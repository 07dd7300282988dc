#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "degindex/graph.hpp"
#include "degindex/kernels.hpp"
#include "degindex/rational.hpp"

namespace degindex {

enum class Direction { Minimise, Maximise };

// Two floating pair objectives tie when |h - h_best| <= kPairTieTolerance *
// max(1, |h_best|). Rational-exact kernels are compared exactly instead.
inline constexpr double kPairTieTolerance = 1e-9;

// h(a, b) = a*b*f(a,b) / (a+b), the per-vertex bound objective.
double pair_objective(const Kernel& k, int a, int b);
Rational exact_pair_objective(const Kernel& k, int a, int b);

struct ExtremalResult {
  Direction direction = Direction::Minimise;
  std::vector<std::pair<int, int>> pairs;  // optimal (a, b), a <= b, lexicographic
  double coefficient = 0.0;                // objective value at the optimum
  std::optional<Rational> exact_coefficient;
  bool unique = false;
};

// Exhaustive search over the sorted-pair triangle of the degree range.
ExtremalResult optimal_pairs(const Kernel& k, const DegreeRange& range,
                             Direction direction);

// Coefficient c such that F(G) >= c*|G| (minimise) or F(G) <= c*|G|
// (maximise) for every G with degrees inside the range.
double vertex_bound(const Kernel& k, const DegreeRange& range, Direction direction);

// Sum over edges of 1/d(u) + 1/d(v), exact. Always equals |G| when G has no
// isolated vertex; throws std::domain_error otherwise.
Rational weight_certificate(const Graph& g);

struct EqualityCertificate {
  bool holds = false;
  std::vector<Edge> violating_edges;  // edges whose degree pair is not optimal
  Rational weight_sum;                // equals |G|
};

// Per-edge equality test: the bound is attained exactly when every edge's
// sorted degree pair is an optimal pair. Valid also for non-unique optima.
EqualityCertificate certify_equality(const Graph& g, const Kernel& k,
                                     const DegreeRange& range, Direction direction);

}  // namespace degindex
