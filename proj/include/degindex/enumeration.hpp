#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degindex/extremal.hpp"
#include "degindex/graph.hpp"
#include "degindex/kernels.hpp"
#include "degindex/regimes.hpp"

namespace degindex {

// Hard cap for exhaustive search and brute-force canonicalisation.
inline constexpr int kMaxEnumerationOrder = 8;

// Visits every labeled simple graph on n vertices whose degrees all lie in
// the range, in a fixed deterministic order. Depth-first search over the
// n(n-1)/2 edge slots, pruning branches that push a degree above the maximum
// or leave a vertex unable to reach the minimum. Requires 1 <= n <= 8.
void for_each_graph(int n, const DegreeRange& range,
                    const std::function<void(const Graph&)>& visit);

std::uint64_t count_graphs(int n, const DegreeRange& range);

// Canonical representative: the adjacency bitstring minimised over all vertex
// orderings that sort degrees in non-increasing order. Invariant under
// relabelling. Requires order <= 8.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

// Absolute tolerance for bound and equality checks on enumerated graphs.
inline constexpr double kBoundTolerance = 1e-9;

struct VerificationReport {
  int n;
  DegreeRange range;
  std::string kernel;
  std::optional<double> alpha;
  Direction direction;
  std::uint64_t graphs_checked = 0;
  std::optional<double> extreme_value;  // absent when no graph fits the range
  double bound_value = 0.0;             // coefficient * n
  bool attained = false;
  std::vector<std::string> witnesses;   // canonical graph6 of the extreme graphs
  std::vector<std::string> violations;  // canonical graph6, must be empty
};

// Checks the per-vertex bound on every enumerated graph.
VerificationReport verify_bound(int n, const DegreeRange& range, const Kernel& k,
                                Direction direction);

struct RegimeScanEntry {
  double alpha;
  RegimeKind regime;
  RegimeBoundary boundary;
  std::string predicted_family;
  std::optional<double> min_value;
  double bound_value = 0.0;
  bool attained = false;
  std::vector<std::string> minimisers;  // canonical graph6
  // Whether every minimiser lies in the predicted family; only meaningful
  // when the bound is attained. On a boundary the test accepts any graph
  // whose edges all use optimal degree pairs (both families and mixtures).
  std::optional<bool> matches_predicted;
};

// Enumerated minimisers of the generalised Randic index for each exponent,
// compared against the predicted extremal family. Requires
// range.max_degree > range.min_degree.
std::vector<RegimeScanEntry> scan_regimes(int n, const DegreeRange& range,
                                          std::span<const double> alphas);

}  // namespace degindex
