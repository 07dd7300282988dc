#include "degindex/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace degindex {

namespace {

struct SlotSearch {
  int n;
  DegreeRange range;
  const std::function<void(const Graph&)>* visit;
  std::vector<Edge> slots;           // lexicographic edge-slot order
  std::vector<Edge> chosen;
  std::vector<int> degree;
  std::vector<int> pending;          // undecided slots incident to each vertex

  void run() {
    degree.assign(static_cast<size_t>(n), 0);
    pending.assign(static_cast<size_t>(n), n - 1);
    slots.clear();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    chosen.clear();
    descend(0);
  }

  void descend(size_t index) {
    if (index == slots.size()) {
      for (int v = 0; v < n; ++v)
        if (!range.contains(degree[v])) return;
      (*visit)(Graph(n, chosen));
      return;
    }
    const auto [u, v] = slots[index];
    --pending[u];
    --pending[v];
    // Leave the slot empty unless that starves an endpoint of its minimum.
    if (degree[u] + pending[u] >= range.min_degree &&
        degree[v] + pending[v] >= range.min_degree)
      descend(index + 1);
    // Fill the slot unless an endpoint would exceed the maximum.
    if (degree[u] < range.max_degree && degree[v] < range.max_degree) {
      ++degree[u];
      ++degree[v];
      chosen.push_back(slots[index]);
      descend(index + 1);
      chosen.pop_back();
      --degree[u];
      --degree[v];
    }
    ++pending[u];
    ++pending[v];
  }
};

}  // namespace

void for_each_graph(int n, const DegreeRange& range,
                    const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumeration needs at least one vertex");
  if (n > kMaxEnumerationOrder)
    throw std::invalid_argument("exhaustive search capped at " +
                                std::to_string(kMaxEnumerationOrder) + " vertices");
  SlotSearch search{n, range, &visit, {}, {}, {}, {}};
  search.run();
}

std::uint64_t count_graphs(int n, const DegreeRange& range) {
  std::uint64_t count = 0;
  for_each_graph(n, range, [&](const Graph&) { ++count; });
  return count;
}

// ---------------------------------------------------------------------------
// Canonical form: minimum adjacency bitstring over degree-sorted orderings.

namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()) {
    adjacency_.assign(static_cast<size_t>(n_), 0);
    for (const auto& [u, v] : g.edges()) {
      adjacency_[u] |= 1u << v;
      adjacency_[v] |= 1u << u;
    }
    // Group vertices into maximal runs of equal degree, high degree first;
    // only orderings respecting the runs can yield the canonical string.
    std::vector<int> order(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (size_t i = 0; i < order.size();) {
      size_t j = i;
      while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
      classes_.emplace_back(order.begin() + i, order.begin() + j);
      i = j;
    }
  }

  std::uint32_t minimise() {
    total_bits_ = n_ * (n_ - 1) / 2;
    best_ = ~std::uint32_t{0};
    have_best_ = false;
    position_.assign(static_cast<size_t>(n_), -1);
    used_.assign(static_cast<size_t>(n_), false);
    place(0, 0, 0, 0);
    return best_;
  }

 private:
  // Depth-first over positions; prefix bits are compared against the current
  // best to cut symmetric branches.
  void place(int position, size_t class_index, std::uint32_t bits, int bit_count) {
    if (position == n_) {
      best_ = bits;
      have_best_ = true;
      return;
    }
    const size_t offset = class_start_offset(class_index, position);
    auto& cls = classes_[class_index];
    const bool last_in_class = position - static_cast<int>(offset) + 1 ==
                               static_cast<int>(cls.size());
    for (int candidate : cls) {
      if (used_[candidate]) continue;
      std::uint32_t next_bits = bits;
      int next_count = bit_count;
      for (int p = 0; p < position; ++p) {
        int bit = (adjacency_[candidate] >> position_[p]) & 1;
        next_bits = (next_bits << 1) | static_cast<std::uint32_t>(bit);
        ++next_count;
      }
      if (have_best_ && prefix_of_best(next_count) < next_bits) continue;
      used_[candidate] = true;
      position_[position] = candidate;
      place(position + 1, last_in_class ? class_index + 1 : class_index, next_bits,
            next_count);
      used_[candidate] = false;
    }
  }

  size_t class_start_offset(size_t class_index, int position) const {
    size_t start = 0;
    for (size_t i = 0; i < class_index; ++i) start += classes_[i].size();
    (void)position;
    return start;
  }

  std::uint32_t prefix_of_best(int bit_count) const {
    return best_ >> (total_bits_ - bit_count);
  }

  int n_;
  int total_bits_ = 0;
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> position_;
  std::vector<bool> used_;
  std::uint32_t best_ = ~std::uint32_t{0};
  bool have_best_ = false;
};

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder)
    throw std::invalid_argument("canonical form capped at " +
                                std::to_string(kMaxEnumerationOrder) + " vertices");
  if (g.order() < 2) return g;

  Canonicalizer canon(g);
  const std::uint32_t bits = canon.minimise();
  const int n = g.order();
  std::vector<Edge> edges;
  int index = n * (n - 1) / 2;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      --index;
      if ((bits >> index) & 1u) edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges));
}

std::string canonical_graph6(const Graph& g) {
  return serialize_graph(canonical_form(g), GraphFormat::Graph6);
}

// ---------------------------------------------------------------------------
// Bound verification over the enumerated family.

namespace {

struct ExtremeTracker {
  // Graphs within tolerance of the running extreme, kept for witness output.
  bool minimise = true;
  std::optional<double> extreme;
  std::vector<std::pair<double, Graph>> band;

  void offer(double value, const Graph& g) {
    if (!extreme) {
      extreme = value;
      band.emplace_back(value, g);
      return;
    }
    const bool improves = minimise ? value < *extreme - kBoundTolerance
                                   : value > *extreme + kBoundTolerance;
    if (improves) {
      extreme = value;
      std::erase_if(band, [&](const auto& entry) {
        return std::abs(entry.first - value) > kBoundTolerance;
      });
      band.emplace_back(value, g);
      return;
    }
    if (std::abs(value - *extreme) <= kBoundTolerance) band.emplace_back(value, g);
    if (minimise && value < *extreme) extreme = value;
    if (!minimise && value > *extreme) extreme = value;
  }

  std::vector<std::string> canonical_witnesses() const {
    std::set<std::string> unique;
    for (const auto& [value, g] : band)
      if (extreme && std::abs(value - *extreme) <= kBoundTolerance)
        unique.insert(canonical_graph6(g));
    return {unique.begin(), unique.end()};
  }
};

}  // namespace

VerificationReport verify_bound(int n, const DegreeRange& range, const Kernel& k,
                                Direction direction) {
  VerificationReport report{n, range, k.name(), k.alpha(), direction, 0,
                            std::nullopt, 0.0, false, {}, {}};
  const double coefficient = vertex_bound(k, range, direction);
  report.bound_value = coefficient * n;

  ExtremeTracker tracker;
  tracker.minimise = direction == Direction::Minimise;
  std::set<std::string> violations;

  for_each_graph(n, range, [&](const Graph& g) {
    ++report.graphs_checked;
    const double value = index_value(g, k);
    const bool violates = direction == Direction::Minimise
                              ? value < report.bound_value - kBoundTolerance
                              : value > report.bound_value + kBoundTolerance;
    if (violates) violations.insert(canonical_graph6(g));
    tracker.offer(value, g);
  });

  report.extreme_value = tracker.extreme;
  report.attained = tracker.extreme &&
                    std::abs(*tracker.extreme - report.bound_value) <= kBoundTolerance;
  report.witnesses = tracker.canonical_witnesses();
  report.violations = {violations.begin(), violations.end()};
  return report;
}

namespace {

bool in_family(const StructureClass& structure, RegimeKind regime,
               const DegreeRange& range) {
  switch (regime) {
    case RegimeKind::MaxDegreeRegular:
      return structure == StructureClass{StructureKind::Regular, range.max_degree,
                                         range.max_degree};
    case RegimeKind::Biregular:
      return structure == StructureClass{StructureKind::Biregular, range.min_degree,
                                         range.max_degree};
    case RegimeKind::MinDegreeRegular:
      return structure == StructureClass{StructureKind::Regular, range.min_degree,
                                         range.min_degree};
  }
  return false;
}

}  // namespace

std::vector<RegimeScanEntry> scan_regimes(int n, const DegreeRange& range,
                                          std::span<const double> alphas) {
  std::vector<RegimeScanEntry> entries;
  entries.reserve(alphas.size());
  for (double alpha : alphas) {
    const RegimeReport prediction = classify_regime(range, alpha);
    const Kernel kernel = Kernel::general_randic(alpha);
    const ExtremalResult extremal = optimal_pairs(kernel, range, Direction::Minimise);

    RegimeScanEntry entry;
    entry.alpha = alpha;
    entry.regime = prediction.regime;
    entry.boundary = prediction.boundary;
    entry.predicted_family = prediction.lower_extremal;
    entry.bound_value = prediction.lower_coefficient * n;

    ExtremeTracker tracker;
    tracker.minimise = true;
    std::vector<Graph> minimiser_graphs;
    for_each_graph(n, range, [&](const Graph& g) {
      tracker.offer(index_value(g, kernel), g);
    });
    entry.min_value = tracker.extreme;
    entry.attained = tracker.extreme &&
                     std::abs(*tracker.extreme - entry.bound_value) <= kBoundTolerance;
    entry.minimisers = tracker.canonical_witnesses();

    if (entry.attained) {
      bool all_match = true;
      for (const auto& [value, g] : tracker.band) {
        if (std::abs(value - *tracker.extreme) > kBoundTolerance) continue;
        if (entry.boundary == RegimeBoundary::None) {
          all_match = all_match && in_family(classify_structure(g), entry.regime, range);
        } else {
          // Both adjacent families (and their mixtures) attain the bound on a
          // boundary; accept any graph whose edges all use optimal pairs.
          bool edges_optimal = true;
          for (const auto& [u, v] : g.edges()) {
            std::pair<int, int> p = std::minmax(g.degree(u), g.degree(v));
            edges_optimal = edges_optimal &&
                            std::binary_search(extremal.pairs.begin(),
                                               extremal.pairs.end(), p);
          }
          all_match = all_match && edges_optimal;
        }
      }
      entry.matches_predicted = all_match;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace degindex
