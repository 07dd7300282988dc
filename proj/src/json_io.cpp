#include "degindex/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace degindex {

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

Json json_real(double value) {
  return std::strtod(format_real(value).c_str(), nullptr);
}

std::string direction_name(Direction d) {
  return d == Direction::Minimise ? "minimise" : "maximise";
}

Direction parse_direction(const std::string& text) {
  if (text == "min" || text == "minimise" || text == "minimize") return Direction::Minimise;
  if (text == "max" || text == "maximise" || text == "maximize") return Direction::Maximise;
  throw std::invalid_argument("unknown direction '" + text + "' (expected min or max)");
}

namespace {

Json kernel_json(const Kernel& k) {
  Json j;
  j["kernel"] = k.name();
  if (auto alpha = k.alpha()) j["alpha"] = json_real(*alpha);
  return j;
}

Json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  Json array = Json::array();
  for (const auto& [a, b] : pairs) array.push_back({a, b});
  return array;
}

std::string boundary_name(RegimeBoundary boundary) {
  switch (boundary) {
    case RegimeBoundary::None:
      return "none";
    case RegimeBoundary::AtT1:
      return "t1";
    case RegimeBoundary::AtT2:
      return "t2";
  }
  return "none";
}

}  // namespace

Json to_json(const StructureClass& s) {
  Json j;
  switch (s.kind) {
    case StructureKind::Regular:
      j["kind"] = "Regular";
      j["r"] = s.a;
      break;
    case StructureKind::Biregular:
      j["kind"] = "Biregular";
      j["a"] = s.a;
      j["b"] = s.b;
      break;
    case StructureKind::ComponentwiseRegular:
      j["kind"] = "ComponentwiseRegular";
      break;
    case StructureKind::Irregular:
      j["kind"] = "Irregular";
      break;
  }
  return j;
}

Json to_json(const ExtremalResult& r, const DegreeRange& range, const Kernel& k) {
  Json j = kernel_json(k);
  j["delta"] = range.min_degree;
  j["Delta"] = range.max_degree;
  j["direction"] = direction_name(r.direction);
  j["pairs"] = pairs_json(r.pairs);
  j["coefficient"] = json_real(r.coefficient);
  j["coefficient_exact"] =
      r.exact_coefficient ? Json(rational_to_string(*r.exact_coefficient)) : Json(nullptr);
  j["unique"] = r.unique;
  return j;
}

Json to_json(const EqualityCertificate& c, const DegreeRange& range, const Kernel& k) {
  Json j = kernel_json(k);
  j["delta"] = range.min_degree;
  j["Delta"] = range.max_degree;
  j["holds"] = c.holds;
  Json edges = Json::array();
  for (const auto& [u, v] : c.violating_edges) edges.push_back({u, v});
  j["violating_edges"] = edges;
  j["weight_sum"] = rational_to_string(c.weight_sum);
  return j;
}

Json to_json(const RegimeReport& r) {
  Json j;
  j["delta"] = r.range.min_degree;
  j["Delta"] = r.range.max_degree;
  j["alpha"] = json_real(r.alpha);
  j["c"] = rational_to_string(r.c);
  j["t1"] = json_real(r.t1);
  j["t2"] = json_real(r.t2);
  j["regime"] = regime_label(r.regime);
  j["boundary"] = boundary_name(r.boundary);
  j["lower_coefficient"] = json_real(r.lower_coefficient);
  j["upper_coefficient"] = json_real(r.upper_coefficient);
  j["lower_extremal"] = r.lower_extremal;
  j["upper_extremal"] = r.upper_extremal;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.range.min_degree;
  j["Delta"] = r.range.max_degree;
  j["kernel"] = r.kernel;
  j["alpha"] = r.alpha ? Json(json_real(*r.alpha)) : Json(nullptr);
  j["direction"] = direction_name(r.direction);
  j["graphs_checked"] = r.graphs_checked;
  j["extreme_value"] = r.extreme_value ? Json(json_real(*r.extreme_value)) : Json(nullptr);
  j["bound_value"] = json_real(r.bound_value);
  j["attained"] = r.attained;
  j["witnesses"] = r.witnesses;
  j["violations"] = r.violations;
  return j;
}

Json to_json(const RegimeScanEntry& e) {
  Json j;
  j["alpha"] = json_real(e.alpha);
  j["regime"] = regime_label(e.regime);
  j["boundary"] = boundary_name(e.boundary);
  j["predicted_family"] = e.predicted_family;
  j["min_value"] = e.min_value ? Json(json_real(*e.min_value)) : Json(nullptr);
  j["bound_value"] = json_real(e.bound_value);
  j["attained"] = e.attained;
  j["minimisers"] = e.minimisers;
  j["matches_predicted"] = e.matches_predicted ? Json(*e.matches_predicted) : Json(nullptr);
  return j;
}

}  // namespace degindex
