#pragma once

#include <string>

#include <json.hpp>

#include "degindex/enumeration.hpp"
#include "degindex/extremal.hpp"
#include "degindex/graph.hpp"
#include "degindex/regimes.hpp"

namespace degindex {

using Json = nlohmann::ordered_json;

// Floating values are rounded to 15 significant digits before emission so
// that repeated runs produce byte-identical output.
Json json_real(double value);
std::string format_real(double value);

std::string direction_name(Direction d);
Direction parse_direction(const std::string& text);  // "min" | "max"

Json to_json(const StructureClass& s);
Json to_json(const ExtremalResult& r, const DegreeRange& range, const Kernel& k);
Json to_json(const EqualityCertificate& c, const DegreeRange& range, const Kernel& k);
Json to_json(const RegimeReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const RegimeScanEntry& e);

}  // namespace degindex
