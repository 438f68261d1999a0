#pragma once

#include <string>

#include <json.hpp>

#include "dmcyl/diagram.hpp"

namespace dmcyl {

using ordered_json = nlohmann::ordered_json;

// Diagram file: {"G": {...}, "H": {...}, "Kminus": {...}, "Kplus": {...},
//   "iota_minus": {"x": "-3*t^2", ...}, "iota_plus": {...},
//   "options": {"max_degree": 20}}.
GroupDiagram read_diagram(const std::string& path);
GroupDiagram parse_diagram(const std::string& text, const std::string& origin);
ordered_json diagram_to_json(const GroupDiagram& d);
void write_diagram(const GroupDiagram& d, const std::string& path);

// Homogeneous-pair file: {"K": {...}, "H": {...}, "iota": {...}, "options": ...}.
struct PairFile {
    HomogeneousPair pair;
    std::optional<int> max_degree;
};
PairFile read_pair(const std::string& path);
bool looks_like_pair_file(const std::string& path);

CompactGroupData group_from_json(const std::string& name, const nlohmann::json& j);
ordered_json group_to_json(const CompactGroupData& g);

}  // namespace dmcyl
