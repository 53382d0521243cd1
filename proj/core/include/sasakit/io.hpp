#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sasakit/cone.hpp"
#include "sasakit/cy_structure.hpp"
#include "sasakit/topology.hpp"
#include "sasakit/types.hpp"

namespace sasakit {

/// Normals from diagram JSON, {"rank": n, "normals": [[...], ...]}. Entries are
/// JSON integers or decimal strings (for values beyond 64 bits). Throws
/// InputError on malformed input; no geometric validation is done here.
std::vector<IntVector> parse_normals_json(std::string_view text);

/// parse_normals_json followed by validate_diagram.
ToricDiagram parse_diagram_json(std::string_view text);

/// Diagram JSON; with CY data, adds "gamma" (rationals as strings) and "height".
std::string diagram_to_json(const ToricDiagram& diagram, const CalabiYauData* cy = nullptr);
std::string normals_to_json(const std::vector<IntVector>& normals);

/// {"pi1": [...], "b2": n, "area2": n, "label": "..."}; area2 omitted when absent.
std::string topology_to_json(const TopologyReport& report);

/// Exact integers that fit in 64 bits are written as JSON numbers, others as strings.
std::string integer_json_literal(const Integer& value);

}  // namespace sasakit
