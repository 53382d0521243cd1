#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "sasakit/cone.hpp"
#include "sasakit/cy_structure.hpp"
#include "sasakit/reeb_volume.hpp"
#include "sasakit/topology.hpp"
#include "sasakit/types.hpp"

namespace sasakit::cli {

using nlohmann::ordered_json;

inline constexpr int kFloatDigits = 12;

// Rounded to kFloatDigits significant digits so output bytes are stable.
ordered_json float_value(double x);
ordered_json vector_value(const Eigen::VectorXd& v);
ordered_json integer_value(const Integer& v);
ordered_json int_vector_value(const IntVector& v);
ordered_json rational_vector_value(const RatVector& v);
ordered_json normals_value(const std::vector<IntVector>& normals);
ordered_json matrix_value(const IntMatrix& m);

ordered_json goodness_value(const ToricDiagram& diagram, const GoodnessVerdict& verdict);
ordered_json cy_value(const CalabiYauData& cy, const NormalizedDiagram& normalized);
ordered_json topology_value(const TopologyReport& report, const BettiNumber& betti);
ordered_json reeb_value(const ReebMinimum& primary, const ReebMinimum& check);

/// Header fields shared by every report.
ordered_json report_header(const std::string& command);

/// SVG drawing of a (p, q) vertex loop.
std::string polygon_svg(const std::vector<LatticePoint2>& loop);

}  // namespace sasakit::cli
