#include "sasakit/io.hpp"

#include <limits>

#include "json.hpp"
#include "sasakit/errors.hpp"

namespace sasakit {

namespace {

using nlohmann::json;

Integer parse_integer(const json& v) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError("not an integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError("normal entries must be integers, got " + v.dump());
}

json integer_value(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

json normals_value(const std::vector<IntVector>& normals) {
  json arr = json::array();
  for (const auto& l : normals) {
    json row = json::array();
    for (const auto& x : l) row.push_back(integer_value(x));
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

std::string integer_json_literal(const Integer& value) { return integer_value(value).dump(); }

std::vector<IntVector> parse_normals_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("diagram JSON must be an object");
  if (!doc.contains("normals") || !doc["normals"].is_array()) throw InputError("diagram JSON needs a \"normals\" array");
  std::vector<IntVector> normals;
  for (const auto& row : doc["normals"]) {
    if (!row.is_array()) throw InputError("each normal must be an array");
    IntVector v;
    for (const auto& x : row) v.push_back(parse_integer(x));
    normals.push_back(std::move(v));
  }
  if (doc.contains("rank")) {
    const auto& r = doc["rank"];
    if (!r.is_number_integer() || r.get<std::int64_t>() < 1) throw InputError("\"rank\" must be a positive integer");
    for (const auto& v : normals)
      if (static_cast<std::int64_t>(v.size()) != r.get<std::int64_t>())
        throw InputError("normal length does not match \"rank\"");
  }
  return normals;
}

ToricDiagram parse_diagram_json(std::string_view text) { return validate_diagram(parse_normals_json(text)); }

std::string normals_to_json(const std::vector<IntVector>& normals) {
  json doc;
  doc["rank"] = normals.empty() ? 0 : normals.front().size();
  doc["normals"] = normals_value(normals);
  return doc.dump();
}

std::string diagram_to_json(const ToricDiagram& diagram, const CalabiYauData* cy) {
  json doc;
  doc["rank"] = diagram.rank();
  doc["normals"] = normals_value(diagram.normals());
  if (cy) {
    json g = json::array();
    for (const auto& x : cy->gamma) g.push_back(x.str());
    doc["gamma"] = std::move(g);
    doc["height"] = integer_value(cy->height);
  }
  return doc.dump();
}

std::string topology_to_json(const TopologyReport& report) {
  json doc;
  json pi1 = json::array();
  for (const auto& f : report.pi1_invariant_factors) pi1.push_back(integer_value(f));
  doc["pi1"] = std::move(pi1);
  doc["b2"] = report.b2;
  if (report.area_times_2) doc["area2"] = integer_value(*report.area_times_2);
  doc["label"] = report.identification;
  return doc.dump();
}

}  // namespace sasakit
