#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace sasakit::cli {

ordered_json float_value(double x) {
  if (!std::isfinite(x)) return ordered_json(nullptr);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kFloatDigits, x);
  double r = std::strtod(buf, nullptr);
  if (r == 0) r = 0;  // no negative zero
  return ordered_json(r);
}

ordered_json vector_value(const Eigen::VectorXd& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(float_value(v[i]));
  return a;
}

ordered_json integer_value(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return ordered_json(static_cast<std::int64_t>(v));
  return ordered_json(v.str());
}

ordered_json int_vector_value(const IntVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(integer_value(x));
  return a;
}

ordered_json rational_vector_value(const RatVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ordered_json normals_value(const std::vector<IntVector>& normals) {
  ordered_json a = ordered_json::array();
  for (const auto& l : normals) a.push_back(int_vector_value(l));
  return a;
}

ordered_json matrix_value(const IntMatrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(int_vector_value(m.row(i)));
  return a;
}

ordered_json goodness_value(const ToricDiagram& diagram, const GoodnessVerdict& verdict) {
  ordered_json g;
  g["good"] = verdict.good;
  if (diagram.rank() == 3) {
    ordered_json order = ordered_json::array();
    for (auto i : diagram.cyclic_order()) order.push_back(i);
    g["cyclic_order"] = order;
    g["faces_checked"] = 2 * diagram.size();
  }
  if (verdict.failing_face) {
    ordered_json f;
    const auto& idx = verdict.failing_face->indices;
    f["type"] = idx.size() == 1 ? "facet" : (idx.size() == 2 ? "edge" : "face");
    ordered_json ids = ordered_json::array();
    std::vector<IntVector> ns;
    for (auto i : idx) {
      ids.push_back(i);
      ns.push_back(diagram.normal(i));
    }
    f["normal_indices"] = ids;
    f["normals"] = normals_value(ns);
    if (verdict.failing_face->witness) f["witness"] = int_vector_value(*verdict.failing_face->witness);
    g["failing_face"] = f;
  }
  if (!verdict.reason.empty()) g["reason"] = verdict.reason;
  return g;
}

ordered_json cy_value(const CalabiYauData& cy, const NormalizedDiagram& normalized) {
  ordered_json c;
  c["gamma"] = rational_vector_value(cy.gamma);
  c["height"] = integer_value(cy.height);
  c["normalizer"] = matrix_value(normalized.A);
  c["normalized_gamma"] = rational_vector_value(normalized.cy.gamma);
  c["normalized_normals"] = normals_value(normalized.diagram.normals());
  return c;
}

ordered_json topology_value(const TopologyReport& report, const BettiNumber& betti) {
  ordered_json t;
  ordered_json pi1 = ordered_json::array();
  for (const auto& f : report.pi1_invariant_factors) pi1.push_back(integer_value(f));
  t["pi1"] = pi1;
  t["b2"] = report.b2;
  if (report.area_times_2) t["area2"] = integer_value(*report.area_times_2);
  t["label"] = report.identification;
  if (betti.warning) t["b2_warning"] = *betti.warning;
  return t;
}

namespace {

const char* method_name(Optimizer m) { return m == Optimizer::kNewton ? "newton" : "projected-gradient"; }

}  // namespace

ordered_json reeb_value(const ReebMinimum& primary, const ReebMinimum& check) {
  ordered_json r;
  r["xi"] = vector_value(primary.xi);
  r["volume"] = float_value(primary.volume);
  r["gradient_norm"] = float_value(primary.gradient_norm);
  r["iterations"] = primary.iterations;
  r["method"] = method_name(primary.method);
  ordered_json c;
  c["method"] = method_name(check.method);
  c["iterations"] = check.iterations;
  c["xi_distance"] = float_value((primary.xi - check.xi).norm());
  r["cross_check"] = c;
  return r;
}

ordered_json report_header(const std::string& command) {
  ordered_json h;
  h["tool"] = "sasakit";
  h["version"] = SASAKIT_VERSION;
  h["command"] = command;
  h["float_precision"] = kFloatDigits;
  return h;
}

std::string polygon_svg(const std::vector<LatticePoint2>& loop) {
  long pmin = 0, pmax = 0, qmin = 0, qmax = 0;
  std::vector<std::pair<long, long>> pts;
  for (const auto& v : loop) pts.emplace_back(static_cast<long>(v.p), static_cast<long>(v.q));
  if (!pts.empty()) pmin = pmax = pts[0].first, qmin = qmax = pts[0].second;
  for (const auto& [p, q] : pts) {
    pmin = std::min(pmin, p), pmax = std::max(pmax, p);
    qmin = std::min(qmin, q), qmax = std::max(qmax, q);
  }
  const long unit = 40, margin = 30;
  const long width = (pmax - pmin) * unit + 2 * margin;
  const long height = (qmax - qmin) * unit + 2 * margin;
  auto sx = [&](long p) { return margin + (p - pmin) * unit; };
  auto sy = [&](long q) { return margin + (qmax - q) * unit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (long p = pmin; p <= pmax; ++p)
    for (long q = qmin; q <= qmax; ++q)
      os << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(q) << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
  os << "  <polygon fill=\"#cde\" stroke=\"#234\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << sx(pts[i].first) << ',' << sy(pts[i].second);
  os << "\"/>\n";
  for (const auto& [p, q] : pts) {
    os << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(q) << "\" r=\"4\" fill=\"#234\"/>\n";
    os << "  <text x=\"" << sx(p) + 6 << "\" y=\"" << sy(q) - 6 << "\" font-size=\"11\">(" << p << ',' << q
       << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sasakit::cli
