#include "sasakit/cone.hpp"

#include <algorithm>
#include <sstream>

#include "sasakit/errors.hpp"
#include "sasakit/lattice.hpp"
#include "sasakit/rational_lp.hpp"

namespace sasakit {

const char* kind_name(DiagramError::Kind kind) {
  switch (kind) {
    case DiagramError::Kind::kEmpty: return "Empty";
    case DiagramError::Kind::kDimensionMismatch: return "DimensionMismatch";
    case DiagramError::Kind::kNonPrimitiveNormal: return "NonPrimitiveNormal";
    case DiagramError::Kind::kRedundantNormal: return "RedundantNormal";
    case DiagramError::Kind::kEmptyInterior: return "EmptyInterior";
    case DiagramError::Kind::kNotStronglyConvex: return "NotStronglyConvex";
  }
  return "Unknown";
}

namespace {

Integer det3(const IntVector& a, const IntVector& b, const IntVector& c) {
  return dot(cross(a, b), c);
}

IntVector sum_of(const std::vector<IntVector>& vs) {
  IntVector s(vs.front().size());
  for (const auto& v : vs)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += v[i];
  return s;
}

std::vector<std::size_t> cyclic_order_3d(const std::vector<IntVector>& normals) {
  const std::size_t d = normals.size();
  std::vector<std::vector<std::size_t>> adjacent(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      int sign = 0;
      bool supporting = true;
      for (std::size_t k = 0; k < d && supporting; ++k) {
        if (k == i || k == j) continue;
        Integer v = det3(normals[i], normals[j], normals[k]);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) supporting = false;
        sign = s;
      }
      if (supporting) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
      }
    }
  for (const auto& a : adjacent)
    if (a.size() != 2) throw Error("cyclic_order_3d: normals do not form a cycle (internal inconsistency)");

  const IntVector axis = sum_of(normals);
  std::vector<std::size_t> order{0};
  std::size_t prev = 0;
  std::size_t cur = det3(normals[0], normals[adjacent[0][0]], axis) > 0 ? adjacent[0][0] : adjacent[0][1];
  while (cur != 0) {
    order.push_back(cur);
    std::size_t next = adjacent[cur][0] == prev ? adjacent[cur][1] : adjacent[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != d) throw Error("cyclic_order_3d: cycle does not visit every normal");
  return order;
}

void require_rank3(const ToricDiagram& diagram, const char* what) {
  if (diagram.rank() != 3) throw PreconditionError(std::string(what) + ": rank 3 required");
}

}  // namespace

ToricDiagram validate_diagram(std::vector<IntVector> normals) {
  using Kind = DiagramError::Kind;
  if (normals.empty()) throw DiagramError(Kind::kEmpty, std::nullopt, "no normals given");
  const std::size_t n = normals.front().size();
  if (n == 0) throw DiagramError(Kind::kDimensionMismatch, 0, "normals must have positive length");
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (normals[i].size() != n)
      throw DiagramError(Kind::kDimensionMismatch, i, "normal " + std::to_string(i) + " has length " +
                                                          std::to_string(normals[i].size()) + ", expected " +
                                                          std::to_string(n));

  for (std::size_t i = 0; i < normals.size(); ++i)
    if (content(normals[i]) != 1)
      throw DiagramError(Kind::kNonPrimitiveNormal, i,
                         "NonPrimitiveNormal: normal " + std::to_string(i) + " " + to_string(normals[i]) +
                             " is not primitive");

  // Gordan: no interior point iff some nonzero nonnegative combination vanishes.
  {
    std::vector<RatVector> rows(n + 1, RatVector(normals.size()));
    RatVector rhs(n + 1);
    for (std::size_t j = 0; j < normals.size(); ++j) {
      for (std::size_t i = 0; i < n; ++i) rows[i][j] = normals[j][i];
      rows[n][j] = 1;
    }
    rhs[n] = 1;
    if (find_nonnegative_solution(rows, rhs))
      throw DiagramError(Kind::kEmptyInterior, std::nullopt, "EmptyInterior: the cone has empty interior");
  }

  if (rank(IntMatrix::from_columns(normals)) != n)
    throw DiagramError(Kind::kNotStronglyConvex, std::nullopt,
                       "NotStronglyConvex: normals do not span, so the cone contains a line");

  for (std::size_t j = 0; j < normals.size(); ++j) {
    std::vector<IntVector> others;
    others.reserve(normals.size() - 1);
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (i != j) others.push_back(normals[i]);
    if (in_cone(others, normals[j]))
      throw DiagramError(Kind::kRedundantNormal, j,
                         "RedundantNormal: dropping normal " + std::to_string(j) + " " + to_string(normals[j]) +
                             " leaves the cone unchanged");
  }

  ToricDiagram diagram;
  diagram.rank_ = n;
  diagram.normals_ = std::move(normals);
  if (n == 3) diagram.cyclic_order_ = cyclic_order_3d(diagram.normals_);
  return diagram;
}

std::vector<IntVector> edge_rays_3d(const ToricDiagram& diagram) {
  require_rank3(diagram, "edge_rays_3d");
  const auto& o = diagram.cyclic_order();
  const std::size_t d = o.size();
  std::vector<IntVector> rays;
  rays.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    IntVector r = cross(diagram.normal(o[k]), diagram.normal(o[(k + 1) % d]));
    Integer g = content(r);
    for (auto& x : r) x /= g;
    rays.push_back(std::move(r));
  }
  return rays;
}

std::vector<FaceDescriptor> enumerate_faces_3d(const ToricDiagram& diagram) {
  require_rank3(diagram, "enumerate_faces_3d");
  const auto& o = diagram.cyclic_order();
  const std::size_t d = o.size();
  const auto rays = edge_rays_3d(diagram);
  std::vector<FaceDescriptor> faces;
  faces.reserve(2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    // Facet o[k] contains rays k-1 and k.
    IntVector w = rays[(k + d - 1) % d];
    for (std::size_t i = 0; i < 3; ++i) w[i] += rays[k][i];
    faces.push_back({{o[k]}, std::move(w)});
  }
  for (std::size_t k = 0; k < d; ++k) faces.push_back({{o[k], o[(k + 1) % d]}, rays[k]});
  return faces;
}

namespace {

GoodnessVerdict check_faces(const ToricDiagram& diagram, const std::vector<FaceDescriptor>& faces) {
  for (const auto& face : faces) {
    std::vector<IntVector> cut;
    for (auto i : face.indices) cut.push_back(diagram.normal(i));
    if (!sublattice_saturation_equal(cut)) {
      std::ostringstream why;
      why << "face cut out by normals {";
      for (std::size_t k = 0; k < face.indices.size(); ++k)
        why << (k ? "," : "") << face.indices[k] << ":" << to_string(cut[k]);
      why << "} violates the lattice saturation condition";
      return {false, face, why.str()};
    }
  }
  return {true, std::nullopt, {}};
}

}  // namespace

GoodnessVerdict is_good(const ToricDiagram& diagram) {
  require_rank3(diagram, "is_good");
  return check_faces(diagram, enumerate_faces_3d(diagram));
}

GoodnessVerdict is_good(const ToricDiagram& diagram, const std::vector<std::vector<std::size_t>>& faces) {
  std::vector<FaceDescriptor> descriptors;
  for (const auto& f : faces) {
    if (f.empty()) throw PreconditionError("is_good: empty face index set");
    for (auto i : f)
      if (i >= diagram.size()) throw PreconditionError("is_good: face index out of range");
    descriptors.push_back({f, std::nullopt});
  }
  return check_faces(diagram, descriptors);
}

bool is_height1_form(const ToricDiagram& diagram) {
  if (diagram.rank() != 3) return false;
  return std::all_of(diagram.normals().begin(), diagram.normals().end(),
                     [](const IntVector& v) { return v[0] == 1; });
}

bool is_good_height1_3d(const ToricDiagram& diagram) {
  if (!is_height1_form(diagram))
    throw PreconditionError("is_good_height1_3d: normals must all have the form (1, p, q)");
  const auto& o = diagram.cyclic_order();
  const std::size_t d = o.size();
  for (std::size_t k = 0; k < d; ++k) {
    const auto& a = diagram.normal(o[k]);
    const auto& b = diagram.normal(o[(k + 1) % d]);
    Integer dp = b[1] - a[1];
    Integer dq = b[2] - a[2];
    bool unit_step = abs(dp) == 1 || abs(dq) == 1;
    bool coprime = dp != 0 && dq != 0 && boost::multiprecision::gcd(abs(dp), abs(dq)) == 1;
    if (!unit_step && !coprime) return false;
  }
  return true;
}

bool reeb_cone_contains(const ToricDiagram& diagram, const RatVector& xi) {
  if (xi.size() != diagram.rank()) throw PreconditionError("reeb_cone_contains: dimension mismatch");
  if (diagram.rank() == 3) {
    for (const auto& r : edge_rays_3d(diagram))
      if (dot(xi, r) <= 0) return false;
    return true;
  }
  return in_open_cone(diagram.normals(), xi);
}

bool reeb_cone_contains(const ToricDiagram& diagram, const std::vector<double>& xi) {
  if (xi.size() != diagram.rank()) throw PreconditionError("reeb_cone_contains: dimension mismatch");
  require_rank3(diagram, "reeb_cone_contains (floating point)");
  for (const auto& r : edge_rays_3d(diagram)) {
    double s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += r[i].convert_to<double>() * xi[i];
    if (!(s > 0)) return false;
  }
  return true;
}

ToricDiagram change_lattice_basis(const ToricDiagram& diagram, const IntMatrix& a) {
  if (a.rows() != diagram.rank() || a.cols() != diagram.rank())
    throw PreconditionError("change_lattice_basis: matrix size mismatch");
  if (determinant(a) != 1) throw PreconditionError("change_lattice_basis: matrix is not in SL(n, Z)");
  IntMatrix b = unimodular_inverse(a).transpose();
  std::vector<IntVector> normals;
  normals.reserve(diagram.size());
  for (const auto& v : diagram.normals()) normals.push_back(b * v);
  return validate_diagram(std::move(normals));
}

}  // namespace sasakit
