#include "sasakit/reeb_volume.hpp"

#include <cmath>
#include <limits>

#include "sasakit/errors.hpp"
#include "sasakit/lattice.hpp"

namespace sasakit {

const char* kind_name(NumericError::Kind kind) {
  switch (kind) {
    case NumericError::Kind::kBoundaryOrOutside: return "BoundaryOrOutside";
    case NumericError::Kind::kUnboundedRegion: return "UnboundedRegion";
    case NumericError::Kind::kInfeasibleSlice: return "InfeasibleSlice";
    case NumericError::Kind::kStencilOutsideDomain: return "StencilOutsideDomain";
    case NumericError::Kind::kNoConvergence: return "NoConvergence";
    case NumericError::Kind::kMismatchedDiagrams: return "MismatchedDiagrams";
  }
  return "Unknown";
}

Eigen::VectorXd to_eigen(const RatVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].convert_to<double>();
  return out;
}

Eigen::VectorXd to_eigen(const IntVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].convert_to<double>();
  return out;
}

namespace {

void require_rank3(const ToricDiagram& diagram) {
  if (diagram.rank() != 3) throw PreconditionError("reeb volume: rank 3 required");
}

// Fan of tetrahedra (0, r_0, r_k, r_{k+1}); dets oriented to be positive.
struct Fan {
  std::vector<Eigen::Vector3d> rays;
  std::vector<double> dets;  // dets[k] for k = 1 .. d-2, index k-1
};

Fan make_fan(const ToricDiagram& diagram) {
  require_rank3(diagram);
  auto rays = edge_rays_3d(diagram);
  Fan fan;
  for (const auto& r : rays) fan.rays.push_back(to_eigen(r));
  std::vector<Integer> dets;
  Integer total = 0;
  for (std::size_t k = 1; k + 1 < rays.size(); ++k) {
    dets.push_back(dot(cross(rays[0], rays[k]), rays[k + 1]));
    total += dets.back();
  }
  for (const auto& d : dets) fan.dets.push_back((total > 0 ? d : -d).convert_to<double>());
  return fan;
}

std::vector<double> pairings(const Fan& fan, const Eigen::VectorXd& xi) {
  std::vector<double> a;
  for (const auto& r : fan.rays) {
    double v = r.dot(xi);
    if (!(v > 0))
      throw NumericError(NumericError::Kind::kUnboundedRegion,
                         "xi is not in the open Reeb cone; the truncated region is unbounded");
    a.push_back(v);
  }
  return a;
}

}  // namespace

TruncatedPolytope truncated_polytope(const ToricDiagram& diagram, const Eigen::VectorXd& xi) {
  Fan fan = make_fan(diagram);
  auto a = pairings(fan, xi);
  TruncatedPolytope poly;
  poly.vertices.push_back(Eigen::VectorXd::Zero(3));
  for (std::size_t k = 0; k < fan.rays.size(); ++k) poly.vertices.push_back(fan.rays[k] / a[k]);
  return poly;
}

ExactTruncatedPolytope truncated_polytope(const ToricDiagram& diagram, const RatVector& xi) {
  require_rank3(diagram);
  ExactTruncatedPolytope poly;
  poly.vertices.push_back(RatVector(3));
  for (const auto& r : edge_rays_3d(diagram)) {
    Rational a = dot(xi, r);
    if (a <= 0)
      throw NumericError(NumericError::Kind::kUnboundedRegion,
                         "xi is not in the open Reeb cone; the truncated region is unbounded");
    RatVector v(3);
    for (std::size_t i = 0; i < 3; ++i) v[i] = Rational(r[i]) / a;
    poly.vertices.push_back(std::move(v));
  }
  return poly;
}

double volume(const ToricDiagram& diagram, const Eigen::VectorXd& xi) {
  Fan fan = make_fan(diagram);
  auto a = pairings(fan, xi);
  double v = 0;
  for (std::size_t k = 1; k + 1 < a.size(); ++k) v += fan.dets[k - 1] / (a[0] * a[k] * a[k + 1]);
  return v / 6.0;
}

Rational volume(const ToricDiagram& diagram, const RatVector& xi) {
  require_rank3(diagram);
  auto rays = edge_rays_3d(diagram);
  std::vector<Rational> a;
  for (const auto& r : rays) {
    a.push_back(dot(xi, r));
    if (a.back() <= 0)
      throw NumericError(NumericError::Kind::kUnboundedRegion,
                         "xi is not in the open Reeb cone; the truncated region is unbounded");
  }
  Rational v = 0;
  for (std::size_t k = 1; k + 1 < rays.size(); ++k)
    v += Rational(dot(cross(rays[0], rays[k]), rays[k + 1])) / (a[0] * a[k] * a[k + 1]);
  return abs(v) / 6;
}

VolumeJet volume_jet(const ToricDiagram& diagram, const Eigen::VectorXd& xi) {
  Fan fan = make_fan(diagram);
  auto a = pairings(fan, xi);
  VolumeJet jet{0, Eigen::VectorXd::Zero(3), Eigen::MatrixXd::Zero(3, 3)};
  for (std::size_t k = 1; k + 1 < a.size(); ++k) {
    const std::size_t idx[3] = {0, k, k + 1};
    double t = fan.dets[k - 1] / (6.0 * a[0] * a[k] * a[k + 1]);
    Eigen::Vector3d w = Eigen::Vector3d::Zero();
    Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
    for (auto j : idx) {
      Eigen::Vector3d u = fan.rays[j] / a[j];
      w += u;
      second += u * u.transpose();
    }
    jet.value += t;
    jet.gradient -= t * w;
    jet.hessian += t * (w * w.transpose() + second);
  }
  return jet;
}

Eigen::MatrixXd slice_tangent_basis(const Eigen::VectorXd& gamma) {
  const Eigen::Index n = gamma.size();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gamma);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  return q.rightCols(n - 1);
}

namespace {

struct SliceProblem {
  const ToricDiagram& diagram;
  Eigen::VectorXd origin;  // a point on the slice
  Eigen::MatrixXd basis;   // orthonormal tangent basis

  Eigen::VectorXd point(const Eigen::VectorXd& z) const { return origin + basis * z; }

  bool admissible(const Eigen::VectorXd& z) const {
    std::vector<double> xi(3);
    Eigen::VectorXd p = point(z);
    for (int i = 0; i < 3; ++i) xi[static_cast<std::size_t>(i)] = p[i];
    return reeb_cone_contains(diagram, xi);
  }
};

double restricted_gradient_norm(const SliceProblem& sp, const VolumeJet& jet) {
  return (sp.basis.transpose() * jet.gradient).norm();
}

constexpr int kMaxNewtonIterations = 200;
constexpr int kMaxGradientIterations = 200000;

ReebMinimum newton(const SliceProblem& sp) {
  Eigen::VectorXd z = Eigen::VectorXd::Zero(sp.basis.cols());
  int it = 0;
  for (; it < kMaxNewtonIterations; ++it) {
    VolumeJet jet = volume_jet(sp.diagram, sp.point(z));
    Eigen::VectorXd g = sp.basis.transpose() * jet.gradient / jet.value;
    Eigen::MatrixXd h = sp.basis.transpose() *
                        (jet.hessian / jet.value - jet.gradient * jet.gradient.transpose() / (jet.value * jet.value)) *
                        sp.basis;
    if (restricted_gradient_norm(sp, jet) < 1e-14 * std::max(1.0, jet.value)) break;

    Eigen::LLT<Eigen::MatrixXd> llt(h);
    Eigen::VectorXd step = llt.info() == Eigen::Success ? Eigen::VectorXd(-llt.solve(g)) : Eigen::VectorXd(-g);
    double decrement = -g.dot(step);
    if (decrement < 1e-30) break;

    const double f0 = std::log(jet.value);
    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      Eigen::VectorXd trial = z + t * step;
      if (!sp.admissible(trial)) continue;
      double f = std::log(volume(sp.diagram, sp.point(trial)));
      if (f <= f0 - 1e-4 * t * decrement || decrement < 1e-20) {
        z = trial;
        moved = true;
        break;
      }
    }
    if (!moved) break;  // at machine precision
  }
  VolumeJet jet = volume_jet(sp.diagram, sp.point(z));
  return {sp.point(z), jet.value, restricted_gradient_norm(sp, jet), it, Optimizer::kNewton};
}

ReebMinimum projected_gradient(const SliceProblem& sp) {
  Eigen::VectorXd z = Eigen::VectorXd::Zero(sp.basis.cols());
  VolumeJet jet = volume_jet(sp.diagram, sp.point(z));
  Eigen::VectorXd g = sp.basis.transpose() * jet.gradient / jet.value;
  double step = 1.0;
  int it = 0;
  for (; it < kMaxGradientIterations; ++it) {
    if (restricted_gradient_norm(sp, jet) < 1e-13 * std::max(1.0, jet.value)) break;
    const double f0 = std::log(jet.value);
    double t = step;
    Eigen::VectorXd next;
    bool moved = false;
    for (int ls = 0; ls < 80; ++ls, t *= 0.5) {
      next = z - t * g;
      if (!sp.admissible(next)) continue;
      if (std::log(volume(sp.diagram, sp.point(next))) <= f0 - 1e-4 * t * g.squaredNorm()) {
        moved = true;
        break;
      }
    }
    if (!moved) break;
    VolumeJet next_jet = volume_jet(sp.diagram, sp.point(next));
    Eigen::VectorXd next_g = sp.basis.transpose() * next_jet.gradient / next_jet.value;
    Eigen::VectorXd s = next - z;
    Eigen::VectorXd y = next_g - g;
    double sy = s.dot(y);
    step = sy > 0 ? s.squaredNorm() / sy : 1.0;  // Barzilai-Borwein
    z = next;
    g = next_g;
    jet = next_jet;
  }
  return {sp.point(z), jet.value, restricted_gradient_norm(sp, jet), it, Optimizer::kProjectedGradient};
}

}  // namespace

ReebMinimum minimize_volume_from(const ToricDiagram& diagram, const CalabiYauData& cy, const Eigen::VectorXd& start,
                                 Optimizer method) {
  require_rank3(diagram);
  Eigen::VectorXd gamma = to_eigen(cy.gamma);
  const double n = static_cast<double>(diagram.rank());
  if (std::abs(gamma.dot(start) + n) > 1e-12 * n)
    throw NumericError(NumericError::Kind::kInfeasibleSlice, "start point is not on the slice <gamma, xi> = -n");
  std::vector<double> s(start.data(), start.data() + start.size());
  if (!reeb_cone_contains(diagram, s))
    throw NumericError(NumericError::Kind::kInfeasibleSlice, "start point is not in the open Reeb cone");

  SliceProblem sp{diagram, start, slice_tangent_basis(gamma)};
  ReebMinimum result = method == Optimizer::kNewton ? newton(sp) : projected_gradient(sp);
  if (!std::isfinite(result.volume) || result.gradient_norm > 1e-8)
    throw NumericError(NumericError::Kind::kNoConvergence,
                       "volume minimization stalled with restricted gradient norm " +
                           std::to_string(result.gradient_norm));
  return result;
}

ReebMinimum minimize_volume(const ToricDiagram& diagram, const CalabiYauData& cy, Optimizer method) {
  require_rank3(diagram);
  IntVector sum(3);
  for (const auto& l : diagram.normals())
    for (std::size_t i = 0; i < 3; ++i) sum[i] += l[i];
  Rational pairing = dot(cy.gamma, sum);
  if (pairing >= 0)
    throw NumericError(NumericError::Kind::kInfeasibleSlice, "the slice <gamma, xi> = -n misses the Reeb cone");
  Rational scale = Rational(-static_cast<long>(diagram.rank())) / pairing;
  RatVector start(3);
  for (std::size_t i = 0; i < 3; ++i) start[i] = scale * sum[i];
  return minimize_volume_from(diagram, cy, to_eigen(start), method);
}

}  // namespace sasakit
