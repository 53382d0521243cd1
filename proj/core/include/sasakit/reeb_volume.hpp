#pragma once

#include <vector>

#include <Eigen/Dense>

#include "sasakit/cone.hpp"
#include "sasakit/cy_structure.hpp"
#include "sasakit/types.hpp"

namespace sasakit {

// The region Delta_xi = { y in C : <y, xi> <= 1 }. In rank 3 its vertices are
// the origin followed by one point per edge ray, in cyclic order.
struct TruncatedPolytope {
  std::vector<Eigen::VectorXd> vertices;
};

struct ExactTruncatedPolytope {
  std::vector<RatVector> vertices;
};

// Rank 3. Throws NumericError(kUnboundedRegion) unless xi is in the open Reeb cone.
TruncatedPolytope truncated_polytope(const ToricDiagram& diagram, const Eigen::VectorXd& xi);
ExactTruncatedPolytope truncated_polytope(const ToricDiagram& diagram, const RatVector& xi);

/// Euclidean volume of Delta_xi. The Sasakian volume is a fixed dimensional
/// multiple of this; only the raw polytope volume is reported, with the slice
/// taken at <y, xi> <= 1.
double volume(const ToricDiagram& diagram, const Eigen::VectorXd& xi);
Rational volume(const ToricDiagram& diagram, const RatVector& xi);

struct VolumeJet {
  double value = 0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

/// Volume with its exact gradient and Hessian in xi, from the triangulation.
VolumeJet volume_jet(const ToricDiagram& diagram, const Eigen::VectorXd& xi);

/// Orthonormal basis (columns) of the hyperplane orthogonal to gamma.
Eigen::MatrixXd slice_tangent_basis(const Eigen::VectorXd& gamma);

Eigen::VectorXd to_eigen(const RatVector& v);
Eigen::VectorXd to_eigen(const IntVector& v);

enum class Optimizer {
  kNewton,             // damped Newton on log-volume
  kProjectedGradient,  // Barzilai-Borwein gradient descent on log-volume
};

struct ReebMinimum {
  Eigen::VectorXd xi;
  double volume = 0;
  double gradient_norm = 0;  // |N^T grad V| with N an orthonormal slice basis
  int iterations = 0;
  Optimizer method = Optimizer::kNewton;
};

/// Minimizes the volume over { <gamma, xi> == -n } intersected with the open
/// Reeb cone, starting from sum(lambda_i) rescaled onto the slice. Throws
/// NumericError(kInfeasibleSlice) when that start is not admissible and
/// NumericError(kNoConvergence) when the iteration stalls.
ReebMinimum minimize_volume(const ToricDiagram& diagram, const CalabiYauData& cy,
                            Optimizer method = Optimizer::kNewton);

/// Same, from a caller-chosen start which must lie on the slice and in the cone.
ReebMinimum minimize_volume_from(const ToricDiagram& diagram, const CalabiYauData& cy, const Eigen::VectorXd& start,
                                 Optimizer method = Optimizer::kNewton);

}  // namespace sasakit
