#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "sasakit/cone.hpp"
#include "sasakit/types.hpp"

namespace sasakit {

struct Jet {
  double value = 0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

/// Evaluation of a symplectic potential G at an interior point y, together
/// with its Legendre data: x = grad G(y) and F = <y, x> - G(y).
struct PotentialSample {
  Eigen::VectorXd y;
  double G = 0;
  Eigen::VectorXd gradG;
  Eigen::MatrixXd hessG;
  double F = 0;
};

/// A smooth function added to a potential (the difference g = G1 - G0 of two
/// endpoint potentials).
class Perturbation {
 public:
  using Evaluator = std::function<Jet(const Eigen::VectorXd&)>;

  Perturbation(std::string name, Evaluator evaluator);

  static Perturbation linear(const Eigen::VectorXd& coefficients);
  // y_i * y_j / (y_0 + ... + y_{n-1}); homogeneous of degree one.
  static Perturbation bilinear_over_sum(int i, int j);
  // y_i^2
  static Perturbation square(int i);

  Jet operator()(const Eigen::VectorXd& y) const { return evaluator_(y); }
  double value(const Eigen::VectorXd& y) const { return evaluator_(y).value; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Evaluator evaluator_;
};

/// Torus-invariant symplectic potential on the interior of the moment cone.
class SymplecticPotential {
 public:
  enum class Kind { kCanonical, kCanonicalXi, kSegment, kShifted };

  static SymplecticPotential canonical(const ToricDiagram& diagram);
  // Throws PreconditionError unless xi lies in the open Reeb cone.
  static SymplecticPotential canonical_xi(const ToricDiagram& diagram, const Eigen::VectorXd& xi);
  static SymplecticPotential shifted(const SymplecticPotential& base, const Perturbation& g);

  Kind kind() const;
  const ToricDiagram& diagram() const;
  // Reeb vector of a canonical_xi potential.
  std::optional<Eigen::VectorXd> reeb() const;

  /// Throws NumericError(kBoundaryOrOutside) outside the open domain.
  PotentialSample evaluate(const Eigen::VectorXd& y) const;

 private:
  friend SymplecticPotential geodesic_segment(const SymplecticPotential&, const SymplecticPotential&, double);
  struct Node;
  explicit SymplecticPotential(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// xi_can = sum of the normals.
IntVector canonical_reeb(const ToricDiagram& diagram);

/// G = 1/2 sum l_i log l_i with l_i(y) = <lambda_i, y>.
PotentialSample eval_canonical(const ToricDiagram& diagram, const Eigen::VectorXd& y);

/// G_xi = 1/2 sum l_i log l_i + 1/2 l_xi log l_xi - 1/2 l_inf log l_inf with
/// l_xi = <xi, y> and l_inf = <xi_can, y>. Its Legendre dual is F = l_xi / 2.
PotentialSample eval_canonical_xi(const ToricDiagram& diagram, const Eigen::VectorXd& xi, const Eigen::VectorXd& y);

struct LegendrePoint {
  Eigen::VectorXd x;
  double F = 0;
};

LegendrePoint legendre(const SymplecticPotential& potential, const Eigen::VectorXd& y);

/// Inverts x = grad G(y) by damped Newton on G(y) - <x, y>, starting at guess.
Eigen::VectorXd legendre_inverse(const SymplecticPotential& potential, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& guess);

/// G_t = t G1 + (1 - t) G0. Throws NumericError(kMismatchedDiagrams) if the
/// endpoints live on different diagrams, PreconditionError if t is outside [0, 1].
SymplecticPotential geodesic_segment(const SymplecticPotential& g0, const SymplecticPotential& g1, double t);

/// max_i |(sum_j y_j d/dy_j) dg/dy_i| by nested central differences of step h.
/// Vanishes when g is homogeneous of degree one, i.e. when the endpoint
/// potentials G0 and G0 + g share their Reeb field.
double reeb_invariance_residual(const Perturbation& g, const Eigen::VectorXd& y, double h = 1e-4);

/// |F'' - <grad_x F', (d^2F/dx^2)^{-1} grad_x F'>| at x_t = grad G_t(y), where
/// F_t is the Legendre dual of the segment G_t and dots are t-derivatives at
/// fixed x. Derivatives are central differences of step h in t and in x.
/// Throws NumericError(kStencilOutsideDomain) if [t - h, t + h] leaves [0, 1]
/// or a stencil point cannot be inverted.
double geodesic_equation_residual(const SymplecticPotential& g0, const SymplecticPotential& g1,
                                  const Eigen::VectorXd& y, double t, double h);

/// Euclidean distance from y to the nearest facet hyperplane (negative outside).
double interior_margin(const ToricDiagram& diagram, const Eigen::VectorXd& y);

/// Rank 3: CSV of samples on a radial grid (n rings) in the slice <xi_can, y> = 1.
/// Columns: y1..y3, G, x1..x3, F, hess_min_eig, roundtrip_error, f_closed_form_residual
/// (the last only for canonical_xi potentials, empty otherwise).
std::string potential_grid_csv(const SymplecticPotential& potential, int n);

}  // namespace sasakit
