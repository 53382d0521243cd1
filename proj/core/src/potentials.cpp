#include "sasakit/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "sasakit/errors.hpp"
#include "sasakit/reeb_volume.hpp"

namespace sasakit {

// ---- perturbations -------------------------------------------------------

Perturbation::Perturbation(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)) {}

Perturbation Perturbation::linear(const Eigen::VectorXd& c) {
  return Perturbation("linear", [c](const Eigen::VectorXd& y) {
    const auto n = y.size();
    return Jet{c.dot(y), c, Eigen::MatrixXd::Zero(n, n)};
  });
}

Perturbation Perturbation::bilinear_over_sum(int i, int j) {
  return Perturbation("bilinear_over_sum", [i, j](const Eigen::VectorXd& y) {
    const auto n = y.size();
    const double s = y.sum();
    if (!(s > 0)) throw NumericError(NumericError::Kind::kBoundaryOrOutside, "bilinear_over_sum: sum(y) <= 0");
    const double p = y[i] * y[j];
    Eigen::VectorXd dp = Eigen::VectorXd::Zero(n);
    dp[i] += y[j];
    dp[j] += y[i];
    Eigen::MatrixXd ddp = Eigen::MatrixXd::Zero(n, n);
    ddp(i, j) += 1;
    ddp(j, i) += 1;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    Jet jet;
    jet.value = p / s;
    jet.gradient = dp / s - p / (s * s) * ones;
    jet.hessian = ddp / s - (dp * ones.transpose() + ones * dp.transpose()) / (s * s) +
                  2 * p / (s * s * s) * ones * ones.transpose();
    return jet;
  });
}

Perturbation Perturbation::square(int i) {
  return Perturbation("square", [i](const Eigen::VectorXd& y) {
    const auto n = y.size();
    Jet jet{y[i] * y[i], Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)};
    jet.gradient[i] = 2 * y[i];
    jet.hessian(i, i) = 2;
    return jet;
  });
}

// ---- canonical potentials ------------------------------------------------

IntVector canonical_reeb(const ToricDiagram& diagram) {
  IntVector s(diagram.rank());
  for (const auto& l : diagram.normals())
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += l[i];
  return s;
}

namespace {

void add_l_log_l(const Eigen::VectorXd& normal, const Eigen::VectorXd& y, double sign, Jet& jet) {
  const double l = normal.dot(y);
  if (!(l > 0)) throw NumericError(NumericError::Kind::kBoundaryOrOutside, "point is on or outside the cone boundary");
  jet.value += sign * 0.5 * l * std::log(l);
  jet.gradient += sign * 0.5 * (std::log(l) + 1.0) * normal;
  jet.hessian += sign * 0.5 / l * normal * normal.transpose();
}

Jet canonical_jet(const ToricDiagram& diagram, const Eigen::VectorXd& y) {
  if (static_cast<std::size_t>(y.size()) != diagram.rank())
    throw PreconditionError("potential evaluation: dimension mismatch");
  const auto n = y.size();
  Jet jet{0, Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)};
  for (const auto& l : diagram.normals()) add_l_log_l(to_eigen(l), y, 1.0, jet);
  return jet;
}

Jet canonical_xi_jet(const ToricDiagram& diagram, const Eigen::VectorXd& xi, const Eigen::VectorXd& y) {
  Jet jet = canonical_jet(diagram, y);
  add_l_log_l(xi, y, 1.0, jet);
  add_l_log_l(to_eigen(canonical_reeb(diagram)), y, -1.0, jet);
  return jet;
}

PotentialSample to_sample(const Eigen::VectorXd& y, Jet jet) {
  PotentialSample s;
  s.y = y;
  s.G = jet.value;
  s.F = y.dot(jet.gradient) - jet.value;
  s.gradG = std::move(jet.gradient);
  s.hessG = std::move(jet.hessian);
  return s;
}

}  // namespace

PotentialSample eval_canonical(const ToricDiagram& diagram, const Eigen::VectorXd& y) {
  return to_sample(y, canonical_jet(diagram, y));
}

PotentialSample eval_canonical_xi(const ToricDiagram& diagram, const Eigen::VectorXd& xi, const Eigen::VectorXd& y) {
  return to_sample(y, canonical_xi_jet(diagram, xi, y));
}

// ---- SymplecticPotential -------------------------------------------------

struct SymplecticPotential::Node {
  Kind kind;
  std::shared_ptr<const ToricDiagram> diagram;
  Eigen::VectorXd xi;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
  double t = 0;
  std::optional<Perturbation> perturbation;

  Jet jet(const Eigen::VectorXd& y) const {
    switch (kind) {
      case Kind::kCanonical: return canonical_jet(*diagram, y);
      case Kind::kCanonicalXi: return canonical_xi_jet(*diagram, xi, y);
      case Kind::kSegment: {
        Jet a = first->jet(y);
        Jet b = second->jet(y);
        return {t * b.value + (1 - t) * a.value, t * b.gradient + (1 - t) * a.gradient,
                t * b.hessian + (1 - t) * a.hessian};
      }
      case Kind::kShifted: {
        Jet a = first->jet(y);
        Jet g = (*perturbation)(y);
        return {a.value + g.value, a.gradient + g.gradient, a.hessian + g.hessian};
      }
    }
    throw Error("SymplecticPotential: corrupt node");
  }
};

SymplecticPotential SymplecticPotential::canonical(const ToricDiagram& diagram) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kCanonical;
  node->diagram = std::make_shared<const ToricDiagram>(diagram);
  return SymplecticPotential(std::move(node));
}

SymplecticPotential SymplecticPotential::canonical_xi(const ToricDiagram& diagram, const Eigen::VectorXd& xi) {
  std::vector<double> v(xi.data(), xi.data() + xi.size());
  if (diagram.rank() == 3 && !reeb_cone_contains(diagram, v))
    throw PreconditionError("canonical_xi: xi is not in the open Reeb cone");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kCanonicalXi;
  node->diagram = std::make_shared<const ToricDiagram>(diagram);
  node->xi = xi;
  return SymplecticPotential(std::move(node));
}

SymplecticPotential SymplecticPotential::shifted(const SymplecticPotential& base, const Perturbation& g) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kShifted;
  node->diagram = base.node_->diagram;
  node->first = base.node_;
  node->perturbation = g;
  return SymplecticPotential(std::move(node));
}

SymplecticPotential::Kind SymplecticPotential::kind() const { return node_->kind; }

const ToricDiagram& SymplecticPotential::diagram() const { return *node_->diagram; }

std::optional<Eigen::VectorXd> SymplecticPotential::reeb() const {
  if (node_->kind == Kind::kCanonicalXi) return node_->xi;
  return std::nullopt;
}

PotentialSample SymplecticPotential::evaluate(const Eigen::VectorXd& y) const {
  return to_sample(y, node_->jet(y));
}

SymplecticPotential geodesic_segment(const SymplecticPotential& g0, const SymplecticPotential& g1, double t) {
  if (!(t >= 0 && t <= 1)) throw PreconditionError("geodesic_segment: t must lie in [0, 1]");
  if (!(g0.diagram() == g1.diagram()))
    throw NumericError(NumericError::Kind::kMismatchedDiagrams, "geodesic_segment: endpoints use different diagrams");
  auto node = std::make_shared<SymplecticPotential::Node>();
  node->kind = SymplecticPotential::Kind::kSegment;
  node->diagram = g0.node_->diagram;
  node->first = g0.node_;
  node->second = g1.node_;
  node->t = t;
  return SymplecticPotential(std::move(node));
}

// ---- Legendre transform --------------------------------------------------

LegendrePoint legendre(const SymplecticPotential& potential, const Eigen::VectorXd& y) {
  PotentialSample s = potential.evaluate(y);
  return {s.gradG, s.F};
}

namespace {

struct Trial {
  double phi;
  double residual;
};

std::optional<Trial> try_point(const SymplecticPotential& potential, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  try {
    PotentialSample s = potential.evaluate(y);
    return Trial{s.G - x.dot(y), (s.gradG - x).norm()};
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

}  // namespace

Eigen::VectorXd legendre_inverse(const SymplecticPotential& potential, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& guess) {
  Eigen::VectorXd y = guess;
  PotentialSample s = potential.evaluate(y);
  const double scale = 1.0 + x.norm();
  for (int it = 0; it < 100; ++it) {
    Eigen::VectorXd r = s.gradG - x;
    if (r.norm() <= 1e-15 * scale) return y;
    Eigen::LLT<Eigen::MatrixXd> llt(s.hessG);
    if (llt.info() != Eigen::Success)
      throw NumericError(NumericError::Kind::kNoConvergence, "legendre_inverse: Hessian is not positive definite");
    Eigen::VectorXd step = -llt.solve(r);
    const double decrement = -r.dot(step);
    const double phi0 = s.G - x.dot(y);
    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      Eigen::VectorXd trial = y + t * step;
      auto p = try_point(potential, x, trial);
      // Near the solution the merit decrease drowns in rounding; the gradient
      // residual still decides.
      if (p && (p->phi <= phi0 - 1e-4 * t * decrement || p->residual < 0.5 * r.norm())) {
        y = trial;
        moved = true;
        break;
      }
    }
    s = potential.evaluate(y);
    if (!moved) break;
  }
  if ((s.gradG - x).norm() <= 1e-11 * scale) return y;
  throw NumericError(NumericError::Kind::kNoConvergence, "legendre_inverse: Newton iteration did not converge");
}

// ---- geodesic checks -----------------------------------------------------

double interior_margin(const ToricDiagram& diagram, const Eigen::VectorXd& y) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& l : diagram.normals()) {
    Eigen::VectorXd v = to_eigen(l);
    m = std::min(m, v.dot(y) / v.norm());
  }
  return m;
}

double reeb_invariance_residual(const Perturbation& g, const Eigen::VectorXd& y, double h) {
  const auto n = y.size();
  auto partial = [&](const Eigen::VectorXd& p, Eigen::Index i) {
    Eigen::VectorXd a = p, b = p;
    a[i] += h;
    b[i] -= h;
    return (g.value(a) - g.value(b)) / (2 * h);
  };
  double worst = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    // Euler field y . grad applied to f is d/ds f(y + s y) at s = 0.
    const double euler = (partial(y * (1 + h), i) - partial(y * (1 - h), i)) / (2 * h);
    if (!std::isfinite(euler))
      throw NumericError(NumericError::Kind::kBoundaryOrOutside, "reeb_invariance_residual: non-finite value");
    worst = std::max(worst, std::abs(euler));
  }
  return worst;
}

double geodesic_equation_residual(const SymplecticPotential& g0, const SymplecticPotential& g1,
                                  const Eigen::VectorXd& y, double t, double h) {
  if (!(h > 0)) throw PreconditionError("geodesic_equation_residual: h must be positive");
  if (t - h < 0 || t + h > 1)
    throw NumericError(NumericError::Kind::kStencilOutsideDomain,
                       "geodesic_equation_residual: [t - h, t + h] leaves [0, 1]");
  if (interior_margin(g0.diagram(), y) <= 0)
    throw NumericError(NumericError::Kind::kBoundaryOrOutside, "geodesic_equation_residual: y is not interior");

  const SymplecticPotential center = geodesic_segment(g0, g1, t);
  const PotentialSample at = center.evaluate(y);
  const Eigen::VectorXd x = at.gradG;
  const auto n = y.size();

  // F_s(x') = <x', y_s> - G_s(y_s), y_s the Legendre preimage of x'.
  auto dual = [&](double s, const Eigen::VectorXd& xp) {
    SymplecticPotential gs = geodesic_segment(g0, g1, s);
    try {
      Eigen::VectorXd ys = legendre_inverse(gs, xp, y);
      return xp.dot(ys) - gs.evaluate(ys).G;
    } catch (const NumericError& e) {
      throw NumericError(NumericError::Kind::kStencilOutsideDomain,
                         std::string("geodesic_equation_residual: stencil point failed: ") + e.what());
    }
  };
  auto f_dot = [&](const Eigen::VectorXd& xp) { return (dual(t + h, xp) - dual(t - h, xp)) / (2 * h); };

  const double f_ddot = (dual(t + h, x) - 2 * at.F + dual(t - h, x)) / (h * h);
  Eigen::VectorXd grad_f_dot(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXd a = x, b = x;
    a[j] += h;
    b[j] -= h;
    grad_f_dot[j] = (f_dot(a) - f_dot(b)) / (2 * h);
  }
  // (d^2F/dx^2)^{-1} is the Hessian of G at the matching point.
  return std::abs(f_ddot - grad_f_dot.dot(at.hessG * grad_f_dot));
}

// ---- grid ----------------------------------------------------------------

std::string potential_grid_csv(const SymplecticPotential& potential, int n) {
  const ToricDiagram& diagram = potential.diagram();
  if (diagram.rank() != 3) throw PreconditionError("potential_grid_csv: rank 3 required");
  if (n < 1) throw PreconditionError("potential_grid_csv: grid size must be positive");

  const Eigen::VectorXd axis = to_eigen(canonical_reeb(diagram));
  std::vector<Eigen::VectorXd> corners;
  for (const auto& r : edge_rays_3d(diagram)) {
    Eigen::VectorXd v = to_eigen(r);
    corners.push_back(v / v.dot(axis));
  }
  Eigen::VectorXd center = Eigen::VectorXd::Zero(3);
  for (const auto& c : corners) center += c / static_cast<double>(corners.size());

  std::vector<Eigen::VectorXd> points{center};
  for (int ring = 1; ring <= n; ++ring) {
    const double a = static_cast<double>(ring) / (n + 1);
    for (const auto& c : corners) points.push_back(center + a * (c - center));
  }

  std::ostringstream os;
  os << std::setprecision(12);
  os << "y1,y2,y3,G,x1,x2,x3,F,hess_min_eig,roundtrip_error,f_closed_form_residual\n";
  const auto xi = potential.reeb();
  for (const auto& y : points) {
    PotentialSample s = potential.evaluate(y);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s.hessG);
    double roundtrip = (legendre_inverse(potential, s.gradG, center) - y).norm() / y.norm();
    os << y[0] << ',' << y[1] << ',' << y[2] << ',' << s.G << ',' << s.gradG[0] << ',' << s.gradG[1] << ','
       << s.gradG[2] << ',' << s.F << ',' << eig.eigenvalues().minCoeff() << ',' << roundtrip << ',';
    if (xi) os << std::abs(s.F - 0.5 * xi->dot(y));
    os << '\n';
  }
  return os.str();
}

}  // namespace sasakit
