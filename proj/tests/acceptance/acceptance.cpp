// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "sasakit/cy_structure.hpp"
#include "sasakit/errors.hpp"
#include "sasakit/families.hpp"
#include "sasakit/lattice.hpp"
#include "sasakit/potentials.hpp"
#include "sasakit/reeb_volume.hpp"
#include "sasakit/topology.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace sasakit {
namespace {

// Tolerances and sizes.
constexpr double kLensRuntimeS = 1.0;
constexpr double kMain4RuntimeS = 5.0;
constexpr double kReebRuntimeS = 10.0;
constexpr int kGoodnessSamples = 200;
constexpr int kSnfSamples = 500;
constexpr double kOctantXiTol = 1e-6;
constexpr double kOctantVolumeTol = 1e-9;
constexpr double kOptimizerAgreementTol = 1e-6;
constexpr double kGradientNormTol = 1e-8;
constexpr int kPropertyPoints = 100;
constexpr double kFIdentityRelTol = 1e-9;
constexpr double kRoundTripRelTol = 1e-9;
constexpr double kHessianInverseTol = 1e-6;
constexpr double kGeodesicTol = 1e-4;
constexpr double kGeodesicStep = 1e-3;
constexpr double kGeodesicMinOrder = 1.8;
constexpr double kReebInvariantTol = 1e-6;
constexpr double kReebVariantFloor = 0.1;
constexpr int kInvarianceSamples = 50;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int failures = 0;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures++ < 3) detail << " [" << what << "]";
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
bool throws_nothing(F&& f, std::string& message) {
  try {
    f();
    return true;
  } catch (const std::exception& e) {
    message = e.what();
    return false;
  }
}

ToricDiagram octant() {
  return validate_diagram({make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}), make_int_vector({0, 0, 1})});
}

// 1 -------------------------------------------------------------------------
void lens_pipeline(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  for (long l = 1; l <= 10; ++l) {
    const std::string tag = "l=" + std::to_string(l);
    auto d = lens(l);
    o.check(is_good(d).good, tag + " not good");
    auto cy = compute_gamma(d);
    if (!cy) {
      o.check(false, tag + " no gamma");
      continue;
    }
    o.check(cy->gamma == RatVector{-1, -1, Rational(1, l)}, tag + " gamma " + to_string(cy->gamma));
    o.check(cy->height == l, tag + " height");
    auto pi1 = fundamental_group(d);
    o.check(l == 1 ? pi1.empty() : pi1 == std::vector<Integer>{l}, tag + " pi1");
    IntMatrix a{{0, 0, -1}, {-1, 1, 0}, {1, 0, l}};
    o.check(a * cy->gamma == RatVector{Rational(-1, l), 0, 0}, tag + " A gamma");
    o.check(is_height_normalizer(d, *cy, a), tag + " A not a normalizer");
    auto t = change_lattice_basis(d, a);
    o.check(t.normals() == std::vector<IntVector>{IntVector{l, 0, 1}, IntVector{l, 1, 1}, IntVector{l, 1, 2}},
            tag + " transformed normals");
  }
  const double s = seconds_since(t0);
  o.check(s < kLensRuntimeS, "runtime");
  o.detail << " l=1..10; runtime " << s << " s";
}

// 2 -------------------------------------------------------------------------
void obstruction(Outcome& o) {
  for (long l = 2; l <= 6; ++l) {
    const std::string tag = "l=" + std::to_string(l);
    auto raw = family_normals({FamilyId::kNonCy, l, 0, 0});
    o.check(!compute_gamma(raw), tag + " raw normals admit gamma");
    std::string msg;
    std::optional<ToricDiagram> d;
    if (!throws_nothing([&] { d = non_cy(l); }, msg)) {
      o.check(false, tag + " " + msg);
      continue;
    }
    o.check(is_good(*d).good, tag + " not good");
    o.check(!compute_gamma(*d), tag + " gamma present");
  }
  o.detail << " l=2..6";
}

// 3 -------------------------------------------------------------------------
void z5_diagram(Outcome& o) {
  auto d = z5_lens();
  o.check(is_good(d).good, "not good");
  o.check(is_good_height1_3d(d), "height-1 criterion");
  auto cy = compute_gamma(d);
  o.check(cy && cy->height == 1, "height");
  o.check(fundamental_group(d) == std::vector<Integer>{5}, "pi1");
  const Integer area2 = area_invariant(d);
  const Integer oracle = testing::pick_area_times_2(height1_polygon(d));
  o.check(area2 == 5, "area2 = " + area2.str());
  o.check(oracle == 5, "Pick oracle = " + oracle.str());
  o.detail << " area = " << area2 << "/2 (oracle " << oracle << "/2)";
}

// 4 -------------------------------------------------------------------------
void main4_suite(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  int instances = 0, failed = 0;
  std::ostringstream failed_list;
  for (bool odd : {false, true})
    for (long r = 1; r <= 4; ++r) {
      std::set<Integer> areas;
      for (long s = 0; s <= 5; ++s) {
        ++instances;
        const std::string tag = std::string(odd ? "odd" : "even") + " r=" + std::to_string(r) + " s=" + std::to_string(s);
        auto v = odd ? main4_odd_vertices(r, s) : main4_even_vertices(r, s);
        areas.insert(polygon_area_times_2(v));
        bool ok = is_strictly_convex(v) && convexity_and_span_check(v);
        if (ok) {
          std::string msg;
          std::optional<ToricDiagram> d;
          ok = throws_nothing([&] { d = odd ? main4_odd(r, s) : main4_even(r, s); }, msg);
          if (ok) {
            const long k = odd ? 2 * r - 1 : 2 * r;
            ok = is_good(*d).good && is_good_height1_3d(*d) && fundamental_group(*d).empty() &&
                 second_betti(*d).b2 == k;
          }
        }
        if (!ok) {
          ++failed;
          failed_list << (failed > 1 ? ", " : "") << tag;
        }
      }
      o.check(areas.size() == 6, std::string(odd ? "odd" : "even") + " r=" + std::to_string(r) + " areas collide");
    }
  const double s = seconds_since(t0);
  o.check(failed == 0, std::to_string(failed) + "/" + std::to_string(instances) + " instances degenerate");
  o.check(s < kMain4RuntimeS, "runtime");
  o.detail << " " << instances - failed << "/" << instances << " instances good; runtime " << s << " s";
  if (failed) o.detail << "; failing: " << failed_list.str();
}

// 5 -------------------------------------------------------------------------
void goodness_equivalence(Outcome& o) {
  auto rng = testing::make_rng(501);
  int disagreements = 0, good = 0;
  for (int i = 0; i < kGoodnessSamples; ++i) {
    auto poly = testing::random_lattice_polygon(rng, 8, 3, 8);
    std::vector<IntVector> normals;
    for (const auto& pt : poly) normals.push_back(IntVector{1, pt.p, pt.q});
    auto d = validate_diagram(normals);
    const bool a = is_good(d).good, b = is_good_height1_3d(d);
    good += a;
    disagreements += (a != b);
  }
  o.check(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail << " " << kGoodnessSamples << " diagrams, " << good << " good, " << disagreements << " disagreements";
}

// 6 -------------------------------------------------------------------------
void snf_oracle(Outcome& o) {
  auto rng = testing::make_rng(601);
  int bad = 0;
  for (int i = 0; i < kSnfSamples; ++i)
    for (std::size_t cols : {3u, 5u}) {
      IntMatrix m = testing::random_matrix(rng, 3, cols, 20);
      auto snf = smith_normal_form(m);
      bool ok = snf.U * m * snf.V == snf.D && snf.D.is_diagonal() && abs(determinant(snf.U)) == 1 &&
                abs(determinant(snf.V)) == 1;
      auto diag = snf.diagonal();
      for (std::size_t k = 0; k + 1 < diag.size(); ++k)
        ok = ok && diag[k] >= 0 && (diag[k] == 0 ? diag[k + 1] == 0 : diag[k + 1] % diag[k] == 0);
      if (!ok) ++bad;
    }
  int mismatches = 0, small = 0;
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c)
        for (long long d = -4; d <= 4; ++d) {
          ++small;
          auto [d1, d2] = testing::brute_force_invariant_factors_2x2(a, b, c, d);
          if (smith_normal_form(IntMatrix{{a, b}, {c, d}}).diagonal() != std::vector<Integer>{d1, d2}) ++mismatches;
        }
  o.check(bad == 0, std::to_string(bad) + " contract violations");
  o.check(mismatches == 0, std::to_string(mismatches) + " 2x2 oracle mismatches");
  o.detail << " " << 2 * kSnfSamples << " random 3x3/3x5, " << small << " exhaustive 2x2";
}

// 7 -------------------------------------------------------------------------
void reeb_minimization(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto oct = octant();
  auto m = minimize_volume(oct, *compute_gamma(oct));
  o.check((m.xi - Eigen::Vector3d(1, 1, 1)).norm() < kOctantXiTol, "octant minimizer");
  o.check(std::abs(m.volume - 1.0 / 6) < kOctantVolumeTol, "octant volume");

  auto rng = testing::make_rng(701);
  double worst_agreement = 0, worst_gradient = 0;
  int diagrams = 0;
  for (const auto& nd : test_corpus()) {
    auto cy = compute_gamma(nd.diagram);
    if (!cy) continue;
    ++diagrams;
    std::string msg;
    bool ok = throws_nothing(
        [&] {
          auto a = minimize_volume(nd.diagram, *cy, Optimizer::kNewton);
          auto b = minimize_volume(nd.diagram, *cy, Optimizer::kProjectedGradient);
          worst_agreement = std::max(worst_agreement, (a.xi - b.xi).norm());
          worst_gradient = std::max({worst_gradient, a.gradient_norm, b.gradient_norm});
        },
        msg);
    o.check(ok, nd.name + ": " + msg);
    for (int i = 0; i < kPropertyPoints; ++i) {
      Eigen::VectorXd x = testing::random_positive_combination(rng, nd.diagram.normals());
      Eigen::VectorXd y = testing::random_positive_combination(rng, nd.diagram.normals());
      const double c = std::uniform_real_distribution<double>(0.25, 4.0)(rng);
      const double vx = volume(nd.diagram, x);
      o.check(std::abs(volume(nd.diagram, Eigen::VectorXd(c * x)) - vx / (c * c * c)) <= 1e-12 * vx / (c * c * c),
              nd.name + " homogeneity");
      const double mid = volume(nd.diagram, Eigen::VectorXd(0.5 * (x + y)));
      const double avg = 0.5 * (vx + volume(nd.diagram, y));
      o.check(mid <= avg * (1 + 1e-12), nd.name + " midpoint convexity");
    }
  }
  o.check(worst_agreement < kOptimizerAgreementTol, "optimizers disagree");
  o.check(worst_gradient < kGradientNormTol, "gradient norm");
  const double s = seconds_since(t0);
  o.check(s < kReebRuntimeS, "runtime");
  o.detail << " " << diagrams << " CY diagrams; max |xi_N - xi_BB| = " << worst_agreement
           << ", max restricted gradient = " << worst_gradient << "; runtime " << s << " s";
}

// 8 -------------------------------------------------------------------------
void potential_identities(Outcome& o) {
  auto rng = testing::make_rng(801);
  double worst_f = 0, worst_round = 0, worst_hess = 0;
  for (const auto& nd : test_corpus()) {
    auto cy = compute_gamma(nd.diagram);
    if (!cy) continue;
    const Eigen::VectorXd xi = minimize_volume(nd.diagram, *cy).xi;
    auto g = SymplecticPotential::canonical_xi(nd.diagram, xi);
    const auto rays = edge_rays_3d(nd.diagram);
    for (int i = 0; i < kPropertyPoints; ++i) {
      Eigen::VectorXd y = testing::random_positive_combination(rng, rays);
      std::string msg;
      bool ok = throws_nothing(
          [&] {
            auto lp = legendre(g, y);
            const double half = 0.5 * xi.dot(y);
            worst_f = std::max(worst_f, std::abs(lp.F - half) / std::abs(half));
            Eigen::VectorXd back = legendre_inverse(g, lp.x, testing::random_positive_combination(rng, rays));
            worst_round = std::max(worst_round, (back - y).norm() / y.norm());
            const double k = 1e-5;
            Eigen::MatrixXd jac(3, 3);
            for (int j = 0; j < 3; ++j) {
              Eigen::VectorXd e = Eigen::VectorXd::Unit(3, j) * k;
              jac.col(j) = (legendre_inverse(g, lp.x + e, y) - legendre_inverse(g, lp.x - e, y)) / (2 * k);
            }
            worst_hess = std::max(worst_hess, (jac * g.evaluate(y).hessG - Eigen::Matrix3d::Identity()).norm());
          },
          msg);
      o.check(ok, nd.name + ": " + msg);
    }
  }
  o.check(worst_f < kFIdentityRelTol, "F identity");
  o.check(worst_round < kRoundTripRelTol, "round trip");
  o.check(worst_hess < kHessianInverseTol, "Hessian inverse");
  o.detail << " max rel |F - l_xi/2| = " << worst_f << ", round trip = " << worst_round
           << ", |Hess_x F Hess_y G - I| = " << worst_hess;
}

// 9 -------------------------------------------------------------------------
void geodesic_residual(Outcome& o) {
  auto oct = octant();
  auto g0 = SymplecticPotential::canonical(oct);
  const auto g = Perturbation::bilinear_over_sum(0, 1);
  auto g1 = SymplecticPotential::shifted(g0, g);
  double worst = 0, min_order = 1e9;
  for (const Eigen::Vector3d y : {Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, 2, 1.5), Eigen::Vector3d(0.5, 0.8, 2)}) {
    worst = std::max(worst, geodesic_equation_residual(g0, g1, y, 0.5, kGeodesicStep));
    const double r1 = geodesic_equation_residual(g0, g1, y, 0.5, 1e-2);
    const double r2 = geodesic_equation_residual(g0, g1, y, 0.5, 5e-3);
    const double r3 = geodesic_equation_residual(g0, g1, y, 0.5, 2.5e-3);
    min_order = std::min({min_order, std::log2(r1 / r2), std::log2(r2 / r3)});
  }
  const Eigen::Vector3d ones(1, 1, 1);
  const double inv = reeb_invariance_residual(g, ones);
  const double var = reeb_invariance_residual(Perturbation::square(0), ones);
  o.check(worst < kGeodesicTol, "residual");
  o.check(min_order >= kGeodesicMinOrder, "order");
  o.check(inv < kReebInvariantTol, "invariance residual");
  o.check(var >= kReebVariantFloor, "y1^2 residual");
  o.detail << " residual(h=1e-3) = " << worst << ", order >= " << min_order << ", reeb residual " << inv
           << " (g = y1^2: " << var << ")";
}

// 10 ------------------------------------------------------------------------
void invariance_suite(Outcome& o) {
  auto rng = testing::make_rng(1001);
  std::vector<NamedDiagram> diagrams = test_corpus();
  diagrams.push_back({"not-good", validate_diagram({make_int_vector({1, 0, 0}), make_int_vector({1, 2, 0}),
                                                    make_int_vector({1, 0, 1})})});
  diagrams.push_back({"no-gamma", validate_diagram({make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}),
                                                    make_int_vector({0, 0, 1}), make_int_vector({-1, 1, 2})})});
  int transforms = 0, area_transforms = 0;
  for (const auto& nd : diagrams) {
    const bool good = is_good(nd.diagram).good;
    const auto pi1 = fundamental_group(nd.diagram);
    const auto cy = compute_gamma(nd.diagram);
    for (int i = 0; i < kInvarianceSamples; ++i) {
      auto t = change_lattice_basis(nd.diagram, testing::random_sl(rng, 3));
      ++transforms;
      o.check(is_good(t).good == good, nd.name + " goodness");
      o.check(fundamental_group(t) == pi1, nd.name + " pi1");
      o.check(compute_gamma(t).has_value() == cy.has_value(), nd.name + " gamma existence");
    }
    if (!cy || cy->height != 1) continue;
    const ToricDiagram h1 = normalize_height(nd.diagram, *cy).diagram;
    const Integer area = area_invariant(h1);
    for (int i = 0; i < kInvarianceSamples; ++i) {
      IntMatrix b = testing::random_height1_stabilizer(rng);
      auto t = change_lattice_basis(h1, unimodular_inverse(b).transpose());
      ++area_transforms;
      o.check(is_height1_form(t) && area_invariant(t) == area, nd.name + " area");
    }
  }
  o.detail << " " << transforms << " SL(3,Z) transforms, " << area_transforms << " height-1 stabilizer transforms";
}

}  // namespace
}  // namespace sasakit

int main() {
  using namespace sasakit;
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Lens pipeline", lens_pipeline},
      {2, "Non-CY obstruction", obstruction},
      {3, "Z5 diagram", z5_diagram},
      {4, "Main4 families", main4_suite},
      {5, "Goodness criterion equivalence", goodness_equivalence},
      {6, "SNF oracle", snf_oracle},
      {7, "Reeb minimization", reeb_minimization},
      {8, "Potential identities", potential_identities},
      {9, "Geodesic residual", geodesic_residual},
      {10, "Invariance suite", invariance_suite},
  };
  std::cout << "seed " << testing::test_seed() << '\n';
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ":" << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
