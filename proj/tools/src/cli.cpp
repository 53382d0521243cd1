#include "sasakit_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "sasakit/errors.hpp"
#include "sasakit/families.hpp"
#include "sasakit/io.hpp"
#include "sasakit/potentials.hpp"

namespace sasakit::cli {

namespace {

constexpr const char* kNoCyMessage = "no toric diagram structure; c₁(D) = 0 fails";

struct AnalyzeOptions {
  std::string path;
  bool cy = false;
  bool topo = false;
  bool reeb = false;
  int grid = 0;
  std::string grid_out;
  std::string volume_rays;
  std::vector<std::string> rays;
  std::string svg;
  bool timing = false;
};

struct FamilyOptions {
  std::string id;
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;
};

struct GeodesicOptions {
  std::string path;
  std::string perturbation = "bilinear";
  std::vector<double> y{1.0, 2.0, 1.5};
  double t = 0.5;
  double h = 1e-3;
  double refine_from = 1e-2;
};

// Failure carrying its exit code; the report built so far is still printed.
struct Failure {
  int code;
  std::string kind;
  std::string message;
};

class Timer {
 public:
  void start() { t0_ = std::chrono::steady_clock::now(); }
  double stop_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void emit(std::ostream& out, const ordered_json& report) { out << report.dump(2) << '\n'; }

int finish(std::ostream& out, std::ostream& err, ordered_json& report, const Failure& f) {
  report["error"] = {{"exit_code", f.code}, {"kind", f.kind}, {"message", f.message}};
  emit(out, report);
  err << "error: " << f.message << '\n';
  return f.code;
}

// Loads and validates the diagram, recording the stage in the report.
std::optional<ToricDiagram> load_diagram(const std::string& path, ordered_json& report, std::optional<Failure>& failure) {
  report["input"] = {{"path", path}};
  try {
    auto normals = parse_normals_json(read_file(path));
    report["input"]["normals"] = normals_value(normals);
    auto d = validate_diagram(normals);
    report["validation"] = {{"ok", true}};
    return d;
  } catch (const DiagramError& e) {
    ordered_json v = {{"ok", false}, {"kind", kind_name(e.kind())}};
    if (e.index()) v["normal_index"] = *e.index();
    report["validation"] = v;
    failure = Failure{kInputError, kind_name(e.kind()), e.what()};
  } catch (const InputError& e) {
    failure = Failure{kInputError, "InputError", e.what()};
  }
  return std::nullopt;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  ordered_json report = report_header("check");
  std::optional<Failure> failure;
  auto d = load_diagram(path, report, failure);
  if (!d) return finish(out, err, report, *failure);
  if (d->rank() != 3)
    return finish(out, err, report,
                  {kInputError, "PreconditionError", "check computes faces in rank 3 only; use the library API with an explicit face list"});
  auto verdict = is_good(*d);
  report["goodness"] = goodness_value(*d, verdict);
  if (is_height1_form(*d)) report["goodness"]["height1_criterion"] = is_good_height1_3d(*d);
  if (!verdict.good) return finish(out, err, report, {kNotGood, "NotGood", "diagram is not good: " + verdict.reason});
  emit(out, report);
  return kOk;
}

Eigen::VectorXd parse_ray(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw InputError("bad ray component '" + part + "'");
    }
  }
  if (v.size() != 3) throw InputError("a ray needs three comma-separated components");
  return Eigen::Map<Eigen::VectorXd>(v.data(), 3);
}

// Volume along lines xi* + s d through the minimizer, d projected to the slice.
std::string volume_rays_csv(const ToricDiagram& d, const CalabiYauData& cy, const ReebMinimum& m,
                            const std::vector<Eigen::VectorXd>& directions) {
  const Eigen::VectorXd gamma = to_eigen(cy.gamma);
  std::ostringstream os;
  os << std::setprecision(kFloatDigits);
  os << "ray,s,xi1,xi2,xi3,volume\n";
  for (std::size_t k = 0; k < directions.size(); ++k) {
    Eigen::VectorXd dir = directions[k] - gamma * (gamma.dot(directions[k]) / gamma.squaredNorm());
    if (dir.norm() == 0) continue;
    dir.normalize();
    // Largest step keeping every edge-ray pairing positive, both ways.
    double reach[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const auto& r : edge_rays_3d(d)) {
      Eigen::VectorXd rv = to_eigen(r);
      const double a = rv.dot(m.xi), b = rv.dot(dir);
      if (b < 0) reach[0] = std::min(reach[0], -a / b);
      if (b > 0) reach[1] = std::min(reach[1], a / b);
    }
    const double lo = -0.9 * std::min(reach[1], 10.0), hi = 0.9 * std::min(reach[0], 10.0);
    for (int i = 0; i <= 40; ++i) {
      const double s = lo + (hi - lo) * i / 40.0;
      Eigen::VectorXd xi = m.xi + s * dir;
      os << k << ',' << s << ',' << xi[0] << ',' << xi[1] << ',' << xi[2] << ',' << volume(d, xi) << '\n';
    }
  }
  return os.str();
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  ordered_json report = report_header("analyze");
  ordered_json timing;
  Timer timer;
  std::optional<Failure> failure;
  timer.start();
  auto d = load_diagram(opt.path, report, failure);
  if (!d) return finish(out, err, report, *failure);
  if (d->rank() != 3) return finish(out, err, report, {kInputError, "PreconditionError", "analyze supports rank 3 diagrams"});

  auto verdict = is_good(*d);
  report["goodness"] = goodness_value(*d, verdict);
  timing["validation_and_goodness"] = timer.stop_ms();
  if (!verdict.good) return finish(out, err, report, {kNotGood, "NotGood", "diagram is not good: " + verdict.reason});

  try {
    timer.start();
    const auto cy = compute_gamma(*d);
    std::optional<NormalizedDiagram> normalized;
    if (cy) normalized = normalize_height(*d, *cy);
    if (opt.cy) {
      if (cy)
        report["cy"] = cy_value(*cy, *normalized);
      else
        report["cy"] = {{"present", false}, {"reason", kNoCyMessage}};
      timing["cy"] = timer.stop_ms();
    }

    if (opt.topo) {
      timer.start();
      report["topology"] = topology_value(topology_report(*d), second_betti(*d));
      timing["topology"] = timer.stop_ms();
    }

    if (!opt.svg.empty()) {
      std::vector<LatticePoint2> loop;
      if (is_height1_form(*d))
        loop = height1_polygon(*d);
      else if (normalized)
        for (auto i : normalized->diagram.cyclic_order())
          loop.push_back({normalized->diagram.normal(i)[1], normalized->diagram.normal(i)[2]});
      else
        throw InputError("--emit-svg needs a diagram with a height normal form");
      write_file(opt.svg, polygon_svg(loop));
      report["svg"] = {{"path", opt.svg}, {"vertices", loop.size()}};
    }

    std::optional<ReebMinimum> minimum;
    if (opt.reeb || !opt.volume_rays.empty()) {
      if (!cy) return finish(out, err, report, {kNoCalabiYau, "NoCalabiYau", kNoCyMessage});
      timer.start();
      minimum = minimize_volume(*d, *cy, Optimizer::kNewton);
      auto check = minimize_volume(*d, *cy, Optimizer::kProjectedGradient);
      report["reeb"] = reeb_value(*minimum, check);
      timing["reeb"] = timer.stop_ms();
    }

    if (!opt.volume_rays.empty()) {
      std::vector<Eigen::VectorXd> dirs;
      for (const auto& r : opt.rays) dirs.push_back(parse_ray(r));
      if (dirs.empty()) {
        Eigen::MatrixXd n = slice_tangent_basis(to_eigen(cy->gamma));
        for (Eigen::Index j = 0; j < n.cols(); ++j) dirs.push_back(n.col(j));
      }
      write_file(opt.volume_rays, volume_rays_csv(*d, *cy, *minimum, dirs));
      report["volume_rays"] = {{"path", opt.volume_rays}, {"rays", dirs.size()}};
    }

    if (opt.grid > 0) {
      timer.start();
      auto potential = minimum ? SymplecticPotential::canonical_xi(*d, minimum->xi) : SymplecticPotential::canonical(*d);
      std::string csv = potential_grid_csv(potential, opt.grid);
      ordered_json g = {{"potential", minimum ? "canonical_xi" : "canonical"},
                        {"rows", std::count(csv.begin(), csv.end(), '\n') - 1}};
      if (!opt.grid_out.empty()) {
        write_file(opt.grid_out, csv);
        g["path"] = opt.grid_out;
      } else {
        g["csv"] = csv;
      }
      report["potential_grid"] = g;
      timing["potential_grid"] = timer.stop_ms();
    }
  } catch (const NumericError& e) {
    return finish(out, err, report, {kNumericalFailure, kind_name(e.kind()), e.what()});
  } catch (const InputError& e) {
    return finish(out, err, report, {kInputError, "InputError", e.what()});
  } catch (const PreconditionError& e) {
    return finish(out, err, report, {kInputError, "PreconditionError", e.what()});
  }

  if (opt.timing) {
    ordered_json t;
    for (auto& [k, v] : timing.items()) t[k] = float_value(v.get<double>());
    report["timing_ms"] = t;
  }
  emit(out, report);
  return kOk;
}

int cmd_family(const FamilyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    FamilySpec spec{parse_family_id(opt.id), opt.l, opt.r, opt.s};
    auto normals = family_normals(spec);
    // Generator output is emitted as is; a degenerate instance is flagged on stderr.
    try {
      validate_diagram(normals);
    } catch (const DiagramError& e) {
      err << "warning: generated normals fail validation: " << e.what() << '\n';
    }
    out << normals_to_json(normals) << '\n';
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_geodesic(const GeodesicOptions& opt, std::ostream& out, std::ostream& err) {
  ordered_json report = report_header("geodesic-test");
  try {
    ToricDiagram d = opt.path.empty() ? validate_diagram({make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}),
                                                          make_int_vector({0, 0, 1})})
                                      : parse_diagram_json(read_file(opt.path));
    if (d.rank() != 3 || opt.y.size() != 3) throw InputError("geodesic-test works on rank 3 diagrams and 3-vectors");
    Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(opt.y.data(), 3);
    std::optional<Perturbation> g;
    if (opt.perturbation == "bilinear") g = Perturbation::bilinear_over_sum(0, 1);
    else if (opt.perturbation == "linear") g = Perturbation::linear(Eigen::Vector3d(0.3, -0.2, 0.1));
    else if (opt.perturbation == "square") g = Perturbation::square(0);
    else throw InputError("unknown perturbation '" + opt.perturbation + "' (bilinear, linear, square)");

    auto g0 = SymplecticPotential::canonical(d);
    auto g1 = SymplecticPotential::shifted(g0, *g);
    report["input"] = {{"normals", normals_value(d.normals())},
                       {"perturbation", g->name()},
                       {"y", vector_value(y)},
                       {"t", float_value(opt.t)},
                       {"h", float_value(opt.h)}};
    report["reeb_invariance_residual"] = float_value(reeb_invariance_residual(*g, y));
    report["residual"] = float_value(geodesic_equation_residual(g0, g1, y, opt.t, opt.h));
    ordered_json study = ordered_json::array();
    double previous = 0;
    for (int k = 0; k < 3; ++k) {
      const double h = opt.refine_from / (1 << k);
      const double r = geodesic_equation_residual(g0, g1, y, opt.t, h);
      ordered_json row = {{"h", float_value(h)}, {"residual", float_value(r)}};
      if (k > 0 && r > 0 && previous > 0) row["order"] = float_value(std::log2(previous / r));
      study.push_back(row);
      previous = r;
    }
    report["refinement"] = study;
  } catch (const NumericError& e) {
    return finish(out, err, report, {kNumericalFailure, kind_name(e.kind()), e.what()});
  } catch (const DiagramError& e) {
    return finish(out, err, report, {kInputError, kind_name(e.kind()), e.what()});
  } catch (const Error& e) {
    return finish(out, err, report, {kInputError, "InputError", e.what()});
  }
  emit(out, report);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric Sasaki geometry toolkit: validation, goodness, CY data, topology, Reeb volume"};
  app.name("sasakit");
  app.require_subcommand(1);
  app.set_version_flag("--version", SASAKIT_VERSION);

  std::string check_path;
  auto* check = app.add_subcommand("check", "Validate a diagram and decide goodness");
  check->add_option("path", check_path, "Diagram JSON file")->required();

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Run analysis stages on a good diagram");
  analyze->add_option("path", an.path, "Diagram JSON file")->required();
  analyze->add_flag("--cy", an.cy, "Calabi-Yau covector, height and normal form");
  analyze->add_flag("--topo", an.topo, "pi_1, b_2, area invariant and label");
  analyze->add_flag("--reeb", an.reeb, "Volume-minimizing Reeb vector");
  analyze->add_option("--potential-grid", an.grid, "Sample the potential on N radial rings")->check(CLI::NonNegativeNumber);
  analyze->add_option("--grid-out", an.grid_out, "Write the grid CSV here instead of embedding it");
  analyze->add_option("--volume-rays", an.volume_rays, "Write volume along rays through the minimizer as CSV");
  analyze->add_option("--ray", an.rays, "Ray direction x,y,z for --volume-rays (repeatable)");
  analyze->add_option("--emit-svg", an.svg, "Write the (p,q) polygon as SVG");
  analyze->add_flag("--timing", an.timing, "Include stage timings (output is then not byte-stable)");

  FamilyOptions fam;
  auto* family = app.add_subcommand("family", "Emit a generated diagram as JSON");
  family->add_option("id", fam.id, "lens | non-cy | z5-lens | main4-even | main4-odd")->required();
  family->add_option("--l", fam.l, "Parameter l (lens, non-cy)");
  family->add_option("--r", fam.r, "Parameter r (main4-*)");
  family->add_option("--s", fam.s, "Parameter s (main4-*)");

  GeodesicOptions geo;
  auto* geodesic = app.add_subcommand("geodesic-test", "Residual suite for G1 = G0 + g with G0 canonical");
  geodesic->add_option("--diagram", geo.path, "Diagram JSON file (default: the octant)");
  geodesic->add_option("--perturbation", geo.perturbation, "bilinear (y1 y2 / sum y) | linear | square (y1^2)");
  geodesic->add_option("--y", geo.y, "Interior point")->expected(3)->delimiter(',');
  geodesic->add_option("--t", geo.t, "Segment parameter in (0, 1)");
  geodesic->add_option("--step", geo.h, "Stencil step h for the headline residual");
  geodesic->add_option("--refine-from", geo.refine_from, "Coarsest step of the h, h/2, h/4 refinement study");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (check->parsed()) return cmd_check(check_path, out, err);
  if (analyze->parsed()) return cmd_analyze(an, out, err);
  if (family->parsed()) return cmd_family(fam, out, err);
  return cmd_geodesic(geo, out, err);
}

}  // namespace sasakit::cli
