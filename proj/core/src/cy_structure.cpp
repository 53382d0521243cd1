#include "sasakit/cy_structure.hpp"

#include "sasakit/errors.hpp"
#include "sasakit/lattice.hpp"

namespace sasakit {

IntVector CalabiYauData::scaled_gamma() const {
  IntVector v;
  v.reserve(gamma.size());
  for (const auto& g : gamma) {
    Rational s = g * height;
    if (denominator(s) != 1) throw Error("CalabiYauData: height * gamma is not integral");
    v.push_back(numerator(s));
  }
  return v;
}

std::optional<CalabiYauData> compute_gamma(const ToricDiagram& diagram) { return compute_gamma(diagram.normals()); }

std::optional<CalabiYauData> compute_gamma(const std::vector<IntVector>& normals) {
  std::vector<RatVector> rows;
  rows.reserve(normals.size());
  for (const auto& l : normals) rows.push_back(to_rational(l));
  auto gamma = solve_exact(rows, RatVector(normals.size(), Rational(-1)));
  if (!gamma) return std::nullopt;

  CalabiYauData cy;
  cy.height = lcm_of_denominators(*gamma);
  cy.gamma = std::move(*gamma);
  if (!is_primitive(cy.scaled_gamma())) throw Error("compute_gamma: height * gamma is not primitive");
  return cy;
}

bool is_height_normalizer(const ToricDiagram& diagram, const CalabiYauData& cy, const IntMatrix& a) {
  const std::size_t n = diagram.rank();
  if (a.rows() != n || a.cols() != n || determinant(a) != 1) return false;
  RatVector image = a * cy.gamma;
  if (image[0] != Rational(-1) / cy.height) return false;
  for (std::size_t i = 1; i < n; ++i)
    if (image[i] != 0) return false;
  IntMatrix b = unimodular_inverse(a).transpose();
  for (const auto& l : diagram.normals())
    if ((b * l)[0] != cy.height) return false;
  return true;
}

NormalizedDiagram normalize_height(const ToricDiagram& diagram, const CalabiYauData& cy) {
  IntMatrix a = complete_to_unimodular(cy.scaled_gamma());
  ToricDiagram transformed = change_lattice_basis(diagram, a);
  for (const auto& l : transformed.normals())
    if (l[0] != cy.height) throw Error("normalize_height: transformed normal " + to_string(l) + " has wrong height");

  CalabiYauData normalized;
  normalized.gamma = a * cy.gamma;
  normalized.height = cy.height;
  normalized.normalizer = a;
  return {std::move(a), std::move(transformed), std::move(normalized)};
}

KernelLattice kernel_lattice(const ToricDiagram& diagram, const CalabiYauData& cy) {
  for (const auto& l : diagram.normals())
    if (l[0] != cy.height)
      throw PreconditionError("kernel_lattice: normals must be in height-l normal form (call normalize_height)");

  const IntMatrix lambda = diagram.normal_matrix();
  KernelLattice k;
  k.basis = null_space(lambda);

  // With U * Lambda * V == D, the preimage { a : Lambda a in Z^n } is spanned
  // by Z^d, the columns V e_i / d_i (d_i != 0) and the kernel directions.
  auto snf = smith_normal_form(lambda);
  const auto diag = snf.diagonal();
  for (const auto& d : diag)
    if (d > 1) k.component_group.push_back(d);

  bool integral = true;
  for (const auto& b : k.basis) {
    Rational s = 0;
    for (const auto& x : b) s += x;
    if (s * cy.height != 0) integral = false;
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < snf.V.rows(); ++r) s += Rational(snf.V(r, i), diag[i]);
    if (denominator(Rational(s * cy.height)) != 1) integral = false;
  }
  k.row_sum_times_height_integral = integral;
  return k;
}

}  // namespace sasakit
