#pragma once

#include <optional>
#include <vector>

#include "sasakit/cone.hpp"
#include "sasakit/types.hpp"

namespace sasakit {

/// Covector gamma with <gamma, lambda_i> == -1 for every normal, and the
/// height: the least positive integer l with l * gamma integral (and then
/// automatically primitive).
struct CalabiYauData {
  RatVector gamma;
  Integer height;
  std::optional<IntMatrix> normalizer;  // A with A * (l gamma) == (-1, 0, ..., 0)

  // l * gamma as an integer vector.
  IntVector scaled_gamma() const;
};

/// Solves <gamma, lambda_i> == -1 exactly. std::nullopt when the system is
/// inconsistent, which is the obstruction to a toric diagram structure.
std::optional<CalabiYauData> compute_gamma(const ToricDiagram& diagram);
/// Same linear system on an unvalidated list of normals of full rank.
std::optional<CalabiYauData> compute_gamma(const std::vector<IntVector>& normals);

struct NormalizedDiagram {
  IntMatrix A;
  ToricDiagram diagram;  // normals (A^T)^{-1} lambda_i, first components == l
  CalabiYauData cy;      // gamma replaced by A gamma == (-1/l, 0, ..., 0)
};

/// Brings the diagram to height-l normal form with an element of SL(n, Z).
NormalizedDiagram normalize_height(const ToricDiagram& diagram, const CalabiYauData& cy);

/// True iff A is in SL(n, Z), A * gamma == (-1/l, 0, ..., 0) and every
/// transformed normal has first component l.
bool is_height_normalizer(const ToricDiagram& diagram, const CalabiYauData& cy, const IntMatrix& a);

/// Lattice data of K = { [a] in T^d : sum a_i lambda_i in Z^n }.
struct KernelLattice {
  std::vector<RatVector> basis;          // basis of the Lie algebra ker(beta_R)
  std::vector<Integer> component_group;  // invariant factors > 1 of K / K_0
  bool row_sum_times_height_integral = false;
};

/// Requires normals already in height-l normal form (first components == l).
KernelLattice kernel_lattice(const ToricDiagram& diagram, const CalabiYauData& cy);

}  // namespace sasakit
