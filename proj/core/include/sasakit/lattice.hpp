#pragma once

#include <optional>
#include <vector>

#include "sasakit/types.hpp"

namespace sasakit {

/// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ... , all >= 0.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  // Diagonal entries of D, min(rows, cols) of them, zeros included.
  std::vector<Integer> diagonal() const;
  // Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Smith normal form by elementary row and column operations. The pivot is the
/// entry of smallest absolute value, ties broken by lowest row then lowest
/// column, so the output is deterministic.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Torsion and free part of Z^rows / (column span of m).
struct CokernelInfo {
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility chain
  std::size_t free_rank = 0;
};
CokernelInfo cokernel(const IntMatrix& m);

// Throws PreconditionError for the zero vector.
bool is_primitive(const IntVector& v);

/// A in SL(n, Z) with A * v == (-1, 0, ..., 0). Requires v primitive and, for
/// n == 1, v == (-1).
IntMatrix complete_to_unimodular(const IntVector& v);

/// True iff (real span of vectors) ∩ Z^n equals their Z-span and the vectors
/// are linearly independent.
bool sublattice_saturation_equal(const std::vector<IntVector>& vectors);

Integer determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Exact Gaussian elimination over Q. Returns the unique solution of
/// m * x == rhs when it exists and is unique, std::nullopt when the system is
/// inconsistent. Throws PreconditionError when consistent but underdetermined.
std::optional<RatVector> solve_exact(const std::vector<RatVector>& rows, const RatVector& rhs);

/// Basis of the rational null space {x : m * x == 0}.
std::vector<RatVector> null_space(const IntMatrix& m);

Integer lcm_of_denominators(const RatVector& v);

}  // namespace sasakit
