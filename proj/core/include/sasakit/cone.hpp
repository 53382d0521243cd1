#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sasakit/types.hpp"

namespace sasakit {

/// Facet normals lambda_1..lambda_d of the rational polyhedral cone
/// C = { y : <y, lambda_i> >= 0 for all i }.
///
/// Only obtainable through validate_diagram, so every instance has primitive
/// normals, a minimal normal set, nonempty interior and a strongly convex cone.
class ToricDiagram {
 public:
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return normals_.size(); }
  const std::vector<IntVector>& normals() const { return normals_; }
  const IntVector& normal(std::size_t i) const { return normals_.at(i); }

  /// Rank 3 only (empty otherwise): normal indices in cyclic order, oriented so
  /// det(lambda_{o[k]}, lambda_{o[k+1]}, sum lambda) > 0, starting at index 0.
  const std::vector<std::size_t>& cyclic_order() const { return cyclic_order_; }

  /// The rank x d matrix whose columns are the normals.
  IntMatrix normal_matrix() const { return IntMatrix::from_columns(normals_); }

  friend bool operator==(const ToricDiagram& a, const ToricDiagram& b) { return a.normals_ == b.normals_; }

 private:
  friend ToricDiagram validate_diagram(std::vector<IntVector> normals);

  std::size_t rank_ = 0;
  std::vector<IntVector> normals_;
  std::vector<std::size_t> cyclic_order_;
};

/// Checks, in order: shape, primitivity (NonPrimitiveNormal), nonempty
/// interior (EmptyInterior), strong convexity (NotStronglyConvex) and
/// minimality (RedundantNormal), all in exact arithmetic. Throws DiagramError.
ToricDiagram validate_diagram(std::vector<IntVector> normals);

/// Index set of normals cutting out a face, plus a point in its relative
/// interior when the face is nonempty.
struct FaceDescriptor {
  std::vector<std::size_t> indices;
  std::optional<IntVector> witness;

  bool nonempty() const { return witness.has_value(); }
};

/// Proper nonempty faces of a rank-3 cone: the d facets in cyclic order, then
/// the d edges, edge k being cut out by {o[k], o[k+1]}. Edge witnesses are the
/// primitive ray generators.
std::vector<FaceDescriptor> enumerate_faces_3d(const ToricDiagram& diagram);

/// Primitive generators of the extreme rays of a rank-3 cone; ray k lies on
/// facets o[k] and o[k+1].
std::vector<IntVector> edge_rays_3d(const ToricDiagram& diagram);

struct GoodnessVerdict {
  bool good = false;
  std::optional<FaceDescriptor> failing_face;
  std::string reason;
};

/// Goodness in rank 3, checked on every facet and edge.
GoodnessVerdict is_good(const ToricDiagram& diagram);

/// Goodness for any rank, with the caller supplying the nonempty faces as
/// index sets (the face lattice is not computed here).
GoodnessVerdict is_good(const ToricDiagram& diagram, const std::vector<std::vector<std::size_t>>& faces);

/// Edge criterion for diagrams whose normals are all (1, p_i, q_i): every
/// cyclically consecutive difference (dp, dq) has |dp| == 1 or |dq| == 1, or
/// dp and dq are coprime and both nonzero. Throws PreconditionError when the
/// diagram is not in that form.
bool is_good_height1_3d(const ToricDiagram& diagram);

/// True iff all normals have first component 1 (rank 3).
bool is_height1_form(const ToricDiagram& diagram);

/// xi lies in the open dual cone { xi : <v, xi> > 0 for all v in C \ {0} }.
/// Rank 3 pairs xi against the edge rays; other ranks decide it by exact LP.
bool reeb_cone_contains(const ToricDiagram& diagram, const RatVector& xi);
bool reeb_cone_contains(const ToricDiagram& diagram, const std::vector<double>& xi);

/// Changes the lattice basis by A in SL(n, Z): normals map to (A^T)^{-1} lambda.
ToricDiagram change_lattice_basis(const ToricDiagram& diagram, const IntMatrix& a);

}  // namespace sasakit
