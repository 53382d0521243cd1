#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sasakit/cone.hpp"
#include "sasakit/types.hpp"

namespace sasakit {

struct LatticePoint2 {
  Integer p;
  Integer q;
  friend bool operator==(const LatticePoint2&, const LatticePoint2&) = default;
};

struct TopologyReport {
  std::vector<Integer> pi1_invariant_factors;  // empty: simply connected
  long b2 = 0;
  std::optional<Integer> area_times_2;  // height-1 rank-3 diagrams only
  std::string identification;
};

/// Invariant factors (> 1) of Z^n / L, L the lattice generated by the normals.
std::vector<Integer> fundamental_group(const ToricDiagram& diagram);

struct BettiNumber {
  long b2 = 0;
  std::optional<std::string> warning;  // set when pi_1 is nontrivial
};

/// b_2 = d - 3 for a rank-3 diagram. The count is only claimed for simply
/// connected manifolds; otherwise the value is still returned with a warning.
BettiNumber second_betti(const ToricDiagram& diagram);

/// The (p, q) loop of a height-1 diagram in cyclic order.
std::vector<LatticePoint2> height1_polygon(const ToricDiagram& diagram);

/// Twice the shoelace area of the (p, q) polygon of a height-1 diagram.
Integer area_invariant(const ToricDiagram& diagram);

/// Twice the (unsigned) shoelace area of a vertex loop.
Integer polygon_area_times_2(std::span<const LatticePoint2> loop);

/// Strictly convex in the given cyclic order (no three consecutive vertices
/// collinear, every vertex strictly on the inner side of every edge).
bool is_strictly_convex(std::span<const LatticePoint2> loop);

/// Strict convexity plus: the differences of the vertices generate Z^2.
/// Throws PreconditionError for fewer than 3 points.
bool convexity_and_span_check(std::span<const LatticePoint2> loop);

/// Label for the 5-manifold. "S^5", "S^5 # k(S^2 x S^3)" for simply connected
/// diagrams (this relies on the classification of simply connected spin
/// 5-manifolds with T^3 action, assumed to apply to toric Sasaki manifolds),
/// "lens-type: pi1 = Z_n" for cyclic pi_1, "unknown" otherwise.
std::string identify_5d(const ToricDiagram& diagram);

TopologyReport topology_report(const ToricDiagram& diagram);

}  // namespace sasakit
