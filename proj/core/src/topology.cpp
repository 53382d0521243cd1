#include "sasakit/topology.hpp"

#include "sasakit/errors.hpp"
#include "sasakit/lattice.hpp"

namespace sasakit {

std::vector<Integer> fundamental_group(const ToricDiagram& diagram) {
  auto info = cokernel(diagram.normal_matrix());
  // Validated diagrams span, so the quotient is finite.
  if (info.free_rank != 0) throw Error("fundamental_group: normals do not span (internal inconsistency)");
  return info.torsion;
}

BettiNumber second_betti(const ToricDiagram& diagram) {
  if (diagram.rank() != 3) throw PreconditionError("second_betti: rank 3 required");
  BettiNumber b{static_cast<long>(diagram.size()) - 3, std::nullopt};
  if (!fundamental_group(diagram).empty())
    b.warning = "pi_1 is nontrivial; b2 = d - 3 is only asserted for simply connected toric Sasaki 5-manifolds";
  return b;
}

std::vector<LatticePoint2> height1_polygon(const ToricDiagram& diagram) {
  if (!is_height1_form(diagram)) throw PreconditionError("height1_polygon: normals must all have the form (1, p, q)");
  std::vector<LatticePoint2> loop;
  for (auto i : diagram.cyclic_order()) loop.push_back({diagram.normal(i)[1], diagram.normal(i)[2]});
  return loop;
}

Integer polygon_area_times_2(std::span<const LatticePoint2> loop) {
  Integer s = 0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const auto& a = loop[k];
    const auto& b = loop[(k + 1) % loop.size()];
    s += a.p * b.q - a.q * b.p;
  }
  return abs(s);
}

Integer area_invariant(const ToricDiagram& diagram) {
  auto loop = height1_polygon(diagram);
  if (!is_strictly_convex(loop)) throw PreconditionError("area_invariant: polygon is not convex");
  return polygon_area_times_2(loop);
}

namespace {

Integer turn(const LatticePoint2& a, const LatticePoint2& b, const LatticePoint2& c) {
  return (b.p - a.p) * (c.q - a.q) - (b.q - a.q) * (c.p - a.p);
}

}  // namespace

bool is_strictly_convex(std::span<const LatticePoint2> loop) {
  const std::size_t n = loop.size();
  if (n < 3) return false;
  int sign = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Integer t = turn(loop[k], loop[(k + 1) % n], loop[(k + 2) % n]);
    if (t == 0) return false;
    int s = t > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  // Rules out loops that wind more than once.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || j == (k + 1) % n) continue;
      Integer t = turn(loop[k], loop[(k + 1) % n], loop[j]);
      if ((sign > 0 && t <= 0) || (sign < 0 && t >= 0)) return false;
    }
  return true;
}

bool convexity_and_span_check(std::span<const LatticePoint2> loop) {
  if (loop.size() < 3) throw PreconditionError("convexity_and_span_check: at least 3 points required");
  if (!is_strictly_convex(loop)) return false;
  std::vector<IntVector> diffs;
  for (std::size_t k = 1; k < loop.size(); ++k) diffs.push_back({loop[k].p - loop[0].p, loop[k].q - loop[0].q});
  auto info = cokernel(IntMatrix::from_columns(diffs));
  return info.free_rank == 0 && info.torsion.empty();
}

std::string identify_5d(const ToricDiagram& diagram) {
  if (diagram.rank() != 3) return "unknown";
  auto pi1 = fundamental_group(diagram);
  if (pi1.empty()) {
    long b2 = static_cast<long>(diagram.size()) - 3;
    if (b2 == 0) return "S^5";
    return "S^5 # " + std::to_string(b2) + "(S^2 x S^3)";
  }
  if (pi1.size() == 1) return "lens-type: pi1 = Z_" + pi1.front().str();
  return "unknown";
}

TopologyReport topology_report(const ToricDiagram& diagram) {
  TopologyReport r;
  r.pi1_invariant_factors = fundamental_group(diagram);
  if (diagram.rank() == 3) r.b2 = static_cast<long>(diagram.size()) - 3;
  else r.b2 = static_cast<long>(diagram.size()) - static_cast<long>(diagram.rank());
  if (is_height1_form(diagram)) r.area_times_2 = area_invariant(diagram);
  r.identification = identify_5d(diagram);
  return r;
}

}  // namespace sasakit
