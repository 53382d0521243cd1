#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sasakit/cone.hpp"
#include "sasakit/topology.hpp"
#include "sasakit/types.hpp"

namespace sasakit {

enum class FamilyId { kLens, kNonCy, kZ5Lens, kMain4Even, kMain4Odd };

struct FamilySpec {
  FamilyId id = FamilyId::kLens;
  std::int64_t l = 0;  // lens, non_cy
  std::int64_t r = 0;  // main4_*
  std::int64_t s = 0;  // main4_*
};

inline constexpr std::int64_t kMaxMain4R = 16;

const char* family_name(FamilyId id);
// Accepts "lens", "non-cy", "z5-lens", "main4-even", "main4-odd" (dashes or underscores).
FamilyId parse_family_id(std::string_view name);

/// (1,0,0), (0,1,0), (1,1,l); l >= 1.
ToricDiagram lens(std::int64_t l);
/// The lens normals plus (1,1,l-1); l >= 2. Good, but without a CY covector.
ToricDiagram non_cy(std::int64_t l);
/// (1,0,0), (1,2,1), (1,3,4).
ToricDiagram z5_lens();

/// Vertex loop with 2r + 3 points: (i, i(i+1)/2) for i = 0..r, the s-shifted
/// descending run from (r+1, (r+1)(r+2)/2 + s), closing at (0, 1).
std::vector<LatticePoint2> main4_even_vertices(std::int64_t r, std::int64_t s);
/// Vertex loop with 2r + 2 points, symmetric under p -> -p up to the closing
/// vertex (-1, 0), densely indexed.
std::vector<LatticePoint2> main4_odd_vertices(std::int64_t r, std::int64_t s);

/// (1, p, q) for each vertex.
std::vector<IntVector> height1_normals(const std::vector<LatticePoint2>& vertices);

/// Validated diagrams from the vertex loops. Throw DiagramError when the loop
/// degenerates (a collinear vertex yields a redundant normal).
ToricDiagram main4_even(std::int64_t r, std::int64_t s);
ToricDiagram main4_odd(std::int64_t r, std::int64_t s);

/// Raw normals of any family (no validation beyond parameter ranges).
std::vector<IntVector> family_normals(const FamilySpec& spec);
ToricDiagram generate(const FamilySpec& spec);

struct NamedDiagram {
  std::string name;
  ToricDiagram diagram;
};

/// Fixed set of good rank-3 diagrams used by the property suites.
std::vector<NamedDiagram> test_corpus();

}  // namespace sasakit
