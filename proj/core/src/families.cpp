#include "sasakit/families.hpp"

#include <algorithm>

#include "sasakit/errors.hpp"

namespace sasakit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void check_main4(std::int64_t r, std::int64_t s) {
  require(r >= 1 && r <= kMaxMain4R, "main4: r must lie in [1, " + std::to_string(kMaxMain4R) + "]");
  require(s >= 0, "main4: s must be nonnegative");
}

Integer triangular(std::int64_t j) { return Integer(j) * (j + 1) / 2; }

}  // namespace

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::kLens: return "lens";
    case FamilyId::kNonCy: return "non-cy";
    case FamilyId::kZ5Lens: return "z5-lens";
    case FamilyId::kMain4Even: return "main4-even";
    case FamilyId::kMain4Odd: return "main4-odd";
  }
  return "?";
}

FamilyId parse_family_id(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '_', '-');
  for (auto id : {FamilyId::kLens, FamilyId::kNonCy, FamilyId::kZ5Lens, FamilyId::kMain4Even, FamilyId::kMain4Odd})
    if (n == family_name(id)) return id;
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::vector<IntVector> family_normals(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::kLens:
      require(spec.l >= 1, "lens: l must be at least 1");
      return {make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}), IntVector{1, 1, Integer(spec.l)}};
    case FamilyId::kNonCy:
      require(spec.l >= 2, "non_cy: l must be at least 2");
      return {make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}), IntVector{1, 1, Integer(spec.l)},
              IntVector{1, 1, Integer(spec.l - 1)}};
    case FamilyId::kZ5Lens:
      return {make_int_vector({1, 0, 0}), make_int_vector({1, 2, 1}), make_int_vector({1, 3, 4})};
    case FamilyId::kMain4Even: return height1_normals(main4_even_vertices(spec.r, spec.s));
    case FamilyId::kMain4Odd: return height1_normals(main4_odd_vertices(spec.r, spec.s));
  }
  throw PreconditionError("unknown family id");
}

ToricDiagram generate(const FamilySpec& spec) { return validate_diagram(family_normals(spec)); }

ToricDiagram lens(std::int64_t l) { return generate({FamilyId::kLens, l, 0, 0}); }
ToricDiagram non_cy(std::int64_t l) { return generate({FamilyId::kNonCy, l, 0, 0}); }
ToricDiagram z5_lens() { return generate({FamilyId::kZ5Lens, 0, 0, 0}); }
ToricDiagram main4_even(std::int64_t r, std::int64_t s) { return generate({FamilyId::kMain4Even, 0, r, s}); }
ToricDiagram main4_odd(std::int64_t r, std::int64_t s) { return generate({FamilyId::kMain4Odd, 0, r, s}); }

std::vector<LatticePoint2> main4_even_vertices(std::int64_t r, std::int64_t s) {
  check_main4(r, s);
  std::vector<LatticePoint2> v;
  for (std::int64_t i = 0; i <= r; ++i) v.push_back({i, triangular(i)});
  const Integer top = triangular(r + 1) + s;
  v.push_back({r + 1, top});
  for (std::int64_t t = 1; t <= r; ++t) v.push_back({r + 1 - t, top - triangular(t)});
  v.push_back({0, 1});
  return v;
}

std::vector<LatticePoint2> main4_odd_vertices(std::int64_t r, std::int64_t s) {
  check_main4(r, s);
  const Integer top = triangular(r) + s;
  std::vector<LatticePoint2> v;
  for (std::int64_t j = 0; j < r; ++j) v.push_back({j, triangular(j)});
  v.push_back({r, top});
  v.push_back({0, top + 1});
  // Left run p = -r, ..., -2 (empty for r = 1); its first vertex carries the shift.
  if (r >= 2) v.push_back({-r, top});
  for (std::int64_t j = r - 1; j >= 2; --j) v.push_back({-j, triangular(j)});
  v.push_back({-1, 0});
  return v;
}

std::vector<IntVector> height1_normals(const std::vector<LatticePoint2>& vertices) {
  std::vector<IntVector> normals;
  normals.reserve(vertices.size());
  for (const auto& pt : vertices) normals.push_back(IntVector{1, pt.p, pt.q});
  return normals;
}

std::vector<NamedDiagram> test_corpus() {
  std::vector<NamedDiagram> c;
  c.push_back({"octant", validate_diagram({make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}),
                                           make_int_vector({0, 0, 1})})});
  for (std::int64_t l : {1, 2, 3, 5}) c.push_back({"lens-" + std::to_string(l), lens(l)});
  c.push_back({"z5-lens", z5_lens()});
  c.push_back({"main4-even-1-1", main4_even(1, 1)});
  c.push_back({"main4-even-2-3", main4_even(2, 3)});
  c.push_back({"main4-odd-1-0", main4_odd(1, 0)});
  c.push_back({"main4-odd-2-1", main4_odd(2, 1)});
  c.push_back({"main4-odd-3-2", main4_odd(3, 2)});
  return c;
}

}  // namespace sasakit
