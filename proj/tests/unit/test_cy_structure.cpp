#include <gtest/gtest.h>

#include "sasakit/cy_structure.hpp"
#include "sasakit/errors.hpp"
#include "sasakit/families.hpp"
#include "sasakit/lattice.hpp"
#include "support/random.hpp"

namespace sasakit {
namespace {

TEST(Gamma, LensFamily) {
  for (long l = 1; l <= 10; ++l) {
    auto cy = compute_gamma(lens(l));
    ASSERT_TRUE(cy);
    EXPECT_EQ(cy->gamma, (RatVector{-1, -1, Rational(1, l)}));
    EXPECT_EQ(cy->height, l);
  }
}

TEST(Gamma, HeightIsMinimalAndScaledGammaPrimitive) {
  for (const auto& nd : test_corpus()) {
    auto cy = compute_gamma(nd.diagram);
    ASSERT_TRUE(cy) << nd.name;
    EXPECT_TRUE(is_primitive(cy->scaled_gamma()));
    for (Integer k = 1; k < cy->height; ++k) {
      bool integral = true;
      for (const auto& g : cy->gamma) integral = integral && denominator(Rational(g * k)) == 1;
      EXPECT_FALSE(integral);
    }
    for (const auto& l : nd.diagram.normals()) EXPECT_EQ(dot(cy->gamma, l), -1);
  }
}

TEST(Gamma, AbsentForRawNonCyNormals) {
  // The raw four normals admit no gamma even though the fourth is redundant.
  for (long l = 2; l <= 6; ++l)
    EXPECT_FALSE(compute_gamma(family_normals({FamilyId::kNonCy, l, 0, 0})));
}

TEST(Gamma, AbsentForGoodNonGorensteinCone) {
  auto d = validate_diagram({make_int_vector({1, 0, 0}), make_int_vector({0, 1, 0}), make_int_vector({0, 0, 1}),
                             make_int_vector({-1, 1, 2})});
  EXPECT_TRUE(is_good(d).good);
  EXPECT_FALSE(compute_gamma(d));
}

TEST(Normalize, ReferenceMatrixIsANormalizer) {
  for (long l = 1; l <= 10; ++l) {
    auto d = lens(l);
    auto cy = *compute_gamma(d);
    IntMatrix a{{0, 0, -1}, {-1, 1, 0}, {1, 0, l}};
    EXPECT_TRUE(is_height_normalizer(d, cy, a));
    auto t = change_lattice_basis(d, a);
    EXPECT_EQ(t.normal(0), IntVector({Integer(l), 0, 1}));
    EXPECT_EQ(t.normal(1), IntVector({Integer(l), 1, 1}));
    EXPECT_EQ(t.normal(2), IntVector({Integer(l), 1, 2}));
  }
}

TEST(Normalize, ComputedNormalizerWorksOnCorpus) {
  for (const auto& nd : test_corpus()) {
    auto cy = *compute_gamma(nd.diagram);
    auto n = normalize_height(nd.diagram, cy);
    EXPECT_EQ(determinant(n.A), 1);
    EXPECT_TRUE(is_height_normalizer(nd.diagram, cy, n.A)) << nd.name;
    for (const auto& l : n.diagram.normals()) EXPECT_EQ(l[0], cy.height);
    EXPECT_EQ(n.cy.gamma[0], Rational(-1) / cy.height);
  }
}

TEST(Normalize, RejectsWrongMatrix) {
  auto d = lens(3);
  auto cy = *compute_gamma(d);
  EXPECT_FALSE(is_height_normalizer(d, cy, IntMatrix::identity(3)));
}

TEST(KernelLattice, ComponentGroupAndRowSums) {
  auto d = lens(4);
  auto n = normalize_height(d, *compute_gamma(d));
  auto k = kernel_lattice(n.diagram, n.cy);
  EXPECT_TRUE(k.basis.empty());
  EXPECT_EQ(k.component_group, (std::vector<Integer>{4}));
  EXPECT_TRUE(k.row_sum_times_height_integral);

  auto e = main4_even(1, 1);
  auto ne = normalize_height(e, *compute_gamma(e));
  auto ke = kernel_lattice(ne.diagram, ne.cy);
  EXPECT_EQ(ke.basis.size(), 2u);
  EXPECT_TRUE(ke.component_group.empty());
  EXPECT_TRUE(ke.row_sum_times_height_integral);
  EXPECT_THROW(kernel_lattice(d, *compute_gamma(d)), PreconditionError);
}

TEST(Invariance, GammaExistenceUnderChangeOfBasis) {
  auto rng = testing::make_rng(21);
  for (const auto& nd : test_corpus())
    for (int i = 0; i < 10; ++i) {
      IntMatrix a = testing::random_sl(rng, 3);
      auto t = change_lattice_basis(nd.diagram, a);
      auto cy = compute_gamma(t);
      ASSERT_TRUE(cy);
      EXPECT_EQ(cy->height, compute_gamma(nd.diagram)->height);
    }
}

}  // namespace
}  // namespace sasakit
