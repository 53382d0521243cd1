#include <gtest/gtest.h>

#include "sasakit/cy_structure.hpp"
#include "sasakit/errors.hpp"
#include "sasakit/families.hpp"
#include "sasakit/lattice.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace sasakit {
namespace {

TEST(FundamentalGroup, LensAndZ5) {
  EXPECT_TRUE(fundamental_group(lens(1)).empty());
  for (long l = 2; l <= 10; ++l) EXPECT_EQ(fundamental_group(lens(l)), (std::vector<Integer>{l}));
  EXPECT_EQ(fundamental_group(z5_lens()), (std::vector<Integer>{5}));
}

TEST(FundamentalGroup, HeightAboveOneIsNeverSimplyConnected) {
  for (const auto& nd : test_corpus()) {
    auto cy = compute_gamma(nd.diagram);
    if (cy && cy->height > 1) EXPECT_FALSE(fundamental_group(nd.diagram).empty()) << nd.name;
  }
}

TEST(SecondBetti, CountsFacetsAndWarns) {
  auto b = second_betti(main4_even(2, 1));
  EXPECT_EQ(b.b2, 4);
  EXPECT_FALSE(b.warning);
  auto w = second_betti(lens(3));
  EXPECT_EQ(w.b2, 0);
  EXPECT_TRUE(w.warning);
}

TEST(Area, Z5MatchesPickOracle) {
  auto poly = height1_polygon(z5_lens());
  EXPECT_EQ(area_invariant(z5_lens()), 5);
  EXPECT_EQ(testing::pick_area_times_2(poly), 5);
}

TEST(Area, RandomPolygonsMatchPickOracle) {
  auto rng = testing::make_rng(31);
  for (int i = 0; i < 100; ++i) {
    auto poly = testing::random_lattice_polygon(rng, 8, 3, 8);
    EXPECT_EQ(polygon_area_times_2(poly), testing::pick_area_times_2(poly));
  }
}

TEST(Convexity, DetectsCollinearAndReflexVertices) {
  std::vector<LatticePoint2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_TRUE(is_strictly_convex(square));
  EXPECT_TRUE(convexity_and_span_check(square));
  std::vector<LatticePoint2> collinear{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
  EXPECT_FALSE(is_strictly_convex(collinear));
  std::vector<LatticePoint2> reflex{{0, 0}, {4, 0}, {1, 1}, {0, 4}};
  EXPECT_FALSE(is_strictly_convex(reflex));
  std::vector<LatticePoint2> coarse{{0, 0}, {2, 0}, {0, 2}};
  EXPECT_TRUE(is_strictly_convex(coarse));
  EXPECT_FALSE(convexity_and_span_check(coarse));
  std::vector<LatticePoint2> two{{0, 0}, {1, 0}};
  EXPECT_THROW(convexity_and_span_check(two), PreconditionError);
}

TEST(Identify, Labels) {
  EXPECT_EQ(identify_5d(lens(1)), "S^5");
  EXPECT_EQ(identify_5d(lens(2)), "lens-type: pi1 = Z_2");
  EXPECT_EQ(identify_5d(main4_even(1, 1)), "S^5 # 2(S^2 x S^3)");
  auto r = topology_report(z5_lens());
  EXPECT_EQ(r.identification, "lens-type: pi1 = Z_5");
  ASSERT_TRUE(r.area_times_2);
  EXPECT_EQ(*r.area_times_2, 5);
  EXPECT_FALSE(topology_report(lens(3)).area_times_2);
}

TEST(Invariance, AreaUnderHeight1Stabilizer) {
  auto rng = testing::make_rng(32);
  for (const auto& nd : test_corpus()) {
    if (!is_height1_form(nd.diagram)) continue;
    for (int i = 0; i < 20; ++i) {
      IntMatrix b = testing::random_height1_stabilizer(rng);
      IntMatrix a = unimodular_inverse(b).transpose();
      auto t = change_lattice_basis(nd.diagram, a);
      ASSERT_TRUE(is_height1_form(t));
      EXPECT_EQ(area_invariant(t), area_invariant(nd.diagram));
    }
  }
}

TEST(Invariance, Pi1UnderChangeOfBasis) {
  auto rng = testing::make_rng(33);
  for (const auto& nd : test_corpus())
    for (int i = 0; i < 10; ++i)
      EXPECT_EQ(fundamental_group(change_lattice_basis(nd.diagram, testing::random_sl(rng, 3))),
                fundamental_group(nd.diagram));
}

}  // namespace
}  // namespace sasakit
