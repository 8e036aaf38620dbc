#include "tropfan/cone.hpp"

#include "properties.hpp"

#include <gtest/gtest.h>

using namespace tropfan;
using namespace tropfan::testing;

namespace {

Cone orthant(std::size_t n) {
  std::vector<IntVector> ineqs;
  for (std::size_t i = 0; i < n; ++i) ineqs.push_back(unit_vector(n, i));
  return canonicalize(n, {}, ineqs);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Cone, OrthantRaysAndFacets) {
  const Cone c = orthant(3);
  EXPECT_EQ(c.dimension(), 3u);
  EXPECT_EQ(c.lineality_dim(), 0u);
  EXPECT_EQ(c.rays().size(), 3u);
  EXPECT_EQ(c.inequalities().size(), 3u);
  EXPECT_EQ(facets(c).size(), 3u);
}

TEST(Cone, RedundantInequalitiesDropped) {
  const Cone c = canonicalize(2, {}, {from_ints({1, 0}), from_ints({0, 1}), from_ints({1, 1}), from_ints({2, 0})});
  EXPECT_EQ(c, orthant(2));
}

TEST(Cone, ImplicitEqualitiesPromoted) {
  const Cone c = canonicalize(3, {}, {from_ints({1, -1, 0}), from_ints({-1, 1, 0}), from_ints({0, 0, 1})});
  EXPECT_EQ(c.equations().size(), 1u);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(c.lineality_dim(), 1u);
  EXPECT_EQ(c.rays().size(), 1u);
  EXPECT_EQ(c, canonicalize(3, {from_ints({2, -2, 0})}, {from_ints({1, -1, 1})}));
}

TEST(Cone, EmptyInteriorGivesOrigin) {
  const Cone c = canonicalize(2, {}, {from_ints({1, 0}), from_ints({-1, -1}), from_ints({0, 1})});
  EXPECT_EQ(c, Cone::origin(2));
  EXPECT_EQ(c.dimension(), 0u);
}

TEST(Cone, WholeSpace) {
  const Cone c = Cone::whole_space(3);
  EXPECT_EQ(c.dimension(), 3u);
  EXPECT_EQ(c.lineality_dim(), 3u);
  EXPECT_TRUE(c.contains(from_ints({-5, 2, 9})));
}

TEST(Cone, ContainsAndInterior) {
  const Cone c = orthant(2);
  EXPECT_TRUE(c.contains(from_ints({0, 3})));
  EXPECT_FALSE(c.contains_in_relative_interior(from_ints({0, 3})));
  EXPECT_TRUE(c.contains_in_relative_interior(relative_interior_point(c)));
  EXPECT_TRUE(c.contains_in_relative_interior(generic_interior_point(c, 5)));
  EXPECT_FALSE(c.contains(from_ints({-1, 3})));
}

TEST(Cone, IntersectionIsAFace) {
  const Cone a = orthant(2);
  const Cone b = canonicalize(2, {}, {from_ints({-1, 0}), from_ints({0, 1})});
  const Cone i = intersect(a, b);
  EXPECT_EQ(i.dimension(), 1u);
  EXPECT_TRUE(a.contains(i));
  EXPECT_TRUE(b.contains(i));
}

TEST(Cone, PermutedCone) {
  const Cone c = canonicalize(3, {}, {from_ints({1, 0, 0}), from_ints({0, 1, -1})});
  const Cone p = c.permuted({1, 2, 0});
  // p = {v1 >= 0, v2 >= v0}
  EXPECT_TRUE(p.contains(from_ints({0, 1, 0})));
  EXPECT_TRUE(p.contains(from_ints({-1, 0, 1})));
  EXPECT_FALSE(p.contains(from_ints({1, 0, 0})));
  EXPECT_FALSE(p.contains(from_ints({0, -1, 0})));
}

TEST(Fan, SimplicialConeFVectorIsBinomial) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const FanStatistics s = fan_statistics(Fan{k, {orthant(k)}}, 0);
    ASSERT_EQ(s.f_vector.size(), k);
    for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(s.f_vector[i], binomial(k, i + 1));
    EXPECT_TRUE(s.simplicial);
  }
}

TEST(Fan, NonSimplicialDetected) {
  const Cone square = canonicalize(3, {}, {from_ints({1, 0, 1}), from_ints({-1, 0, 1}), from_ints({0, 1, 1}),
                                           from_ints({0, -1, 1})});
  const FanStatistics s = fan_statistics(Fan{3, {square}}, 0);
  EXPECT_FALSE(s.simplicial);
  EXPECT_EQ(s.f_vector, (std::vector<std::size_t>{4, 4, 1}));
}

TEST(Fan, NormalizeDropsContainedCones) {
  Fan f{2, {orthant(2), canonicalize(2, {from_ints({0, 1})}, {from_ints({1, 0})}), orthant(2)}};
  f.normalize();
  ASSERT_EQ(f.cones.size(), 1u);
}

TEST(Fan, NorthernSliceOfARay) {
  // cone over (1,2,3) and (0,1,0): vertex (2,3) plus the ray (1,0)
  const Cone cone = canonicalize(3, {from_ints({3, 0, -1})}, {from_ints({1, 0, 0}), from_ints({-2, 1, 0})});
  const auto polys = restrict_to_unit_first_coordinate(Fan{3, {cone}});
  ASSERT_EQ(polys.size(), 1u);
  ASSERT_EQ(polys[0].vertices.size(), 1u);
  EXPECT_EQ(polys[0].vertices[0], (std::vector<Rational>{2, 3}));
  ASSERT_EQ(polys[0].rays.size(), 1u);
  EXPECT_EQ(polys[0].rays[0], from_ints({1, 0}));
  const Cone south = canonicalize(3, {}, {from_ints({-1, 0, 0})});
  EXPECT_EQ(restrict_to_unit_first_coordinate(Fan{3, {canonicalize(3, {from_ints({1, 0, 0})}, {})}}).size(), 0u);
  EXPECT_EQ(restrict_to_unit_first_coordinate(Fan{3, {south}}).size(), 0u);
}

TEST(ConeProperty, DoubleDescriptionConsistency) {
  const Tally t = double_description(31, 300);
  EXPECT_TRUE(t.perfect()) << t.agreed << "/" << t.checked;
}

TEST(ConeProperty, CanonicalFormIgnoresPresentation) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 3;
    std::vector<IntVector> ineqs;
    for (int i = 0; i < 5; ++i) ineqs.push_back(random_vector(rng, n, -3, 3));
    const Cone a = canonicalize(n, {}, ineqs);
    std::vector<IntVector> shuffled(ineqs.rbegin(), ineqs.rend());
    for (auto& v : shuffled) v = scale(v, 2);
    shuffled.push_back(add(ineqs[0], ineqs[1]));
    EXPECT_EQ(a, canonicalize(n, {}, shuffled));
  }
}

TEST(ConeProperty, FacetsAreFacesOfRightDimension) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 100; ++k) {
    std::vector<IntVector> ineqs;
    for (int i = 0; i < 6; ++i) ineqs.push_back(random_vector(rng, 4, -3, 3));
    const Cone c = canonicalize(4, {}, ineqs);
    for (const auto& f : facets(c)) {
      EXPECT_EQ(f.dimension() + 1, c.dimension());
      EXPECT_TRUE(c.contains(f));
      EXPECT_EQ(intersect(f, c), f);
    }
  }
}

TEST(ConeProperty, RefinementSupportAndSerialAgreement) {
  const Tally t = refinement_support(34, 25);
  EXPECT_TRUE(t.perfect()) << t.agreed << "/" << t.checked;
  EXPECT_GT(t.positives, 0);
}
