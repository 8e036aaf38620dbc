#include "tropfan/linalg.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace tropfan;
using tropfan::testing::random_vector;

TEST(Linalg, KernelOfSingleRow) {
  const auto k = kernel_basis(std::vector<IntVector>{from_ints({1, 1, 1})}, 3);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], from_ints({1, -1, 0}));
  EXPECT_EQ(k[1], from_ints({1, 0, -1}));
}

TEST(Linalg, KernelOfRationalMatrix) {
  RatMatrix m = {{Rational(1, 2), Rational(1, 3), 0}, {0, 1, 1}};
  const auto k = kernel_basis(m, 3);
  ASSERT_EQ(k.size(), 1u);
  // x/2 + y/3 = 0, y + z = 0
  EXPECT_EQ(k[0], from_ints({2, -3, 3}));
}

TEST(Linalg, KernelOfEmptyMatrixIsStandardBasis) {
  const auto k = kernel_basis(std::vector<IntVector>{}, 3);
  ASSERT_EQ(k.size(), 3u);
  EXPECT_EQ(k[2], from_ints({0, 0, 1}));
}

TEST(Linalg, PrimitiveKeepsSign) {
  EXPECT_EQ(primitive(from_ints({-4, 6, 0})), from_ints({-2, 3, 0}));
  EXPECT_EQ(primitive(from_ints({0, 0, 7})), from_ints({0, 0, 1}));
  EXPECT_THROW(primitive(from_ints({0, 0})), std::invalid_argument);
}

TEST(Linalg, ClearDenominators) {
  EXPECT_EQ(clear_denominators({Rational(1, 2), Rational(-1, 3)}), from_ints({3, -2}));
}

TEST(Linalg, CanonicalRowBasisIgnoresGenerators) {
  const auto a = canonical_row_basis({from_ints({1, 1, 0}), from_ints({0, 1, 1})}, 3);
  const auto b = canonical_row_basis({from_ints({1, 2, 1}), from_ints({2, 2, 0}), from_ints({1, 0, -1})}, 3);
  EXPECT_EQ(a, b);
}

TEST(Linalg, ReduceModulo) {
  const Rref basis = rref(to_rational({from_ints({1, 1, 1})}), 3);
  EXPECT_EQ(reduce_modulo(from_ints({3, 4, 5}), basis), from_ints({0, 1, 2}));
  EXPECT_TRUE(is_zero(reduce_modulo(from_ints({2, 2, 2}), basis)));
}

TEST(Linalg, Int64Overflow) {
  IntVector v = {Integer("100000000000000000000")};
  EXPECT_THROW(to_int64(v), std::overflow_error);
}

TEST(LinalgProperty, KernelOrthogonalAndRankNullity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t cols = 1 + rng() % 6, rows = rng() % 5;
    std::vector<IntVector> m;
    for (std::size_t i = 0; i < rows; ++i) m.push_back(random_vector(rng, cols, -3, 3));
    const auto k = kernel_basis(m, cols);
    EXPECT_EQ(rank(m) + k.size(), cols);
    for (const auto& v : k) {
      EXPECT_EQ(primitive(v), v);
      for (const auto& row : m) EXPECT_EQ(dot(row, v), 0);
      const auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
      ASSERT_NE(first, v.end());
      EXPECT_GT(*first, 0);
    }
  }
}

TEST(LinalgProperty, PrimitiveIdempotent) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v = random_vector(rng, 4, -20, 20);
    if (is_zero(v)) continue;
    EXPECT_EQ(primitive(primitive(v)), primitive(v));
  }
}
