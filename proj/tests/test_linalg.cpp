#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vpos/linalg.hpp"

using namespace vpos;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  Matrix m(n, Vector(n));
  for (auto& row : m) {
    for (auto& x : row) x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  }
  return m;
}

}  // namespace

TEST(Linalg, SolveRecoversSolution) {
  std::mt19937_64 rng(7);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = random_matrix(rng, 4, 3);
    Vector x{fraction(1, 2), -3, 0, fraction(7, 3)};
    const Vector b = linalg::multiply(a, x);
    const auto got = linalg::solve(a, b);
    if (oracle::determinant(a) == 0) {
      EXPECT_FALSE(got.has_value());
      continue;
    }
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, x);
    ++solved;
  }
  EXPECT_GT(solved, 100);
}

TEST(Linalg, InertiaMatchesKnownForms) {
  EXPECT_EQ(linalg::inertia({{1, 0, 0}, {0, -2, 1}, {0, 1, -1}}), (linalg::Inertia{1, 2, 0}));
  // Zero diagonal needs the 2x2 rescue.
  EXPECT_EQ(linalg::inertia({{0, 1}, {1, 0}}), (linalg::Inertia{1, 1, 0}));
  EXPECT_EQ(linalg::inertia({{0, 0}, {0, 0}}), (linalg::Inertia{0, 0, 2}));
  EXPECT_EQ(linalg::inertia({{1, 1}, {1, 1}}), (linalg::Inertia{1, 0, 1}));
  EXPECT_THROW(linalg::inertia({{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST(Linalg, NegativeDefiniteAgreesWithSylvester) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix a = random_matrix(rng, 3, 3);
    // -A^T A - c I is negative definite for c > 0; without the shift it may be semidefinite.
    Matrix s = linalg::multiply(linalg::transpose(a), a);
    for (auto& row : s) {
      for (auto& x : row) x = -x;
    }
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < 3; ++i) s[i][i] += static_cast<long>(rng() % 5) - 2;
    }
    EXPECT_EQ(linalg::is_negative_definite(s), oracle::negative_definite(s));
  }
}

TEST(Linalg, InertiaSumsToSize) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(rng, 4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < i; ++j) a[i][j] = a[j][i];
    }
    const auto in = linalg::inertia(a);
    EXPECT_EQ(in.positive + in.negative + in.zero, 4);
    EXPECT_EQ(in.zero == 0, oracle::determinant(a) != 0);
  }
}

TEST(Linalg, NonnegativeCombination) {
  const std::vector<Vector> gens{{1, -1, -2}, {0, 1, 0}, {0, 0, 1}};
  const auto l = linalg::nonnegative_combination(gens, {1, 0, 0});
  ASSERT_TRUE(l.has_value());
  EXPECT_EQ(*l, (Vector{1, 1, 2}));
  EXPECT_FALSE(linalg::nonnegative_combination(gens, {-1, 0, 0}).has_value());
  EXPECT_FALSE(linalg::nonnegative_combination(gens, {0, -1, 0}).has_value());
  const auto z = linalg::nonnegative_combination(gens, {0, 0, 0});
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, (Vector{0, 0, 0}));
}

TEST(Linalg, NonnegativeCombinationRandomCones) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vector> gens;
    for (int g = 0; g < 4; ++g) {
      Vector v;
      for (int k = 0; k < 3; ++k) v.push_back(static_cast<long>(rng() % 7) - 3);
      gens.push_back(v);
    }
    // Inside by construction.
    Vector target(3);
    for (const auto& g : gens) {
      const Rational c = fraction(static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3));
      for (int k = 0; k < 3; ++k) target[k] += c * g[k];
    }
    const auto l = linalg::nonnegative_combination(gens, target);
    ASSERT_TRUE(l.has_value());
    Vector back(3);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      EXPECT_GE((*l)[g], 0);
      for (int k = 0; k < 3; ++k) back[k] += (*l)[g] * gens[g][k];
    }
    EXPECT_EQ(back, target);
  }
}
