#pragma once

#include <optional>

#include "vpos/rational.hpp"

namespace vpos::linalg {

/// Solves a x = b exactly by Gaussian elimination. The pivot in each column is
/// the first nonzero entry at or below the diagonal, so results are
/// deterministic in the row order. Returns nullopt when a is singular.
std::optional<Vector> solve(Matrix a, Vector b);

/// Sylvester inertia of a symmetric rational matrix.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Congruence diagonalization (symmetric LDL^T with 2x2 rescue for zero
/// pivots); throws std::invalid_argument for a non-symmetric input.
Inertia inertia(const Matrix& symmetric);

bool is_symmetric(const Matrix& m);
bool is_negative_definite(const Matrix& symmetric);

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);

/// Exact phase-one simplex with Bland's rule: finds lambda >= 0 with
/// sum_i lambda_i * generators[i] == target, or nullopt if no such
/// combination exists.
std::optional<Vector> nonnegative_combination(const std::vector<Vector>& generators,
                                              const Vector& target);

}  // namespace vpos::linalg
