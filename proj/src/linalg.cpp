#include "vpos/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace vpos::linalg {

std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("solve: matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  Vector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

bool is_symmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) return false;
    }
  }
  return true;
}

Inertia inertia(const Matrix& symmetric) {
  if (!is_symmetric(symmetric)) throw std::invalid_argument("inertia: matrix is not symmetric");
  Matrix a = symmetric;
  const std::size_t n = a.size();
  Inertia result;

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][pivot] == 0) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish: add index j to index i to
      // create a nonzero diagonal 2*a[i][j].
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        result.zero += static_cast<int>(n - k);
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      pivot = pi;
    }
    swap_index(k, pivot);
    const Rational p = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / p;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = 0;
    if (p > 0) {
      ++result.positive;
    } else {
      ++result.negative;
    }
  }
  return result;
}

bool is_negative_definite(const Matrix& symmetric) {
  const Inertia in = inertia(symmetric);
  return in.negative == static_cast<int>(symmetric.size());
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix c(a.size(), zero_vector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Vector multiply(const Matrix& a, const Vector& x) {
  Vector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

std::optional<Vector> nonnegative_combination(const std::vector<Vector>& generators,
                                              const Vector& target) {
  const std::size_t rows = target.size();
  const std::size_t k = generators.size();
  for (const auto& g : generators) {
    if (g.size() != rows) throw std::invalid_argument("nonnegative_combination: length mismatch");
  }

  // Tableau over columns [lambda_0..lambda_{k-1} | artificial_0..artificial_{rows-1} | rhs].
  const std::size_t cols = k + rows;
  Matrix t(rows, zero_vector(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = target[r] < 0;
    for (std::size_t j = 0; j < k; ++j) t[r][j] = flip ? Rational(-generators[j][r]) : generators[j][r];
    t[r][k + r] = 1;
    t[r][cols] = flip ? Rational(-target[r]) : target[r];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = k + r;

  // Reduced costs of the phase-one objective (sum of artificials).
  Vector cost = zero_vector(cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j <= cols; ++j) {
      if (j < k || j == cols) cost[j] -= t[r][j];
    }
  }

  for (;;) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][entering] <= 0) continue;
      const Rational ratio = t[r][cols] / t[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leaving == rows) throw std::logic_error("nonnegative_combination: unbounded phase one");

    const Rational p = t[leaving][entering];
    for (auto& v : t[leaving]) v /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || t[r][entering] == 0) continue;
      const Rational f = t[r][entering];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leaving][j];
    }
    if (cost[entering] != 0) {
      const Rational f = cost[entering];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leaving][j];
    }
    basis[leaving] = entering;
  }

  if (cost[cols] != 0) return std::nullopt;

  Vector lambda = zero_vector(k);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < k) lambda[basis[r]] = t[r][cols];
  }
  return lambda;
}

}  // namespace vpos::linalg
