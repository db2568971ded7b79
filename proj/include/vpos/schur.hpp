#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vpos/rational.hpp"

namespace vpos::schur {

/// Weakly decreasing positive parts; the empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// "3,1,1"; also accepts "(3,1,1)".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  /// Part i, or 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Lexicographic on parts (so (2,2) < (3,1) < (4)).
  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const;  // "(3,1)"

 private:
  std::vector<int> parts_;
};

/// Partitions of n with at most max_parts parts, lexicographically
/// decreasing: (4), (3,1), (2,2), ...
std::vector<Partition> partitions(int n, int max_parts);

/// Hook length formula.
Integer num_standard_tableaux(const Partition& shape);

/// Hook content formula: dimension of the Schur functor on a rank-r bundle.
Integer schur_dim(const Partition& shape, int rank);

struct SchurSummand {
  Partition partition;
  Integer tableau_multiplicity;  // f^lambda
  int rank = 0;
  Integer dimension;  // schur_dim(partition, rank)
};

/// The Schur summands of the n-th tensor power of a rank-r bundle.
std::vector<SchurSummand> tensor_power_decomposition(int n, int rank);

/// Number of semistandard tableaux of the given shape and content, computed by
/// peeling off horizontal strips. Content entries may be zero.
Integer kostka(const Partition& shape, const std::vector<int>& content);

/// Symmetric function in the Schur basis.
using SchurExpansion = std::map<Partition, Integer>;

/// s_lambda * h_k: add a horizontal strip of size k in every way.
SchurExpansion pieri_multiply(const SchurExpansion& f, int k);

/// h_{d_1} ... h_{d_k} by iterated Pieri expansion starting from s_().
SchurExpansion complete_product(const std::vector<int>& degrees);

/// Multiplicity of s_lambda in h_{lambda_1} ... h_{lambda_r}; at least 1.
/// Throws std::invalid_argument when lambda has more than r parts.
Integer pieri_summand_certificate(const Partition& shape, int rank);

struct WitnessExponents {
  std::vector<long> a;
  std::vector<long> b;
  Rational lhs;  // 2M - m * sum(a)
  Rational rhs;  // M + sum(b) / q
  long big_m = 0;

  bool holds() const { return lhs == rhs && lhs >= big_m; }
};

/// Writes each part as a_i * (m q) + b_i with 0 <= b_i < m q. Throws
/// std::invalid_argument unless the weight is M q.
WitnessExponents witness_exponents(const Partition& shape, long m, long q, long big_m);

}  // namespace vpos::schur
