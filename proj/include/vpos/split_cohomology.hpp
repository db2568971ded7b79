#pragma once

#include <map>
#include <string>

#include "vpos/rational.hpp"

namespace vpos {

/// A totally split bundle on P^n as a multiset of line-bundle degrees.
struct SplitDegrees {
  int ambient_dim = 1;
  std::map<long, Integer> degrees;  // degree -> multiplicity (> 0)

  SplitDegrees() = default;
  SplitDegrees(int ambient_dim, std::map<long, Integer> degrees);
  /// `rank` copies of O(degree).
  static SplitDegrees uniform(int ambient_dim, long degree, const Integer& rank);

  Integer rank() const;
  std::string to_string() const;  // "O(-2)^6+O(1)"

  friend bool operator==(const SplitDegrees&, const SplitDegrees&) = default;
};

/// h^i(P^n, O(d)). Throws std::invalid_argument unless 0 <= i <= n.
Integer h_line(int n, long d, int i);

/// Degrees of the m-th symmetric power.
SplitDegrees sym_degrees(const SplitDegrees& s, int m);
/// Tensor with O(t).
SplitDegrees twist(const SplitDegrees& s, long t);

Integer h(const SplitDegrees& s, int i);
Integer euler_characteristic(const SplitDegrees& s);

/// One instance of the sequence
///   0 -> S^{nl-1}(O(-1)^3)(l-4) -> S^{nl}(O(-1)^3)(l) -> S^{nl}E(l) -> 0
/// on P^2, with E = M^v(-1) the twisted dual syzygy bundle of three cubics.
struct LcounterSequence {
  int n = 0;
  int l = 0;
  SplitDegrees left;
  SplitDegrees middle;
  long left_degree = 0;    // l - nl - 3, recomputed from the sequence
  long middle_degree = 0;  // l - nl
  /// The degree the worked example states for the left term (2l - nl - 4);
  /// it differs from left_degree and is kept for reporting.
  long stated_left_degree = 0;
  Integer h0_left;
  Integer h1_left;
  Integer h0_middle;
  Integer h0_quotient;
};

/// Throws std::domain_error unless n >= 2 and l >= 1.
LcounterSequence lcounter_sequence(int n, int l);
Integer lcounter_h0(int n, int l);

/// Degree of det(F(t)) for a rank-r bundle F with det F = O(det_degree).
long det_twist(int rank, long det_degree, long t);

}  // namespace vpos
