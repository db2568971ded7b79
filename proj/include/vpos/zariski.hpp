#pragma once

#include <map>
#include <string>
#include <variant>

#include "vpos/ns_lattice.hpp"

namespace vpos {

/// D = P + N with P nef, N an effective combination of catalog curves,
/// P orthogonal to every curve of N, and the support of N negative definite.
struct ZariskiDecomposition {
  DivisorClass input;
  DivisorClass positive;
  std::map<std::string, Rational> negative;  // curve label -> multiplicity > 0

  DivisorClass negative_class() const;
  std::set<std::string> support() const;
};

struct NotPseudoeffective {
  DivisorClass input;
};

using ZariskiResult = std::variant<ZariskiDecomposition, NotPseudoeffective>;

/// Iterative construction: start from the catalog curves on which d is
/// negative, solve (d - N).C = 0 over the current support, and enlarge the
/// support by any curve still negative on d - N. Throws InvariantViolation
/// when a multiplicity comes out nonpositive, the support is not negative
/// definite, or the result is not nef (each signals an incomplete catalog).
ZariskiResult zariski_decompose(const DivisorClass& d);

/// nullptr when the input was not pseudoeffective.
inline const ZariskiDecomposition* as_decomposition(const ZariskiResult& r) {
  return std::get_if<ZariskiDecomposition>(&r);
}

/// Which of the five structural invariants hold.
struct ZariskiInvariants {
  bool sums_to_input = false;
  bool positive_nef = false;
  bool orthogonal = false;
  bool multiplicities_positive = false;
  bool support_negative_definite = false;

  bool all() const {
    return sums_to_input && positive_nef && orthogonal && multiplicities_positive && support_negative_definite;
  }
};

ZariskiInvariants check_invariants(const ZariskiDecomposition& z);

/// Psef and P^2 > 0.
bool big_test(const DivisorClass& d);

}  // namespace vpos
