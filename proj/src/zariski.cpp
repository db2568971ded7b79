#include "vpos/zariski.hpp"

#include <algorithm>

#include "vpos/errors.hpp"
#include "vpos/linalg.hpp"

namespace vpos {

DivisorClass ZariskiDecomposition::negative_class() const {
  DivisorClass n = DivisorClass::zero(input.lattice_ptr());
  for (const auto& [label, mult] : negative) n = n + input.lattice().curve(label) * mult;
  return n;
}

std::set<std::string> ZariskiDecomposition::support() const {
  std::set<std::string> s;
  for (const auto& [label, mult] : negative) s.insert(label);
  return s;
}

namespace {

Matrix support_gram(const SurfaceLattice& lat, const std::vector<std::size_t>& support) {
  Matrix g(support.size(), Vector(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = 0; j < support.size(); ++j) {
      g[i][j] = lat.pair(lat.curves()[support[i]].coeffs, lat.curves()[support[j]].coeffs);
    }
  }
  return g;
}

}  // namespace

ZariskiResult zariski_decompose(const DivisorClass& d) {
  if (!psef_test(d)) return NotPseudoeffective{d};
  const SurfaceLattice& lat = d.lattice();
  const auto& curves = lat.curves();

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (lat.pair(d.coeffs(), curves[i].coeffs) < 0) support.push_back(i);
  }

  DivisorClass positive = d;
  Vector mult;
  for (;;) {
    positive = d;
    mult.clear();
    if (!support.empty()) {
      const Matrix g = support_gram(lat, support);
      if (!linalg::is_negative_definite(g)) {
        throw InvariantViolation("zariski_decompose: support of " + d.to_string() +
                                 " is not negative definite; the curve catalog is incomplete");
      }
      Vector rhs(support.size());
      for (std::size_t i = 0; i < support.size(); ++i) rhs[i] = lat.pair(d.coeffs(), curves[support[i]].coeffs);
      // Negative definite implies invertible.
      mult = *linalg::solve(g, rhs);
      for (std::size_t i = 0; i < support.size(); ++i) positive = positive - lat.curve(support[i]) * mult[i];
    }
    std::vector<std::size_t> grow;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      if (lat.pair(positive.coeffs(), curves[i].coeffs) < 0) grow.push_back(i);
    }
    if (grow.empty()) break;
    support.insert(support.end(), grow.begin(), grow.end());
    std::sort(support.begin(), support.end());
  }

  ZariskiDecomposition z{d, positive, {}};
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (mult[i] <= 0) {
      throw InvariantViolation("zariski_decompose: curve '" + curves[support[i]].label + "' got multiplicity " +
                               to_string(mult[i]) + " in the negative part of " + d.to_string());
    }
    z.negative.emplace(curves[support[i]].label, mult[i]);
  }
  if (!nef_test(positive)) {
    throw InvariantViolation("zariski_decompose: positive part " + positive.to_string() +
                             " is not nef; the curve catalog is incomplete");
  }
  return z;
}

ZariskiInvariants check_invariants(const ZariskiDecomposition& z) {
  const SurfaceLattice& lat = z.input.lattice();
  ZariskiInvariants inv;
  inv.sums_to_input = z.positive + z.negative_class() == z.input;
  inv.positive_nef = nef_test(z.positive);
  inv.orthogonal = std::all_of(z.negative.begin(), z.negative.end(), [&](const auto& entry) {
    return intersect(z.positive, lat.curve(entry.first)) == 0;
  });
  inv.multiplicities_positive =
      std::all_of(z.negative.begin(), z.negative.end(), [](const auto& entry) { return entry.second > 0; });
  std::vector<std::size_t> support;
  for (const auto& [label, mult] : z.negative) support.push_back(*lat.curve_index(label));
  inv.support_negative_definite = support.empty() || linalg::is_negative_definite(support_gram(lat, support));
  return inv;
}

bool big_test(const DivisorClass& d) {
  const ZariskiResult r = zariski_decompose(d);
  const auto* z = as_decomposition(r);
  return z != nullptr && intersect(z->positive, z->positive) > 0;
}

}  // namespace vpos
