#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vpos/base_loci.hpp"
#include "vpos/ns_lattice.hpp"

namespace vpos {

/// Where an expected value comes from: read off a worked example, recomputed
/// independently, or immediate from the definitions.
enum class Provenance { published_example, derived, immediate };
std::string_view provenance_name(Provenance p);

struct Check {
  std::string description;
  std::string expected;
  Provenance provenance;
  std::string computed;
  bool pass = false;
};

/// One reproducible verification run. overall() is the conjunction of the
/// pass flags and is false for a certificate without checks.
class VerificationCertificate {
 public:
  explicit VerificationCertificate(std::string example_id) : example_id_(std::move(example_id)) {}

  /// Passes when the computed text equals the expected text.
  void check(std::string description, std::string expected, Provenance provenance, std::string computed);
  void check(std::string description, bool expected, Provenance provenance, bool computed);
  void parameter(std::string key, std::string value) { parameters_.emplace_back(std::move(key), std::move(value)); }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::string& example_id() const { return example_id_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& parameters() const { return parameters_; }
  const std::vector<std::string>& notes() const { return notes_; }
  bool overall() const;

 private:
  std::string example_id_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> parameters_;
  std::vector<std::string> notes_;
};

inline constexpr std::uint64_t kDefaultSeed = 20260611;

// Random inputs. Draws use the raw mt19937_64 stream (not the distribution
// classes) so that a seed reproduces the same cases on every platform.
using Rng = std::mt19937_64;
long draw(Rng& rng, long lo, long hi);
/// numerator in [-bound, bound], denominator in [1, max_den].
Rational draw_rational(Rng& rng, long bound, long max_den);
/// Nonnegative rational combination of the Mori generators and the given nef
/// classes, not all coefficients zero.
DivisorClass random_psef_class(const LatticePtr& lattice, const std::vector<DivisorClass>& nef_classes, Rng& rng);
/// Rank 1..max_rank, summand coefficients in [-3, 3], twist coefficients with
/// denominators at most 4.
SplitBundle random_split_bundle(const LatticePtr& lattice, Rng& rng, std::size_t max_rank = 3);
/// Same rank and twist rules with the twist supplied.
SplitBundle random_split_bundle(const LatticePtr& lattice, Rng& rng, const DivisorClass& twist,
                                std::size_t max_rank = 3);

/// P^2 blown up at a point on a line, then at the point of the exceptional
/// curve in the line's direction, with the composed blow-down to P^2. The
/// surface agrees structurally with the preset "p2-double-blowup".
BlowUp double_blowup_from_p2();

/// Generators of the nef cone of the preset "p2-double-blowup".
std::vector<DivisorClass> double_blowup_nef_generators(const LatticePtr& x);

/// The nonnef-locus pathology of an extension on the double blow-up.
VerificationCertificate b_minus_example();
/// The nonample-locus pathology of an extension on the double blow-up.
VerificationCertificate b_plus_example();
/// h^0(S^{nl}E(l)) on P^2 for 2 <= n <= n_max, 1 <= l <= l_max, with the
/// determinant and Chern class cross-checks. One check per (n, l).
VerificationCertificate lcounter_example(int n_max = 6, int l_max = 6);

VerificationCertificate schur_suite(int max_weight = 8, int max_rank = 4, int witness_bound = 5);
VerificationCertificate zariski_suite(std::uint64_t seed = kDefaultSeed, int cases = 200);
VerificationCertificate base_loci_suite(std::uint64_t seed = kDefaultSeed, int cases = 100);
/// Pullback laws along the blow-down of the double blow-up to P^2 for O(d), d_min <= d <= d_max.
VerificationCertificate pullback_suite(int d_min = -2, int d_max = 5);
VerificationCertificate chern_suite(std::uint64_t seed = kDefaultSeed, int cases = 100);

}  // namespace vpos
