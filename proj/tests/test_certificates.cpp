#include <gtest/gtest.h>

#include "vpos/certificates.hpp"
#include "vpos/surface_config.hpp"

using namespace vpos;

namespace {

std::string failures(const VerificationCertificate& c) {
  std::string s;
  for (const auto& check : c.checks()) {
    if (!check.pass) s += check.description + ": expected " + check.expected + ", got " + check.computed + "\n";
  }
  for (const auto& n : c.notes()) s += "note: " + n + "\n";
  return s;
}

std::string fingerprint(const VerificationCertificate& c) {
  std::string s;
  for (const auto& check : c.checks()) s += check.description + "=" + check.computed + ";";
  for (const auto& [k, v] : c.parameters()) s += k + "=" + v + ";";
  return s;
}

}  // namespace

TEST(Certificate, EmptyCertificateDoesNotPass) {
  VerificationCertificate c("empty");
  EXPECT_FALSE(c.overall());
  c.check("one", "1", Provenance::immediate, "1");
  EXPECT_TRUE(c.overall());
  c.check("flag", true, Provenance::derived, false);
  EXPECT_FALSE(c.overall());
  EXPECT_EQ(c.checks().back().expected, "true");
  EXPECT_EQ(c.checks().back().computed, "false");
  EXPECT_EQ(provenance_name(Provenance::published_example), "published-example");
}

TEST(Certificate, WorkedExamplesPass) {
  for (const auto& c : {b_minus_example(), b_plus_example(), lcounter_example()}) {
    EXPECT_TRUE(c.overall()) << c.example_id() << "\n" << failures(c);
    EXPECT_GT(c.checks().size(), 5u);
  }
  EXPECT_TRUE(lcounter_example(3, 2).overall()) << failures(lcounter_example(3, 2));
}

TEST(Certificate, SuitesPass) {
  for (const auto& c : {schur_suite(), pullback_suite(), zariski_suite(), base_loci_suite(), chern_suite()}) {
    EXPECT_TRUE(c.overall()) << c.example_id() << "\n" << failures(c);
  }
}

TEST(Certificate, SeededSuitesAreDeterministic) {
  EXPECT_EQ(fingerprint(zariski_suite(5, 30)), fingerprint(zariski_suite(5, 30)));
  EXPECT_EQ(fingerprint(base_loci_suite(5, 30)), fingerprint(base_loci_suite(5, 30)));
  EXPECT_EQ(fingerprint(chern_suite(5, 30)), fingerprint(chern_suite(5, 30)));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_TRUE(zariski_suite(seed, 50).overall()) << seed;
    EXPECT_TRUE(base_loci_suite(seed, 50).overall()) << seed;
    EXPECT_TRUE(chern_suite(seed, 50).overall()) << seed;
  }
}

TEST(RandomInputs, DrawsStayInRange) {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 1000; ++i) {
    const long v = draw(rng, -3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
    const Rational q = draw_rational(rng, 5, 3);
    EXPECT_LE(abs(q.get_num()), 5);
    EXPECT_LE(q.get_den(), 3);
  }
  const LatticePtr x = load_surface("p2-double-blowup");
  const auto nef = double_blowup_nef_generators(x);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(psef_test(random_psef_class(x, nef, rng)));
    const SplitBundle e = random_split_bundle(x, rng);
    EXPECT_GE(e.rank(), 1u);
    EXPECT_LE(e.rank(), 3u);
    for (const auto& d : e.summands()) EXPECT_TRUE(d.is_integral());
    for (const auto& t : e.twist().coeffs()) EXPECT_LE(t.get_den(), 4);
  }
}
