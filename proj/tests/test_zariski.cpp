#include <gtest/gtest.h>

#include <functional>

#include "vpos/certificates.hpp"
#include "vpos/errors.hpp"
#include "vpos/surface_config.hpp"
#include "vpos/zariski.hpp"

using namespace vpos;

namespace {

class Zariski : public ::testing::Test {
 protected:
  LatticePtr x = load_surface("p2-double-blowup");
  DivisorClass cls(const char* text) const { return parse_class(x, text); }

  ZariskiDecomposition decompose(const char* text) const {
    const ZariskiResult r = zariski_decompose(cls(text));
    const auto* z = as_decomposition(r);
    EXPECT_NE(z, nullptr) << text;
    return z ? *z : ZariskiDecomposition{cls(text), cls(text), {}};
  }
};

/// Fujita's characterization: N is the least effective combination of catalog
/// curves with D - N nef. Searched over a grid with step 1/step.
std::optional<Vector> least_negative_part(const DivisorClass& d, int step, int bound) {
  const auto& lattice = d.lattice_ptr();
  const std::size_t n = lattice->curves().size();
  std::vector<Vector> admissible;
  Vector x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      DivisorClass rest = d;
      for (std::size_t k = 0; k < n; ++k) rest = rest - lattice->curve(k) * x[k];
      if (nef_test(rest)) admissible.push_back(x);
      return;
    }
    for (int v = 0; v <= bound * step; ++v) {
      x[i] = fraction(v, step);
      rec(i + 1);
    }
  };
  rec(0);
  for (const auto& candidate : admissible) {
    bool least = true;
    for (const auto& other : admissible) {
      for (std::size_t k = 0; k < n && least; ++k) least = candidate[k] <= other[k];
      if (!least) break;
    }
    if (least) return candidate;
  }
  return std::nullopt;
}

}  // namespace

TEST_F(Zariski, WorkedDecompositions) {
  auto z = decompose("L+Fb");
  EXPECT_EQ(z.positive, cls("L"));
  EXPECT_EQ(z.negative, (std::map<std::string, Rational>{{"Fb", 1}}));

  z = decompose("L+Fb+Fp");
  EXPECT_EQ(z.positive, cls("L"));
  EXPECT_EQ(z.negative, (std::map<std::string, Rational>{{"Fb", 1}, {"Fp", 1}}));

  z = decompose("C+2Fp");
  EXPECT_EQ(z.positive, cls("C"));
  EXPECT_EQ(z.negative, (std::map<std::string, Rational>{{"Fp", 2}}));

  z = decompose("C+Fb+2Fp");
  EXPECT_EQ(z.positive, cls("2L"));
  EXPECT_EQ(z.negative, (std::map<std::string, Rational>{{"Fp", 1}}));
  EXPECT_EQ(z.support(), (std::set<std::string>{"Fp"}));
  EXPECT_EQ(z.negative_class(), cls("Fp"));

  z = decompose("6L-2Fb-3Fp");
  EXPECT_EQ(z.positive, cls("6L-2Fb-3Fp"));
  EXPECT_TRUE(z.negative.empty());
}

TEST_F(Zariski, FractionalAndChainedSupports) {
  // (2L-Fp).Fb = -1 against Fb^2 = -2 leaves half of Fb.
  auto z = decompose("2L-Fp");
  EXPECT_EQ(z.negative, (std::map<std::string, Rational>{{"Fb", fraction(1, 2)}}));
  EXPECT_EQ(z.positive, cls("2L-1/2Fb-Fp"));
  EXPECT_TRUE(check_invariants(z).all());
  // Removing 2Fp alone makes the class negative on Fb, so the support grows.
  z = decompose("2L+Fb+3Fp");
  EXPECT_EQ(z.negative, (std::map<std::string, Rational>{{"Fb", 1}, {"Fp", 3}}));
  EXPECT_TRUE(check_invariants(z).all());
  z = decompose("L+2Fp");
  EXPECT_EQ(z.negative, (std::map<std::string, Rational>{{"Fp", 2}}));
  EXPECT_EQ(z.positive, cls("L"));
}

TEST_F(Zariski, NotPseudoeffective) {
  for (const char* text : {"-L", "-Fb", "Fb-Fp-L", "L-2Fb-4Fp-line"}) {
    const ZariskiResult r = zariski_decompose(cls(text));
    EXPECT_TRUE(std::holds_alternative<NotPseudoeffective>(r)) << text;
  }
}

TEST_F(Zariski, BigTest) {
  EXPECT_TRUE(big_test(cls("C")));
  EXPECT_TRUE(big_test(cls("L")));
  EXPECT_TRUE(big_test(cls("C+Fb+2Fp")));
  EXPECT_FALSE(big_test(cls("Fb")));
  EXPECT_FALSE(big_test(cls("line+Fb")));
  EXPECT_FALSE(big_test(cls("-L")));
  EXPECT_FALSE(big_test(DivisorClass::zero(x)));
}

TEST_F(Zariski, AgreesWithFujitaCharacterization) {
  Rng rng(41);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    const DivisorClass d(x, {Rational(draw(rng, 0, 3)), Rational(draw(rng, -2, 3)), Rational(draw(rng, -2, 3))});
    const ZariskiResult r = zariski_decompose(d);
    const auto* z = as_decomposition(r);
    if (!z) {
      EXPECT_FALSE(psef_test(d)) << d.to_string();
      continue;
    }
    const auto oracle_n = least_negative_part(d, 2, 5);
    ASSERT_TRUE(oracle_n.has_value()) << d.to_string();
    for (std::size_t k = 0; k < x->curves().size(); ++k) {
      const auto it = z->negative.find(x->curves()[k].label);
      const Rational mult = it == z->negative.end() ? Rational(0) : it->second;
      EXPECT_EQ(mult, (*oracle_n)[k]) << d.to_string() << " curve " << x->curves()[k].label;
    }
    ++checked;
  }
  EXPECT_GE(checked, 15);
}

TEST_F(Zariski, PropertiesOnRandomPsefClasses) {
  Rng rng(43);
  const auto nef = double_blowup_nef_generators(x);
  for (int i = 0; i < 150; ++i) {
    const DivisorClass d = random_psef_class(x, nef, rng);
    const ZariskiResult r = zariski_decompose(d);
    const auto* z = as_decomposition(r);
    ASSERT_NE(z, nullptr) << d.to_string();
    EXPECT_TRUE(check_invariants(*z).all()) << d.to_string();
    // Idempotent on the positive part and homogeneous.
    const ZariskiResult rp = zariski_decompose(z->positive);
    const auto* zp = as_decomposition(rp);
    ASSERT_NE(zp, nullptr);
    EXPECT_EQ(zp->positive, z->positive);
    EXPECT_TRUE(zp->negative.empty());
    const Rational c = fraction(draw(rng, 1, 7), draw(rng, 1, 4));
    const ZariskiResult rc = zariski_decompose(d * c);
    const auto* zc = as_decomposition(rc);
    ASSERT_NE(zc, nullptr);
    EXPECT_EQ(zc->positive, z->positive * c);
    // Nef classes decompose trivially.
    if (nef_test(d)) {
      EXPECT_TRUE(z->negative.empty());
    }
  }
}

TEST(ZariskiCatalog, MissingCurveIsReported) {
  // Same surface with Fp kept as a Mori generator but left out of the catalog.
  LatticeData data = load_surface("p2-double-blowup")->data();
  std::erase_if(data.curves, [](const CurveRecord& c) { return c.label == "Fp"; });
  const LatticePtr partial = SurfaceLattice::create(data);
  EXPECT_THROW(zariski_decompose(parse_class(partial, "C+2Fp")), InvariantViolation);
}
