#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vpos/base_loci.hpp"
#include "vpos/certificates.hpp"
#include "vpos/errors.hpp"
#include "vpos/schur.hpp"
#include "vpos/surface_config.hpp"

using namespace vpos;

namespace {

class BaseLoci : public ::testing::Test {
 protected:
  LatticePtr x = load_surface("p2-double-blowup");
  DivisorClass cls(const char* text) const { return parse_class(x, text); }
  SplitBundle bundle(const char* text) const { return parse_split_bundle(x, text); }
};

BaseLocus curves(std::set<std::string> labels) { return BaseLocus::curves(std::move(labels)); }

}  // namespace

TEST(BaseLocusOrder, EmptyCurvesWhole) {
  EXPECT_EQ(BaseLocus::curves({}), BaseLocus::empty());
  EXPECT_TRUE(BaseLocus::empty().subset_of(curves({"Fb"})));
  EXPECT_TRUE(curves({"Fb"}).subset_of(curves({"Fb", "Fp"})));
  EXPECT_FALSE(curves({"Fp"}).subset_of(curves({"Fb"})));
  EXPECT_TRUE(curves({"Fb"}).subset_of(BaseLocus::whole()));
  EXPECT_FALSE(BaseLocus::whole().subset_of(curves({"Fb"})));
  EXPECT_EQ(curves({"Fb"}).unite(curves({"Fp"})), curves({"Fb", "Fp"}));
  EXPECT_EQ(curves({"Fb"}).unite(BaseLocus::whole()), BaseLocus::whole());
  EXPECT_EQ(curves({"Fp", "Fb"}).to_string(), "{Fb,Fp}");
  EXPECT_EQ(BaseLocus::empty().to_string(), "empty");
  EXPECT_EQ(BaseLocus::whole().to_string(), "whole");
  EXPECT_TRUE(BaseLocus::whole().contains("anything"));
}

TEST_F(BaseLoci, DivisorExamples) {
  EXPECT_EQ(b_minus_divisor(cls("L+Fb")), curves({"Fb"}));
  EXPECT_EQ(b_minus_divisor(cls("L+Fb+Fp")), curves({"Fb", "Fp"}));
  EXPECT_EQ(b_minus_divisor(DivisorClass::zero(x)), BaseLocus::empty());
  EXPECT_EQ(b_plus_divisor(cls("C+2Fp")), curves({"Fp"}));
  EXPECT_EQ(b_plus_divisor(cls("C+Fb+2Fp")), curves({"Fb", "Fp"}));
  EXPECT_EQ(b_plus_divisor(cls("6L-2Fb-3Fp")), BaseLocus::empty());
  EXPECT_EQ(b_plus_divisor(cls("L")), curves({"Fb", "Fp"}));
  EXPECT_EQ(b_plus_divisor(cls("Fb")), BaseLocus::whole());
  EXPECT_EQ(b_minus_divisor(cls("-L")), BaseLocus::whole());
  EXPECT_EQ(b_minus_divisor(cls("Fb")), curves({"Fb"}));
}

TEST_F(BaseLoci, ExtensionPathologies) {
  // Sub O(L+Fb) and quotient O_X of an extension with middle term O(L+Fb+Fp).
  const BaseLocus sub_quot = b_minus_divisor(cls("L+Fb")).unite(b_minus_divisor(DivisorClass::zero(x)));
  EXPECT_FALSE(b_minus_divisor(cls("L+Fb+Fp")).subset_of(sub_quot));
  EXPECT_EQ(b_minus_bundle(bundle("O(L+Fb),O")), curves({"Fb"}));
  // The ample quotient A does not hide Fb: it is outside both summand loci.
  const BaseLocus plus = b_plus_bundle(bundle("O(C+2Fp)⊕O(6L-2Fb-3Fp)"));
  EXPECT_EQ(plus, curves({"Fp"}));
  EXPECT_FALSE(plus.contains("Fb"));
  EXPECT_TRUE(b_plus_divisor(cls("C+Fb+2Fp")).contains("Fb"));
}

TEST_F(BaseLoci, AmplePerturbationCharacterizesAugmentedLocus) {
  // On a surface B+(D) = B-(D - eps A) for all small eps > 0.
  const DivisorClass a = x->polarization();
  const Rational eps = fraction(1, 997);
  Rng rng(53);
  const auto nef = double_blowup_nef_generators(x);
  for (int i = 0; i < 150; ++i) {
    const DivisorClass d = random_psef_class(x, nef, rng);
    EXPECT_EQ(b_plus_divisor(d), b_minus_divisor(d - a * eps)) << d.to_string();
    // B- is the intersection of B+ of small ample perturbations.
    EXPECT_TRUE(b_minus_divisor(d).subset_of(b_plus_divisor(d))) << d.to_string();
    EXPECT_EQ(b_minus_divisor(d), b_plus_divisor(d + a * eps)) << d.to_string();
  }
}

TEST_F(BaseLoci, ParsesBundles) {
  const SplitBundle e = bundle("O(L+Fb) ⊕ O ⊕ Fp^2 <1/2L>");
  ASSERT_EQ(e.rank(), 4u);
  EXPECT_EQ(e.summands()[0], cls("L+Fb"));
  EXPECT_TRUE(e.summands()[1].is_zero());
  EXPECT_EQ(e.summands()[3], cls("Fp"));
  EXPECT_EQ(e.twist(), cls("1/2L"));
  EXPECT_EQ(e.to_string(), "O(L+Fb),O,O(Fp),O(Fp) <1/2L>");
  EXPECT_EQ(parse_split_bundle(x, e.to_string()), e);
  EXPECT_EQ(bundle("O^3").rank(), 3u);
  for (const char* bad : {"", "O(L", "O(1/2L)", "O^0", "O,,O", "O <L", "O <L> x", "O(Q)"}) {
    EXPECT_THROW(parse_split_bundle(x, bad), ParseError) << bad;
  }
}

TEST_F(BaseLoci, SymmetricPowerRankAndSummands) {
  for (int r = 1; r <= 4; ++r) {
    std::vector<DivisorClass> summands;
    for (int k = 0; k < r; ++k) summands.push_back(cls("L") * Rational(k));
    const SplitBundle e(summands, cls("1/3Fp"));
    for (int c = 1; c <= 4; ++c) {
      const SplitBundle s = sym_power(e, c);
      EXPECT_EQ(Integer(static_cast<long>(s.rank())), binomial(r + c - 1, c));
      EXPECT_EQ(Integer(static_cast<long>(s.rank())), oracle::schur_dim({c}, r));
      EXPECT_EQ(s.twist(), cls("1/3Fp") * Rational(c));
    }
  }
  const SplitBundle s2 = sym_power(bundle("O(L),O(Fb)"), 2);
  EXPECT_EQ(s2.to_string(), "O(2L),O(L+Fb),O(2Fb)");
  EXPECT_THROW(sym_power(bundle("O"), 0), std::invalid_argument);
}

TEST_F(BaseLoci, LawsOnRandomBundles) {
  Rng rng(59);
  for (int i = 0; i < 80; ++i) {
    const SplitBundle e = random_split_bundle(x, rng);
    const SplitBundle f = random_split_bundle(x, rng, e.twist());
    // Direct sums unite loci.
    const SplitBundle ef = direct_sum(e, f);
    EXPECT_EQ(b_minus_bundle(ef), b_minus_bundle(e).unite(b_minus_bundle(f)));
    EXPECT_EQ(b_plus_bundle(ef), b_plus_bundle(e).unite(b_plus_bundle(f)));
    // The minus locus sits inside the plus locus.
    EXPECT_TRUE(b_minus_bundle(e).subset_of(b_plus_bundle(e)));
    // Symmetric powers have the same loci.
    for (int c : {2, 3}) {
      EXPECT_EQ(b_minus_bundle(sym_power(e, c)), b_minus_bundle(e)) << e.to_string();
      EXPECT_EQ(b_plus_bundle(sym_power(e, c)), b_plus_bundle(e)) << e.to_string();
    }
    // Moving an integral piece between summands and twist changes nothing.
    const DivisorClass shift(x, {Rational(draw(rng, -2, 2)), Rational(draw(rng, -2, 2)), Rational(draw(rng, -2, 2))});
    const SplitBundle moved = e.absorb_twist(shift);
    EXPECT_EQ(b_minus_bundle(moved), b_minus_bundle(e));
    EXPECT_EQ(b_plus_bundle(moved), b_plus_bundle(e));
    EXPECT_EQ(v_psef(e), !b_minus_bundle(e).is_whole());
    EXPECT_TRUE(!v_big(e) || v_psef(e));
  }
}

TEST_F(BaseLoci, TensorWithNefKeepsMinusLocusSmall) {
  Rng rng(61);
  const auto nef = double_blowup_nef_generators(x);
  for (int i = 0; i < 60; ++i) {
    const SplitBundle e = random_split_bundle(x, rng);
    const DivisorClass n = nef[static_cast<std::size_t>(draw(rng, 0, 2))] * Rational(draw(rng, 1, 2));
    const SplitBundle t = tensor(e, SplitBundle({n}));
    EXPECT_TRUE(b_minus_bundle(t).subset_of(b_minus_bundle(e))) << e.to_string() << " x " << n.to_string();
    ASSERT_EQ(t.rank(), e.rank());
  }
  EXPECT_THROW(direct_sum(bundle("O <L>"), bundle("O")), std::invalid_argument);
}

TEST(PullbackLaws, BlowdownToThePlane) {
  const BlowUp b = double_blowup_from_p2();
  const LatticePtr p2 = load_surface("p2");
  for (int d = -2; d <= 5; ++d) {
    const SplitBundle e({parse_class(p2, "L") * Rational(d)});
    const LawCheck plus = b_plus_pullback_law(b.blowdown, e);
    const LawCheck minus = b_minus_pullback_law(b.blowdown, e);
    EXPECT_TRUE(plus.holds) << d << ": " << plus.lhs.to_string() << " vs " << plus.rhs.to_string();
    EXPECT_TRUE(minus.holds) << d;
    EXPECT_EQ(plus.lhs, d >= 1 ? curves({"Fb", "Fp"}) : BaseLocus::whole()) << d;
    EXPECT_EQ(minus.lhs, d >= 0 ? BaseLocus::empty() : BaseLocus::whole()) << d;
  }
  const SplitBundle mixed({parse_class(p2, "L"), parse_class(p2, "2L")}, parse_class(p2, "-1/2L"));
  EXPECT_TRUE(b_plus_pullback_law(b.blowdown, mixed).holds);
  EXPECT_TRUE(b_minus_pullback_law(b.blowdown, mixed).holds);
}

TEST(PullbackLaws, PreimageOfCurvesOnThePlane) {
  const BlowUp b = double_blowup_from_p2();
  EXPECT_EQ(preimage(b.blowdown, curves({"line"})), curves({"Fb", "Fp", "line"}));
  EXPECT_EQ(preimage(b.blowdown, BaseLocus::empty()), BaseLocus::empty());
  EXPECT_EQ(preimage(b.blowdown, BaseLocus::whole()), BaseLocus::whole());
}
