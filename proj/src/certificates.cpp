#include "vpos/certificates.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "vpos/chern_ring.hpp"
#include "vpos/linalg.hpp"
#include "vpos/schur.hpp"
#include "vpos/split_cohomology.hpp"
#include "vpos/surface_config.hpp"
#include "vpos/zariski.hpp"

namespace vpos {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::published_example:
      return "published-example";
    case Provenance::derived:
      return "derived";
    case Provenance::immediate:
      return "immediate";
  }
  return "unknown";
}

void VerificationCertificate::check(std::string description, std::string expected, Provenance provenance,
                                    std::string computed) {
  const bool pass = expected == computed;
  checks_.push_back({std::move(description), std::move(expected), provenance, std::move(computed), pass});
}

void VerificationCertificate::check(std::string description, bool expected, Provenance provenance, bool computed) {
  check(std::move(description), std::string(expected ? "true" : "false"), provenance,
        std::string(computed ? "true" : "false"));
}

bool VerificationCertificate::overall() const {
  return !checks_.empty() && std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// Random inputs

long draw(Rng& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("draw: empty range");
  const auto span = static_cast<unsigned long long>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rational draw_rational(Rng& rng, long bound, long max_den) {
  return fraction(draw(rng, -bound, bound), draw(rng, 1, max_den));
}

DivisorClass random_psef_class(const LatticePtr& lattice, const std::vector<DivisorClass>& nef_classes, Rng& rng) {
  std::vector<DivisorClass> pool = lattice->mori_generators();
  pool.insert(pool.end(), nef_classes.begin(), nef_classes.end());
  for (;;) {
    DivisorClass d = DivisorClass::zero(lattice);
    for (const auto& g : pool) {
      // Roughly half the generators are left out so that boundary classes show up.
      if (draw(rng, 0, 1) == 0) continue;
      d = d + g * fraction(draw(rng, 1, 6), draw(rng, 1, 4));
    }
    if (!d.is_zero()) return d;
  }
}

namespace {

DivisorClass random_integral_class(const LatticePtr& lattice, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < lattice->rank(); ++i) v.push_back(Rational(draw(rng, -3, 3)));
  return {lattice, std::move(v)};
}

DivisorClass random_twist(const LatticePtr& lattice, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < lattice->rank(); ++i) v.push_back(draw_rational(rng, 4, 4));
  return {lattice, std::move(v)};
}

}  // namespace

SplitBundle random_split_bundle(const LatticePtr& lattice, Rng& rng, const DivisorClass& twist,
                                std::size_t max_rank) {
  const auto rank = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(max_rank)));
  std::vector<DivisorClass> summands;
  for (std::size_t i = 0; i < rank; ++i) summands.push_back(random_integral_class(lattice, rng));
  return {std::move(summands), twist};
}

SplitBundle random_split_bundle(const LatticePtr& lattice, Rng& rng, std::size_t max_rank) {
  const DivisorClass twist = random_twist(lattice, rng);
  return random_split_bundle(lattice, rng, twist, max_rank);
}

BlowUp double_blowup_from_p2() {
  const LatticePtr p2 = load_surface("p2");
  const BlowUp first = blow_up(p2, std::string("line"), "Fb");
  const BlowUp second = blow_up_through(first.surface, {"Fb", "line"}, "Fp");
  return {second.surface, compose(first.blowdown, second.blowdown)};
}

std::vector<DivisorClass> double_blowup_nef_generators(const LatticePtr& x) {
  return {parse_class(x, "L"), parse_class(x, "L-Fb-Fp"), parse_class(x, "2L-Fb-2Fp")};
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return to_string(z); }
std::string str(long v) { return std::to_string(v); }

std::string decomposition_text(const ZariskiResult& r) {
  const auto* z = as_decomposition(r);
  if (!z) return "not pseudoeffective";
  std::string n = "{";
  for (const auto& [label, mult] : z->negative) {
    if (n.size() > 1) n += ',';
    n += label + ":" + to_string(mult);
  }
  return "P=" + z->positive.to_string() + " N=" + n + "}";
}

std::string ratio(long ok, long total) { return std::to_string(ok) + "/" + std::to_string(total); }

/// Tallies one property over a suite and remembers the first failing case.
class Tally {
 public:
  explicit Tally(std::string description) : description_(std::move(description)) {}
  void record(bool ok, const std::function<std::string()>& describe_case) {
    ++total_;
    if (ok) {
      ++passed_;
    } else if (first_failure_.empty()) {
      first_failure_ = describe_case();
    }
  }
  void report(VerificationCertificate& cert, Provenance provenance) const {
    cert.check(description_, ratio(total_, total_), provenance, ratio(passed_, total_));
    if (!first_failure_.empty()) cert.note(description_ + ": first failure " + first_failure_);
  }

 private:
  std::string description_;
  long total_ = 0;
  long passed_ = 0;
  std::string first_failure_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Worked examples

VerificationCertificate b_minus_example() {
  VerificationCertificate cert("b-minus-example");
  const LatticePtr x = load_surface("p2-double-blowup");
  const auto cls = [&](const char* text) { return parse_class(x, text); };
  const DivisorClass fb = cls("Fb"), fp = cls("Fp");
  cert.parameter("surface", x->name());

  cert.check("(Fb^2)", "-2", Provenance::derived, str(intersect(fb, fb)));
  cert.check("(Fp^2)", "-1", Provenance::published_example, str(intersect(fp, fp)));
  cert.check("(Fb.Fp)", "1", Provenance::derived, str(intersect(fb, fp)));

  const DivisorClass d1 = cls("L+Fb"), d2 = cls("L+Fb+Fp");
  cert.check("Zariski decomposition of L+Fb", "P=L N={Fb:1}", Provenance::published_example,
             decomposition_text(zariski_decompose(d1)));
  cert.check("Zariski decomposition of L+Fb+Fp", "P=L N={Fb:1,Fp:1}", Provenance::published_example,
             decomposition_text(zariski_decompose(d2)));
  cert.check("L is nef", true, Provenance::immediate, nef_test(cls("L")));
  cert.check("((L+Fb+Fp).Fp), the degree of the torsion quotient", "0", Provenance::published_example, str(intersect(d2, fp)));

  const BaseLocus b1 = b_minus_divisor(d1), b2 = b_minus_divisor(d2), b0 = b_minus_divisor(DivisorClass::zero(x));
  cert.check("B-(L+Fb)", "{Fb}", Provenance::published_example, b1.to_string());
  cert.check("B-(L+Fb+Fp)", "{Fb,Fp}", Provenance::published_example, b2.to_string());
  cert.check("B-(O_X)", "empty", Provenance::published_example, b0.to_string());
  const SplitBundle sub_plus_quotient = parse_split_bundle(x, "O(L+Fb),O");
  cert.check("B-(O(L+Fb)+O_X)", "{Fb}", Provenance::derived, b_minus_bundle(sub_plus_quotient).to_string());
  cert.check("B-(L+Fb+Fp) is not contained in B-(L+Fb) u B-(O_X)", true, Provenance::published_example,
             !b2.subset_of(b1.unite(b0)));
  cert.note("The rank-2 extension E of O_X by O(L+Fb) has O(L+Fb+Fp) as a quotient, so B-(L+Fb+Fp) lies in B-(E); "
            "E itself is not split and is not computed.");
  return cert;
}

VerificationCertificate b_plus_example() {
  VerificationCertificate cert("b-plus-example");
  const LatticePtr x = load_surface("p2-double-blowup");
  const auto cls = [&](const char* text) { return parse_class(x, text); };
  const DivisorClass c = cls("C"), fb = cls("Fb"), fp = cls("Fp");
  cert.parameter("surface", x->name());
  cert.parameter("C", c.to_string());

  cert.check("(C^2)", "3", Provenance::published_example, str(intersect(c, c)));
  cert.check("(C.Fp)", "0", Provenance::published_example, str(intersect(c, fp)));
  cert.check("(Fp^2)", "-1", Provenance::published_example, str(intersect(fp, fp)));
  cert.check("(C.Fb)", "1", Provenance::published_example, str(intersect(c, fb)));
  cert.check("C is nef", true, Provenance::published_example, nef_test(c));

  const DivisorClass small = cls("C+2Fp"), large = cls("C+Fb+2Fp");
  cert.check("Zariski decomposition of C+2Fp", "P=" + c.to_string() + " N={Fp:2}", Provenance::published_example,
             decomposition_text(zariski_decompose(small)));
  cert.check("Fb in B+(C+2Fp)", false, Provenance::published_example, b_plus_divisor(small).contains("Fb"));
  cert.check("B+(C+2Fp)", "{Fp}", Provenance::derived, b_plus_divisor(small).to_string());

  cert.check("((C+Fb+2Fp).Fb)", "1", Provenance::published_example, str(intersect(large, fb)));
  const DivisorClass p = cls("C+Fb+Fp");
  cert.check("P=C+Fb+Fp is nef", true, Provenance::published_example, nef_test(p));
  cert.check("(P.Fb)", "0", Provenance::published_example, str(intersect(p, fb)));
  cert.check("(P.Fp)", "0", Provenance::published_example, str(intersect(p, fp)));
  cert.check("P is the pullback of a conic", "2L", Provenance::published_example, p.to_string());
  cert.check("Zariski decomposition of C+Fb+2Fp", "P=2L N={Fp:1}", Provenance::published_example,
             decomposition_text(zariski_decompose(large)));
  cert.check("Fb in B+(C+Fb+2Fp)", true, Provenance::published_example, b_plus_divisor(large).contains("Fb"));
  cert.check("B+(C+Fb+2Fp)", "{Fb,Fp}", Provenance::derived, b_plus_divisor(large).to_string());

  const DivisorClass rel = cls("-2Fb-3Fp");
  cert.check("((-2Fb-3Fp).Fb)", "1", Provenance::published_example, str(intersect(rel, fb)));
  const DivisorClass a = cls("6L-2Fb-3Fp");
  const DivisorClass line = cls("line");
  cert.check("A=6L-2Fb-3Fp is ample", true, Provenance::published_example, ample_test(a));
  cert.check("(A.Fb)", "1", Provenance::published_example, str(intersect(a, fb)));
  cert.check("(A.Fp)", "1", Provenance::derived, str(intersect(a, fp)));
  cert.check("(A.(L-Fb-2Fp))", "3", Provenance::derived, str(intersect(a, line)));
  cert.check("(A^2)", "31", Provenance::derived, str(intersect(a, a)));
  long least = 1;
  while (!ample_test(cls("L") * Rational(least) + rel) && least < 100) ++least;
  cert.check("least a with aL-2Fb-3Fp ample", "4", Provenance::derived, str(least));
  const BaseLocus ba = b_plus_divisor(a);
  cert.check("B+(A)", "empty", Provenance::published_example, ba.to_string());
  cert.check("Fb in B+(C+2Fp) u B+(A)", false, Provenance::published_example,
             b_plus_divisor(small).unite(ba).contains("Fb"));
  const SplitBundle split = parse_split_bundle(x, "O(C+2Fp),O(6L-2Fb-3Fp)");
  cert.check("B+(O(C+2Fp)+O(A))", "{Fp}", Provenance::derived, b_plus_bundle(split).to_string());
  cert.note("The rank-2 extension E of O(A) by O(C+2Fp) has O(C+Fb+2Fp) as a quotient, so Fb lies in B+(E) "
            "although it lies in neither B+(C+2Fp) nor B+(A); E itself is not split and is not computed.");
  return cert;
}

VerificationCertificate lcounter_example(int n_max, int l_max) {
  VerificationCertificate cert("l-counter");
  cert.parameter("n-max", str(static_cast<long>(n_max)));
  cert.parameter("l-max", str(static_cast<long>(l_max)));

  const GradedClass ch = ch_lcounter_bundle();
  const auto chern = chern_classes(ch);
  cert.check("ch(E)", "2 + h - 13/2h^2", Provenance::derived, ch.to_string());
  cert.check("deg det E = det_twist(2, 3, -1)", "1", Provenance::published_example, str(det_twist(2, 3, -1)));
  cert.check("c1(E) from the Chern character", str(det_twist(2, 3, -1)), Provenance::derived,
             str(chern[1].component(1)[0]));
  cert.check("c2(E) from the Chern character", "7", Provenance::derived, str(chern[2].component(2)[0]));
  cert.check("det E = O(1) is big", true, Provenance::immediate, big_test(parse_class(load_surface("p2"), "L")));

  const RingPtr p2 = ch.ring();
  long chi_ok = 0, chi_stated_ok = 0, h1_ok = 0, cases = 0;
  for (int n = 2; n <= n_max; ++n) {
    for (int l = 1; l <= l_max; ++l) {
      const LcounterSequence s = lcounter_sequence(n, l);
      cert.check("h0(S^" + std::to_string(n * l) + "E(" + std::to_string(l) + ")) n=" + std::to_string(n) +
                     " l=" + std::to_string(l),
                 "0", Provenance::published_example, str(s.h0_quotient));
      ++cases;
      if (s.h1_left == 0) ++h1_ok;
      const DivisorClass twist_l(p2->degree_one_lattice(), Vector{Rational(l)});
      const GradedClass quotient = sym_power_ch(ch, n * l) * exp_series(GradedClass::from_divisor(p2, twist_l));
      const Rational chi_hrr = euler_characteristic(quotient);
      const Integer chi_middle = vpos::euler_characteristic(s.middle);
      if (chi_hrr == Rational(chi_middle - vpos::euler_characteristic(s.left))) ++chi_ok;
      const SplitDegrees stated_left =
          SplitDegrees::uniform(2, s.stated_left_degree, s.left.rank());
      if (chi_hrr == Rational(chi_middle - vpos::euler_characteristic(stated_left))) ++chi_stated_ok;
    }
  }
  cert.check("h1 of the left term vanishes", ratio(cases, cases), Provenance::immediate, ratio(h1_ok, cases));
  cert.check("chi additivity with left degree l-nl-3 (HRR for the quotient)", ratio(cases, cases),
             Provenance::derived, ratio(chi_ok, cases));
  cert.note("left degree recomputed from the displayed sequence: l-nl-3; middle degree: l-nl");
  cert.note("the stated left degree 2l-nl-4 agrees with the recomputed one only when l = 1 and satisfies chi "
            "additivity in " + ratio(chi_stated_ok, cases) + " cases; the vanishing holds under either.");
  return cert;
}

// ---------------------------------------------------------------------------
// Suites

VerificationCertificate schur_suite(int max_weight, int max_rank, int witness_bound) {
  using namespace schur;
  VerificationCertificate cert("schur-suite");
  cert.parameter("max-weight", str(static_cast<long>(max_weight)));
  cert.parameter("max-rank", str(static_cast<long>(max_rank)));
  cert.parameter("witness-bound", str(static_cast<long>(witness_bound)));

  Tally checksum("sum of f^lambda dim_r(lambda) equals r^n");
  for (int n = 1; n <= max_weight; ++n) {
    for (int r = 1; r <= max_rank; ++r) {
      Integer total = 0;
      for (const auto& s : tensor_power_decomposition(n, r)) total += s.tableau_multiplicity * s.dimension;
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
      checksum.record(total == expected, [&] { return "n=" + std::to_string(n) + " r=" + std::to_string(r); });
    }
  }
  checksum.report(cert, Provenance::derived);

  const int small = std::min(max_weight, 6);
  Tally hook("hook length formula equals K(lambda, 1^n)");
  Tally pieri("K(lambda, mu) equals the coefficient of s_lambda in h_mu");
  for (int n = 1; n <= small; ++n) {
    const auto all = partitions(n, n);
    for (const auto& lambda : all) {
      hook.record(num_standard_tableaux(lambda) == kostka(lambda, std::vector<int>(static_cast<std::size_t>(n), 1)),
                  [&] { return lambda.to_string(); });
      for (const auto& mu : all) {
        const SchurExpansion h = complete_product(mu.parts());
        const auto it = h.find(lambda);
        const Integer coefficient = it == h.end() ? Integer(0) : it->second;
        pieri.record(coefficient == kostka(lambda, mu.parts()),
                     [&] { return lambda.to_string() + " " + mu.to_string(); });
      }
    }
  }
  hook.report(cert, Provenance::derived);
  pieri.report(cert, Provenance::derived);

  Tally summand("Pieri summand certificate is at least 1");
  for (int n = 1; n <= max_weight; ++n) {
    for (int r = 1; r <= max_rank; ++r) {
      for (const auto& lambda : partitions(n, r)) {
        summand.record(pieri_summand_certificate(lambda, r) >= 1,
                       [&] { return lambda.to_string() + " r=" + std::to_string(r); });
      }
    }
  }
  summand.report(cert, Provenance::derived);

  Tally witness("2M - m sum(a) = M + sum(b)/q >= M");
  for (long big_m = 1; big_m <= witness_bound; ++big_m) {
    for (long q = 1; q <= witness_bound; ++q) {
      const auto shapes = partitions(static_cast<int>(big_m * q), static_cast<int>(big_m * q));
      for (long m = 1; m <= witness_bound; ++m) {
        for (const auto& lambda : shapes) {
          witness.record(witness_exponents(lambda, m, q, big_m).holds(), [&] {
            return lambda.to_string() + " m=" + std::to_string(m) + " q=" + std::to_string(q) +
                   " M=" + std::to_string(big_m);
          });
        }
      }
    }
  }
  witness.report(cert, Provenance::derived);
  return cert;
}

VerificationCertificate zariski_suite(std::uint64_t seed, int cases) {
  VerificationCertificate cert("zariski-suite");
  cert.parameter("seed", std::to_string(seed));
  cert.parameter("cases", str(static_cast<long>(cases)));
  const LatticePtr x = load_surface("p2-double-blowup");
  const auto nef = double_blowup_nef_generators(x);
  const DivisorClass a = x->polarization();
  Rng rng(seed);

  Tally decomposes("psef input decomposes");
  Tally invariants("all five decomposition invariants hold");
  Tally idempotent("the positive part is its own decomposition");
  Tally scaling("decomposition scales with positive rational factors");
  Tally monotone("support of N(d + eps A) lies in support of N(d) for eps = 1/10, 1/100");
  for (int i = 0; i < cases; ++i) {
    const DivisorClass d = random_psef_class(x, nef, rng);
    const Rational c = fraction(draw(rng, 1, 9), draw(rng, 1, 4));
    const auto describe = [&] { return "case " + std::to_string(i) + ": " + d.to_string(); };
    const ZariskiResult r = zariski_decompose(d);
    const auto* z = as_decomposition(r);
    decomposes.record(z != nullptr, describe);
    if (!z) continue;
    invariants.record(check_invariants(*z).all(), describe);

    const ZariskiResult rp = zariski_decompose(z->positive);
    const auto* zp = as_decomposition(rp);
    idempotent.record(zp && zp->negative.empty() && zp->positive == z->positive, describe);

    const ZariskiResult rc = zariski_decompose(d * c);
    const auto* zc = as_decomposition(rc);
    bool scales = zc && zc->positive == z->positive * c && zc->negative.size() == z->negative.size();
    if (scales) {
      for (const auto& [label, mult] : z->negative) {
        const auto it = zc->negative.find(label);
        scales = scales && it != zc->negative.end() && it->second == mult * c;
      }
    }
    scaling.record(scales, describe);

    bool nested = true;
    for (const Rational& eps : {Rational(1, 10), Rational(1, 100)}) {
      const ZariskiResult re = zariski_decompose(d + a * eps);
      const auto* ze = as_decomposition(re);
      const auto sup = ze ? ze->support() : std::set<std::string>{};
      const auto base = z->support();
      nested = nested && ze && std::includes(base.begin(), base.end(), sup.begin(), sup.end());
    }
    monotone.record(nested, describe);
  }
  decomposes.report(cert, Provenance::immediate);
  invariants.report(cert, Provenance::immediate);
  idempotent.report(cert, Provenance::immediate);
  scaling.report(cert, Provenance::immediate);
  monotone.report(cert, Provenance::immediate);
  return cert;
}

VerificationCertificate base_loci_suite(std::uint64_t seed, int cases) {
  VerificationCertificate cert("base-loci-suite");
  cert.parameter("seed", std::to_string(seed));
  cert.parameter("cases", str(static_cast<long>(cases)));
  const LatticePtr x = load_surface("p2-double-blowup");
  Rng rng(seed);

  Tally direct("B+-(E+F) equals B+-(E) u B+-(F)");
  Tally chain("B-(E) lies in B+(E)");
  Tally homogeneous("B+-(S^c E) equals B+-(E) for c = 2, 3");
  Tally tensor_law("B+-(E x F) lies in B+-(E) u B-(F)");
  Tally twist_law("loci are unchanged by absorbing an integral twist");
  for (int i = 0; i < cases; ++i) {
    const SplitBundle e = random_split_bundle(x, rng);
    const SplitBundle f = random_split_bundle(x, rng, e.twist());
    const SplitBundle g = random_split_bundle(x, rng);
    Vector shift;
    for (std::size_t k = 0; k < x->rank(); ++k) shift.push_back(Rational(draw(rng, -2, 2)));
    const DivisorClass integral_shift(x, shift);
    const auto describe = [&] {
      return "case " + std::to_string(i) + ": E=" + e.to_string() + " F=" + f.to_string() + " G=" + g.to_string();
    };

    const BaseLocus em = b_minus_bundle(e), ep = b_plus_bundle(e);
    const BaseLocus fm = b_minus_bundle(f), fp = b_plus_bundle(f);
    const SplitBundle ef = direct_sum(e, f);
    direct.record(b_minus_bundle(ef) == em.unite(fm) && b_plus_bundle(ef) == ep.unite(fp), describe);
    chain.record(em.subset_of(ep), describe);
    bool homog = true;
    for (int c : {2, 3}) {
      const SplitBundle s = sym_power(e, c);
      homog = homog && b_minus_bundle(s) == em && b_plus_bundle(s) == ep;
    }
    homogeneous.record(homog, describe);
    const SplitBundle eg = tensor(e, g);
    const BaseLocus gm = b_minus_bundle(g);
    tensor_law.record(b_minus_bundle(eg).subset_of(em.unite(gm)) && b_plus_bundle(eg).subset_of(ep.unite(gm)),
                      describe);
    const SplitBundle moved = e.absorb_twist(integral_shift);
    twist_law.record(b_minus_bundle(moved) == em && b_plus_bundle(moved) == ep, describe);
  }
  direct.report(cert, Provenance::immediate);
  chain.report(cert, Provenance::immediate);
  homogeneous.report(cert, Provenance::immediate);
  tensor_law.report(cert, Provenance::immediate);
  twist_law.report(cert, Provenance::immediate);
  return cert;
}

VerificationCertificate pullback_suite(int d_min, int d_max) {
  VerificationCertificate cert("pullback-suite");
  cert.parameter("d-range", str(static_cast<long>(d_min)) + ".." + str(static_cast<long>(d_max)));
  const BlowUp x = double_blowup_from_p2();
  const BlowdownMap& f = x.blowdown;
  const LatticePtr p2 = f.target();
  cert.check("derived surface matches the preset", true, Provenance::immediate,
             x.surface->same_structure(*load_surface("p2-double-blowup")));
  std::string contracted;
  for (const auto& c : f.contracted_curves()) contracted += (contracted.empty() ? "" : ",") + c;
  cert.check("curves contracted by f", "Fb,Fp", Provenance::immediate, contracted);

  for (int d = d_min; d <= d_max; ++d) {
    const SplitBundle e({DivisorClass(p2, Vector{Rational(d)})});
    const std::string tag = "O(" + std::to_string(d) + ")";
    const LawCheck plus = b_plus_pullback_law(f, e);
    const LawCheck minus = b_minus_pullback_law(f, e);
    cert.check("B+(f*" + tag + ") = f^-1 B+(" + tag + ") u {Fb,Fp}", plus.rhs.to_string(), Provenance::derived,
               plus.lhs.to_string());
    cert.check("B-(f*" + tag + ") = f^-1 B-(" + tag + ")", minus.rhs.to_string(), Provenance::derived,
               minus.lhs.to_string());
    const std::string expected_plus = d >= 1 ? "{Fb,Fp}" : "whole";
    const std::string expected_minus = d >= 0 ? "empty" : "whole";
    cert.check("B+(f*" + tag + ")", expected_plus, d >= 1 ? Provenance::derived : Provenance::immediate,
               plus.lhs.to_string());
    cert.check("B-(f*" + tag + ")", expected_minus, Provenance::immediate, minus.lhs.to_string());
  }
  return cert;
}

VerificationCertificate chern_suite(std::uint64_t seed, int cases) {
  VerificationCertificate cert("chern-suite");
  cert.parameter("seed", std::to_string(seed));
  cert.parameter("cases", str(static_cast<long>(cases)));
  const LatticePtr p2 = load_surface("p2");
  const LatticePtr x = load_surface("p2-double-blowup");
  const RingPtr proj = NumericalRing::projective_space(2);
  const RingPtr surf = NumericalRing::of_surface(x);
  Rng rng(seed);

  Tally multiplicative("ch(E x F) = ch(E) ch(F)");
  Tally additive_sum("ch(E + F) = ch(E) + ch(F)");
  Tally additive("lc(E x F) = lc(E) + lc(F)");
  Tally inverse("exp_lc(lc(ch E)) = ch E");
  for (int i = 0; i < cases; ++i) {
    // Alternate between P^2 and the double blow-up.
    const bool on_p2 = i % 2 == 0;
    const LatticePtr lat = on_p2 ? p2 : x;
    const RingPtr ring = on_p2 ? proj : surf;
    const SplitBundle e = random_split_bundle(lat, rng);
    const SplitBundle f = random_split_bundle(lat, rng);
    const SplitBundle f_same = random_split_bundle(lat, rng, e.twist());
    const auto describe = [&] {
      return "case " + std::to_string(i) + ": E=" + e.to_string() + " F=" + f.to_string();
    };
    const GradedClass che = ch_split(e, ring), chf = ch_split(f, ring);
    multiplicative.record(ch_split(tensor(e, f), ring) == che * chf, describe);
    additive_sum.record(ch_split(direct_sum(e, f_same), ring) == che + ch_split(f_same, ring), describe);
    additive.record(lc(ch_split(tensor(e, f), ring)) == lc_add(lc(che), lc(chf)), describe);
    inverse.record(exp_lc(lc(che)) == che, describe);
  }
  multiplicative.report(cert, Provenance::immediate);
  additive_sum.report(cert, Provenance::immediate);
  additive.report(cert, Provenance::immediate);
  inverse.report(cert, Provenance::immediate);

  Tally degree2("degree-2 part of lc(O(a)+O(b)) is (a-b)^2/8 and -(2r c2 - (r-1) c1^2)/(2r^2)");
  Tally degree1("degree-1 part of lc(O(a)+O(b)) is c1/r");
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      const GradedClass ch = ch_split(SplitDegrees(2, a == b ? std::map<long, Integer>{{a, 2}}
                                                            : std::map<long, Integer>{{a, 1}, {b, 1}}));
      const LogClass l = lc(ch);
      const auto c = chern_classes(ch);
      const Rational c1 = c[1].component(1)[0], c2 = c[2].component(2)[0];
      const Rational r = 2;
      const Rational series = l.higher.component(2)[0];
      const Rational closed = fraction((a - b) * (a - b), 8);
      const Rational formula = -(2 * r * c2 - (r - 1) * c1 * c1) / (2 * r * r);
      const auto describe = [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); };
      degree2.record(series == closed && closed == formula, describe);
      degree1.record(project_degree1(l).coeffs()[0] == c1 / r, describe);
    }
  }
  degree2.report(cert, Provenance::derived);
  degree1.report(cert, Provenance::published_example);

  // Numerically equal classes on P^1 with different V-positivity.
  const RingPtr p1 = NumericalRing::projective_space(1);
  const SplitBundle twisted = parse_split_bundle(p2, "O(1),O(-1)");
  const SplitBundle trivial = parse_split_bundle(p2, "O,O");
  cert.check("ch(O(1)+O(-1)) = ch(O+O) on P^1", true, Provenance::published_example,
             ch_split(twisted, p1) == ch_split(trivial, p1));
  cert.check("O(1)+O(-1) is V-psef", false, Provenance::published_example, v_psef(twisted));
  cert.check("O+O is V-psef", true, Provenance::immediate, v_psef(trivial));
  return cert;
}

}  // namespace vpos
