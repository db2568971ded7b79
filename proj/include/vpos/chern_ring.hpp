#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "vpos/base_loci.hpp"
#include "vpos/ns_lattice.hpp"
#include "vpos/split_cohomology.hpp"

namespace vpos {

class NumericalRing;
using RingPtr = std::shared_ptr<const NumericalRing>;

/// Truncated graded numerical ring N^0 + ... + N^dim with exact structure
/// constants. Products of degree above the dimension vanish.
///
/// P^n: every piece is spanned by a power of the hyperplane class h. Its
/// degree-one classes are carried by the rank-one lattice of the "p2" preset.
/// Surface: scalars, the Néron–Severi lattice, and the point class, with
/// D.D' given by the intersection form.
class NumericalRing {
 public:
  static RingPtr projective_space(int n);
  static RingPtr of_surface(const LatticePtr& lattice);

  int dimension() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t piece_rank(int degree) const { return ranks_.at(static_cast<std::size_t>(degree)); }
  const LatticePtr& degree_one_lattice() const { return lattice_; }
  /// Dimension n when built by projective_space(n), 0 otherwise.
  int projective_dimension() const { return projective_dim_; }

  /// Coefficients, in degree i+j, of basis(i,a) * basis(j,b); empty when i+j > dim.
  const Vector& product(int i, std::size_t a, int j, std::size_t b) const;

  bool same_structure(const NumericalRing& other) const;
  std::string describe() const;

 private:
  NumericalRing(std::vector<std::size_t> ranks, LatticePtr lattice, int projective_dim);
  void check_axioms() const;

  std::vector<std::size_t> ranks_;
  LatticePtr lattice_;
  int projective_dim_;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, Vector> table_;
};

class GradedClass {
 public:
  /// The zero class.
  explicit GradedClass(RingPtr ring);
  GradedClass(RingPtr ring, std::vector<Vector> components);

  static GradedClass scalar(RingPtr ring, const Rational& value);
  static GradedClass from_divisor(RingPtr ring, const DivisorClass& d);

  const RingPtr& ring() const { return ring_; }
  const Vector& component(int degree) const { return components_.at(static_cast<std::size_t>(degree)); }
  const std::vector<Vector>& components() const { return components_; }
  const Rational& degree_zero() const { return components_[0][0]; }
  /// Top-degree coefficient (on P^n and surfaces the top piece has rank one).
  const Rational& top_degree() const { return components_.back()[0]; }

  GradedClass operator+(const GradedClass& other) const;
  GradedClass operator-(const GradedClass& other) const;
  GradedClass operator-() const;
  GradedClass operator*(const GradedClass& other) const;
  GradedClass operator*(const Rational& c) const;
  bool operator==(const GradedClass& other) const;

  /// Multiplies the degree-k piece by (-1)^k: the class of the dual bundle.
  GradedClass dual() const;
  /// Multiplies the degree-k piece by j^k (Adams operation psi^j).
  GradedClass adams(int j) const;
  /// Drops the degree-0 part.
  GradedClass positive_part() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Vector> components_;
};

/// exp(x) for x with zero degree-0 part (a nilpotent element).
GradedClass exp_series(const GradedClass& x);
/// log(1 + y) for y with zero degree-0 part.
GradedClass log1p_series(const GradedClass& y);

/// lc = log ch with log r kept symbolically: only the rank is stored.
struct LogClass {
  Integer rank;
  GradedClass higher;  // zero degree-0 part

  bool operator==(const LogClass& other) const { return rank == other.rank && higher == other.higher; }
};

/// Sum of exp(D_i + T) over the summands, in the ring of the bundle's surface.
GradedClass ch_split(const SplitBundle& bundle);
/// Same sum in any ring whose degree-one lattice matches the bundle's, e.g. a
/// bundle on the rank-one "p2" lattice read in P^n.
GradedClass ch_split(const SplitBundle& bundle, const RingPtr& ring);
/// Sum of exp(d h) on P^n.
GradedClass ch_split(const SplitDegrees& bundle);

/// Throws std::invalid_argument unless the degree-0 part is a positive integer.
LogClass lc(const GradedClass& x);
LogClass lc_add(const LogClass& x, const LogClass& y);
GradedClass exp_lc(const LogClass& x);

DivisorClass project_degree1(const GradedClass& x);
DivisorClass project_degree1(const LogClass& x);

/// Homogeneous Chern classes c_0..c_dim from the Chern character, via Newton's identities.
std::vector<GradedClass> chern_classes(const GradedClass& ch);

/// ch of the k-th symmetric power, from k S^k = sum_{j=1..k} psi^j(x) S^{k-j}.
GradedClass sym_power_ch(const GradedClass& ch, int k);

/// Todd class of P^n, (h / (1 - e^{-h}))^{n+1}. Throws for non-projective rings.
GradedClass todd_projective(const RingPtr& ring);
/// Hirzebruch–Riemann–Roch on P^n.
Rational euler_characteristic(const GradedClass& ch);

/// ch of E = M^v(-1) on P^2, where M is the kernel of O^3 -> O(3) given by
/// three cubics: ch(E) = (3 - ch O(3))^v * ch O(-1).
GradedClass ch_lcounter_bundle();

}  // namespace vpos
