#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vpos/rational.hpp"

namespace vpos {

class SurfaceLattice;
using LatticePtr = std::shared_ptr<const SurfaceLattice>;

/// A rational class in the Néron–Severi space of a surface, written in the
/// lattice's basis.
class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, Vector coeffs);

  static DivisorClass zero(LatticePtr lattice);
  static DivisorClass basis(LatticePtr lattice, std::size_t index);

  const SurfaceLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const Vector& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_integral() const;
  bool is_zero() const;
  bool same_lattice(const DivisorClass& other) const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass operator*(const Rational& c) const;
  friend DivisorClass operator*(const Rational& c, const DivisorClass& d) { return d * c; }

  /// Equality requires the same lattice; classes on different lattices are unequal.
  bool operator==(const DivisorClass& other) const;

  /// Signed combination of basis labels, e.g. "2L-Fb-3/2Fp"; "0" for zero.
  std::string to_string() const;

 private:
  LatticePtr lattice_;
  Vector coeffs_;
};

struct CurveRecord {
  std::string label;
  Vector coeffs;  // integral
  Rational self_intersection;
};

struct NamedClass {
  std::string name;
  Vector coeffs;
};

/// Everything needed to build a lattice; SurfaceLattice::create validates it.
struct LatticeData {
  std::string name;
  std::vector<std::string> basis_labels;
  Matrix gram;
  std::vector<CurveRecord> curves;  // self_intersection is recomputed
  std::vector<Vector> mori_generators;
  Vector polarization;
  /// Alternative spellings of basis labels, e.g. "F̄" for "Fb".
  std::map<std::string, std::string> aliases;
  /// Extra symbols usable in class expressions ("C" for the conic).
  std::vector<NamedClass> named_classes;
};

/// Basis, intersection form, curve catalog, Mori generators and a fixed
/// polarization of one explicitly presented surface. Immutable; always held
/// through LatticePtr.
///
/// Invariants checked by create(): gram symmetric with inertia (1, rank-1, 0);
/// catalog classes integral and positive on the polarization; every negative
/// catalog curve is a Mori generator; the polarization is ample.
class SurfaceLattice : public std::enable_shared_from_this<SurfaceLattice> {
 public:
  /// Throws std::invalid_argument naming the first violated invariant.
  static LatticePtr create(LatticeData data);

  const std::string& name() const { return data_.name; }
  std::size_t rank() const { return data_.basis_labels.size(); }
  const std::vector<std::string>& basis_labels() const { return data_.basis_labels; }
  const Matrix& gram() const { return data_.gram; }
  const std::vector<CurveRecord>& curves() const { return data_.curves; }
  const std::vector<Vector>& mori_generator_coeffs() const { return data_.mori_generators; }
  const std::map<std::string, std::string>& aliases() const { return data_.aliases; }
  const std::vector<NamedClass>& named_classes() const { return data_.named_classes; }
  const LatticeData& data() const { return data_; }

  std::vector<DivisorClass> mori_generators() const;
  DivisorClass polarization() const;

  std::optional<std::size_t> curve_index(const std::string& label) const;
  const CurveRecord& curve_record(const std::string& label) const;  // throws std::out_of_range
  DivisorClass curve(const std::string& label) const;
  DivisorClass curve(std::size_t index) const;
  /// Basis label, alias, curve label or named class.
  std::optional<DivisorClass> symbol(const std::string& name) const;
  std::optional<std::size_t> basis_index(const std::string& label) const;

  Rational pair(const Vector& a, const Vector& b) const;

  /// Same basis labels, gram, catalog, Mori generators and polarization.
  bool same_structure(const SurfaceLattice& other) const;

 private:
  explicit SurfaceLattice(LatticeData data) : data_(std::move(data)) {}

  LatticeData data_;
};

Rational intersect(const DivisorClass& d1, const DivisorClass& d2);

bool nef_test(const DivisorClass& d);
bool ample_test(const DivisorClass& d);
bool psef_test(const DivisorClass& d);
/// Nonnegative coefficients over the Mori generators summing to d, if any.
std::optional<Vector> psef_certificate(const DivisorClass& d);

/// Where one source catalog curve goes under a blow-down.
struct CurveImage {
  bool contracted = false;
  std::string target_curve;               // when not contracted
  std::set<std::string> image_point_on;  // when contracted: target curves through the image point
};

class BlowdownMap {
 public:
  /// pullback: source_rank x target_rank integer matrix; column j is f^*(target basis j).
  BlowdownMap(LatticePtr source, LatticePtr target, Matrix pullback,
              std::map<std::string, CurveImage> images);

  const LatticePtr& source() const { return source_; }
  const LatticePtr& target() const { return target_; }
  const Matrix& pullback_matrix() const { return pullback_; }
  const std::set<std::string>& contracted_curves() const { return contracted_; }
  const std::map<std::string, CurveImage>& images() const { return images_; }

  DivisorClass pullback(const DivisorClass& on_target) const;

  /// Source catalog curves whose image lies inside the union of the given
  /// target curves: strict transforms of those curves and contracted curves
  /// over points on them.
  std::set<std::string> preimage_curves(const std::set<std::string>& target_curves) const;

  /// first: Y -> Z, second: X -> Y; returns X -> Z.
  friend BlowdownMap compose(const BlowdownMap& outer, const BlowdownMap& inner);

 private:
  void validate() const;

  LatticePtr source_;
  LatticePtr target_;
  Matrix pullback_;
  std::map<std::string, CurveImage> images_;
  std::set<std::string> contracted_;
};

BlowdownMap compose(const BlowdownMap& outer, const BlowdownMap& inner);

struct BlowUp {
  LatticePtr surface;
  BlowdownMap blowdown;
};

/// Blows up a point lying on the named catalog curves (none: a point off the
/// catalog). The exceptional class e gets e^2 = -1; each named curve K is
/// replaced by its strict transform K - e. A basis vector carrying the same
/// label as a named curve is itself replaced by that strict transform, so
/// blowing up a point on an exceptional curve keeps strict transforms in the
/// basis. Mori generators: strict transforms of generators through the point,
/// pullbacks of the others, and e. The result is complete only when every
/// curve through the centre that matters is named. The new polarization is
/// k f^*A - e for the least k >= 2 that is ample.
BlowUp blow_up_through(const LatticePtr& lattice, const std::vector<std::string>& center_on,
                       const std::string& exceptional_label);
/// Single-curve form of blow_up_through.
BlowUp blow_up(const LatticePtr& lattice, const std::optional<std::string>& center_on,
               const std::string& exceptional_label = "E");

}  // namespace vpos
