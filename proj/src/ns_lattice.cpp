#include "vpos/ns_lattice.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "vpos/errors.hpp"
#include "vpos/linalg.hpp"

namespace vpos {

// ---------------------------------------------------------------------------
// DivisorClass

DivisorClass::DivisorClass(LatticePtr lattice, Vector coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
  if (!lattice_) throw std::invalid_argument("DivisorClass: null lattice");
  if (coeffs_.size() != lattice_->rank()) {
    throw std::invalid_argument("DivisorClass: " + std::to_string(coeffs_.size()) +
                                " coefficients for a rank " + std::to_string(lattice_->rank()) +
                                " lattice");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

DivisorClass DivisorClass::zero(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return DivisorClass(std::move(lattice), zero_vector(n));
}

DivisorClass DivisorClass::basis(LatticePtr lattice, std::size_t index) {
  Vector v = zero_vector(lattice->rank());
  v.at(index) = 1;
  return DivisorClass(std::move(lattice), std::move(v));
}

bool DivisorClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool DivisorClass::same_lattice(const DivisorClass& other) const {
  return lattice_ == other.lattice_ || lattice_->same_structure(*other.lattice_);
}

namespace {

void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (!a.same_lattice(b)) throw LatticeMismatch("classes live on different lattices");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same(*this, other);
  Vector v = coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.coeffs_[i];
  return DivisorClass(lattice_, std::move(v));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + (-other); }

DivisorClass DivisorClass::operator-() const { return *this * Rational(-1); }

DivisorClass DivisorClass::operator*(const Rational& c) const {
  Vector v = coeffs_;
  for (auto& x : v) x *= c;
  return DivisorClass(lattice_, std::move(v));
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  return same_lattice(other) && coeffs_ == other.coeffs_;
}

std::string DivisorClass::to_string() const {
  std::string out;
  const auto& labels = lattice_->basis_labels();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rational mag = abs(c);
    if (mag != 1) out += vpos::to_string(mag);
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// SurfaceLattice

namespace {

bool valid_label(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Rational pair_with(const Matrix& gram, const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram[i][j] * b[j];
  }
  return s;
}

bool ample_on(const Matrix& gram, const std::vector<Vector>& generators, const Vector& v) {
  if (pair_with(gram, v, v) <= 0) return false;
  return std::all_of(generators.begin(), generators.end(),
                     [&](const Vector& g) { return pair_with(gram, v, g) > 0; });
}

}  // namespace

LatticePtr SurfaceLattice::create(LatticeData data) {
  const std::size_t n = data.basis_labels.size();
  if (n == 0) throw std::invalid_argument("surface lattice: empty basis");
  std::set<std::string> seen;
  auto claim = [&](const std::string& name, const char* what) {
    if (!seen.insert(name).second) {
      throw std::invalid_argument(std::string("surface lattice: duplicate ") + what + " '" + name + "'");
    }
  };
  for (const auto& label : data.basis_labels) {
    if (!valid_label(label)) throw std::invalid_argument("surface lattice: invalid basis label '" + label + "'");
    claim(label, "basis label");
  }
  if (data.gram.size() != n) throw std::invalid_argument("surface lattice: gram has wrong number of rows");
  for (const auto& row : data.gram) {
    if (row.size() != n) throw std::invalid_argument("surface lattice: gram row has wrong length");
  }
  if (!linalg::is_symmetric(data.gram)) throw std::invalid_argument("surface lattice: gram is not symmetric");
  const auto in = linalg::inertia(data.gram);
  if (in.positive != 1 || in.zero != 0) {
    throw std::invalid_argument("surface lattice: gram violates the Hodge index theorem (inertia " +
                                std::to_string(in.positive) + "," + std::to_string(in.negative) + "," +
                                std::to_string(in.zero) + ")");
  }
  auto check_len = [&](const Vector& v, const std::string& what) {
    if (v.size() != n) throw std::invalid_argument("surface lattice: " + what + " has wrong length");
  };

  check_len(data.polarization, "polarization");
  for (const auto& g : data.mori_generators) check_len(g, "Mori generator");
  if (data.mori_generators.empty()) throw std::invalid_argument("surface lattice: no Mori generators");

  for (auto& curve : data.curves) {
    if (!valid_label(curve.label)) throw std::invalid_argument("surface lattice: invalid curve label '" + curve.label + "'");
    check_len(curve.coeffs, "curve '" + curve.label + "'");
    for (const auto& c : curve.coeffs) {
      if (!is_integer(c)) throw std::invalid_argument("surface lattice: curve '" + curve.label + "' is not integral");
    }
    curve.self_intersection = pair_with(data.gram, curve.coeffs, curve.coeffs);
    if (pair_with(data.gram, curve.coeffs, data.polarization) <= 0) {
      throw std::invalid_argument("surface lattice: curve '" + curve.label + "' is not positive on the polarization");
    }
    if (curve.self_intersection < 0 &&
        std::find(data.mori_generators.begin(), data.mori_generators.end(), curve.coeffs) ==
            data.mori_generators.end()) {
      throw std::invalid_argument("surface lattice: negative curve '" + curve.label + "' is not a Mori generator");
    }
  }
  // Curve labels may coincide with basis labels (an exceptional curve that is
  // a basis vector) only when the classes agree.
  for (const auto& curve : data.curves) {
    const auto it = std::find(data.basis_labels.begin(), data.basis_labels.end(), curve.label);
    if (it != data.basis_labels.end()) {
      Vector unit = zero_vector(n);
      unit[static_cast<std::size_t>(it - data.basis_labels.begin())] = 1;
      if (unit != curve.coeffs) {
        throw std::invalid_argument("surface lattice: curve '" + curve.label + "' shadows a different basis class");
      }
      continue;
    }
    claim(curve.label, "curve label");
  }
  for (const auto& named : data.named_classes) {
    if (!valid_label(named.name)) throw std::invalid_argument("surface lattice: invalid class name '" + named.name + "'");
    check_len(named.coeffs, "named class '" + named.name + "'");
    claim(named.name, "class name");
  }
  for (const auto& [alias, target] : data.aliases) {
    if (std::find(data.basis_labels.begin(), data.basis_labels.end(), target) == data.basis_labels.end()) {
      throw std::invalid_argument("surface lattice: alias '" + alias + "' names unknown basis label '" + target + "'");
    }
    if (alias.empty()) throw std::invalid_argument("surface lattice: empty alias");
    claim(alias, "alias");
  }
  if (!ample_on(data.gram, data.mori_generators, data.polarization)) {
    throw std::invalid_argument("surface lattice: polarization is not ample");
  }
  for (auto& c : data.polarization) c.canonicalize();
  return LatticePtr(new SurfaceLattice(std::move(data)));
}

std::vector<DivisorClass> SurfaceLattice::mori_generators() const {
  std::vector<DivisorClass> out;
  out.reserve(data_.mori_generators.size());
  for (const auto& g : data_.mori_generators) out.emplace_back(shared_from_this(), g);
  return out;
}

DivisorClass SurfaceLattice::polarization() const { return {shared_from_this(), data_.polarization}; }

std::optional<std::size_t> SurfaceLattice::curve_index(const std::string& label) const {
  for (std::size_t i = 0; i < data_.curves.size(); ++i) {
    if (data_.curves[i].label == label) return i;
  }
  return std::nullopt;
}

const CurveRecord& SurfaceLattice::curve_record(const std::string& label) const {
  const auto i = curve_index(label);
  if (!i) throw std::out_of_range("unknown curve '" + label + "'");
  return data_.curves[*i];
}

DivisorClass SurfaceLattice::curve(const std::string& label) const {
  return {shared_from_this(), curve_record(label).coeffs};
}

DivisorClass SurfaceLattice::curve(std::size_t index) const {
  return {shared_from_this(), data_.curves.at(index).coeffs};
}

std::optional<std::size_t> SurfaceLattice::basis_index(const std::string& label) const {
  const auto& labels = data_.basis_labels;
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::optional<DivisorClass> SurfaceLattice::symbol(const std::string& name) const {
  if (const auto i = basis_index(name)) return DivisorClass::basis(shared_from_this(), *i);
  if (const auto a = data_.aliases.find(name); a != data_.aliases.end()) {
    return DivisorClass::basis(shared_from_this(), *basis_index(a->second));
  }
  if (const auto c = curve_index(name)) return curve(*c);
  for (const auto& named : data_.named_classes) {
    if (named.name == name) return DivisorClass(shared_from_this(), named.coeffs);
  }
  return std::nullopt;
}

Rational SurfaceLattice::pair(const Vector& a, const Vector& b) const { return pair_with(data_.gram, a, b); }

bool SurfaceLattice::same_structure(const SurfaceLattice& other) const {
  if (this == &other) return true;
  if (data_.basis_labels != other.data_.basis_labels || data_.gram != other.data_.gram ||
      data_.mori_generators != other.data_.mori_generators || data_.polarization != other.data_.polarization ||
      data_.curves.size() != other.data_.curves.size()) {
    return false;
  }
  for (std::size_t i = 0; i < data_.curves.size(); ++i) {
    if (data_.curves[i].label != other.data_.curves[i].label ||
        data_.curves[i].coeffs != other.data_.curves[i].coeffs) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cone tests

Rational intersect(const DivisorClass& d1, const DivisorClass& d2) {
  require_same(d1, d2);
  return d1.lattice().pair(d1.coeffs(), d2.coeffs());
}

bool nef_test(const DivisorClass& d) {
  const auto& lat = d.lattice();
  return std::all_of(lat.mori_generator_coeffs().begin(), lat.mori_generator_coeffs().end(),
                     [&](const Vector& g) { return lat.pair(d.coeffs(), g) >= 0; });
}

bool ample_test(const DivisorClass& d) {
  const auto& lat = d.lattice();
  return ample_on(lat.gram(), lat.mori_generator_coeffs(), d.coeffs());
}

std::optional<Vector> psef_certificate(const DivisorClass& d) {
  return linalg::nonnegative_combination(d.lattice().mori_generator_coeffs(), d.coeffs());
}

bool psef_test(const DivisorClass& d) { return psef_certificate(d).has_value(); }

// ---------------------------------------------------------------------------
// BlowdownMap

BlowdownMap::BlowdownMap(LatticePtr source, LatticePtr target, Matrix pullback,
                         std::map<std::string, CurveImage> images)
    : source_(std::move(source)), target_(std::move(target)), pullback_(std::move(pullback)), images_(std::move(images)) {
  for (const auto& [label, image] : images_) {
    if (image.contracted) contracted_.insert(label);
  }
  validate();
}

void BlowdownMap::validate() const {
  const std::size_t m = source_->rank();
  const std::size_t n = target_->rank();
  if (pullback_.size() != m) throw std::invalid_argument("blow-down: pullback matrix has wrong row count");
  for (const auto& row : pullback_) {
    if (row.size() != n) throw std::invalid_argument("blow-down: pullback matrix has wrong column count");
    for (const auto& x : row) {
      if (!is_integer(x)) throw std::invalid_argument("blow-down: pullback matrix is not integral");
    }
  }
  auto column = [&](std::size_t j) {
    Vector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = pullback_[i][j];
    return v;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (source_->pair(column(a), column(b)) != target_->gram()[a][b]) {
        throw std::invalid_argument("blow-down: pullback does not preserve intersection numbers");
      }
    }
  }
  for (const auto& curve : source_->curves()) {
    const auto it = images_.find(curve.label);
    if (it == images_.end()) throw std::invalid_argument("blow-down: no image recorded for curve '" + curve.label + "'");
    const CurveImage& image = it->second;
    if (image.contracted) {
      for (std::size_t a = 0; a < n; ++a) {
        if (source_->pair(curve.coeffs, column(a)) != 0) {
          throw std::invalid_argument("blow-down: contracted curve '" + curve.label + "' meets a pulled-back class");
        }
      }
      for (const auto& t : image.image_point_on) {
        if (!target_->curve_index(t)) throw std::invalid_argument("blow-down: unknown target curve '" + t + "'");
      }
    } else if (!target_->curve_index(image.target_curve)) {
      throw std::invalid_argument("blow-down: unknown target curve '" + image.target_curve + "'");
    }
  }
}

DivisorClass BlowdownMap::pullback(const DivisorClass& on_target) const {
  if (!(on_target.lattice_ptr() == target_ || on_target.lattice().same_structure(*target_))) {
    throw LatticeMismatch("pullback: class does not live on the target surface");
  }
  return {source_, linalg::multiply(pullback_, on_target.coeffs())};
}

std::set<std::string> BlowdownMap::preimage_curves(const std::set<std::string>& target_curves) const {
  std::set<std::string> out;
  for (const auto& [label, image] : images_) {
    if (image.contracted) {
      const bool over = std::any_of(image.image_point_on.begin(), image.image_point_on.end(),
                                    [&](const std::string& t) { return target_curves.count(t) > 0; });
      if (over) out.insert(label);
    } else if (target_curves.count(image.target_curve)) {
      out.insert(label);
    }
  }
  return out;
}

BlowdownMap compose(const BlowdownMap& outer, const BlowdownMap& inner) {
  if (!(inner.target() == outer.source() || inner.target()->same_structure(*outer.source()))) {
    throw LatticeMismatch("compose: maps are not composable");
  }
  // Target curves through the image of a point of the middle surface that lies on `middle_curves`.
  auto through_image_point = [&](const std::set<std::string>& middle_curves) {
    std::set<std::string> out;
    for (const auto& c : middle_curves) {
      const CurveImage& img = outer.images().at(c);
      if (img.contracted) {
        out.insert(img.image_point_on.begin(), img.image_point_on.end());
      } else {
        out.insert(img.target_curve);
      }
    }
    return out;
  };
  std::map<std::string, CurveImage> images;
  for (const auto& [label, img] : inner.images()) {
    CurveImage composed;
    if (img.contracted) {
      composed.contracted = true;
      composed.image_point_on = through_image_point(img.image_point_on);
    } else {
      const CurveImage& next = outer.images().at(img.target_curve);
      composed = next;
    }
    images.emplace(label, std::move(composed));
  }
  return BlowdownMap(inner.source(), outer.target(),
                     linalg::multiply(inner.pullback_matrix(), outer.pullback_matrix()), std::move(images));
}

// ---------------------------------------------------------------------------
// blow_up

BlowUp blow_up_through(const LatticePtr& lattice, const std::vector<std::string>& center_on,
                       const std::string& exceptional_label) {
  const std::size_t n = lattice->rank();
  std::set<std::string> centers;
  for (const auto& label : center_on) {
    if (!lattice->curve_index(label)) throw std::invalid_argument("blow_up: unknown curve '" + label + "'");
    centers.insert(label);
  }
  if (lattice->symbol(exceptional_label) || lattice->curve_index(exceptional_label)) {
    throw std::invalid_argument("blow_up: label '" + exceptional_label + "' already in use");
  }

  // Basis vectors that are themselves centre curves get replaced by their strict transforms.
  std::vector<bool> replaced(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& label = lattice->basis_labels()[i];
    if (!centers.count(label)) continue;
    Vector unit = zero_vector(n);
    unit[i] = 1;
    if (lattice->curve_record(label).coeffs == unit) replaced[i] = true;
  }

  // Standard coordinates (f^*b_0..f^*b_{n-1}, e) -> new basis coordinates.
  auto to_new = [&](const Vector& pulled, const Rational& e_coeff) {
    Vector v = pulled;
    Rational e = e_coeff;
    for (std::size_t i = 0; i < n; ++i) {
      if (replaced[i]) e += pulled[i];
    }
    v.push_back(e);
    return v;
  };

  LatticeData data;
  data.name = lattice->name() + " blown up (" + exceptional_label + ")";
  data.basis_labels = lattice->basis_labels();
  data.basis_labels.push_back(exceptional_label);

  // New basis vectors in standard coordinates, with gram diag(G, -1) there.
  Matrix change(n + 1, zero_vector(n + 1));  // columns are new basis vectors
  for (std::size_t i = 0; i < n; ++i) {
    change[i][i] = 1;
    if (replaced[i]) change[n][i] = -1;
  }
  change[n][n] = 1;
  Matrix standard_gram(n + 1, zero_vector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) standard_gram[i][j] = lattice->gram()[i][j];
  }
  standard_gram[n][n] = -1;
  data.gram = linalg::multiply(linalg::transpose(change), linalg::multiply(standard_gram, change));

  std::map<std::string, CurveImage> images;
  for (const auto& curve : lattice->curves()) {
    const bool through = centers.count(curve.label) > 0;
    data.curves.push_back({curve.label, to_new(curve.coeffs, through ? Rational(-1) : Rational(0)), 0});
    images.emplace(curve.label, CurveImage{false, curve.label, {}});
  }
  Vector e_std = zero_vector(n);
  data.curves.push_back({exceptional_label, to_new(e_std, 1), 0});
  images.emplace(exceptional_label, CurveImage{true, "", centers});

  for (const auto& g : lattice->mori_generator_coeffs()) {
    bool through = false;
    for (const auto& c : centers) {
      if (lattice->curve_record(c).coeffs == g) through = true;
    }
    Vector v = to_new(g, through ? Rational(-1) : Rational(0));
    if (std::find(data.mori_generators.begin(), data.mori_generators.end(), v) == data.mori_generators.end()) {
      data.mori_generators.push_back(std::move(v));
    }
  }
  data.mori_generators.push_back(to_new(e_std, 1));

  const Vector pulled_polarization = to_new(lattice->data().polarization, 0);
  const Vector e_new = to_new(e_std, 1);
  bool found = false;
  for (int k = 2; k <= 256 && !found; ++k) {
    Vector candidate(n + 1);
    for (std::size_t i = 0; i <= n; ++i) candidate[i] = Rational(k) * pulled_polarization[i] - e_new[i];
    if (ample_on(data.gram, data.mori_generators, candidate)) {
      data.polarization = std::move(candidate);
      found = true;
    }
  }
  if (!found) throw InvariantViolation("blow_up: no ample class of the form k f^*A - e with k <= 256");

  data.aliases = lattice->aliases();
  for (const auto& named : lattice->named_classes()) data.named_classes.push_back({named.name, to_new(named.coeffs, 0)});

  LatticePtr blown = SurfaceLattice::create(std::move(data));

  Matrix pullback(n + 1, zero_vector(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vector unit = zero_vector(n);
    unit[j] = 1;
    const Vector col = to_new(unit, 0);
    for (std::size_t i = 0; i <= n; ++i) pullback[i][j] = col[i];
  }
  BlowdownMap map(blown, lattice, std::move(pullback), std::move(images));
  return {std::move(blown), std::move(map)};
}

BlowUp blow_up(const LatticePtr& lattice, const std::optional<std::string>& center_on,
               const std::string& exceptional_label) {
  std::vector<std::string> centers;
  if (center_on) centers.push_back(*center_on);
  return blow_up_through(lattice, centers, exceptional_label);
}

}  // namespace vpos
