#include "vpos/chern_ring.hpp"

#include <stdexcept>

#include "vpos/errors.hpp"
#include "vpos/surface_config.hpp"

namespace vpos {

// ---------------------------------------------------------------------------
// NumericalRing

NumericalRing::NumericalRing(std::vector<std::size_t> ranks, LatticePtr lattice, int projective_dim)
    : ranks_(std::move(ranks)), lattice_(std::move(lattice)), projective_dim_(projective_dim) {}

RingPtr NumericalRing::projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective_space: dimension must be positive");
  static const LatticePtr hyperplane = load_surface("p2");
  auto ring = std::shared_ptr<NumericalRing>(new NumericalRing(std::vector<std::size_t>(n + 1, 1), hyperplane, n));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) ring->table_[{i, 0, j, 0}] = Vector{Rational(1)};
  }
  ring->check_axioms();
  return ring;
}

RingPtr NumericalRing::of_surface(const LatticePtr& lattice) {
  const std::size_t r = lattice->rank();
  auto ring = std::shared_ptr<NumericalRing>(new NumericalRing({1, r, 1}, lattice, 0));
  auto unit = [](std::size_t size, std::size_t i) {
    Vector v = zero_vector(size);
    v[i] = 1;
    return v;
  };
  // 1 * x = x * 1 = x
  for (int d = 0; d <= 2; ++d) {
    for (std::size_t a = 0; a < ring->piece_rank(d); ++a) {
      ring->table_[{0, 0, d, a}] = unit(ring->piece_rank(d), a);
      ring->table_[{d, a, 0, 0}] = unit(ring->piece_rank(d), a);
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) ring->table_[{1, a, 1, b}] = Vector{lattice->gram()[a][b]};
  }
  ring->check_axioms();
  return ring;
}

const Vector& NumericalRing::product(int i, std::size_t a, int j, std::size_t b) const {
  static const Vector kEmpty;
  if (i + j > dimension()) return kEmpty;
  return table_.at({i, a, j, b});
}

void NumericalRing::check_axioms() const {
  const int n = dimension();
  auto basis_product = [&](int i, std::size_t a, const Vector& coeffs, int j) {
    // basis(i,a) * (sum coeffs_b basis(j,b)), as coefficients in degree i+j
    Vector out = zero_vector(i + j <= n ? piece_rank(i + j) : 0);
    if (i + j > n) return out;
    for (std::size_t b = 0; b < coeffs.size(); ++b) {
      if (coeffs[b] == 0) continue;
      const Vector& p = product(i, a, j, b);
      for (std::size_t c = 0; c < p.size(); ++c) out[c] += coeffs[b] * p[c];
    }
    return out;
  };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      for (std::size_t a = 0; a < piece_rank(i); ++a) {
        for (std::size_t b = 0; b < piece_rank(j); ++b) {
          if (product(i, a, j, b) != product(j, b, i, a)) {
            throw std::logic_error("NumericalRing: multiplication is not commutative");
          }
          for (int k = 0; i + j + k <= n; ++k) {
            for (std::size_t c = 0; c < piece_rank(k); ++c) {
              Vector unit_c = zero_vector(piece_rank(k));
              unit_c[c] = 1;
              // (a b) c versus a (b c)
              Vector left = zero_vector(piece_rank(i + j + k));
              const Vector& ab = product(i, a, j, b);
              for (std::size_t m = 0; m < ab.size(); ++m) {
                if (ab[m] == 0) continue;
                const Vector& abc = product(i + j, m, k, c);
                for (std::size_t t = 0; t < abc.size(); ++t) left[t] += ab[m] * abc[t];
              }
              const Vector bc = basis_product(j, b, unit_c, k);
              const Vector right = basis_product(i, a, bc, j + k);
              if (left != right) throw std::logic_error("NumericalRing: multiplication is not associative");
            }
          }
        }
      }
    }
  }
}

bool NumericalRing::same_structure(const NumericalRing& other) const {
  if (this == &other) return true;
  return ranks_ == other.ranks_ && table_ == other.table_ && lattice_->same_structure(*other.lattice_);
}

std::string NumericalRing::describe() const {
  if (projective_dim_ > 0) return "P^" + std::to_string(projective_dim_);
  return "N*(" + (lattice_->name().empty() ? std::string("surface") : lattice_->name()) + ")";
}

// ---------------------------------------------------------------------------
// GradedClass

namespace {

void require_same_ring(const GradedClass& a, const GradedClass& b) {
  if (a.ring() != b.ring() && !a.ring()->same_structure(*b.ring())) {
    throw LatticeMismatch("graded classes live in different rings");
  }
}

std::vector<Vector> zero_components(const NumericalRing& ring) {
  std::vector<Vector> c;
  for (int d = 0; d <= ring.dimension(); ++d) c.push_back(zero_vector(ring.piece_rank(d)));
  return c;
}

}  // namespace

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)), components_(zero_components(*ring_)) {}

GradedClass::GradedClass(RingPtr ring, std::vector<Vector> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != ring_->dimension() + 1) {
    throw std::invalid_argument("GradedClass: wrong number of graded pieces");
  }
  for (int d = 0; d <= ring_->dimension(); ++d) {
    if (components_[static_cast<std::size_t>(d)].size() != ring_->piece_rank(d)) {
      throw std::invalid_argument("GradedClass: piece " + std::to_string(d) + " has the wrong rank");
    }
    for (auto& x : components_[static_cast<std::size_t>(d)]) x.canonicalize();
  }
}

GradedClass GradedClass::scalar(RingPtr ring, const Rational& value) {
  GradedClass x(std::move(ring));
  x.components_[0][0] = value;
  return x;
}

GradedClass GradedClass::from_divisor(RingPtr ring, const DivisorClass& d) {
  if (!(d.lattice_ptr() == ring->degree_one_lattice() || d.lattice().same_structure(*ring->degree_one_lattice()))) {
    throw LatticeMismatch("from_divisor: class does not live on the ring's degree-one lattice");
  }
  GradedClass x(std::move(ring));
  if (x.ring_->dimension() >= 1) x.components_[1] = d.coeffs();
  return x;
}

GradedClass GradedClass::operator+(const GradedClass& other) const {
  require_same_ring(*this, other);
  GradedClass out = *this;
  for (std::size_t d = 0; d < components_.size(); ++d) {
    for (std::size_t a = 0; a < components_[d].size(); ++a) out.components_[d][a] += other.components_[d][a];
  }
  return out;
}

GradedClass GradedClass::operator-(const GradedClass& other) const { return *this + (-other); }

GradedClass GradedClass::operator-() const { return *this * Rational(-1); }

GradedClass GradedClass::operator*(const Rational& c) const {
  GradedClass out = *this;
  for (auto& piece : out.components_) {
    for (auto& x : piece) x *= c;
  }
  return out;
}

GradedClass GradedClass::operator*(const GradedClass& other) const {
  require_same_ring(*this, other);
  GradedClass out(ring_);
  const int n = ring_->dimension();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const Vector& x = components_[static_cast<std::size_t>(i)];
      const Vector& y = other.components_[static_cast<std::size_t>(j)];
      Vector& target = out.components_[static_cast<std::size_t>(i + j)];
      for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a] == 0) continue;
        for (std::size_t b = 0; b < y.size(); ++b) {
          if (y[b] == 0) continue;
          const Vector& p = ring_->product(i, a, j, b);
          for (std::size_t c = 0; c < p.size(); ++c) target[c] += x[a] * y[b] * p[c];
        }
      }
    }
  }
  return out;
}

bool GradedClass::operator==(const GradedClass& other) const {
  return (ring_ == other.ring_ || ring_->same_structure(*other.ring_)) && components_ == other.components_;
}

GradedClass GradedClass::dual() const {
  GradedClass out = *this;
  for (std::size_t d = 1; d < out.components_.size(); d += 2) {
    for (auto& x : out.components_[d]) x = -x;
  }
  return out;
}

GradedClass GradedClass::adams(int j) const {
  GradedClass out = *this;
  Rational factor = 1;
  for (auto& piece : out.components_) {
    for (auto& x : piece) x *= factor;
    factor *= j;
  }
  return out;
}

GradedClass GradedClass::positive_part() const {
  GradedClass out = *this;
  out.components_[0][0] = 0;
  return out;
}

std::string GradedClass::to_string() const {
  std::vector<std::pair<Rational, std::string>> terms;  // coefficient, monomial
  const bool projective = ring_->projective_dimension() > 0 || ring_->piece_rank(1) == 1;
  for (int d = 0; d <= ring_->dimension(); ++d) {
    const Vector& piece = components_[static_cast<std::size_t>(d)];
    if (d == 0) {
      if (piece[0] != 0) terms.emplace_back(piece[0], "");
    } else if (projective || d != 1) {
      std::string mono;
      if (projective) {
        mono = d == 1 ? "h" : "h^" + std::to_string(d);
      } else {
        mono = "pt";
      }
      if (piece[0] != 0) terms.emplace_back(piece[0], mono);
    } else {
      const DivisorClass cls(ring_->degree_one_lattice(), piece);
      if (!cls.is_zero()) terms.emplace_back(Rational(1), "(" + cls.to_string() + ")");
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, mono] : terms) {
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty() || mag != 1) out += vpos::to_string(mag);
    out += mono;
  }
  return out;
}

GradedClass exp_series(const GradedClass& x) {
  if (x.degree_zero() != 0) throw std::invalid_argument("exp_series: degree-0 part must vanish");
  GradedClass sum = GradedClass::scalar(x.ring(), 1);
  GradedClass term = sum;
  for (int k = 1; k <= x.ring()->dimension(); ++k) {
    term = term * x * Rational(1, k);
    sum = sum + term;
  }
  return sum;
}

GradedClass log1p_series(const GradedClass& y) {
  if (y.degree_zero() != 0) throw std::invalid_argument("log1p_series: degree-0 part must vanish");
  GradedClass sum(y.ring());
  GradedClass power = GradedClass::scalar(y.ring(), 1);
  for (int k = 1; k <= y.ring()->dimension(); ++k) {
    power = power * y;
    sum = sum + power * Rational(k % 2 == 1 ? 1 : -1, k);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Characters

GradedClass ch_split(const SplitBundle& bundle) {
  return ch_split(bundle, NumericalRing::of_surface(bundle.lattice_ptr()));
}

GradedClass ch_split(const SplitBundle& bundle, const RingPtr& ring) {
  GradedClass sum(ring);
  for (const auto& d : bundle.twisted_summands()) sum = sum + exp_series(GradedClass::from_divisor(ring, d));
  return sum;
}

GradedClass ch_split(const SplitDegrees& bundle) {
  const RingPtr ring = NumericalRing::projective_space(bundle.ambient_dim);
  GradedClass sum(ring);
  for (const auto& [d, mult] : bundle.degrees) {
    const DivisorClass line(ring->degree_one_lattice(), Vector{Rational(d)});
    sum = sum + exp_series(GradedClass::from_divisor(ring, line)) * Rational(mult);
  }
  return sum;
}

LogClass lc(const GradedClass& x) {
  const Rational& r = x.degree_zero();
  if (r <= 0 || !is_integer(r)) {
    throw std::invalid_argument("lc: degree-0 part " + to_string(r) + " is not a positive integer rank");
  }
  const GradedClass y = x * Rational(1 / r) - GradedClass::scalar(x.ring(), 1);
  return {r.get_num(), log1p_series(y)};
}

LogClass lc_add(const LogClass& x, const LogClass& y) {
  require_same_ring(x.higher, y.higher);
  return {x.rank * y.rank, x.higher + y.higher};
}

GradedClass exp_lc(const LogClass& x) { return exp_series(x.higher) * Rational(x.rank); }

DivisorClass project_degree1(const GradedClass& x) {
  return {x.ring()->degree_one_lattice(), x.component(1)};
}

DivisorClass project_degree1(const LogClass& x) { return project_degree1(x.higher); }

std::vector<GradedClass> chern_classes(const GradedClass& ch) {
  const RingPtr& ring = ch.ring();
  const int n = ring->dimension();
  // Power sums of the Chern roots: p_k = k! ch_k, homogeneous of degree k.
  std::vector<GradedClass> p;
  for (int k = 0; k <= n; ++k) {
    std::vector<Vector> c;
    for (int d = 0; d <= n; ++d) c.push_back(zero_vector(ring->piece_rank(d)));
    c[static_cast<std::size_t>(k)] = ch.component(k);
    p.push_back(GradedClass(ring, std::move(c)) * Rational(factorial(k)));
  }
  std::vector<GradedClass> e{GradedClass::scalar(ring, 1)};
  for (int k = 1; k <= n; ++k) {
    GradedClass acc(ring);
    for (int i = 1; i <= k; ++i) {
      const GradedClass term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      acc = i % 2 == 1 ? acc + term : acc - term;
    }
    e.push_back(acc * Rational(1, k));
  }
  return e;
}

GradedClass sym_power_ch(const GradedClass& ch, int k) {
  if (k < 0) throw std::invalid_argument("sym_power_ch: negative exponent");
  std::vector<GradedClass> sigma{GradedClass::scalar(ch.ring(), 1)};
  for (int m = 1; m <= k; ++m) {
    GradedClass acc(ch.ring());
    for (int j = 1; j <= m; ++j) acc = acc + ch.adams(j) * sigma[static_cast<std::size_t>(m - j)];
    sigma.push_back(acc * Rational(1, m));
  }
  return sigma.back();
}

GradedClass todd_projective(const RingPtr& ring) {
  const int n = ring->projective_dimension();
  if (n < 1) throw std::invalid_argument("todd_projective: ring " + ring->describe() + " is not a projective space");
  // (1 - e^{-h}) / h = sum_k (-1)^k h^k / (k+1)!
  std::vector<Vector> c;
  for (int k = 0; k <= n; ++k) {
    c.push_back(Vector{fraction(k % 2 == 0 ? 1 : -1, factorial(k + 1))});
  }
  const GradedClass u(ring, std::move(c));
  const GradedClass z = u - GradedClass::scalar(ring, 1);
  // 1 / (1 + z) = sum (-z)^k
  GradedClass inverse = GradedClass::scalar(ring, 1);
  GradedClass power = inverse;
  for (int k = 1; k <= n; ++k) {
    power = power * (-z);
    inverse = inverse + power;
  }
  GradedClass td = GradedClass::scalar(ring, 1);
  for (int k = 0; k <= n; ++k) td = td * inverse;
  return td;
}

Rational euler_characteristic(const GradedClass& ch) { return (ch * todd_projective(ch.ring())).top_degree(); }

GradedClass ch_lcounter_bundle() {
  const GradedClass trivial3 = ch_split(SplitDegrees::uniform(2, 0, 3));
  const GradedClass cubic = ch_split(SplitDegrees::uniform(2, 3, 1));
  const GradedClass minus_one = ch_split(SplitDegrees::uniform(2, -1, 1));
  const GradedClass kernel = trivial3 - cubic;
  return kernel.dual() * minus_one;
}

}  // namespace vpos
