#include "vpos/split_cohomology.hpp"

#include <stdexcept>

namespace vpos {

SplitDegrees::SplitDegrees(int ambient_dim_, std::map<long, Integer> degrees_)
    : ambient_dim(ambient_dim_), degrees(std::move(degrees_)) {
  if (ambient_dim < 1) throw std::invalid_argument("SplitDegrees: ambient dimension must be positive");
  for (const auto& [d, mult] : degrees) {
    if (mult <= 0) throw std::invalid_argument("SplitDegrees: multiplicities must be positive");
  }
}

SplitDegrees SplitDegrees::uniform(int ambient_dim, long degree, const Integer& rank) {
  return SplitDegrees(ambient_dim, {{degree, rank}});
}

Integer SplitDegrees::rank() const {
  Integer r = 0;
  for (const auto& [d, mult] : degrees) r += mult;
  return r;
}

std::string SplitDegrees::to_string() const {
  std::string out;
  for (const auto& [d, mult] : degrees) {
    if (!out.empty()) out += '+';
    out += "O(" + std::to_string(d) + ")";
    if (mult != 1) out += "^" + mult.get_str();
  }
  return out.empty() ? "0" : out;
}

Integer h_line(int n, long d, int i) {
  if (n < 1) throw std::invalid_argument("h_line: n must be positive");
  if (i < 0 || i > n) throw std::invalid_argument("h_line: cohomological degree out of range");
  if (i == 0) return d >= 0 ? binomial(d + n, n) : Integer(0);
  if (i == n) return d <= -n - 1 ? binomial(-d - 1, n) : Integer(0);
  return 0;
}

SplitDegrees sym_degrees(const SplitDegrees& s, int m) {
  if (m < 1) throw std::invalid_argument("sym_degrees: exponent must be positive");
  // Monomials of total degree j in k variables of equal degree d: C(k+j-1, j), each of degree j*d.
  std::map<long, std::map<long, Integer>> state{{0, {{0, Integer(1)}}}};  // used -> degree -> count
  for (const auto& [d, mult] : s.degrees) {
    const long k = mult.get_si();
    std::map<long, std::map<long, Integer>> next;
    for (const auto& [used, by_degree] : state) {
      for (long j = 0; used + j <= m; ++j) {
        const Integer ways = binomial(k + j - 1, j);
        for (const auto& [deg, count] : by_degree) next[used + j][deg + j * d] += count * ways;
      }
    }
    state = std::move(next);
  }
  std::map<long, Integer> out;
  for (const auto& [deg, count] : state[m]) {
    if (count > 0) out[deg] = count;
  }
  return SplitDegrees(s.ambient_dim, std::move(out));
}

SplitDegrees twist(const SplitDegrees& s, long t) {
  std::map<long, Integer> out;
  for (const auto& [d, mult] : s.degrees) out[d + t] = mult;
  return SplitDegrees(s.ambient_dim, std::move(out));
}

Integer h(const SplitDegrees& s, int i) {
  Integer total = 0;
  for (const auto& [d, mult] : s.degrees) total += mult * h_line(s.ambient_dim, d, i);
  return total;
}

Integer euler_characteristic(const SplitDegrees& s) {
  Integer chi = 0;
  for (int i = 0; i <= s.ambient_dim; ++i) chi += (i % 2 == 0 ? 1 : -1) * h(s, i);
  return chi;
}

LcounterSequence lcounter_sequence(int n, int l) {
  if (n < 2) throw std::domain_error("lcounter: n must be at least 2");
  if (l < 1) throw std::domain_error("lcounter: l must be positive");
  const SplitDegrees base = SplitDegrees::uniform(2, -1, 3);
  LcounterSequence seq;
  seq.n = n;
  seq.l = l;
  const int top = n * l;
  seq.middle = twist(sym_degrees(base, top), l);
  seq.left = twist(sym_degrees(base, top - 1), l - 4);
  seq.middle_degree = seq.middle.degrees.begin()->first;
  seq.left_degree = seq.left.degrees.begin()->first;
  seq.stated_left_degree = 2L * l - static_cast<long>(top) - 4;
  seq.h0_left = h(seq.left, 0);
  seq.h1_left = h(seq.left, 1);
  seq.h0_middle = h(seq.middle, 0);
  // H^1 of a split bundle on P^2 vanishes, so H^0 is right exact here.
  if (seq.h1_left != 0) throw std::logic_error("lcounter: nonzero H^1 of a split bundle on P^2");
  seq.h0_quotient = seq.h0_middle - seq.h0_left;
  return seq;
}

Integer lcounter_h0(int n, int l) { return lcounter_sequence(n, l).h0_quotient; }

long det_twist(int rank, long det_degree, long t) {
  if (rank < 1) throw std::invalid_argument("det_twist: rank must be positive");
  return det_degree + rank * t;
}

}  // namespace vpos
