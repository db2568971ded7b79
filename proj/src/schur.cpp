#include "vpos/schur.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vpos::schur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string body(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    std::string item = body.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(item.begin());
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'; expected comma-separated positive parts");
    }
    parts.push_back(std::stoi(item));
    if (comma == body.size()) break;
    pos = comma + 1;
  }
  // Trailing zeros are padding, as in (2,1,0); interior zeros are rejected by the constructor.
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions(int n, int max_parts) {
  if (n < 0 || max_parts < 0) throw std::invalid_argument("partitions: arguments must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

// Column lengths (conjugate partition).
std::vector<int> conjugate(const Partition& shape) {
  std::vector<int> cols(static_cast<std::size_t>(shape.part(0)), 0);
  for (int row : shape.parts()) {
    for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return cols;
}

}  // namespace

Integer num_standard_tableaux(const Partition& shape) {
  const auto cols = conjugate(shape);
  Integer hooks = 1;
  for (std::size_t i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.parts()[i]; ++j) {
      const int arm = shape.parts()[i] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(shape.weight()) / hooks;
}

Integer schur_dim(const Partition& shape, int rank) {
  if (rank < 1) throw std::invalid_argument("schur_dim: rank must be positive");
  if (static_cast<int>(shape.length()) > rank) return 0;
  const auto cols = conjugate(shape);
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.parts()[i]; ++j) {
      const int arm = shape.parts()[i] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      num *= rank + j - static_cast<int>(i);
      den *= arm + leg + 1;
    }
  }
  return num / den;
}

std::vector<SchurSummand> tensor_power_decomposition(int n, int rank) {
  std::vector<SchurSummand> out;
  for (auto& p : partitions(n, rank)) {
    Integer f = num_standard_tableaux(p);
    Integer dim = schur_dim(p, rank);
    out.push_back({std::move(p), std::move(f), rank, std::move(dim)});
  }
  return out;
}

namespace {

// Calls visit(nu) for every nu contained in lambda with lambda/nu a
// horizontal strip of the given size.
void for_each_strip_removal(const std::vector<int>& lambda, int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> nu(lambda.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == lambda.size()) {
      if (remaining == 0) visit(nu);
      return;
    }
    const int lower = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= lower; --v) {
      const int removed = lambda[i] - v;
      if (removed > remaining) break;
      nu[i] = v;
      rec(i + 1, remaining - removed);
    }
  };
  rec(0, size);
}

std::vector<int> strip_zeros(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Integer kostka_rec(const std::vector<int>& lambda, const std::vector<int>& content, std::size_t used) {
  if (used == 0) return lambda.empty() ? Integer(1) : Integer(0);
  const int size = content[used - 1];
  Integer total = 0;
  for_each_strip_removal(lambda, size, [&](const std::vector<int>& nu) {
    total += kostka_rec(strip_zeros(nu), content, used - 1);
  });
  return total;
}

}  // namespace

Integer kostka(const Partition& shape, const std::vector<int>& content) {
  int w = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka: content entries must be nonnegative");
    w += c;
  }
  if (w != shape.weight()) throw std::invalid_argument("kostka: shape and content have different weights");
  return kostka_rec(shape.parts(), content, content.size());
}

SchurExpansion pieri_multiply(const SchurExpansion& f, int k) {
  if (k < 0) throw std::invalid_argument("pieri_multiply: negative degree");
  SchurExpansion out;
  for (const auto& [lambda, coeff] : f) {
    if (coeff == 0) continue;
    const std::size_t len = lambda.length();
    std::vector<int> mu(len + 1);
    // Row i may grow up to lambda_{i-1} (row 0 is unbounded).
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
      if (i == len + 1) {
        if (remaining == 0) out[Partition(strip_zeros(mu))] += coeff;
        return;
      }
      const int base = lambda.part(i);
      const int cap = i == 0 ? base + remaining : lambda.part(i - 1);
      for (int v = base; v <= cap && v - base <= remaining; ++v) {
        mu[i] = v;
        rec(i + 1, remaining - (v - base));
      }
    };
    rec(0, k);
  }
  return out;
}

SchurExpansion complete_product(const std::vector<int>& degrees) {
  SchurExpansion f{{Partition(), Integer(1)}};
  for (int d : degrees) f = pieri_multiply(f, d);
  return f;
}

Integer pieri_summand_certificate(const Partition& shape, int rank) {
  if (rank < 1) throw std::invalid_argument("pieri_summand_certificate: rank must be positive");
  if (static_cast<int>(shape.length()) > rank) {
    throw std::invalid_argument("pieri_summand_certificate: " + shape.to_string() + " has more than " +
                                std::to_string(rank) + " parts");
  }
  std::vector<int> degrees(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < degrees.size(); ++i) degrees[i] = shape.part(i);
  const SchurExpansion f = complete_product(degrees);
  const auto it = f.find(shape);
  return it == f.end() ? Integer(0) : it->second;
}

WitnessExponents witness_exponents(const Partition& shape, long m, long q, long big_m) {
  if (m < 1 || q < 1 || big_m < 1) throw std::invalid_argument("witness_exponents: m, q, M must be positive");
  if (shape.weight() != big_m * q) {
    throw std::invalid_argument("witness_exponents: weight " + std::to_string(shape.weight()) + " is not M*q = " +
                                std::to_string(big_m * q));
  }
  WitnessExponents w;
  w.big_m = big_m;
  const long block = m * q;
  long sum_a = 0, sum_b = 0;
  for (int part : shape.parts()) {
    w.a.push_back(part / block);
    w.b.push_back(part % block);
    sum_a += w.a.back();
    sum_b += w.b.back();
  }
  w.lhs = Rational(2 * big_m - m * sum_a);
  w.rhs = Rational(big_m) + fraction(sum_b, q);
  w.rhs.canonicalize();
  return w;
}

}  // namespace vpos::schur
