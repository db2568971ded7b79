#include "vpos/base_loci.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "vpos/errors.hpp"
#include "vpos/surface_config.hpp"
#include "vpos/zariski.hpp"

namespace vpos {

// ---------------------------------------------------------------------------
// BaseLocus

BaseLocus BaseLocus::curves(std::set<std::string> labels) {
  if (labels.empty()) return empty();
  return BaseLocus(Kind::curves, std::move(labels));
}

bool BaseLocus::subset_of(const BaseLocus& other) const {
  if (is_empty() || other.is_whole()) return true;
  if (is_whole() || other.is_empty()) return false;
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
}

BaseLocus BaseLocus::unite(const BaseLocus& other) const {
  if (is_whole() || other.is_whole()) return whole();
  std::set<std::string> u = labels_;
  u.insert(other.labels_.begin(), other.labels_.end());
  return curves(std::move(u));
}

std::string BaseLocus::to_string() const {
  switch (kind_) {
    case Kind::empty:
      return "empty";
    case Kind::whole:
      return "whole";
    case Kind::curves:
      break;
  }
  std::string out = "{";
  for (const auto& l : labels_) {
    if (out.size() > 1) out += ',';
    out += l;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// SplitBundle

SplitBundle::SplitBundle(std::vector<DivisorClass> summands, DivisorClass twist)
    : summands_(std::move(summands)), twist_(std::move(twist)) {
  if (summands_.empty()) throw std::invalid_argument("SplitBundle: no summands");
  for (const auto& d : summands_) {
    if (!d.same_lattice(twist_)) throw LatticeMismatch("SplitBundle: summands and twist live on different lattices");
    if (!d.is_integral()) throw std::invalid_argument("SplitBundle: summand " + d.to_string() + " is not integral");
  }
}

namespace {

DivisorClass zero_twist_for(const std::vector<DivisorClass>& summands) {
  if (summands.empty()) throw std::invalid_argument("SplitBundle: no summands");
  return DivisorClass::zero(summands.front().lattice_ptr());
}

}  // namespace

SplitBundle::SplitBundle(std::vector<DivisorClass> summands)
    : SplitBundle(summands, zero_twist_for(summands)) {}

std::vector<DivisorClass> SplitBundle::twisted_summands() const {
  std::vector<DivisorClass> out;
  out.reserve(summands_.size());
  for (const auto& d : summands_) out.push_back(d + twist_);
  return out;
}

SplitBundle SplitBundle::absorb_twist(const DivisorClass& integral_part) const {
  if (!integral_part.is_integral()) throw std::invalid_argument("absorb_twist: " + integral_part.to_string() + " is not integral");
  std::vector<DivisorClass> moved;
  for (const auto& d : summands_) moved.push_back(d + integral_part);
  return {std::move(moved), twist_ - integral_part};
}

bool SplitBundle::operator==(const SplitBundle& other) const {
  return summands_ == other.summands_ && twist_ == other.twist_;
}

std::string SplitBundle::to_string() const {
  std::string out;
  for (const auto& d : summands_) {
    if (!out.empty()) out += ',';
    out += d.is_zero() ? "O" : "O(" + d.to_string() + ")";
  }
  if (!twist_.is_zero()) out += " <" + twist_.to_string() + ">";
  return out;
}

namespace {

constexpr const char* kBundleGrammar =
    "bundle := item {(',' | '⊕') item} ['<' class '>']; item := ('O' ['(' class ')'] | class) ['^' count]";

[[noreturn]] void bundle_fail(std::string_view text, const std::string& message, std::size_t pos) {
  throw ParseError(message + " in bundle '" + std::string(text) + "'", pos, kBundleGrammar);
}

DivisorClass parse_at(const LatticePtr& lattice, std::string_view text, std::size_t start, std::size_t end) {
  try {
    return parse_class(lattice, text.substr(start, end - start));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bundle '") + std::string(text) + "': " + e.what(), start + e.position(), e.expected());
  }
}

}  // namespace

SplitBundle parse_split_bundle(const LatticePtr& lattice, std::string_view text) {
  std::size_t end_items = text.size();
  std::optional<DivisorClass> twist;
  if (const auto lt = text.rfind('<'); lt != std::string_view::npos) {
    const auto gt = text.find('>', lt);
    if (gt == std::string_view::npos) bundle_fail(text, "unterminated twist", lt);
    for (std::size_t i = gt + 1; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) bundle_fail(text, "text after twist", i);
    }
    twist = parse_at(lattice, text, lt + 1, gt);
    end_items = lt;
  }

  // Split at top-level separators.
  std::vector<std::pair<std::size_t, std::size_t>> items;
  std::size_t depth = 0, start = 0;
  const std::string_view oplus = "⊕";
  for (std::size_t i = 0; i < end_items; ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) bundle_fail(text, "unbalanced ')'", i);
      --depth;
    }
    if (depth == 0 && c == ',') {
      items.emplace_back(start, i);
      start = i + 1;
    } else if (depth == 0 && text.substr(i, oplus.size()) == oplus) {
      items.emplace_back(start, i);
      start = i + oplus.size();
      i += oplus.size() - 1;
    }
  }
  if (depth != 0) bundle_fail(text, "unbalanced '('", end_items);
  items.emplace_back(start, end_items);

  std::vector<DivisorClass> summands;
  for (auto [b, e] : items) {
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) bundle_fail(text, "empty summand", b);
    long count = 1;
    if (const auto caret = text.substr(b, e - b).rfind('^'); caret != std::string_view::npos) {
      const std::size_t at = b + caret;
      const std::string digits(text.substr(at + 1, e - at - 1));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
          digits.size() > 6 || std::stol(digits) < 1) {
        bundle_fail(text, "multiplicity must be a positive integer", at + 1);
      }
      count = std::stol(digits);
      e = at;
      while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    }
    DivisorClass d = DivisorClass::zero(lattice);
    const std::string_view item = text.substr(b, e - b);
    if (item == "O") {
      // trivial summand
    } else if (item.size() >= 3 && item.substr(0, 2) == "O(" && item.back() == ')') {
      d = parse_at(lattice, text, b + 2, e - 1);
    } else {
      d = parse_at(lattice, text, b, e);
    }
    if (!d.is_integral()) bundle_fail(text, "summand " + d.to_string() + " is not integral (use a twist)", b);
    for (long k = 0; k < count; ++k) summands.push_back(d);
  }
  return twist ? SplitBundle(std::move(summands), *twist) : SplitBundle(std::move(summands));
}

// ---------------------------------------------------------------------------
// Loci

BaseLocus b_minus_divisor(const DivisorClass& d) {
  const ZariskiResult r = zariski_decompose(d);
  const auto* z = as_decomposition(r);
  if (!z) return BaseLocus::whole();
  return BaseLocus::curves(z->support());
}

BaseLocus b_plus_divisor(const DivisorClass& d) {
  const ZariskiResult r = zariski_decompose(d);
  const auto* z = as_decomposition(r);
  if (!z || intersect(z->positive, z->positive) <= 0) return BaseLocus::whole();
  const SurfaceLattice& lat = d.lattice();
  std::set<std::string> null_curves;
  for (const auto& c : lat.curves()) {
    if (lat.pair(z->positive.coeffs(), c.coeffs) == 0) null_curves.insert(c.label);
  }
  return BaseLocus::curves(std::move(null_curves));
}

namespace {

template <typename Locus>
BaseLocus union_over(const SplitBundle& e, Locus locus) {
  BaseLocus acc = BaseLocus::empty();
  for (const auto& d : e.twisted_summands()) {
    acc = acc.unite(locus(d));
    if (acc.is_whole()) break;
  }
  return acc;
}

}  // namespace

BaseLocus b_minus_bundle(const SplitBundle& e) { return union_over(e, b_minus_divisor); }
BaseLocus b_plus_bundle(const SplitBundle& e) { return union_over(e, b_plus_divisor); }
bool v_big(const SplitBundle& e) { return !b_plus_bundle(e).is_whole(); }
bool v_psef(const SplitBundle& e) { return !b_minus_bundle(e).is_whole(); }

SplitBundle sym_power(const SplitBundle& e, int c) {
  if (c < 1) throw std::invalid_argument("sym_power: exponent must be positive");
  const std::size_t r = e.rank();
  std::vector<DivisorClass> out;
  // Nondecreasing index tuples, in lexicographic order.
  std::vector<std::size_t> idx(static_cast<std::size_t>(c), 0);
  for (;;) {
    DivisorClass sum = DivisorClass::zero(e.lattice_ptr());
    for (auto i : idx) sum = sum + e.summands()[i];
    out.push_back(std::move(sum));
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == r - 1) --k;
    if (k == 0) break;
    const std::size_t next = idx[k - 1] + 1;
    for (std::size_t j = k - 1; j < idx.size(); ++j) idx[j] = next;
  }
  return {std::move(out), e.twist() * Rational(c)};
}

SplitBundle tensor(const SplitBundle& e, const SplitBundle& f) {
  if (!e.twist().same_lattice(f.twist())) throw LatticeMismatch("tensor: bundles live on different lattices");
  std::vector<DivisorClass> out;
  for (const auto& a : e.summands()) {
    for (const auto& b : f.summands()) out.push_back(a + b);
  }
  return {std::move(out), e.twist() + f.twist()};
}

SplitBundle direct_sum(const SplitBundle& e, const SplitBundle& f) {
  if (!e.twist().same_lattice(f.twist())) throw LatticeMismatch("direct_sum: bundles live on different lattices");
  if (!(e.twist() == f.twist())) throw std::invalid_argument("direct_sum: twists differ");
  std::vector<DivisorClass> out = e.summands();
  out.insert(out.end(), f.summands().begin(), f.summands().end());
  return {std::move(out), e.twist()};
}

BaseLocus preimage(const BlowdownMap& f, const BaseLocus& on_target) {
  if (on_target.is_whole()) return BaseLocus::whole();
  if (on_target.is_empty()) return BaseLocus::empty();
  return BaseLocus::curves(f.preimage_curves(on_target.labels()));
}

SplitBundle pullback_bundle(const BlowdownMap& f, const SplitBundle& e) {
  std::vector<DivisorClass> pulled;
  for (const auto& d : e.summands()) pulled.push_back(f.pullback(d));
  return {std::move(pulled), f.pullback(e.twist())};
}

LawCheck b_plus_pullback_law(const BlowdownMap& f, const SplitBundle& e) {
  LawCheck check{b_plus_bundle(pullback_bundle(f, e)),
                 preimage(f, b_plus_bundle(e)).unite(BaseLocus::curves(f.contracted_curves())), false};
  check.holds = check.lhs == check.rhs;
  return check;
}

LawCheck b_minus_pullback_law(const BlowdownMap& f, const SplitBundle& e) {
  LawCheck check{b_minus_bundle(pullback_bundle(f, e)), preimage(f, b_minus_bundle(e)), false};
  check.holds = check.lhs == check.rhs;
  return check;
}

}  // namespace vpos
