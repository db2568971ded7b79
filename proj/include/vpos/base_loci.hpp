#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vpos/ns_lattice.hpp"

namespace vpos {

/// Empty, a union of catalog curves, or the whole surface. Curves({}) is
/// stored as Empty.
class BaseLocus {
 public:
  enum class Kind { empty, curves, whole };

  static BaseLocus empty() { return BaseLocus(Kind::empty, {}); }
  static BaseLocus whole() { return BaseLocus(Kind::whole, {}); }
  static BaseLocus curves(std::set<std::string> labels);

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::empty; }
  bool is_whole() const { return kind_ == Kind::whole; }
  const std::set<std::string>& labels() const { return labels_; }
  bool contains(const std::string& curve) const { return is_whole() || labels_.count(curve) > 0; }

  /// Order with Empty at the bottom and Whole at the top.
  bool subset_of(const BaseLocus& other) const;
  BaseLocus unite(const BaseLocus& other) const;

  friend bool operator==(const BaseLocus&, const BaseLocus&) = default;

  /// "empty", "whole" or "{Fb,Fp}".
  std::string to_string() const;

 private:
  BaseLocus(Kind kind, std::set<std::string> labels) : kind_(kind), labels_(std::move(labels)) {}

  Kind kind_;
  std::set<std::string> labels_;
};

/// E<T> for a totally split E = O(D_1) + ... + O(D_r): integral summands and
/// a rational twist.
class SplitBundle {
 public:
  SplitBundle(std::vector<DivisorClass> summands, DivisorClass twist);
  /// Untwisted bundle.
  explicit SplitBundle(std::vector<DivisorClass> summands);

  const LatticePtr& lattice_ptr() const { return twist_.lattice_ptr(); }
  const std::vector<DivisorClass>& summands() const { return summands_; }
  const DivisorClass& twist() const { return twist_; }
  std::size_t rank() const { return summands_.size(); }

  /// D_i + T, the rational classes whose loci make up the bundle's loci.
  std::vector<DivisorClass> twisted_summands() const;

  /// Moves an integral part of the twist into the summands: the pair
  /// (E(T'), T - T') for integral T'.
  SplitBundle absorb_twist(const DivisorClass& integral_part) const;

  bool operator==(const SplitBundle& other) const;
  /// "O(L+Fb),O <1/2L>" style; the twist is omitted when zero.
  std::string to_string() const;

 private:
  std::vector<DivisorClass> summands_;
  DivisorClass twist_;
};

/// Comma- or '⊕'-separated items "O(<class>)", "O" or "<class>", each
/// optionally followed by "^k".
SplitBundle parse_split_bundle(const LatticePtr& lattice, std::string_view text);

BaseLocus b_minus_divisor(const DivisorClass& d);
BaseLocus b_plus_divisor(const DivisorClass& d);
BaseLocus b_minus_bundle(const SplitBundle& e);
BaseLocus b_plus_bundle(const SplitBundle& e);
bool v_big(const SplitBundle& e);
bool v_psef(const SplitBundle& e);

SplitBundle sym_power(const SplitBundle& e, int c);
SplitBundle tensor(const SplitBundle& e, const SplitBundle& f);
/// Requires equal twists.
SplitBundle direct_sum(const SplitBundle& e, const SplitBundle& f);

/// Preimage of a locus on the target: Curves map to source catalog curves
/// over them.
BaseLocus preimage(const BlowdownMap& f, const BaseLocus& on_target);
SplitBundle pullback_bundle(const BlowdownMap& f, const SplitBundle& e);

struct LawCheck {
  BaseLocus lhs;
  BaseLocus rhs;
  bool holds = false;
};

/// B+(f^*E) against f^{-1}B+(E) together with the contracted curves.
LawCheck b_plus_pullback_law(const BlowdownMap& f, const SplitBundle& e);
/// B-(f^*E) against f^{-1}B-(E).
LawCheck b_minus_pullback_law(const BlowdownMap& f, const SplitBundle& e);

}  // namespace vpos
