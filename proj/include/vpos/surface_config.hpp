#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vpos/ns_lattice.hpp"

namespace vpos {

/// Grammar reported by class-expression parse errors.
inline constexpr const char* kClassGrammar =
    "class := [sign] term {sign term}; term := rational ['*'] symbol | symbol | rational; "
    "rational := digits ['/' digits]";

using SymbolLookup = std::function<std::optional<Vector>(const std::string&)>;

/// Parses a signed rational combination of symbols into coefficients of
/// length `rank`. A bare rational is accepted when rank == 1 (a multiple of
/// the single basis class) or when it is zero.
Vector parse_combination(std::string_view text, std::size_t rank, const std::vector<std::string>& symbols,
                         const SymbolLookup& lookup);

/// Class expression over the lattice's basis labels, aliases, curve labels
/// and named classes, e.g. "2L-F̄-3/2F'" or "C+2Fp".
DivisorClass parse_class(const LatticePtr& lattice, std::string_view text);

/// Surface description in the key-value format of docs/surface-format.md.
LatticePtr parse_surface_config(std::string_view text);
std::string to_config(const SurfaceLattice& lattice);

std::vector<std::string> preset_names();
std::optional<std::string_view> preset_config(std::string_view name);
/// Preset name ("p2", "p2-double-blowup") or path to a surface file.
LatticePtr load_surface(const std::string& preset_or_path);

}  // namespace vpos
