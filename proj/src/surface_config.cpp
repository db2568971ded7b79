#include "vpos/surface_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vpos/errors.hpp"

namespace vpos {

namespace detail {
extern const std::string_view kPresetP2;
extern const std::string_view kPresetP2DoubleBlowup;
}  // namespace detail

namespace {

class CombinationParser {
 public:
  CombinationParser(std::string_view text, std::size_t rank, std::vector<std::string> symbols,
                    const SymbolLookup& lookup)
      : text_(text), rank_(rank), symbols_(std::move(symbols)), lookup_(lookup) {
    // Longest match first so "Fb" wins over a hypothetical "F".
    std::sort(symbols_.begin(), symbols_.end(),
              [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  }

  Vector parse() {
    Vector acc = zero_vector(rank_);
    skip_space();
    if (at_end()) fail("empty class expression", "a class expression");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("unexpected character '" + std::string(1, peek()) + "'", "'+' or '-'");
      }
      const std::size_t term_start = pos_;
      std::optional<Rational> coeff = parse_number();
      skip_space();
      if (coeff && !at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
      if (auto sym = match_symbol()) {
        const Rational c = sign * coeff.value_or(Rational(1));
        for (std::size_t i = 0; i < rank_; ++i) acc[i] += c * (*sym)[i];
      } else if (coeff) {
        if (rank_ == 1) {
          acc[0] += sign * *coeff;
        } else if (*coeff != 0) {
          pos_ = term_start;
          fail("a bare rational needs a symbol on a lattice of rank " + std::to_string(rank_), "symbol");
        }
      } else {
        fail(at_end() ? "expression ends after a sign" : "unknown symbol", "rational or symbol");
      }
      skip_space();
      first = false;
    }
    for (auto& c : acc) c.canonicalize();
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
    throw ParseError(message + " in '" + std::string(text_) + "'", pos_, expected + " (" + kClassGrammar + ")");
  }

  std::optional<Rational> parse_number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("denominator missing", "digits");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("invalid rational", "nonzero denominator");
    }
  }

  std::optional<Vector> match_symbol() {
    for (const auto& s : symbols_) {
      if (text_.substr(pos_, s.size()) != s) continue;
      // Do not split an identifier: "Lx" must not parse as "L" followed by junk.
      const std::size_t end = pos_ + s.size();
      if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end])) &&
          std::isalnum(static_cast<unsigned char>(s.back()))) {
        continue;
      }
      auto v = lookup_(s);
      if (!v) continue;
      pos_ = end;
      return v;
    }
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t rank_;
  std::vector<std::string> symbols_;
  const SymbolLookup& lookup_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Vector parse_combination(std::string_view text, std::size_t rank, const std::vector<std::string>& symbols,
                         const SymbolLookup& lookup) {
  return CombinationParser(text, rank, symbols, lookup).parse();
}

DivisorClass parse_class(const LatticePtr& lattice, std::string_view text) {
  std::vector<std::string> symbols = lattice->basis_labels();
  for (const auto& [alias, target] : lattice->aliases()) symbols.push_back(alias);
  for (const auto& c : lattice->curves()) symbols.push_back(c.label);
  for (const auto& n : lattice->named_classes()) symbols.push_back(n.name);
  const SymbolLookup lookup = [&](const std::string& name) -> std::optional<Vector> {
    if (auto d = lattice->symbol(name)) return d->coeffs();
    return std::nullopt;
  };
  return {lattice, parse_combination(text, lattice->rank(), symbols, lookup)};
}

LatticePtr parse_surface_config(std::string_view text) {
  struct Entry {
    std::size_t line;
    std::size_t offset;
    std::string value;
  };
  LatticeData data;
  std::vector<Entry> curves, mori, named, polarization, gram_rows;
  std::optional<Entry> basis;

  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', offset), text.size());
    const std::string_view raw = text.substr(offset, eol - offset);
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ParseError("surface file line " + std::to_string(line_no) + ": missing '='", offset, "key = value");
      }
      const std::string key = trim(std::string_view(line).substr(0, eq));
      Entry entry{line_no, offset, trim(std::string_view(line).substr(eq + 1))};
      if (key == "name") {
        data.name = entry.value;
      } else if (key == "basis") {
        basis = entry;
      } else if (key == "gram") {
        gram_rows.push_back(entry);
      } else if (key == "curve") {
        curves.push_back(entry);
      } else if (key == "mori") {
        mori.push_back(entry);
      } else if (key == "polarization") {
        polarization.push_back(entry);
      } else if (key == "class") {
        named.push_back(entry);
      } else if (key == "alias") {
        const auto colon = entry.value.find(':');
        if (colon == std::string::npos) {
          throw ParseError("surface file line " + std::to_string(line_no) + ": alias needs ':'", offset,
                           "alias = <spelling> : <basis label>");
        }
        data.aliases[trim(std::string_view(entry.value).substr(0, colon))] =
            trim(std::string_view(entry.value).substr(colon + 1));
      } else {
        throw ParseError("surface file line " + std::to_string(line_no) + ": unknown key '" + key + "'", offset,
                         "one of name, basis, gram, alias, curve, mori, polarization, class");
      }
    }
    if (eol == text.size()) break;
    offset = eol + 1;
  }

  if (!basis) throw ParseError("surface file: no basis line", 0, "basis = <label> ...");
  data.basis_labels = split_words(basis->value);
  const std::size_t n = data.basis_labels.size();
  for (const auto& row : gram_rows) {
    Vector v;
    for (const auto& w : split_words(row.value)) {
      try {
        v.push_back(parse_rational(w));
      } catch (const std::invalid_argument& e) {
        throw ParseError("surface file line " + std::to_string(row.line) + ": " + e.what(), row.offset,
                         "rational entries such as -3/2");
      }
    }
    data.gram.push_back(std::move(v));
  }
  if (polarization.size() != 1) {
    throw ParseError("surface file: expected exactly one polarization line", 0, "polarization = <class>");
  }

  std::vector<std::string> symbols = data.basis_labels;
  for (const auto& [alias, target] : data.aliases) symbols.push_back(alias);
  const SymbolLookup lookup = [&](const std::string& name) -> std::optional<Vector> {
    std::string label = name;
    if (auto a = data.aliases.find(name); a != data.aliases.end()) label = a->second;
    const auto it = std::find(data.basis_labels.begin(), data.basis_labels.end(), label);
    if (it == data.basis_labels.end()) return std::nullopt;
    Vector v = zero_vector(n);
    v[static_cast<std::size_t>(it - data.basis_labels.begin())] = 1;
    return v;
  };
  auto expr = [&](const Entry& e, std::string_view body) {
    try {
      return parse_combination(body, n, symbols, lookup);
    } catch (const ParseError& pe) {
      throw ParseError("surface file line " + std::to_string(e.line) + ": " + pe.what(), e.offset, pe.expected());
    }
  };
  auto labelled = [&](const Entry& e, const char* what) {
    const auto colon = e.value.find(':');
    if (colon == std::string::npos) {
      throw ParseError("surface file line " + std::to_string(e.line) + ": " + what + " needs ':'", e.offset,
                       std::string(what) + " = <label> : <class>");
    }
    return std::pair{trim(std::string_view(e.value).substr(0, colon)),
                     expr(e, std::string_view(e.value).substr(colon + 1))};
  };

  for (const auto& e : curves) {
    auto [label, coeffs] = labelled(e, "curve");
    data.curves.push_back({label, coeffs, 0});
  }
  for (const auto& e : named) {
    auto [name, coeffs] = labelled(e, "class");
    data.named_classes.push_back({name, coeffs});
  }
  for (const auto& e : mori) data.mori_generators.push_back(expr(e, e.value));
  data.polarization = expr(polarization.front(), polarization.front().value);
  return SurfaceLattice::create(std::move(data));
}

std::string to_config(const SurfaceLattice& lattice) {
  std::ostringstream out;
  const LatticePtr self = lattice.shared_from_this();
  auto cls = [&](const Vector& v) { return DivisorClass(self, v).to_string(); };
  if (!lattice.name().empty()) out << "name = " << lattice.name() << '\n';
  out << "basis =";
  for (const auto& l : lattice.basis_labels()) out << ' ' << l;
  out << '\n';
  for (const auto& row : lattice.gram()) {
    out << "gram =";
    for (const auto& x : row) out << ' ' << to_string(x);
    out << '\n';
  }
  for (const auto& [alias, target] : lattice.aliases()) out << "alias = " << alias << " : " << target << '\n';
  for (const auto& c : lattice.curves()) out << "curve = " << c.label << " : " << cls(c.coeffs) << '\n';
  for (const auto& g : lattice.mori_generator_coeffs()) out << "mori = " << cls(g) << '\n';
  out << "polarization = " << cls(lattice.data().polarization) << '\n';
  for (const auto& nc : lattice.named_classes()) out << "class = " << nc.name << " : " << cls(nc.coeffs) << '\n';
  return out.str();
}

std::vector<std::string> preset_names() { return {"p2", "p2-double-blowup"}; }

std::optional<std::string_view> preset_config(std::string_view name) {
  if (name == "p2") return detail::kPresetP2;
  if (name == "p2-double-blowup") return detail::kPresetP2DoubleBlowup;
  return std::nullopt;
}

LatticePtr load_surface(const std::string& preset_or_path) {
  if (auto text = preset_config(preset_or_path)) return parse_surface_config(*text);
  std::ifstream in(preset_or_path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("'" + preset_or_path + "' is neither a preset (p2, p2-double-blowup) nor a readable file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface_config(buf.str());
}

}  // namespace vpos
