#include "vpos/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "vpos/base_loci.hpp"
#include "vpos/certificates.hpp"
#include "vpos/chern_ring.hpp"
#include "vpos/errors.hpp"
#include "vpos/schur.hpp"
#include "vpos/surface_config.hpp"
#include "vpos/zariski.hpp"

namespace vpos::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rendering. Every command builds one Json document; the table format is a
// plain rendering of it, except for certificates which get a check table.

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return is_flat(e); });
}

bool is_row_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& e) {
    return e.is_object() && std::all_of(e.begin(), e.end(), [](const Json& v) { return is_flat(v); });
  });
}

void render_rows(const Json& rows, std::ostream& out, const std::string& indent) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      const std::string text = row.contains(keys[c]) ? scalar_text(row[keys[c]]) : "-";
      width[c] = std::max(width[c], text.size());
      line.push_back(text);
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  emit(keys);
  for (const auto& line : cells) emit(line);
}

void render_table(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (is_flat(value)) {
      out << indent << key << ": " << scalar_text(value) << '\n';
    } else if (is_row_list(value)) {
      out << indent << key << ":\n";
      render_rows(value, out, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ":\n";
      for (const auto& e : value) {
        if (is_flat(e)) {
          out << indent << "  " << scalar_text(e) << '\n';
        } else {
          render_table(e, out, indent + "  ");
        }
      }
    } else {
      out << indent << key << ":\n";
      render_table(value, out, indent + "  ");
    }
  }
}

Json certificate_json(const VerificationCertificate& cert) {
  Json j;
  j["certificate"] = cert.example_id();
  Json params = Json::object();
  for (const auto& [k, v] : cert.parameters()) params[k] = v;
  j["parameters"] = params;
  Json checks = Json::array();
  for (const auto& c : cert.checks()) {
    checks.push_back({{"description", c.description},
                      {"expected", c.expected},
                      {"provenance", std::string(provenance_name(c.provenance))},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  j["notes"] = cert.notes();
  j["overall"] = cert.overall() ? "pass" : "fail";
  return j;
}

void render_certificate(const VerificationCertificate& cert, std::ostream& out) {
  out << "certificate: " << cert.example_id() << '\n';
  for (const auto& [k, v] : cert.parameters()) out << "  " << k << ": " << v << '\n';
  Json rows = Json::array();
  for (const auto& c : cert.checks()) {
    rows.push_back({{"result", c.pass ? "PASS" : "FAIL"},
                    {"check", c.description},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"provenance", std::string(provenance_name(c.provenance))}});
  }
  if (!rows.empty()) render_rows(rows, out, "");
  for (const auto& n : cert.notes()) out << "note: " << n << '\n';
  out << "overall: " << (cert.overall() ? "PASS" : "FAIL") << '\n';
}

// ---------------------------------------------------------------------------
// Conversions

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json locus_json(const BaseLocus& b) { return b.to_string(); }

Json graded_json(const GradedClass& x) {
  Json j;
  j["text"] = x.to_string();
  Json pieces = Json::array();
  for (const auto& piece : x.components()) pieces.push_back(vector_json(piece));
  j["components"] = pieces;
  return j;
}

Json zariski_json(const DivisorClass& d) {
  Json j;
  j["input"] = d.to_string();
  const ZariskiResult r = zariski_decompose(d);
  const auto* z = as_decomposition(r);
  j["pseudoeffective"] = z != nullptr;
  if (!z) return j;
  j["positive"] = z->positive.to_string();
  Json neg = Json::object();
  for (const auto& [label, mult] : z->negative) neg[label] = to_string(mult);
  j["negative"] = neg;
  j["negative_class"] = z->negative_class().to_string();
  j["positive_square"] = to_string(intersect(z->positive, z->positive));
  const ZariskiInvariants inv = check_invariants(*z);
  j["invariants"] = {{"sums_to_input", inv.sums_to_input},
                     {"positive_nef", inv.positive_nef},
                     {"orthogonal", inv.orthogonal},
                     {"multiplicities_positive", inv.multiplicities_positive},
                     {"support_negative_definite", inv.support_negative_definite}};
  return j;
}

/// "P<n>" names projective space; anything else is a surface preset or file.
struct Space {
  LatticePtr lattice;
  RingPtr ring;
};

Space load_space(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'P' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    const int n = std::stoi(name.substr(1));
    if (n < 1 || n > 12) throw std::invalid_argument("projective dimension must be between 1 and 12");
    return {load_surface("p2"), NumericalRing::projective_space(n)};
  }
  const LatticePtr lat = load_surface(name);
  return {lat, NumericalRing::of_surface(lat)};
}

std::vector<int> parse_ints(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<int> out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad composition entry '" + item + "' in '" + text + "'", 0,
                       "comma-separated nonnegative integers");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

/// Parsed option values for one run.
struct Options {
  std::string surface, cls, cls2, label = "E", bundle, twist, space = "P2", text1, text2;
  std::vector<std::string> centers;
  int n_arg = 0, r_arg = 0;
  long m_arg = 0, q_arg = 0, big_m_arg = 0;
  int n_max = 6, l_max = 6, cases = 0;
  std::uint64_t seed = kDefaultSeed;
  bool as_config = false;  // print the surface file instead of the report
};

struct Context {
  std::string format = "table";
  std::ostream& out;
  std::ostream& err;
  int exit_code = ok;
  Options opt;

  void emit(const Json& j) {
    if (format == "json") {
      out << j.dump(2) << '\n';
    } else {
      render_table(j, out);
    }
  }
  void emit(const VerificationCertificate& cert) {
    if (format == "json") {
      out << certificate_json(cert).dump(2) << '\n';
    } else {
      render_certificate(cert, out);
    }
    if (!cert.overall()) exit_code = verification_failed;
  }
};

Json lattice_show(const LatticePtr& lat) {
  Json j;
  j["name"] = lat->name();
  j["rank"] = lat->rank();
  j["basis"] = lat->basis_labels();
  Json gram = Json::array();
  for (const auto& row : lat->gram()) gram.push_back(vector_json(row));
  j["gram"] = gram;
  Json curves = Json::array();
  for (const auto& c : lat->curves()) {
    curves.push_back({{"label", c.label},
                      {"class", DivisorClass(lat, c.coeffs).to_string()},
                      {"self_intersection", to_string(c.self_intersection)}});
  }
  j["curves"] = curves;
  Json mori = Json::array();
  for (const auto& g : lat->mori_generators()) mori.push_back(g.to_string());
  j["mori_generators"] = mori;
  j["polarization"] = lat->polarization().to_string();
  Json named = Json::object();
  for (const auto& n : lat->named_classes()) named[n.name] = DivisorClass(lat, n.coeffs).to_string();
  j["named_classes"] = named;
  Json aliases = Json::object();
  for (const auto& [a, t] : lat->aliases()) aliases[a] = t;
  j["aliases"] = aliases;
  return j;
}

Json lattice_classify(const DivisorClass& d) {
  Json j;
  j["class"] = d.to_string();
  j["self_intersection"] = to_string(intersect(d, d));
  j["polarization_degree"] = to_string(intersect(d, d.lattice().polarization()));
  j["nef"] = nef_test(d);
  j["ample"] = ample_test(d);
  j["pseudoeffective"] = psef_test(d);
  j["big"] = big_test(d);
  if (auto cert = psef_certificate(d)) {
    Json combo = Json::array();
    const auto gens = d.lattice().mori_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((*cert)[i] != 0) combo.push_back({{"generator", gens[i].to_string()}, {"coefficient", to_string((*cert)[i])}});
    }
    j["mori_combination"] = combo;
  }
  j["b_minus"] = locus_json(b_minus_divisor(d));
  j["b_plus"] = locus_json(b_plus_divisor(d));
  return j;
}

Json blow_up_json(const BlowUp& b) {
  Json j;
  j["surface"] = lattice_show(b.surface);
  Json contracted = Json::array();
  for (const auto& c : b.blowdown.contracted_curves()) contracted.push_back(c);
  j["contracted"] = contracted;
  Json pull = Json::array();
  const auto& target = b.blowdown.target();
  for (std::size_t k = 0; k < target->rank(); ++k) {
    pull.push_back({{"target", target->basis_labels()[k]},
                    {"pullback", b.blowdown.pullback(DivisorClass::basis(target, k)).to_string()}});
  }
  j["pullback"] = pull;
  j["config"] = to_config(*b.surface);
  return j;
}

Json bundle_loci(const SplitBundle& e) {
  Json j;
  j["bundle"] = e.to_string();
  j["rank"] = e.rank();
  Json rows = Json::array();
  for (const auto& d : e.twisted_summands()) {
    rows.push_back({{"class", d.to_string()},
                    {"b_minus", locus_json(b_minus_divisor(d))},
                    {"b_plus", locus_json(b_plus_divisor(d))}});
  }
  j["summands"] = rows;
  j["b_minus"] = locus_json(b_minus_bundle(e));
  j["b_plus"] = locus_json(b_plus_bundle(e));
  j["v_psef"] = v_psef(e);
  j["v_big"] = v_big(e);
  return j;
}

Json chern_json(const GradedClass& ch) {
  Json j;
  j["ch"] = graded_json(ch);
  Json classes = Json::array();
  for (const auto& c : chern_classes(ch)) classes.push_back(c.to_string());
  j["chern_classes"] = classes;
  return j;
}

Json lc_json(const LogClass& l) {
  Json j;
  j["rank"] = to_string(l.rank);
  j["higher"] = graded_json(l.higher);
  j["degree1"] = project_degree1(l).to_string();
  return j;
}

void build(CLI::App& app, Context& ctx, std::function<void()>& action) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  // lattice ------------------------------------------------------------
  auto* lattice = app.add_subcommand("lattice", "Surface lattices: show, classify, intersect, blow-up");
  lattice->require_subcommand(1);
  Options& o = ctx.opt;
  auto &surface = o.surface, &cls = o.cls, &cls2 = o.cls2, &label = o.label, &bundle = o.bundle, &twist = o.twist,
       &space = o.space, &text1 = o.text1, &text2 = o.text2;
  auto& centers = o.centers;
  auto* show = lattice->add_subcommand("show", "Print a surface");
  show->add_option("surface", surface, "Preset or surface file")->required();
  show->add_flag("--config", o.as_config, "Print the surface in the file format");
  show->callback([&] {
    action = [&] {
      const LatticePtr lat = load_surface(surface);
      if (o.as_config) {
        ctx.out << to_config(*lat);
      } else {
        ctx.emit(lattice_show(lat));
      }
    };
  });
  auto* classify = lattice->add_subcommand("classify", "Positivity of a class");
  classify->add_option("surface", surface)->required();
  classify->add_option("class", cls)->required();
  classify->callback([&] {
    action = [&] { ctx.emit(lattice_classify(parse_class(load_surface(surface), cls))); };
  });
  auto* inter = lattice->add_subcommand("intersect", "Intersection number of two classes");
  inter->add_option("surface", surface)->required();
  inter->add_option("class1", cls)->required();
  inter->add_option("class2", cls2)->required();
  inter->callback([&] {
    action = [&] {
      const LatticePtr lat = load_surface(surface);
      const DivisorClass a = parse_class(lat, cls), b = parse_class(lat, cls2);
      ctx.emit(Json{{"class1", a.to_string()}, {"class2", b.to_string()}, {"intersection", to_string(intersect(a, b))}});
    };
  });
  auto* blow = lattice->add_subcommand("blow-up", "Blow up a point on the named curves");
  blow->add_option("surface", surface)->required();
  blow->add_option("--on", centers, "Catalog curves through the point (repeatable)");
  blow->add_option("--label", label, "Label of the exceptional curve");
  blow->add_flag("--config", o.as_config, "Print the new surface in the file format");
  blow->callback([&] {
    action = [&] {
      const BlowUp b = blow_up_through(load_surface(surface), centers, label);
      if (o.as_config) {
        ctx.out << to_config(*b.surface);
      } else {
        ctx.emit(blow_up_json(b));
      }
    };
  });

  // zariski ------------------------------------------------------------
  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition of a class");
  zariski->add_option("surface", surface)->required();
  zariski->add_option("class", cls)->required();
  zariski->callback([&] {
    action = [&] {
      const Json j = zariski_json(parse_class(load_surface(surface), cls));
      if (j.contains("invariants")) {
        for (const auto& [k, v] : j["invariants"].items()) {
          if (!v.get<bool>()) ctx.exit_code = verification_failed;
        }
      }
      ctx.emit(j);
    };
  });

  // baselocus ----------------------------------------------------------
  auto* base = app.add_subcommand("baselocus", "Augmented and diminished base loci");
  base->add_option("surface", surface)->required();
  auto* div_opt = base->add_option("--divisor", cls, "Class expression");
  auto* bun_opt = base->add_option("--bundle", bundle, "Split bundle, e.g. \"O(L+Fb),O\"");
  base->add_option("--twist", twist, "Rational twist class")->needs(bun_opt);
  div_opt->excludes(bun_opt);
  base->callback([&, div_opt, bun_opt] {
    if (div_opt->count() == 0 && bun_opt->count() == 0) throw CLI::RequiredError("--divisor or --bundle");
    action = [&, div_opt] {
      const LatticePtr lat = load_surface(surface);
      if (div_opt->count() > 0) {
        const DivisorClass d = parse_class(lat, cls);
        ctx.emit(Json{{"class", d.to_string()},
                      {"b_minus", locus_json(b_minus_divisor(d))},
                      {"b_plus", locus_json(b_plus_divisor(d))}});
        return;
      }
      SplitBundle e = parse_split_bundle(lat, bundle);
      if (!twist.empty()) e = SplitBundle(e.summands(), e.twist() + parse_class(lat, twist));
      ctx.emit(bundle_loci(e));
    };
  });

  // schur --------------------------------------------------------------
  auto* schur_cmd = app.add_subcommand("schur", "Partitions, Schur summands, Kostka and Pieri");
  schur_cmd->require_subcommand(1);
  auto &n_arg = o.n_arg, &r_arg = o.r_arg;
  auto &m_arg = o.m_arg, &q_arg = o.q_arg, &big_m_arg = o.big_m_arg;
  auto* dec = schur_cmd->add_subcommand("decompose", "Schur summands of the n-th tensor power of a rank-r bundle");
  dec->add_option("n", n_arg)->required()->check(CLI::Range(1, 30));
  dec->add_option("r", r_arg)->required()->check(CLI::Range(1, 30));
  dec->callback([&] {
    action = [&] {
      Json rows = Json::array();
      Integer total = 0;
      for (const auto& s : schur::tensor_power_decomposition(n_arg, r_arg)) {
        rows.push_back({{"partition", s.partition.to_string()},
                        {"tableaux", to_string(s.tableau_multiplicity)},
                        {"dimension", to_string(s.dimension)}});
        total += s.tableau_multiplicity * s.dimension;
      }
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r_arg), static_cast<unsigned long>(n_arg));
      if (total != power) ctx.exit_code = verification_failed;
      ctx.emit(Json{{"n", n_arg}, {"rank", r_arg}, {"summands", rows}, {"total", to_string(total)},
                    {"rank_power", to_string(power)}});
    };
  });
  auto* kos = schur_cmd->add_subcommand("kostka", "Semistandard tableaux of a shape and content");
  kos->add_option("shape", text1)->required();
  kos->add_option("content", text2)->required();
  kos->callback([&] {
    action = [&] {
      const auto shape = schur::Partition::parse(text1);
      const auto content = parse_ints(text2);
      ctx.emit(Json{{"shape", shape.to_string()}, {"content", content}, {"kostka", to_string(schur::kostka(shape, content))}});
    };
  });
  auto* pie = schur_cmd->add_subcommand("pieri", "Multiplicity of s_lambda in h_lambda1 ... h_lambdar");
  pie->add_option("shape", text1)->required();
  pie->add_option("r", r_arg)->required()->check(CLI::PositiveNumber);
  pie->callback([&] {
    action = [&] {
      const auto shape = schur::Partition::parse(text1);
      const Integer mult = schur::pieri_summand_certificate(shape, r_arg);
      Json expansion = Json::array();
      for (auto it = schur::complete_product(shape.parts()); const auto& [p, c] : it) {
        expansion.push_back({{"partition", p.to_string()}, {"coefficient", to_string(c)}});
      }
      std::reverse(expansion.begin(), expansion.end());
      if (mult < 1) ctx.exit_code = verification_failed;
      ctx.emit(Json{{"shape", shape.to_string()}, {"rank", r_arg}, {"multiplicity", to_string(mult)},
                    {"expansion", expansion}});
    };
  });
  auto* wit = schur_cmd->add_subcommand("witness", "Exponent identity for lambda of weight M q");
  wit->add_option("shape", text1)->required();
  wit->add_option("m", m_arg)->required()->check(CLI::PositiveNumber);
  wit->add_option("q", q_arg)->required()->check(CLI::PositiveNumber);
  wit->add_option("M", big_m_arg)->required()->check(CLI::PositiveNumber);
  wit->callback([&] {
    action = [&] {
      const auto shape = schur::Partition::parse(text1);
      const auto w = schur::witness_exponents(shape, m_arg, q_arg, big_m_arg);
      if (!w.holds()) ctx.exit_code = verification_failed;
      ctx.emit(Json{{"shape", shape.to_string()}, {"a", w.a}, {"b", w.b}, {"lhs", to_string(w.lhs)},
                    {"rhs", to_string(w.rhs)}, {"M", w.big_m}, {"holds", w.holds()}});
    };
  });

  // chern --------------------------------------------------------------
  auto* chern = app.add_subcommand("chern", "Chern and log-Chern characters of split bundles");
  chern->require_subcommand(1);
  auto* ch = chern->add_subcommand("ch", "Chern character and Chern classes");
  ch->add_option("space", space, "P<n> or a surface preset/file")->required();
  ch->add_option("bundle", bundle)->required();
  ch->callback([&] {
    action = [&] {
      const Space s = load_space(space);
      const SplitBundle e = parse_split_bundle(s.lattice, bundle);
      Json j{{"space", s.ring->describe()}, {"bundle", e.to_string()}};
      j.update(chern_json(ch_split(e, s.ring)));
      ctx.emit(j);
    };
  });
  auto* lcc = chern->add_subcommand("lc", "Log-Chern character");
  lcc->add_option("bundle", bundle)->required();
  lcc->add_option("--surface", space, "P<n> or a surface preset/file (default P2)");
  lcc->callback([&] {
    action = [&] {
      const Space s = load_space(space);
      const SplitBundle e = parse_split_bundle(s.lattice, bundle);
      Json j{{"space", s.ring->describe()}, {"bundle", e.to_string()}};
      j.update(lc_json(lc(ch_split(e, s.ring))));
      ctx.emit(j);
    };
  });
  auto* add = chern->add_subcommand("check-additivity", "ch multiplicativity and lc additivity for a tensor product");
  add->add_option("bundle1", text1)->required();
  add->add_option("bundle2", text2)->required();
  add->add_option("--surface", space, "P<n> or a surface preset/file (default P2)");
  add->callback([&] {
    action = [&] {
      const Space s = load_space(space);
      const SplitBundle e = parse_split_bundle(s.lattice, text1), f = parse_split_bundle(s.lattice, text2);
      const GradedClass che = ch_split(e, s.ring), chf = ch_split(f, s.ring), chef = ch_split(tensor(e, f), s.ring);
      const LogClass sum = lc_add(lc(che), lc(chf));
      const bool mult_ok = chef == che * chf, add_ok = lc(chef) == sum;
      if (!mult_ok || !add_ok) ctx.exit_code = verification_failed;
      ctx.emit(Json{{"space", s.ring->describe()},
                    {"E", e.to_string()},
                    {"F", f.to_string()},
                    {"ch(E x F)", chef.to_string()},
                    {"ch(E) ch(F)", (che * chf).to_string()},
                    {"ch_multiplicative", mult_ok},
                    {"lc(E x F)", lc_json(lc(chef))},
                    {"lc(E) + lc(F)", lc_json(sum)},
                    {"lc_additive", add_ok}});
    };
  });

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Certificates for the worked examples and property suites");
  verify->require_subcommand(1);
  auto cert_cmd = [&](const char* name, const char* help, std::function<VerificationCertificate()> make) {
    auto* sub = verify->add_subcommand(name, help);
    sub->callback([&, make] { action = [&, make] { ctx.emit(make()); }; });
    return sub;
  };
  cert_cmd("b-minus-example", "Diminished base locus of an extension", [] { return b_minus_example(); });
  cert_cmd("b-plus-example", "Augmented base locus of an extension", [] { return b_plus_example(); });
  auto* lcounter = cert_cmd("l-counter", "Cohomology vanishing for symmetric powers on P^2",
                            [&o] { return lcounter_example(o.n_max, o.l_max); });
  lcounter->add_option("--n-max", o.n_max)->check(CLI::Range(2, 12));
  lcounter->add_option("--l-max", o.l_max)->check(CLI::Range(1, 12));
  cert_cmd("schur-suite", "Schur-Weyl, Kostka, Pieri and exponent identities", [] { return schur_suite(); });
  cert_cmd("pullback-suite", "Base loci under the blow-down to P^2", [] { return pullback_suite(); });
  auto seeded = [&](const char* name, const char* help, int default_cases,
                    VerificationCertificate (*make)(std::uint64_t, int)) {
    auto* sub = cert_cmd(name, help,  [&o, make, default_cases] {
      return make(o.seed, o.cases > 0 ? o.cases : default_cases);
    });
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--cases", o.cases, "Number of random cases")->check(CLI::Range(1, 100000));
  };
  seeded("zariski-suite", "Random Zariski decompositions on the double blow-up", 200, &zariski_suite);
  seeded("base-loci-suite", "Laws for base loci of random split bundles", 100, &base_loci_suite);
  seeded("chern-suite", "Laws for Chern characters of random split bundles", 100, &chern_suite);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{"table", out, err, ok, {}};
  CLI::App app("Exact base loci, Zariski decompositions and Schur combinatorics on surfaces", "vpos");
  std::function<void()> action;
  build(app, ctx, action);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return usage_error;
  }
  if (!action) {
    err << "error: no command\n";
    return usage_error;
  }
  try {
    action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return ctx.exit_code;
}

}  // namespace vpos::cli
