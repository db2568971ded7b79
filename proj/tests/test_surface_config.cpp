#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "vpos/certificates.hpp"
#include "vpos/errors.hpp"
#include "vpos/surface_config.hpp"

using namespace vpos;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_position(const LatticePtr& lattice, const std::string& text) {
  try {
    parse_class(lattice, text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return 0;
}

}  // namespace

TEST(ClassParser, AcceptsAliasesAndNamedClasses) {
  const LatticePtr x = load_surface("p2-double-blowup");
  EXPECT_EQ(parse_class(x, "2L-F̄-3/2F'").to_string(), "2L-Fb-3/2Fp");
  EXPECT_EQ(parse_class(x, "F′"), parse_class(x, "Fp"));
  EXPECT_EQ(parse_class(x, "C"), parse_class(x, "2L-Fb-Fp"));
  EXPECT_EQ(parse_class(x, "line"), parse_class(x, "L-Fb-2Fp"));
  EXPECT_EQ(parse_class(x, " 2 * L - Fb "), parse_class(x, "2L-Fb"));
  EXPECT_EQ(parse_class(x, "0"), DivisorClass::zero(x));
  EXPECT_EQ(parse_class(x, "L+L"), parse_class(x, "2L"));
  const LatticePtr p2 = load_surface("p2");
  EXPECT_EQ(parse_class(p2, "3"), parse_class(p2, "3L"));
}

TEST(ClassParser, ReportsPositions) {
  const LatticePtr x = load_surface("p2-double-blowup");
  EXPECT_EQ(error_position(x, "2L+Q"), 3u);
  EXPECT_EQ(error_position(x, "2L-"), 3u);
  EXPECT_EQ(error_position(x, "1/0L"), 0u);
  EXPECT_EQ(error_position(x, ""), 0u);
  try {
    parse_class(x, "L+Q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
    EXPECT_NE(e.expected().find("class :="), std::string::npos);
  }
  // Bare nonzero rationals are ambiguous in rank three.
  EXPECT_THROW(parse_class(x, "3"), ParseError);
}

TEST(SurfaceConfig, PresetsMatchTheDataFiles) {
  for (const std::string name : {"p2", "p2-double-blowup"}) {
    const auto embedded = preset_config(name);
    ASSERT_TRUE(embedded.has_value()) << name;
    EXPECT_EQ(std::string(*embedded), read_file(std::string(VPOS_SOURCE_DIR) + "/data/presets/" + name + ".surface"));
  }
  EXPECT_EQ(preset_names(), (std::vector<std::string>{"p2", "p2-double-blowup"}));
  EXPECT_FALSE(preset_config("p3").has_value());
}

TEST(SurfaceConfig, LoadsFromPath) {
  const LatticePtr from_file =
      load_surface(std::string(VPOS_SOURCE_DIR) + "/data/presets/p2-double-blowup.surface");
  EXPECT_TRUE(from_file->same_structure(*load_surface("p2-double-blowup")));
  EXPECT_THROW(load_surface("/nonexistent/surface"), std::invalid_argument);
}

TEST(SurfaceConfig, RoundTripsThroughText) {
  std::vector<LatticePtr> lattices{load_surface("p2"), load_surface("p2-double-blowup"),
                                   double_blowup_from_p2().surface,
                                   blow_up(load_surface("p2-double-blowup"), std::string("Fp"), "G").surface};
  for (const auto& l : lattices) {
    const std::string text = to_config(*l);
    const LatticePtr back = parse_surface_config(text);
    EXPECT_TRUE(back->same_structure(*l)) << text;
    EXPECT_EQ(to_config(*back), text);
    EXPECT_EQ(back->aliases(), l->aliases());
  }
}

TEST(SurfaceConfig, RejectsMalformedFiles) {
  EXPECT_THROW(parse_surface_config("name = x\n"), ParseError);
  EXPECT_THROW(parse_surface_config("basis = L\ngram 1\n"), ParseError);
  EXPECT_THROW(parse_surface_config("basis = L\ngram = 1\nfoo = 2\npolarization = L\n"), ParseError);
  EXPECT_THROW(parse_surface_config("basis = L\ngram = 1\ncurve = line : L\nmori = L\n"), ParseError);
  EXPECT_THROW(parse_surface_config("basis = L\ngram = 1\ncurve = line : L+Q\nmori = L\npolarization = L\n"),
               ParseError);
  // Well formed but the form has the wrong signature.
  EXPECT_THROW(parse_surface_config("basis = L E\ngram = 1 0\ngram = 0 1\nmori = L\nmori = E\npolarization = L+E\n"),
               std::invalid_argument);
  try {
    parse_surface_config("basis = L\ngram = 1\nbogus\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(SurfaceConfig, CommentsAndBlankLinesAreIgnored) {
  const LatticePtr l = parse_surface_config("# plane\n\nname = plane\nbasis = L\ngram = 1\n  # indented\nmori = L\npolarization = L\n");
  EXPECT_EQ(l->name(), "plane");
  EXPECT_EQ(l->rank(), 1u);
}
