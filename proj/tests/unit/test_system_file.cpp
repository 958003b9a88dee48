#include "einstrength/errors.hpp"
#include "einstrength/report.hpp"
#include "einstrength/system_file.hpp"

#include <gtest/gtest.h>

using namespace einstrength;

TEST(SystemFile, RoundTripEveryCatalogForm) {
  for (const auto& n : catalog_names()) {
    auto e = catalog_lookup(n);
    for (auto s : e.schemes()) {
      const auto& sys = e.form(s);
      DifferenceSystem back = parse_system(write_system(sys));
      ASSERT_EQ(back.polynomials.size(), sys.polynomials.size());
      for (std::size_t i = 0; i < sys.polynomials.size(); ++i) EXPECT_EQ(back.polynomials[i], sys.polynomials[i]);
      EXPECT_EQ(back.constants, sys.constants);
      EXPECT_EQ(back.ranking.has_value(), sys.ranking.has_value());
      auto rk = e.ranking.at(s);
      EXPECT_EQ(render_strength(strength_of_system(back, back.ranking.value_or(Ranking())), back.naming(),
                                Format::Text),
                render_strength(strength_of_system(sys, rk), sys.naming(), Format::Text));
    }
  }
}

TEST(SystemFile, ParsesMinimalDocument) {
  auto sys = parse_system(R"({
    "m": 2, "translations": ["a1", "a2"], "indeterminates": ["y"],
    "constants": [{"name": "a", "nonzero": true}],
    "polynomials": [[
      {"coefficient": "a", "terms": [{"shift": [1, 0], "ind": "y", "pow": 1}]},
      {"coefficient": "-1", "terms": [{"shift": [0, 0], "ind": "y"}]}
    ]]
  })");
  EXPECT_EQ(sys.polynomials[0].to_string(sys.naming()), "a*[a1 y] - [y]");
  EXPECT_FALSE(sys.ranking.has_value());
}

TEST(SystemFile, SyntaxErrorsCarryPosition) {
  try {
    parse_system("{\n  \"m\": 2,\n  \"translations\": [\"a1\" \"a2\"]\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(SystemFile, SemanticErrors) {
  const std::string head = R"({"translations": ["a1", "a2"], "indeterminates": ["y"], "polynomials": [[)";
  EXPECT_THROW(parse_system(head + R"({"coefficient": "1", "terms": [{"shift": [1], "ind": "y"}]}]]})"),
               ParseError);
  EXPECT_THROW(parse_system(head + R"({"coefficient": "1", "terms": [{"shift": [1, 0], "ind": "z"}]}]]})"),
               ParseError);
  EXPECT_THROW(parse_system(head + R"({"coefficient": "b", "terms": [{"shift": [1, 0], "ind": "y"}]}]]})"),
               ParseError);
  EXPECT_THROW(parse_system(head + R"({"coefficient": "1", "terms": [{"shift": [1, 0], "ind": "y"}]}]],
               "ranking": {"translation_priority": [0, 0]}})"),
               ParseError);
  EXPECT_THROW(parse_system(R"({"m": 3, "translations": ["a1"], "indeterminates": ["y"], "polynomials": []})"),
               ParseError);
}

TEST(SystemFile, RankingIsPreserved) {
  auto e = catalog_lookup("fisher");
  std::string text = write_system(e.form(SchemeKind::Symmetric));
  EXPECT_NE(text.find("translation_priority"), std::string::npos);
  auto back = parse_system(text);
  ASSERT_TRUE(back.ranking.has_value());
  EXPECT_EQ(back.ranking->translation_priority(), (std::vector<std::size_t>{1, 0}));
}

TEST(Report, Formats) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_THROW(parse_format("xml"), ParseError);
  LatticeSet s(Ambient::Integers, 2, {{2, 0}, {-1, 1}, {1, -1}, {-2, -1}});
  EXPECT_EQ(render_lattice("phi", s, Format::Text).substr(0, 9), "phi = 5t\n");
  EXPECT_NE(render_lattice("phi", s, Format::Json).find("\"expanded\": \"5t\""), std::string::npos);
}
