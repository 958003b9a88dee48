#include "einstrength/errors.hpp"
#include "einstrength/schemes.hpp"

#include <gtest/gtest.h>

using namespace einstrength;

namespace {
std::string show(const DifferenceSystem& s, std::size_t i = 0) { return s.polynomials.at(i).to_string(s.naming()); }
}  // namespace

TEST(Schemes, ParseSchemeNames) {
  EXPECT_EQ(parse_scheme("forward"), SchemeKind::Forward);
  EXPECT_EQ(parse_scheme("Symmetric"), SchemeKind::Symmetric);
  EXPECT_EQ(parse_scheme("cn"), SchemeKind::CrankNicholson);
  EXPECT_THROW(parse_scheme("backward"), ParseError);
}

TEST(Schemes, DiffusionForms) {
  auto e = catalog_lookup("diffusion");
  EXPECT_EQ(show(e.form(SchemeKind::Forward)), "a*[a1^2 y] - 2*a*[a1 y] - [a2 y] + (a + 1)*[y]");
  EXPECT_EQ(show(e.form(SchemeKind::Symmetric)), "a*[a1 y] + a*[a1^-1 y] - [a2 y] + [a2^-1 y] - 2*a*[y]");
  EXPECT_EQ(show(e.form(SchemeKind::CrankNicholson)),
            "[a1 a2 y] + a_1*[a1^-1 a2 y] + a_2*[a1 y] + a_4*[a1^-1 y] + a_3*[a2 y] + a_5");
  EXPECT_THROW(discretize(e.pde, SchemeKind::CrankNicholson), UnsupportedSystem);
}

TEST(Schemes, ChromatographyForwardCoefficient) {
  auto e = catalog_lookup("chromatography");
  const auto& sys = e.form(SchemeKind::Forward);
  EXPECT_EQ(sys.n(), 2u);
  EXPECT_NE(show(sys).find("(D_L1 + u + 1)*[y1]"), std::string::npos) << show(sys);
}

TEST(Schemes, ChromatographyComponents) {
  auto e = catalog_lookup("chromatography", 3);
  EXPECT_EQ(e.form(SchemeKind::Symmetric).n(), 6u);
  EXPECT_EQ(e.form(SchemeKind::Symmetric).polynomials.size(), 3u);
  EXPECT_EQ(e.expected_total(SchemeKind::Forward), parse_numpoly("6t^2 + 21t + 3"));
  EXPECT_THROW(catalog_lookup("chromatography", 0), ParseError);
}

TEST(Schemes, FamilyEntriesAreQuasiLinear) {
  for (const char* n : {"murray", "burgers", "fisher", "huxley", "burgers-fisher", "burgers-huxley",
                        "fitzhugh-nagumo"}) {
    auto e = catalog_lookup(n);
    for (auto s : e.schemes()) {
      const auto& sys = e.form(s);
      ASSERT_EQ(sys.polynomials.size(), 1u);
      EXPECT_TRUE(sys.polynomials[0].is_quasi_linear(e.ranking.at(s))) << n << " " << to_string(s);
      EXPECT_NO_THROW(sys.validate());
    }
  }
}

TEST(Schemes, BurgersForward) {
  EXPECT_EQ(show(catalog_lookup("burgers").form(SchemeKind::Forward)),
            "[a1^2 y] - [a1 y]*[y] - 2*[a1 y] - [a2 y] + [y]^2 + 2*[y]");
}

TEST(Schemes, FitzHughNagumoLiteral) {
  auto sys = discretize(fitzhugh_nagumo_literal(), SchemeKind::Forward);
  EXPECT_EQ(strength_of_system(sys).psi, parse_numpoly("4t"));
}

TEST(Schemes, LinearityFlags) {
  EXPECT_TRUE(catalog_lookup("diffusion").is_linear(SchemeKind::CrankNicholson));
  EXPECT_FALSE(catalog_lookup("reaction-kinetics").is_linear(SchemeKind::Forward));
  EXPECT_FALSE(catalog_lookup("fisher").is_linear(SchemeKind::Forward));
}

TEST(Schemes, UnknownEntries) {
  EXPECT_THROW(catalog_lookup("heat"), ParseError);
  EXPECT_THROW(catalog_lookup("fisher").form(SchemeKind::CrankNicholson), UnsupportedSystem);
  EXPECT_EQ(catalog_names().size(), 10u);
}

TEST(PDEPolynomial, Arithmetic) {
  PDEPolynomial u = PDEPolynomial::var(0);
  PDEPolynomial p = (u + PDEPolynomial(1)) * (u - PDEPolynomial(1));
  EXPECT_EQ(p, u * u - PDEPolynomial(1));
  EXPECT_EQ((p - p).terms().size(), 0u);
}
