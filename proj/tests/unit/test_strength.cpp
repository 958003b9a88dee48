#include "einstrength/errors.hpp"
#include "einstrength/schemes.hpp"

#include <gtest/gtest.h>

using namespace einstrength;

namespace {

struct Case {
  std::string name;
  SchemeKind scheme;
  std::size_t components;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (const auto& n : catalog_names()) {
    auto e = catalog_lookup(n);
    for (auto s : e.schemes()) out.push_back({n, s, 1});
  }
  out.push_back({"chromatography", SchemeKind::Forward, 3});
  out.push_back({"chromatography", SchemeKind::Symmetric, 3});
  return out;
}

}  // namespace

class CatalogStrength : public ::testing::TestWithParam<Case> {};

TEST_P(CatalogStrength, MatchesExpectedPolynomial) {
  const Case& c = GetParam();
  CatalogEntry e = catalog_lookup(c.name, c.components);
  StrengthReport rep = strength_of_system(e.form(c.scheme), e.ranking.at(c.scheme));
  EXPECT_EQ(rep.psi, e.expected_total(c.scheme)) << rep.psi.to_string();
  NumericalPolynomial total;
  for (const auto& [i, p] : rep.per_indeterminate) total += p;
  EXPECT_EQ(total, rep.psi);
  EXPECT_TRUE(rep.charset.is_autoreduced());
}

INSTANTIATE_TEST_SUITE_P(All, CatalogStrength, ::testing::ValuesIn(all_cases()),
                         [](const auto& info) {
                           std::string s = info.param.name + "_" + to_string(info.param.scheme) + "_" +
                                           std::to_string(info.param.components);
                           for (auto& ch : s)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });

TEST(Strength, BlocksAndRoutes) {
  auto e = catalog_lookup("reaction-kinetics");
  StrengthReport rep = strength_of_system(e.form(SchemeKind::Forward));
  ASSERT_EQ(rep.blocks.size(), 3u);
  EXPECT_EQ(rep.blocks[0].route, BlockRoute::Linear);
  EXPECT_EQ(rep.blocks[2].route, BlockRoute::QuasiLinear);
  EXPECT_EQ(rep.sigma_tr_deg, 0);
}

TEST(Strength, FreeIndeterminateGivesFullPolynomial) {
  DifferenceSystem sys = reaction_linear_subsystem(SchemeKind::Forward);
  sys.indeterminates.push_back("y3");
  for (auto& p : sys.polynomials) {
    SigmaPolynomial q(2, 3);
    for (const auto& [pp, c] : p.monomials()) q.add_monomial(pp, c);
    p = q;
  }
  StrengthReport rep = strength_of_system(sys);
  EXPECT_EQ(rep.psi, parse_numpoly("10t") + phi_empty(2));
  EXPECT_EQ(rep.sigma_tr_deg, 1);
}

TEST(Strength, LinearSubsystemOfReactionKinetics) {
  EXPECT_EQ(strength_of_system(reaction_linear_subsystem(SchemeKind::Forward)).psi, parse_numpoly("10t"));
  EXPECT_EQ(strength_of_system(reaction_linear_subsystem(SchemeKind::Symmetric)).psi, parse_numpoly("8t"));
  EXPECT_EQ(strength_of_system(reaction_linear_subsystem(SchemeKind::CrankNicholson)).psi,
            parse_numpoly("12t - 2"));
}

TEST(Strength, UnsupportedClasses) {
  PDESpec fhn = fitzhugh_nagumo_literal();
  EXPECT_THROW(strength_of_system(discretize(fhn, SchemeKind::Symmetric)), UnsupportedSystem);
  DifferenceSystem sys = catalog_lookup("diffusion").form(SchemeKind::Forward);
  sys.polynomials[0] = sys.polynomials[0].pow(2);
  EXPECT_THROW(strength_of_system(sys), UnsupportedSystem);
}

TEST(Strength, UndeclaredConstantIsRejected) {
  DifferenceSystem sys = catalog_lookup("diffusion").form(SchemeKind::Forward);
  sys.constants.clear();
  EXPECT_THROW(sys.validate(), ParseError);
}

TEST(Strength, SigmaTranscendenceDegree) {
  EXPECT_EQ(sigma_tr_deg(parse_numpoly("2t^2 + 6t + 1"), 2), 1);
  EXPECT_EQ(sigma_tr_deg(parse_numpoly("5t"), 2), 0);
}
