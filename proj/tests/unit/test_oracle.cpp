#include "einstrength/errors.hpp"
#include "einstrength/oracle.hpp"

#include <gtest/gtest.h>

using namespace einstrength;

namespace {

GridInstance bound(const DifferenceSystem& sys, const std::map<std::string, Rational>& v, long r) {
  GridInstance g;
  g.system = sys;
  for (auto& p : g.system.polynomials) p = p.bind(v);
  g.r = r;
  return g;
}

}  // namespace

TEST(GridOracle, ReferenceValues) {
  auto diffusion = catalog_lookup("diffusion");
  EXPECT_EQ(grid_strength(bound(diffusion.form(SchemeKind::Forward), {{"a", Rational(3)}}, 2)), 10);
  EXPECT_EQ(grid_strength(bound(diffusion.form(SchemeKind::Symmetric), {{"a", Rational(3)}}, 3)), 12);
  auto chrom = catalog_lookup("chromatography");
  EXPECT_EQ(grid_strength(bound(chrom.form(SchemeKind::Forward),
                                {{"D_L1", Rational(2)}, {"F", Rational(3)}, {"u", Rational(5)}}, 2)),
            23);
}

TEST(GridOracle, Invariances) {
  auto sys = catalog_lookup("diffusion").form(SchemeKind::Forward);
  std::map<std::string, Rational> v{{"a", Rational(2, 7)}};
  long base = grid_strength(bound(sys, v, 2));
  auto scaled = sys;
  scaled.polynomials[0] = scaled.polynomials[0].scaled(ConstantExpr(Rational(-5, 3)));
  EXPECT_EQ(grid_strength(bound(scaled, v, 2)), base);
  auto moved = sys;
  moved.polynomials[0] = moved.polynomials[0].shifted(Shift(Coords{-1, 1}));
  EXPECT_EQ(grid_strength(bound(moved, v, 2)), base);

  auto chrom = catalog_lookup("chromatography", 2).form(SchemeKind::Symmetric);
  std::map<std::string, Rational> w{{"D_L1", Rational(2)}, {"D_L2", Rational(7, 3)}, {"F", Rational(3)},
                                    {"u", Rational(5)}};
  long c1 = grid_strength(bound(chrom, w, 1));
  std::swap(chrom.polynomials[0], chrom.polynomials[1]);
  EXPECT_EQ(grid_strength(bound(chrom, w, 1)), c1);
}

TEST(GridOracle, RelationsMonotoneInPadding) {
  auto sys = catalog_lookup("diffusion").form(SchemeKind::CrankNicholson);
  std::map<std::string, Rational> v;
  for (int i = 1; i <= 5; ++i) v["a_" + std::to_string(i)] = Rational(i + 1, 3);
  GridInstance g = bound(sys, v, 2);
  long prev = -1;
  for (long R = 3; R <= 7; ++R) {
    g.R = R;
    long d = grid_strength_detailed(g).relations;
    EXPECT_GE(d, prev);
    prev = d;
  }
}

TEST(GridOracle, RejectsNonlinearAndSymbolic) {
  auto fisher = catalog_lookup("fisher").form(SchemeKind::Forward);
  EXPECT_THROW(randomized_verify(fisher, parse_numpoly("5t"), 0, 1, 1, 1), UnsupportedSystem);
  GridInstance g;
  g.system = catalog_lookup("diffusion").form(SchemeKind::Forward);
  g.r = 1;
  EXPECT_THROW(grid_strength(g), UnsupportedSystem);
}

TEST(RandomizedVerify, AgreesForPositiveOrders) {
  auto e = catalog_lookup("diffusion");
  for (auto s : e.schemes()) {
    VerificationReport rep = randomized_verify(e, s, 1, 3, 3, 1);
    EXPECT_TRUE(rep.ok()) << to_string(s) << ": " << rep.summary();
    EXPECT_EQ(rep.checks.size(), 9u);
  }
  auto c = catalog_lookup("chromatography");
  EXPECT_EQ(randomized_verify(c, SchemeKind::Symmetric, 1, 3, 3, 1).summary(), "OK: 9/9 checks");
}

TEST(RandomizedVerify, OrderZeroDisagrees) {
  VerificationReport rep = randomized_verify(catalog_lookup("diffusion"), SchemeKind::Forward, 0, 3, 3, 1);
  EXPECT_EQ(rep.passed(), 9u);
  EXPECT_EQ(rep.summary().rfind("MISMATCH: 3/12", 0), 0u) << rep.summary();
}

TEST(RandomizedVerify, DeterministicForSeed) {
  auto e = catalog_lookup("diffusion");
  auto a = randomized_verify(e, SchemeKind::CrankNicholson, 1, 2, 2, 42);
  auto b = randomized_verify(e, SchemeKind::CrankNicholson, 1, 2, 2, 42);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].bindings, b.checks[i].bindings);
}

TEST(RandomBindings, DistinctNonzero) {
  std::mt19937_64 rng(3);
  auto v = random_bindings(catalog_lookup("diffusion").form(SchemeKind::CrankNicholson), rng);
  EXPECT_EQ(v.size(), 5u);
  std::set<Rational> seen;
  for (const auto& [k, q] : v) {
    EXPECT_NE(q, 0);
    seen.insert(q);
  }
  EXPECT_EQ(seen.size(), v.size());
}
