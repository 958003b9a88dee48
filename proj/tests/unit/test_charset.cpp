#include "einstrength/charset.hpp"
#include "einstrength/errors.hpp"
#include "einstrength/schemes.hpp"

#include <gtest/gtest.h>

using namespace einstrength;

namespace {

Term T(long x, long t, std::size_t ind = 0) { return Term{Shift(Coords{x, t}), ind}; }

SigmaPolynomial Y(long x, long t, const ConstantExpr& c = 1) { return SigmaPolynomial::term(2, 1, T(x, t), c); }

std::set<Term> leader_set(const AutoreducedSet& a) {
  auto l = a.leaders();
  return {l.begin(), l.end()};
}

bool proportional(const SigmaPolynomial& p, const SigmaPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto& [pp, c] = *p.monomials().begin();
  ConstantExpr d = q.coefficient(pp);
  if (d.is_zero()) return false;
  return p == q.scaled(c / d);
}

}  // namespace

TEST(Reduce, RemovesLeaderMultiples) {
  SigmaPolynomial a = Y(1, 0) - Y(0, 0);
  SigmaPolynomial d = Y(3, 0, 2) + Y(0, 1);
  Reduction r = reduce(Ranking(), d, {a}, true);
  EXPECT_TRUE(is_reduced(Ranking(), r.remainder, a));
  EXPECT_TRUE(check_witness(d, {a}, r));
  EXPECT_EQ(r.remainder, Y(0, 0, 2) + Y(0, 1));
}

TEST(Reduce, MultipliesByNonConstantInitials) {
  SigmaPolynomial a = Y(1, 0) * Y(0, 0) + Y(0, -1);
  SigmaPolynomial d = Y(2, 0) + Y(0, 0);
  Reduction r = reduce(Ranking(), d, {a}, true);
  EXPECT_TRUE(is_reduced(Ranking(), r.remainder, a));
  EXPECT_FALSE(r.initials.empty());
  EXPECT_TRUE(check_witness(d, {a}, r));
}

TEST(Autoreduce, RejectsInconsistentSystems) {
  EXPECT_THROW(autoreduce({Y(0, 0), Y(0, 0) + SigmaPolynomial::constant(2, 1, 1)}, Ranking()), UnsupportedSystem);
}

TEST(Autoreduce, ProducesAutoreducedSet) {
  AutoreducedSet a = autoreduce({Y(1, 0) - Y(0, 0), Y(2, 0) + Y(0, 1)}, Ranking());
  EXPECT_TRUE(a.is_autoreduced());
  EXPECT_EQ(a.size(), 2u);
}

TEST(SetRank, LongerSetWithSamePrefixIsLower) {
  AutoreducedSet small({Y(1, 0) - Y(0, 0)}, Ranking());
  AutoreducedSet big({Y(1, 0) - Y(0, 0), Y(0, 1) - Y(0, 0)}, Ranking());
  EXPECT_EQ(set_rank_compare(big, small), Cmp::Less);
  EXPECT_EQ(set_rank_compare(small, small), Cmp::Equal);
}

TEST(LeastCommonTransforms, SameIndeterminate) {
  auto l = least_common_transforms(T(1, 0), T(0, 1));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0], T(1, 1));
  EXPECT_TRUE(least_common_transforms(T(1, 0), T(-1, 0)).empty());
}

TEST(Charset, DiffusionForwardShape) {
  const auto entry = catalog_lookup("diffusion");
  const auto& sys = entry.form(SchemeKind::Forward);
  AutoreducedSet a = coherence_complete(autoreduce(sys.polynomials, Ranking()));
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(leader_set(a), (std::set<Term>{T(2, 0), T(-1, 1), T(1, -1), T(-2, -1)}));
  EXPECT_TRUE(is_coherent(a));
  OrbitCharset o = orbit_charset(sys.polynomials[0], Ranking());
  EXPECT_EQ(leader_set(o.set), leader_set(a));
  for (std::size_t i = 0; i < o.set.size(); ++i)
    EXPECT_TRUE(proportional(o.set[i], sys.polynomials[0].shifted(o.shifts[i])));
}

TEST(Charset, DiffusionSymmetricShape) {
  const auto entry = catalog_lookup("diffusion");
  const auto& sys = entry.form(SchemeKind::Symmetric);
  const SigmaPolynomial& b = sys.polynomials[0];
  AutoreducedSet a = charset_quasilinear(b, Ranking());
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(leader_set(a), (std::set<Term>{T(1, 0), T(-2, 0)}));
  EXPECT_TRUE(proportional(a[0], b));
  EXPECT_TRUE(proportional(a[1], b.shifted(Shift(Coords{-1, 0}))));
}

TEST(Charset, QuasiLinearOrbitNeedsQuasiLinearity) {
  EXPECT_THROW(orbit_charset(Y(1, 0).pow(2) + Y(0, 0), Ranking()), UnsupportedSystem);
}

TEST(Charset, ExponentSpread) { EXPECT_EQ(exponent_spread({Y(2, 0) + Y(-1, 1)}), 3); }
