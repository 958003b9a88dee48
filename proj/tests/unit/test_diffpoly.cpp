#include "einstrength/diffpoly.hpp"
#include "einstrength/errors.hpp"

#include <gtest/gtest.h>

using namespace einstrength;

namespace {

Term T(long x, long t, std::size_t ind = 0) { return Term{Shift(Coords{x, t}), ind}; }

SigmaPolynomial Y(long x, long t, const ConstantExpr& c = 1, std::size_t n = 1, std::size_t ind = 0) {
  return SigmaPolynomial::term(2, n, T(x, t, ind), c);
}

}  // namespace

TEST(Shift, Algebra) {
  Shift a(Coords{1, -2}), b(Coords{0, 3});
  EXPECT_EQ((a * b).exponents(), (Coords{1, 1}));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ(Shift::unit(2, 1, -1).exponents(), (Coords{0, -1}));
}

TEST(Naming, Display) {
  Naming n = Naming::standard(2, 1);
  EXPECT_EQ(n.term(T(-1, 1)), "a1^-1 a2 y");
  EXPECT_EQ(n.term(T(0, 0)), "y");
  EXPECT_EQ(Naming::standard(2, 3).term(T(2, 0, 2)), "a1^2 y3");
}

TEST(Ranking, StandardOrdersByOrderThenCoordinates) {
  Ranking rk;
  EXPECT_TRUE(rk.less(T(1, 0), T(2, 0)));
  EXPECT_TRUE(rk.less(T(1, 0), T(0, -2)));
  EXPECT_EQ(rk.compare(T(1, 1), T(1, 1)), Cmp::Equal);
  EXPECT_TRUE(rk.is_standard());
}

TEST(Ranking, TranslationPriorityChangesTies) {
  Ranking time_first({1, 0}, {});
  EXPECT_NE(Ranking().compare(T(1, 0), T(0, 1)), time_first.compare(T(1, 0), T(0, 1)));
  EXPECT_FALSE(time_first.is_standard());
  EXPECT_THROW(Ranking({0, 0}, {}), Error);
  EXPECT_THROW(Ranking({1, 0}, {}).validate(3, 1), Error);
}

TEST(Ranking, IndeterminatePriorityBreaksTies) {
  Ranking rk({}, {1, 0});
  EXPECT_TRUE(rk.less(T(0, 0, 1), T(0, 0, 0)));
  EXPECT_TRUE(Ranking().less(T(0, 0, 0), T(0, 0, 1)));
}

TEST(Transform, Kinds) {
  EXPECT_EQ(is_transform(T(1, 0), T(2, 1)), TransformKind::Proper);
  EXPECT_EQ(is_transform(T(1, 0), T(1, 0)), TransformKind::Improper);
  EXPECT_EQ(is_transform(T(1, 0), T(-1, 0)), TransformKind::No);
  EXPECT_EQ(is_transform(T(1, 0, 0), T(2, 0, 1)), TransformKind::No);
}

TEST(SigmaPolynomial, DisplayFollowsRanking) {
  ConstantExpr a = ConstantExpr::symbol("a");
  SigmaPolynomial p = Y(2, 0, a) - Y(1, 0, a * ConstantExpr(2)) - Y(0, 1) + Y(0, 0, a + ConstantExpr(1));
  EXPECT_EQ(p.to_string(Naming::standard(2, 1)), "a*[a1^2 y] - 2*a*[a1 y] - [a2 y] + (a + 1)*[y]");
  EXPECT_EQ(p.leader(Ranking()), T(2, 0));
  EXPECT_EQ(p.initial(Ranking()), SigmaPolynomial::constant(2, 1, a));
  EXPECT_TRUE(p.is_linear());
  EXPECT_TRUE(p.is_quasi_linear(Ranking()));
  EXPECT_EQ(p.max_order(), 2);
}

TEST(SigmaPolynomial, ShiftAndArithmetic) {
  SigmaPolynomial p = Y(1, 0) * Y(0, 0) + Y(0, 0);
  SigmaPolynomial q = p.shifted(Shift(Coords{-1, 2}));
  EXPECT_EQ(q, Y(0, 2) * Y(-1, 2) + Y(-1, 2));
  EXPECT_FALSE(p.is_linear());
  EXPECT_FALSE(p.is_quasi_linear(Ranking()));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(Y(0, 0).pow(3).degree_in(T(0, 0)), 3u);
}

TEST(SigmaPolynomial, QuasiLinearity) {
  SigmaPolynomial nonlinear_leader = Y(1, 0).pow(2) + Y(0, 0);
  EXPECT_FALSE(nonlinear_leader.is_quasi_linear(Ranking()));
  SigmaPolynomial symbolic_initial = Y(1, 0) * Y(0, 0) + Y(0, 1);
  EXPECT_FALSE(symbolic_initial.is_quasi_linear(Ranking()));
}

TEST(SigmaPolynomial, Bind) {
  ConstantExpr a = ConstantExpr::symbol("a");
  SigmaPolynomial p = Y(1, 0, a) + Y(0, 0, a - ConstantExpr(3));
  SigmaPolynomial b = p.bind({{"a", Rational(3)}});
  EXPECT_EQ(b, Y(1, 0, 3));
  EXPECT_EQ(p.constant_symbols(), (std::set<std::string>{"a"}));
  EXPECT_THROW(p.bind({}), Error);
}

TEST(SigmaPolynomial, DimensionChecks) {
  EXPECT_THROW(Y(0, 0) + Y(0, 0, 1, 2), Error);
}
