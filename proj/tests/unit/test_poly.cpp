#include <gtest/gtest.h>

#include <random>

#include "jackbetti/errors.hpp"
#include "jackbetti/operators.hpp"
#include "oracle.hpp"

using namespace jb;
using poly::QPoly;
using poly::Rational;

namespace {

QPoly random_poly(std::mt19937& gen, int n, int deg, int terms) {
  QPoly f(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < deg; ++k) ++e[gen() % n];
    f += QPoly::monomial(n, e, exactnum::frac(static_cast<int>(gen() % 11) - 5, 1 + gen() % 3));
  }
  return f;
}

}  // namespace

TEST(Poly, CanonicalStringAndOrder) {
  QPoly x1 = QPoly::variable(3, 1), x3 = QPoly::variable(3, 3);
  QPoly f = x1 * x1 * x3 * QPoly::constant(3, Rational(3, 2)) - x3;
  EXPECT_EQ(f.to_string(), "3/2*x1^2*x3 - x3");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_FALSE(f.is_homogeneous());
}

TEST(Poly, RingAxiomsOnRandomInputs) {
  std::mt19937 gen(11);
  for (int t = 0; t < 30; ++t) {
    QPoly a = random_poly(gen, 3, 3, 4), b = random_poly(gen, 3, 2, 3), c = random_poly(gen, 3, 2, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(oracle::from_qpoly(a * b), oracle::mul(oracle::from_qpoly(a), oracle::from_qpoly(b)));
  }
}

TEST(Operators, DunklMatchesReference) {
  std::mt19937 gen(12);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + gen() % 3;
    QPoly f = random_poly(gen, n, 1 + gen() % 4, 5);
    const Rational c = exactnum::frac(static_cast<int>(gen() % 7) - 3, 1 + gen() % 4);
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(oracle::from_qpoly(poly::dunkl(f, i, c)), oracle::dunkl(oracle::from_qpoly(f), i, c));
      EXPECT_EQ(oracle::from_qpoly(poly::cherednik_z(f, i, c)), oracle::cherednik(oracle::from_qpoly(f), i, c));
    }
  }
}

TEST(Operators, CherednikOperatorsCommute) {
  std::mt19937 gen(13);
  const Rational c(2, 7);
  for (int t = 0; t < 10; ++t) {
    QPoly f = random_poly(gen, 3, 3, 4);
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        EXPECT_EQ(poly::cherednik_z(poly::cherednik_z(f, j, c), i, c), poly::cherednik_z(poly::cherednik_z(f, i, c), j, c));
  }
}

TEST(Operators, DunklOperatorsCommute) {
  std::mt19937 gen(14);
  const Rational c(-3, 5);
  for (int t = 0; t < 10; ++t) {
    QPoly f = random_poly(gen, 3, 4, 4);
    EXPECT_EQ(poly::dunkl(poly::dunkl(f, 1, c), 2, c), poly::dunkl(poly::dunkl(f, 2, c), 1, c));
  }
}

TEST(Operators, DivisibilityOrderMatchesSubstitution) {
  std::mt19937 gen(15);
  for (int t = 0; t < 30; ++t) {
    const int e = gen() % 4;
    QPoly g = QPoly::variable(3, 1) - QPoly::variable(3, 3);
    QPoly f = random_poly(gen, 3, 2, 3);
    if (f.is_zero()) continue;
    for (int k = 0; k < e; ++k) f = f * g;
    EXPECT_EQ(poly::divisibility_order(f, g), oracle::order_along(oracle::from_qpoly(f), 1, 3));
    EXPECT_GE(poly::divisibility_order(f, g), e);
  }
  EXPECT_EQ(poly::divisibility_order(QPoly(2), QPoly::variable(2, 1)), poly::kInfiniteOrder);
}

TEST(Operators, VanishingOrderAtPoint) {
  QPoly x = QPoly::variable(2, 1), y = QPoly::variable(2, 2);
  QPoly one = QPoly::constant(2, Rational(1));
  QPoly f = (x - one) * (x - one) * (y + one) + (x - one) * (x - one) * (x - one);
  EXPECT_EQ(poly::vanishing_order_at_point(f, {Rational(1), Rational(-1)}), 3);
  EXPECT_EQ(poly::vanishing_order_at_point(f, {Rational(1), Rational(0)}), 2);
  EXPECT_EQ(poly::vanishing_order_at_point(f, {Rational(2), Rational(0)}), 0);
}

TEST(Operators, SymmetrizeIsInvariant) {
  std::mt19937 gen(16);
  QPoly f = random_poly(gen, 4, 3, 3);
  QPoly s = poly::symmetrize(f);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(s.swapped(i, i + 1), s);
}

TEST(Operators, ClusterSpecializationIsRingMap) {
  std::mt19937 gen(17);
  QPoly a = random_poly(gen, 4, 2, 3), b = random_poly(gen, 4, 2, 3);
  std::vector<int> assignment{1, 1, 2, 3};
  EXPECT_EQ(poly::specialize_clusters(a * b, assignment, 3),
            poly::specialize_clusters(a, assignment, 3) * poly::specialize_clusters(b, assignment, 3));
}

TEST(Operators, LinearSubstitutionRejectsSingular) {
  QPoly f = QPoly::variable(2, 1);
  EXPECT_THROW(poly::linear_substitution(f, {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}),
               SingularMatrix);
}
