#include <gtest/gtest.h>

#include <random>

#include "jackbetti/errors.hpp"
#include "jackbetti/jack.hpp"
#include "oracle.hpp"

using namespace jb;
using jack::Composition;
using jack::Partition;
using poly::CPoly;
using poly::QPoly;
using exactnum::Rational;
using exactnum::RatFunc;

namespace {

std::vector<Composition> compositions(int n, int d) {
  std::vector<Composition> out;
  Composition e(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace

TEST(JackSmall, F01IsX2WithEigenvalues) {
  auto r = jack::nonsym_jack_generic({0, 1});
  EXPECT_EQ(r.poly, CPoly::variable(2, 2));
  RatFunc c = RatFunc::param();
  ASSERT_EQ(r.eigenvalues.size(), 2u);
  EXPECT_EQ(r.eigenvalues[0], RatFunc(1));
  EXPECT_EQ(r.eigenvalues[1], RatFunc(2) - c);
  for (Rational c0 : {Rational(1, 3), Rational(5, 2), Rational(-4, 7)})
    EXPECT_EQ(oracle::eigen_solve({0, 1}, c0), oracle::from_qpoly(QPoly::variable(2, 2)));
}

TEST(JackSmall, F10ClosedFormAndSingularAtHalf) {
  RatFunc c = RatFunc::param();
  CPoly expected = CPoly::variable(2, 1) + CPoly::variable(2, 2).scaled(c / (c - RatFunc(1)));
  auto r = jack::nonsym_jack_generic({1, 0});
  EXPECT_EQ(r.poly, expected);
  for (Rational c0 : {Rational(1, 3), Rational(5, 2), Rational(-4, 7), Rational(7, 3)})
    EXPECT_EQ(oracle::eigen_solve({1, 0}, c0), oracle::from_qpoly(poly::specialize_param(expected, c0)));

  const Rational half(1, 2);
  auto s = jack::nonsym_jack({1, 0}, half);
  QPoly x1mx2 = QPoly::variable(2, 1) - QPoly::variable(2, 2);
  EXPECT_EQ(s.poly, x1mx2);
  // At c = 1/2 the joint eigenspace is larger; the engine output must lie in it.
  auto space = oracle::joint_eigenspace({1, 0}, half);
  auto f = oracle::from_qpoly(s.poly);
  for (int i = 1; i <= 2; ++i) {
    auto zf = oracle::cherednik(f, i, half);
    auto ev = oracle::add({}, f, oracle::eigenvalue({1, 0}, i, half));
    EXPECT_EQ(zf, ev);
    EXPECT_TRUE(oracle::dunkl(f, i, half).empty());
  }
  EXPECT_GE(space.size(), 1u);
  EXPECT_TRUE(jack::singular_check(s.poly, half));
}

TEST(JackSmall, Staircase3210IsVandermondeAtHalf) {
  const Rational half(1, 2);
  auto r = jack::nonsym_jack({3, 2, 1, 0}, half);
  auto v = oracle::vandermonde(4);
  EXPECT_EQ(oracle::from_qpoly(r.poly), v);
  for (int i = 1; i <= 4; ++i)
    EXPECT_EQ(oracle::cherednik(v, i, half), oracle::add({}, v, oracle::eigenvalue({3, 2, 1, 0}, i, half)));
  EXPECT_TRUE(jack::eigencheck(r));
}

TEST(JackSmall, PoleIsReported) {
  EXPECT_THROW(jack::nonsym_jack({1, 0}, Rational(1)), NotWellDefined);
}

TEST(JackOracle, AgreesWithEigenSolveAtGenericParameter) {
  const Rational c0(7, 3);
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& mu : compositions(n, d)) {
        auto f = jack::nonsym_jack(mu, c0);
        EXPECT_EQ(oracle::from_qpoly(f.poly), oracle::eigen_solve(mu, c0)) << combinat::format_list(mu);
        auto g = jack::nonsym_jack_generic(mu);
        EXPECT_EQ(poly::specialize_param(g.poly, c0), f.poly);
      }
  for (const auto& mu : std::vector<Composition>{{2, 0, 1, 0}, {0, 1, 1, 2}, {1, 0, 2, 0}}) {
    auto f = jack::nonsym_jack(mu, Rational(-5, 4));
    EXPECT_EQ(oracle::from_qpoly(f.poly), oracle::eigen_solve(mu, Rational(-5, 4))) << combinat::format_list(mu);
  }
}

TEST(JackProperties, EigencheckAndTriangularSupport) {
  std::mt19937 gen(21);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + gen() % 3;
    Composition mu(n);
    for (int& v : mu) v = gen() % 3;
    auto r = jack::nonsym_jack_generic(mu);
    EXPECT_TRUE(jack::eigencheck(r));
    EXPECT_EQ(r.poly.degree(), combinat::total(mu));
    for (const auto& [m, k] : r.poly.terms()) {
      auto nu = m.to_composition(n);
      EXPECT_TRUE(nu == mu || combinat::composition_less(nu, mu)) << combinat::format_list(nu);
    }
  }
}

TEST(JackProperties, RsetRecursionIdentities) {
  std::mt19937 gen(22);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + gen() % 5;
    Composition mu(n);
    for (int& v : mu) v = gen() % 4;
    auto w = combinat::rank_word(mu);
    auto r = jack::rset(mu);
    auto phi = jack::rset(combinat::phi_shift(mu));
    auto expected = r;
    expected.pairs.insert({w[0], mu[0] + 1});
    EXPECT_EQ(phi, expected);
    for (int i = 1; i < n; ++i) {
      if (mu[i - 1] >= mu[i]) continue;
      auto e2 = r;
      e2.triples.insert({w[i - 1], w[i], mu[i] - mu[i - 1]});
      EXPECT_EQ(jack::rset(combinat::swap_adjacent(mu, i)), e2);
    }
  }
}

TEST(JackProperties, RsetIsInjective) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) {
      auto all = compositions(n, d);
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) EXPECT_NE(jack::rset(all[a]), jack::rset(all[b]));
    }
}

TEST(JackSym, SymmetricAndWellDefined) {
  const Rational c(3, 2);
  for (const Partition& lam : {Partition{7}, Partition{8, 1}, Partition{14, 7, 5, 5}}) {
    QPoly p = jack::sym_jack(lam, 4, c);
    EXPECT_EQ(p.degree(), lam.size());
    EXPECT_EQ(p.coeff(lam.padded(4)), Rational(1));
    for (int i = 1; i < 4; ++i) EXPECT_EQ(p.swapped(i, i + 1), p);
  }
  CPoly g = jack::sym_jack_generic(Partition{2, 1}, 3);
  EXPECT_EQ(poly::specialize_param(g, Rational(2, 9)), jack::sym_jack(Partition{2, 1}, 3, Rational(2, 9)));
}

TEST(Admissibility, GeneratorAndMinimalPartitions) {
  auto g = jack::generator_index(1, 1, 2, 4);
  EXPECT_EQ(g.mu, (Partition{3, 2, 1}));
  auto t36 = jack::minimal_admissible_t36(3, 5, 1, 10);
  EXPECT_EQ(t36.greedy, (Partition{8, 8, 4, 4, 4, 4}));
  EXPECT_EQ(t36.closed_formula, (Partition{6, 6, 4, 4, 4, 4}));
  EXPECT_FALSE(t36.agree);
  EXPECT_TRUE(jack::admissible_t11(Partition{7}, 4, 1, 4, 2).admissible);
  EXPECT_TRUE(jack::admissible_t11(Partition{14, 7, 5, 5}, 4, 1, 4, 2).admissible);
  EXPECT_FALSE(jack::admissible_t11(Partition{6}, 4, 1, 4, 2).admissible);
  EXPECT_TRUE(jack::admissible_t36(Partition{8, 8, 4, 4, 4, 4}, 3, 5, 1, 10).admissible);
}
