#include <gtest/gtest.h>

#include "jackbetti/errors.hpp"
#include "jackbetti/ideals.hpp"
#include "jackbetti/jack.hpp"
#include "oracle.hpp"

using namespace jb;
using ideals::ClusterLocus;
using poly::QPoly;
using exactnum::Integer;
using exactnum::Rational;

TEST(Ideals, ComponentCounts) {
  EXPECT_EQ(ideals::components(1, 2, 3).size(), 3u);
  EXPECT_EQ(ideals::components(1, 5, 7).size(), 21u);
  EXPECT_EQ(ideals::components(2, 2, 4).size(), 3u);
  EXPECT_THROW(ideals::components(2, 3, 5), ParameterOutOfRange);
}

TEST(Ideals, HilbertFunctionMatchesPointEvaluation) {
  for (auto [n, m, dmax] : std::vector<std::tuple<int, int, int>>{{4, 2, 5}, {5, 3, 5}, {6, 4, 4}, {5, 2, 4}}) {
    auto h = ideals::hilbert_function(1, m, n, 0, dmax);
    for (int d = 0; d <= dmax; ++d)
      EXPECT_EQ(h.quotient[d], Integer(oracle::restriction_dim(n, m, d))) << n << " " << m << " d=" << d;
  }
}

TEST(Ideals, SliceDimensionsSumToQuotient) {
  const int n = 6, m = 4;
  auto h = ideals::hilbert_function(1, m, n, 0, 5);
  ideals::SliceRestriction slice(1, m, n);
  Integer acc = 0;
  for (int d = 0; d <= 5; ++d) {
    const Integer sd = ideals::slice_quotient_dim(m, n, d);
    EXPECT_EQ(sd, Integer(static_cast<unsigned long>(slice.degree(d).rank)));
    acc += sd;
    EXPECT_EQ(acc, h.quotient[d]);
  }
}

TEST(Ideals, VanishingIdealDimensionsComplementQuotient) {
  auto h = ideals::hilbert_function(1, 3, 5, 0, 4);
  for (int d = 0; d <= 4; ++d) {
    auto piece = ideals::vanishing_ideal_graded(1, 3, 5, d);
    EXPECT_EQ(Integer(static_cast<unsigned long>(piece.dim())) + h.quotient[d],
              Integer(static_cast<unsigned long>(ideals::monomials_of_degree(5, d).size())));
    for (const auto& f : piece.basis) EXPECT_TRUE(ideals::piece_contains(piece, f));
  }
}

TEST(Ideals, PowerMembership) {
  const auto loci = ideals::components(1, 2, 3);
  const ClusterLocus* z12 = nullptr;
  for (const auto& z : loci)
    if (z.blocks[0] == std::vector<int>{1, 2}) z12 = &z;
  ASSERT_NE(z12, nullptr);
  QPoly d = QPoly::variable(3, 1) - QPoly::variable(3, 2);
  EXPECT_TRUE(ideals::power_membership(d * d, *z12, 2));
  EXPECT_FALSE(ideals::power_membership(d, *z12, 2));
  EXPECT_TRUE(ideals::power_membership(d * QPoly::variable(3, 3), *z12, 1));
}

TEST(Ideals, GeneratorLiesInClusterIdeal) {
  auto g = jack::generator_index(1, 1, 2, 4);
  auto f = jack::nonsym_jack(g.mu.padded(4), Rational(1, 2));
  ideals::ClusterIdeal I(1, 1, 2, 4);
  EXPECT_TRUE(I.contains(f.poly));
  EXPECT_FALSE(I.contains(QPoly::variable(4, 1)));
  EXPECT_EQ(ideals::orbit_span_dim(f.poly), static_cast<std::size_t>(combinat::hook_dimension(g.tau).get_ui()));
}

TEST(Ideals, SingularGeneratorSpace) {
  auto sp = ideals::singular_generator_space(1, 2);
  EXPECT_EQ(sp.dim(), 1u);
  auto sp3 = ideals::singular_generator_space(1, 3);
  EXPECT_GE(sp3.dim(), 1u);
}

TEST(Ideals, EchelonPieceIsCanonical) {
  QPoly a = QPoly::variable(2, 1) * QPoly::variable(2, 2);
  QPoly b = QPoly::variable(2, 1) * QPoly::variable(2, 1);
  auto p1 = ideals::echelon_piece(2, 2, {a + b, a - b});
  auto p2 = ideals::echelon_piece(2, 2, {b, a.scaled(Rational(3))});
  EXPECT_EQ(p1, p2);
  EXPECT_EQ(p1.dim(), 2u);
}
