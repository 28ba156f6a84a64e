#include <gtest/gtest.h>

#include <algorithm>

#include "jackbetti/clustering.hpp"
#include "jackbetti/errors.hpp"
#include "jackbetti/jack.hpp"
#include "oracle.hpp"

using namespace jb;
using clustering::Partition;
using exactnum::Rational;

namespace {

// x1 = x2 = z1, x3 = z; returns the order of (x4 - z) by substitution.
int cluster_order(const Partition& lam) {
  auto p = oracle::from_qpoly(jack::sym_jack(lam, 4, Rational(3, 2)));
  oracle::Dense q;
  for (const auto& [e, k] : p) oracle::add_to(q, {e[0] + e[1], 0, e[2], e[3]}, k);
  return oracle::order_along(q, 4, 3);
}

}  // namespace

TEST(Clustering, T11SmallExampleMatchesSubstitution) {
  auto rep = clustering::verify_T11(4, 1, 4, 2, 1, Partition{7});
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.checks.back().observed, "4");
  EXPECT_EQ(cluster_order(Partition{7}), 4);
}

TEST(Clustering, T11RejectsInadmissible) {
  EXPECT_THROW(clustering::verify_T11(4, 1, 4, 2, 1, Partition{6}), AdmissibilityFailure);
  EXPECT_THROW(clustering::verify_T11(4, 1, 4, 2, 3, Partition{7}), ParameterOutOfRange);
}

TEST(Clustering, T34AndT36SmallCases) {
  EXPECT_TRUE(clustering::verify_T34({6, 0, 0, 0}, 3, 2, 2, 4).pass());
  EXPECT_THROW(clustering::verify_T34({0, 0, 0, 6}, 3, 2, 2, 4), AdmissibilityFailure);
  EXPECT_TRUE(clustering::verify_T36(3, 2, 2, 4, Partition{7}).pass());
}

TEST(Clustering, T38SmallCase) {
  auto rep = clustering::verify_T38(1, 2, 1, 2, 4);
  EXPECT_TRUE(rep.pass());
  EXPECT_FALSE(rep.checks.empty());
}

TEST(Clustering, SamplePointsAreSeededAndOnTheBlock) {
  const std::vector<int> block{2, 4};
  auto a = clustering::sample_points(block, 5, 3, 7);
  auto b = clustering::sample_points(block, 5, 3, 7);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 3u);
  for (const auto& p : a) {
    EXPECT_EQ(p[1], p[3]);
    std::vector<Rational> others{p[0], p[1], p[2], p[4]};
    std::sort(others.begin(), others.end());
    EXPECT_EQ(std::adjacent_find(others.begin(), others.end()), others.end());
  }
}

TEST(Clustering, C12SmallCase) {
  auto rep = clustering::verify_C12(4, 2, 2, 5);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.notes.size(), 1u);
}
