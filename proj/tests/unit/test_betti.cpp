#include <gtest/gtest.h>

#include "jackbetti/abacus.hpp"
#include "jackbetti/betti.hpp"
#include "jackbetti/errors.hpp"
#include "oracle.hpp"

using namespace jb;
using betti::BettiTable;
using betti::KoszulMethod;
using exactnum::Integer;

namespace {

// sum_{i,j} (-1)^i beta_{ij} t^j against H_{A/I}(t) (1-t)^n with H from point evaluation, through degree D.
void expect_euler(const BettiTable& t, int n, int m, int D) {
  std::vector<Integer> lhs(D + 1, 0);
  for (const auto& [cell, v] : t.entries)
    if (cell.second <= D) lhs[cell.second] += (cell.first % 2 ? -1 : 1) * v;
  std::vector<Integer> h(D + 1);
  for (int d = 0; d <= D; ++d) h[d] = oracle::restriction_dim(n, m, d);
  for (int j = 0; j <= D; ++j) {
    Integer rhs = 0;
    for (int e = 0; e <= j && e <= n; ++e) rhs += ((e % 2) ? -1 : 1) * combinat::binomial(n, e) * h[j - e];
    EXPECT_EQ(lhs[j], rhs) << "n=" << n << " m=" << m << " j=" << j;
  }
}

}  // namespace

TEST(Betti, RenderCharTwoGridByteExact) {
  const std::string expected =
      "       0  1  2  3 4 5\n"
      "total: 1 14 21 14 7 1\n"
      "    0: 1  .  .  . . .\n"
      "    1: .  .  .  . . .\n"
      "    2: . 14 21  . . .\n"
      "    3: .  .  . 14 6 1\n"
      "    4: .  .  .  . 1 .\n";
  EXPECT_EQ(betti::render(betti::koszul_betti(7, 5, 2)), expected);
}

TEST(Betti, PureTableSevenFive) {
  auto t = betti::pure_resolution_spec(7, 5);
  EXPECT_TRUE(betti::is_pure(t));
  EXPECT_EQ(betti::pure_degrees(t), (std::vector<int>{0, 3, 4, 6, 7}));
  EXPECT_EQ(betti::regularity(t), 3);
  EXPECT_TRUE(t.labels_consistent());
  EXPECT_THROW(betti::pure_resolution_spec(7, 3), RegimeViolation);
}

TEST(Betti, OracleMatchesPureAndConjecture) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 4}, {6, 4}, {6, 5}}) {
    auto o = betti::koszul_betti(n, m);
    EXPECT_TRUE(betti::same_numbers(o, betti::pure_resolution_spec(n, m))) << n << "," << m;
    auto conj = betti::quotient_table(betti::conjectural_resolution(n, m));
    EXPECT_TRUE(betti::same_numbers(o, conj)) << n << "," << m;
    EXPECT_TRUE(betti::same_labels(conj, betti::pure_resolution_spec(n, m))) << n << "," << m;
  }
}

TEST(Betti, EulerCharacteristicAgainstPointEvaluation) {
  expect_euler(betti::koszul_betti(5, 3), 5, 3, 7);
  expect_euler(betti::koszul_betti(6, 4), 6, 4, 7);
  expect_euler(betti::koszul_betti(5, 2, 0, 12), 5, 2, 12);
  EXPECT_THROW(betti::koszul_betti(5, 2, 0, 9), WindowTooSmall);
}

TEST(Betti, NormalFormAndCoinvariantEnginesAgree) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 3}, {5, 4}, {6, 4}, {6, 5}}) {
    auto a = betti::koszul_betti(n, m, 101, -1, KoszulMethod::Equivariant);
    auto b = betti::koszul_betti(n, m, 101, -1, KoszulMethod::NormalForms);
    EXPECT_TRUE(betti::same_numbers(a, b)) << n << "," << m;
    EXPECT_TRUE(betti::same_numbers(a, betti::koszul_betti(n, m))) << n << "," << m;
  }
  EXPECT_THROW(betti::koszul_betti(7, 5, 2, -1, KoszulMethod::Equivariant), ParameterOutOfRange);
  EXPECT_THROW(betti::koszul_betti(7, 5, 0, -1, KoszulMethod::NormalForms), ParameterOutOfRange);
  EXPECT_THROW(betti::koszul_betti(7, 5, 4), ParameterOutOfRange);
}

TEST(Betti, ConjectureMatchesOracleOutsidePureRegime) {
  auto o = betti::koszul_betti(6, 3, 0, 12);
  auto conj = betti::quotient_table(betti::conjectural_resolution(6, 3));
  EXPECT_TRUE(betti::same_numbers(o, conj));
}

TEST(Betti, WindowTooSmallIsReported) {
  EXPECT_THROW(betti::koszul_betti(6, 3), WindowTooSmall);
  EXPECT_THROW(betti::koszul_betti(6, 4, 0, 4), WindowTooSmall);
}

TEST(Betti, QuotientIdealRoundTrip) {
  auto ideal = betti::conjectural_resolution(11, 5);
  EXPECT_TRUE(ideal.ideal);
  auto q = betti::quotient_table(ideal);
  EXPECT_EQ(q.at(0, 0), 1);
  auto back = betti::ideal_table(q);
  EXPECT_TRUE(betti::same_numbers(back, ideal));
  EXPECT_TRUE(betti::same_labels(back, ideal));
  EXPECT_EQ(q.length(), abacus::projective_dimension_formula(11, 5));
}

TEST(Betti, LabelsConsistencyDetectsTampering) {
  auto t = betti::quotient_table(betti::conjectural_resolution(7, 5));
  EXPECT_TRUE(t.labels_consistent());
  auto cell = t.labels.rbegin()->first;
  t.labels[cell].pop_back();
  EXPECT_FALSE(t.labels_consistent());
}

TEST(Betti, ConjectureEdgeCases) {
  EXPECT_TRUE(betti::conjectural_resolution(4, 5).empty());
  EXPECT_THROW(betti::conjectural_resolution(4, 1), ParameterOutOfRange);
}
