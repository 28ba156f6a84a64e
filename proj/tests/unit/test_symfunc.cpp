#include <gtest/gtest.h>

#include "jackbetti/errors.hpp"
#include "jackbetti/symfunc.hpp"

using namespace jb;
using namespace jb::symfunc;
using combinat::partitions_of;

TEST(Characters, KnownValues) {
  EXPECT_EQ(character(Partition{2, 1}, Partition{1, 1, 1}), 2);
  EXPECT_EQ(character(Partition{2, 1}, Partition{3}), -1);
  EXPECT_EQ(character(Partition{2, 2}, Partition{2, 2}), 2);
  EXPECT_EQ(character(Partition{3, 1}, Partition{2, 1, 1}), 1);
  EXPECT_THROW(character(Partition{2, 1}, Partition{2}), SizeMismatch);
}

TEST(Characters, Orthogonality) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n))
        EXPECT_EQ(inner_product(ClassFunction::irreducible(a), ClassFunction::irreducible(b)),
                  Rational(a == b ? 1 : 0));
    for (const auto& lam : partitions_of(n))
      EXPECT_EQ(character(lam, Partition(std::vector<int>(n, 1))), combinat::hook_dimension(lam));
  }
}

TEST(Frobenius, RoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    SymFunc f{n, {}};
    int k = 1;
    for (const auto& lam : partitions_of(n)) f.coeffs[lam] = exactnum::frac(k++ % 3 == 0 ? 0 : k, 2);
    std::erase_if(f.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
    EXPECT_EQ(frobenius_schur_expand(class_function_of(f)), f);
  }
}

TEST(Products, Pieri) {
  EXPECT_EQ(SymFunc::schur({1}) * SymFunc::schur({1}), SymFunc::schur({2}) + SymFunc::schur({1, 1}));
  EXPECT_EQ(SymFunc::schur({2, 1}) * SymFunc::schur({1}),
            SymFunc::schur({3, 1}) + SymFunc::schur({2, 2}) + SymFunc::schur({2, 1, 1}));
  // c^{(3,2,1)}_{(2,1),(2,1)} = 2.
  EXPECT_EQ((SymFunc::schur({2, 1}) * SymFunc::schur({2, 1})).coeff(Partition{3, 2, 1}), Rational(2));
}

TEST(Products, SkewSchur) {
  EXPECT_EQ(skew_schur({2, 1}, {1}), SymFunc::schur({2}) + SymFunc::schur({1, 1}));
  EXPECT_EQ(skew_schur({3, 2}, {3, 2}), SymFunc::schur({}));
  EXPECT_THROW(skew_schur({2}, {1, 1}), NotContained);
}

TEST(Kronecker, TrivialAndSign) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      EXPECT_EQ(kronecker(ClassFunction::trivial(n), ClassFunction::irreducible(lam)), SymFunc::schur(lam));
      EXPECT_EQ(kronecker(ClassFunction::sign(n), ClassFunction::irreducible(lam)),
                SymFunc::schur(combinat::conjugate(lam)));
    }
}

TEST(SymPower, ClosedFormulasMatchCounts) {
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(sym_power_character(i, n), sym_power_character_closed(i, n));
  // dim Sym^2 C^4 = 10.
  EXPECT_EQ(sym_power_character(2, 4).at(Partition{1, 1, 1, 1}), Rational(10));
}

TEST(Lemma54, SmallCases) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& lam : partitions_of(n))
      for (int i = 1; i <= 3; ++i) EXPECT_TRUE(verify_lemma54(n, lam, i)) << lam.to_string() << " i=" << i;
  EXPECT_THROW(verify_lemma54(4, Partition{2, 1}, 1), SizeMismatch);
  EXPECT_THROW(lemma54_sides(Partition{2, 1}, 4), ParameterOutOfRange);
}
