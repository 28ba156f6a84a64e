#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jackbetti/combinat.hpp"
#include "jackbetti/ideals.hpp"
#include "jackbetti/report.hpp"

namespace jb::betti {

using combinat::Partition;
using exactnum::Integer;

using Cell = std::pair<int, int>;  // (homological index i, internal degree j)

struct BettiTable {
  int n = 0;
  // "QQ", "GF(p)", "conjectural" or "pure".
  std::string field;
  // Table of the ideal I rather than of the quotient A/I.
  bool ideal = false;
  std::map<Cell, Integer> entries;
  std::map<Cell, std::vector<Partition>> labels;

  bool empty() const { return entries.empty(); }
  Integer at(int i, int j) const;
  Integer total(int i) const;
  int length() const;  // largest homological index, -1 when empty
  bool has_labels() const { return !labels.empty(); }
  // Every labelled cell has multiplicity equal to the summed Specht dimensions.
  bool labels_consistent() const;
};

// Entries and labels agree; field tags are ignored.
bool same_numbers(const BettiTable& a, const BettiTable& b);
bool same_labels(const BettiTable& a, const BettiTable& b);

// Ideal table: one entry per mu in P_m(lambda) at (hd(mu), c_mu) with c = 1/m, lambda = ((m-1)^q, r).
BettiTable conjectural_resolution(int n, int m);
// (i, j) -> (i + 1, j) plus the free module A at (0, 0) labelled (n).
BettiTable quotient_table(const BettiTable& ideal_table);
// Inverse of quotient_table.
BettiTable ideal_table(const BettiTable& quotient);

// Rank engine: Young-subgroup coinvariants (characteristic 0 or p > n - 1) or normal forms modulo I'
// (any prime p). Auto picks the former when it applies.
enum class KoszulMethod { Auto, Equivariant, NormalForms };

// Betti numbers of A/I(X_{1,m}) from the Koszul complex over k[x_1..x_{n-1}] (translation slice),
// computed for j <= window (default n + k). characteristic 0 means Q with certified ranks.
BettiTable koszul_betti(int n, int m, std::uint64_t characteristic = 0, int window = -1,
                        KoszulMethod method = KoszulMethod::Auto);

// Labelled two-strand resolution of A/I for 2m >= n + 1; linear when 2m = n + 1.
BettiTable pure_resolution_spec(int n, int m);

std::vector<std::vector<int>> degree_sequence(const BettiTable& t);
bool is_pure(const BettiTable& t);
// Degrees of a pure table, one per homological index.
std::vector<int> pure_degrees(const BettiTable& t);
int regularity(const BettiTable& t);

// Grid layout: header of homological indices, "total:" row, one row per j - i with dots for zeros.
std::string render(const BettiTable& t);

// Rank and Hilbert series identities for a labelled table (ideal or quotient form).
// The series is compared through degree max(c) + 2, which must not exceed h.d_max; h.d_min must be 0.
VerificationReport euler_checks(const BettiTable& t, const ideals::HilbertData& h);

}  // namespace jb::betti
