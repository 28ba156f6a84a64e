#pragma once

#include <set>
#include <string>
#include <vector>

#include "jackbetti/combinat.hpp"

namespace jb::abacus {

using combinat::Partition;
using exactnum::Rational;

struct Bead {
  int runner;  // 0-based
  int row;     // 1-based, top row first
  friend bool operator==(const Bead&, const Bead&) = default;
};

// Beads at row-major positions; position p sits on runner p % m in row p / m + 1.
class AbacusDiagram {
 public:
  AbacusDiagram(int m, std::vector<int> positions);

  int runners() const { return m_; }
  int bead_count() const { return static_cast<int>(pos_.size()); }
  const std::vector<int>& positions() const { return pos_; }
  std::vector<Bead> beads() const;
  bool occupied(int position) const;
  bool one_bead_per_runner() const;
  // Header, rule, at least min_rows rows of beads, then a row of dots.
  std::string render(int min_rows = 5) const;

  friend bool operator==(const AbacusDiagram& a, const AbacusDiagram& b) {
    return a.m_ == b.m_ && a.pos_ == b.pos_;
  }
  friend bool operator<(const AbacusDiagram& a, const AbacusDiagram& b) {
    return a.m_ != b.m_ ? a.m_ < b.m_ : a.pos_ < b.pos_;
  }

 private:
  int m_;
  std::vector<int> pos_;
};

// Border trace with lambda_1 beads.
AbacusDiagram abacus_of(const Partition& lambda, int m);
// Same trace padded so that the diagram carries bead_count >= lambda_1 beads.
AbacusDiagram abacus_of(const Partition& lambda, int m, int bead_count);
Partition partition_of(const AbacusDiagram& d);

int homological_degree(const AbacusDiagram& d);
Partition m_core(const Partition& lambda, int m);

// Diagrams reachable by one paired move: a bead up one row, another down one row.
std::vector<AbacusDiagram> single_moves(const AbacusDiagram& d);
// Closure of the abacus of lambda under paired moves, decoded.
std::set<Partition> pm_set(const Partition& lambda, int m);
// {mu |- |lambda| : same m-core as lambda, mu <= lambda in dominance}.
std::set<Partition> pm_set_by_dominance(const Partition& lambda, int m);
// Diagrams of P_m(lambda), each carrying lambda_1 beads.
std::vector<AbacusDiagram> pm_diagrams(const Partition& lambda, int m);

struct PmEntry {
  Partition mu;
  AbacusDiagram diagram;
  int hd;
  Rational c;
};
// P_m(lambda) with homological degrees and c-statistics at c = 1/m, ordered by (hd, c, mu).
std::vector<PmEntry> pm_table(const Partition& lambda, int m);

Rational c_stat(const Partition& mu, int n, const Rational& c);
bool unitary_check(const Partition& lambda, int m);
// Number of empty positions lying above a bead on its runner, summed over beads.
int empties_above(const AbacusDiagram& d);
// ((m-1)^q, r) with n = q(m-1) + r.
Partition m_equals_partition(int n, int m);
int projective_dimension_formula(int n, int m);

}  // namespace jb::abacus
