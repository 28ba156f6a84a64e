#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jackbetti/operators.hpp"

namespace jb::jack {

using combinat::Composition;
using combinat::Partition;
using combinat::Permutation;
using exactnum::Rational;
using exactnum::RatFunc;
using poly::CPoly;
using poly::QPoly;
using poly::SparsePoly;

using RPair = std::pair<int, int>;          // (i, k)
using RTriple = std::array<int, 3>;         // (i, j, k)

struct RSet {
  std::set<RPair> pairs;
  std::set<RTriple> triples;

  bool subset_of(const RSet& o) const;
  std::size_t size() const { return pairs.size() + triples.size(); }
  friend bool operator==(const RSet&, const RSet&) = default;
};

RSet rset(const Composition& mu);
// k = l(j - i)/m.
bool nonsemisimple(int i, int j, int k, int ell, int m);
// The same test for an arbitrary specialized parameter: k = c0 (j - i).
bool blocks_at(const RTriple& t, const Rational& c0);

struct Move {
  enum class Kind { Phi, Sigma };
  Kind kind;
  int index;          // i for SIGMA(i), 0 for PHI
  RTriple adjoined;   // triple for SIGMA; (i, k, 0) pair for PHI
  std::string to_string() const;
};

// Recursion path from start to target adding one element of R(target) per step.
// With c0 set, steps whose triple blocks at c0 are forbidden; search backtracks.
std::vector<Move> build_path(const Composition& start, const Composition& target,
                             const std::optional<Rational>& c0 = std::nullopt);

// mu_i + 1 - (w_mu(i) - 1) c.
template <class K>
K eigenvalue(const Composition& mu, int i, const K& c) {
  Permutation w = combinat::rank_word(mu);
  return K(mu[i - 1] + 1) - K(w[i - 1] - 1) * c;
}

template <class K>
struct JackResult {
  Composition index;
  SparsePoly<K> poly;
  std::vector<K> eigenvalues;
  K c;
  // Seed of the recursion: the zero composition or a generator index.
  Composition seed;
};

struct JackOptions {
  // Generic computation followed by evaluation is tried up to this degree when no pole-free path exists.
  int generic_fallback_max_degree = 12;
  // Rearrangements of lambda tried by the symmetric engine.
  int max_rearrangements = 720;
};

template <class K>
SparsePoly<K> replay(SparsePoly<K> f, Composition mu, const std::vector<Move>& path, const K& c);

JackResult<RatFunc> nonsym_jack_generic(const Composition& mu);
// Specialized parameter: pole-free path from zero, else from a generator index, else generic fallback.
JackResult<Rational> nonsym_jack(const Composition& mu, const Rational& c0, const JackOptions& opts = {});

CPoly sym_jack_generic(const Partition& lambda, int n);
QPoly sym_jack(const Partition& lambda, int n, const Rational& c0, const JackOptions& opts = {});

template <class K>
bool eigencheck(const JackResult<K>& r);
bool singular_check(const QPoly& f, const Rational& c0);

struct GeneratorIndex {
  Partition mu;
  Partition tau;
};
GeneratorIndex generator_index(int s, int ell, int m, int n);

enum class Regime { T11, T34, T36 };

struct ConditionCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct AdmissibilityReport {
  Regime regime;
  bool admissible;
  std::vector<ConditionCheck> conditions;
  std::string first_violation() const;
};

// Clustering inequalities for lambda at c = (r-1)/(k+1), with s clusters of size k+1.
AdmissibilityReport admissible_t11(const Partition& lambda, int n, int k, int r, int s);
// Conditions (a)-(c) on mu^- and w_mu^{-1}, evaluated literally.
AdmissibilityReport admissible_t34(const Composition& mu, int ell, int m, int s, int n);
// Inequalities on lambda at c = ell/m for s-1 clusters of size m plus one of size m-1.
AdmissibilityReport admissible_t36(const Partition& lambda, int ell, int m, int s, int n);

struct MinimalAdmissible {
  Partition greedy;
  Partition closed_formula;
  bool agree;
};
MinimalAdmissible minimal_admissible_t36(int ell, int m, int s, int n);
MinimalAdmissible minimal_admissible_t11(int n, int k, int r, int s);

}  // namespace jb::jack
