#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jackbetti/exactnum.hpp"

namespace jb::combinat {

using exactnum::Integer;

// Fixed-length sequence of nonnegative integers.
using Composition = std::vector<int>;
// One-line notation with values 1..n.
using Permutation = std::vector<int>;

// Weakly decreasing parts, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<int> parts);  // NOLINT: validates and strips zeros
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;
  int operator[](int i) const { return i < length() ? p_[i] : 0; }
  bool empty() const { return p_.empty(); }
  // Pads with zeros to n entries; throws if the partition has more than n parts.
  Composition padded(int n) const;
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.p_ != b.p_; }
  // Lexicographic on parts; used only to key containers.
  friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

// Parses "4,4,3", "4^2,3", "1^11", "(2,1,0)"; exponent notation expands runs.
std::vector<int> parse_list(std::string_view text);
std::string format_list(const std::vector<int>& v);
// Compact exponent notation as used in tables, e.g. "2,1^6".
std::string format_exponent(const Partition& p);

int total(const Composition& mu);
Permutation rank_word(const Composition& mu);
Permutation inverse(const Permutation& w);
Permutation identity_permutation(int n);
// (u*v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
int inversions(const Permutation& w);
int sign(const Permutation& w);
bool is_permutation(const std::vector<int>& w);

Composition rearrange_increasing(const Composition& mu);
Composition rearrange_decreasing(const Composition& mu);
Partition to_partition(const Composition& mu);

bool dominance_leq(const Partition& a, const Partition& b);
bool bruhat_leq(const Permutation& u, const Permutation& v);
bool composition_less(const Composition& mu, const Composition& nu);

Partition conjugate(const Partition& lambda);
long nstat(const Partition& lambda);
Integer hook_dimension(const Partition& lambda);
Integer stabilizer_order(const Composition& mu);
Integer factorial(int n);
Integer binomial(long n, long k);

std::vector<Partition> partitions_of(int n);
// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const Composition& mu);
// Multiplicities m_1, m_2, ... of a cycle type, index i holding m_{i+1}.
std::vector<int> multiplicities(const Partition& rho);
// z_rho = prod_i i^{m_i} m_i!.
Integer centralizer_order(const Partition& rho);

// s_i acting on positions i and i+1 (1-based).
Composition swap_adjacent(const Composition& mu, int i);
// (mu_2, ..., mu_n, mu_1 + 1).
Composition phi_shift(const Composition& mu);

}  // namespace jb::combinat
