#pragma once

#include <map>
#include <string>
#include <vector>

#include "jackbetti/combinat.hpp"

namespace jb::symfunc {

using combinat::Partition;
using exactnum::Integer;
using exactnum::Rational;

// chi^lambda(rho) by Murnaghan-Nakayama.
Integer character(const Partition& lambda, const Partition& rho);

// Class function on S_n, keyed by cycle type; absent types are zero.
struct ClassFunction {
  int n = 0;
  std::map<Partition, Rational> values;

  Rational at(const Partition& rho) const;
  static ClassFunction irreducible(const Partition& lambda);
  static ClassFunction trivial(int n);
  static ClassFunction sign(int n);
  static ClassFunction regular(int n);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);
// sum_rho f(rho) g(rho) / z_rho
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// Homogeneous symmetric function of degree n in the Schur basis; zero coefficients are dropped.
struct SymFunc {
  int n = 0;
  std::map<Partition, Rational> coeffs;

  static SymFunc schur(const Partition& lambda);
  static SymFunc zero(int n) { return SymFunc{n, {}}; }
  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(const Partition& lambda) const;
  // "s[4,3] + 2*s[3,3,1]", or "0".
  std::string to_string() const;
  friend bool operator==(const SymFunc&, const SymFunc&) = default;
};

SymFunc operator+(const SymFunc& a, const SymFunc& b);
SymFunc operator-(const SymFunc& a, const SymFunc& b);
// Ordinary (induction) product, degree a.n + b.n.
SymFunc operator*(const SymFunc& a, const SymFunc& b);

SymFunc frobenius_schur_expand(const ClassFunction& f);
ClassFunction class_function_of(const SymFunc& f);

// Number of degree-i monomials in n variables fixed by a permutation of each cycle type.
ClassFunction sym_power_character(int i, int n);
// The closed formulas for i in {1, 2, 3} in terms of cycle-type multiplicities.
ClassFunction sym_power_character_closed(int i, int n);

// ch(f (x) g).
SymFunc kronecker(const ClassFunction& f, const ClassFunction& g);

// s_{lambda/mu} with Littlewood-Richardson coefficients <s_mu s_nu, s_lambda>.
SymFunc skew_schur(const Partition& lambda, const Partition& mu);

// Both sides of ch(Y^i) * s_lambda for i in {1, 2, 3}.
struct Lemma54Sides {
  SymFunc lhs, rhs;
};
Lemma54Sides lemma54_sides(const Partition& lambda, int i);
bool verify_lemma54(int n, const Partition& lambda, int i);

}  // namespace jb::symfunc
