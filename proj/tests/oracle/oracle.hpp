#pragma once

#include <map>
#include <vector>

#include "jackbetti/poly.hpp"

// Reference implementations used only by the tests. They share no code with the library beyond
// GMP and the QPoly container used to hand results back and forth.
namespace oracle {

using Rational = mpq_class;
using Exps = std::vector<int>;
using Dense = std::map<Exps, Rational>;

Dense from_qpoly(const jb::poly::QPoly& f);
jb::poly::QPoly to_qpoly(const Dense& f, int n);

void add_to(Dense& acc, const Exps& e, const Rational& k);
Dense add(const Dense& a, const Dense& b, const Rational& scale = 1);
Dense mul(const Dense& a, const Dense& b);
Dense swap_vars(const Dense& f, int i, int j);  // 1-based

// Dunkl operator y_i = d/dx_i - c sum_{j != i} (1 - s_ij) / (x_i - x_j), term by term.
Dense dunkl(const Dense& f, int i, const Rational& c);
// z_i = y_i x_i + c sum_{j < i} s_ij.
Dense cherednik(const Dense& f, int i, const Rational& c);

// Rank word: ranks entries from smallest to largest, ties broken by treating entries farther right
// as smaller.
std::vector<int> rank_word(const Exps& mu);
Rational eigenvalue(const Exps& mu, int i, const Rational& c);

// Basis of the joint eigenspace {f homogeneous of degree |mu| : z_i f = eigenvalue(mu, i, c) f}.
std::vector<Dense> joint_eigenspace(const Exps& mu, const Rational& c);
// The unique joint eigenvector with unit coefficient on x^mu; empty when not unique or absent.
Dense eigen_solve(const Exps& mu, const Rational& c);

// prod_{i<j} (x_i - x_j).
Dense vandermonde(int n);

// Order of divisibility of f by (x_a - x_b): lowest power of t in f(x_a = x_b + t).
int order_along(const Dense& f, int a, int b);

// dim of the degree-d restriction of k[x_1..x_n] to X_{1,m}: rank of monomial evaluations at
// seeded random points on the arrangement.
long restriction_dim(int n, int m, int d);

// Rank of a dense rational matrix.
std::size_t rank(std::vector<std::vector<Rational>> rows);

}  // namespace oracle
