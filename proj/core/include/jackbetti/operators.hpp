#pragma once

#include <limits>
#include <vector>

#include "jackbetti/poly.hpp"

namespace jb::poly {

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// (f - s_ij f) / (x_i - x_j), by pairing terms.
template <class K>
SparsePoly<K> divided_difference(const SparsePoly<K>& f, int i, int j);
template <class K>
SparsePoly<K> partial(const SparsePoly<K>& f, int i);

template <class K>
SparsePoly<K> dunkl(const SparsePoly<K>& f, int i, const K& c);
// z_i = y_i x_i + c * sum_{j<i} s_ij.
template <class K>
SparsePoly<K> cherednik_z(const SparsePoly<K>& f, int i, const K& c);
// s_i f + (c / denom) f; ZeroEigenvalueGap when denom = 0.
template <class K>
SparsePoly<K> intertwiner_sigma(const SparsePoly<K>& f, int i, const K& denom, const K& c);
// x_n s_{n-1} ... s_1 f.
template <class K>
SparsePoly<K> raising_phi(const SparsePoly<K>& f);

template <class K>
SparsePoly<K> apply_permutation(const SparsePoly<K>& f, const Permutation& w) {
  return f.permuted(w);
}
// Sum over S_n of w(f).
template <class K>
SparsePoly<K> symmetrize(const SparsePoly<K>& f);

// x_i -> y_{assignment[i]} in a ring with n_out variables (1-based targets).
template <class K>
SparsePoly<K> specialize_clusters(const SparsePoly<K>& f, const std::vector<int>& assignment, int n_out);
// Ring homomorphism x_i -> images[i]; all images share one variable count.
template <class K>
SparsePoly<K> substitute(const SparsePoly<K>& f, const std::vector<SparsePoly<K>>& images);
// f(Mx); SingularMatrix if M is not invertible.
template <class K>
SparsePoly<K> linear_substitution(const SparsePoly<K>& f, const std::vector<std::vector<Rational>>& M);

// Largest e with g^e | f for an affine-linear g; kInfiniteOrder for f = 0.
template <class K>
int divisibility_order(const SparsePoly<K>& f, const SparsePoly<K>& g);
// Lowest total degree of f(p + x); kInfiniteOrder for f = 0.
template <class K>
int vanishing_order_at_point(const SparsePoly<K>& f, const std::vector<Rational>& p);

}  // namespace jb::poly
