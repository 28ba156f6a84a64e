#include "jackbetti/operators.hpp"

#include <algorithm>

namespace jb::poly {

template <class K>
SparsePoly<K> divided_difference(const SparsePoly<K>& f, int i, int j) {
  SparsePoly<K> r(f.nvars());
  const int a = i - 1, b = j - 1;
  for (const auto& [m, k] : f.terms()) {
    int p = m.e[a], q = m.e[b];
    if (p == q) continue;
    Monomial nm = m;
    if (p > q) {
      for (int t = 0; t < p - q; ++t) {
        nm.e[a] = static_cast<std::uint8_t>(p - 1 - t);
        nm.e[b] = static_cast<std::uint8_t>(q + t);
        r.add_term(nm, k);
      }
    } else {
      K neg = -k;
      for (int t = 0; t < q - p; ++t) {
        nm.e[a] = static_cast<std::uint8_t>(p + t);
        nm.e[b] = static_cast<std::uint8_t>(q - 1 - t);
        r.add_term(nm, neg);
      }
    }
  }
  return r;
}

template <class K>
SparsePoly<K> partial(const SparsePoly<K>& f, int i) {
  SparsePoly<K> r(f.nvars());
  for (const auto& [m, k] : f.terms()) {
    int p = m.e[i - 1];
    if (!p) continue;
    Monomial nm = m;
    nm.e[i - 1] = static_cast<std::uint8_t>(p - 1);
    r.add_term(nm, k * K(p));
  }
  return r;
}

template <class K>
SparsePoly<K> dunkl(const SparsePoly<K>& f, int i, const K& c) {
  int n = f.nvars();
  if (i < 1 || i > n) throw ParameterOutOfRange("Dunkl index out of range");
  SparsePoly<K> dd(n);
  for (int j = 1; j <= n; ++j)
    if (j != i) dd += divided_difference(f, i, j);
  return partial(f, i) - dd.scaled(c);
}

template <class K>
SparsePoly<K> cherednik_z(const SparsePoly<K>& f, int i, const K& c) {
  int n = f.nvars();
  if (i < 1 || i > n) throw ParameterOutOfRange("Cherednik index out of range");
  SparsePoly<K> r = dunkl(f * SparsePoly<K>::variable(n, i), i, c);
  SparsePoly<K> sw(n);
  for (int j = 1; j < i; ++j) sw += f.swapped(i, j);
  return r + sw.scaled(c);
}

template <class K>
SparsePoly<K> intertwiner_sigma(const SparsePoly<K>& f, int i, const K& denom, const K& c) {
  if (exactnum::is_zero(denom)) throw ZeroEigenvalueGap("eigenvalues of z_" + std::to_string(i) + " and z_" +
                                                        std::to_string(i + 1) + " coincide");
  return f.swapped(i, i + 1) + f.scaled(c / denom);
}

template <class K>
SparsePoly<K> raising_phi(const SparsePoly<K>& f) {
  int n = f.nvars();
  SparsePoly<K> r(n);
  for (const auto& [m, k] : f.terms()) {
    Monomial nm;
    for (int t = 0; t + 1 < n; ++t) nm.e[t] = m.e[t + 1];
    nm.set(n - 1, m.e[0] + 1);
    r.add_term(nm, k);
  }
  return r;
}

template <class K>
SparsePoly<K> symmetrize(const SparsePoly<K>& f) {
  int n = f.nvars();
  // Group by sorted exponent; the orbit sum of x^a is n_a times the monomial symmetric function.
  std::map<Composition, K> grouped;
  for (const auto& [m, k] : f.terms()) {
    Composition a = m.to_composition(n);
    std::sort(a.begin(), a.end());
    auto [it, fresh] = grouped.try_emplace(a, k);
    if (!fresh) it->second += k;
  }
  SparsePoly<K> r(n);
  for (auto& [a, k] : grouped) {
    if (exactnum::is_zero(k)) continue;
    K coeff = k * K(Rational(combinat::stabilizer_order(a)));
    Composition b = a;
    do {
      r.add_term(Monomial(b), coeff);
    } while (std::next_permutation(b.begin(), b.end()));
  }
  return r;
}

template <class K>
SparsePoly<K> specialize_clusters(const SparsePoly<K>& f, const std::vector<int>& assignment, int n_out) {
  if (static_cast<int>(assignment.size()) != f.nvars()) throw SizeMismatch("assignment must cover every variable");
  for (int t : assignment)
    if (t < 1 || t > n_out) throw InvalidInput("assignment target out of range");
  SparsePoly<K> r(n_out);
  for (const auto& [m, k] : f.terms()) {
    Composition e(n_out, 0);
    for (int i = 0; i < f.nvars(); ++i) e[assignment[i] - 1] += m.e[i];
    r.add_term(Monomial(e), k);
  }
  return r;
}

template <class K>
SparsePoly<K> substitute(const SparsePoly<K>& f, const std::vector<SparsePoly<K>>& images) {
  int n = f.nvars();
  if (static_cast<int>(images.size()) != n) throw SizeMismatch("one image per variable required");
  int n_out = n ? images[0].nvars() : 0;
  std::vector<std::vector<SparsePoly<K>>> powers(n);
  auto power = [&](int i, int e) -> const SparsePoly<K>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SparsePoly<K>::constant(n_out, K(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  SparsePoly<K> r(n_out);
  for (const auto& [m, k] : f.terms()) {
    SparsePoly<K> term = SparsePoly<K>::constant(n_out, k);
    for (int i = 0; i < n; ++i)
      if (m.e[i]) term = term * power(i, m.e[i]);
    r += term;
  }
  return r;
}

namespace {

bool rational_invertible(std::vector<std::vector<Rational>> a) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(a[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(a[piv], a[col]);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int t = col; t < n; ++t) a[r][t] -= f * a[col][t];
    }
  }
  return true;
}

}  // namespace

template <class K>
SparsePoly<K> linear_substitution(const SparsePoly<K>& f, const std::vector<std::vector<Rational>>& M) {
  int n = f.nvars();
  if (static_cast<int>(M.size()) != n) throw SizeMismatch("matrix size differs from variable count");
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n) throw SizeMismatch("matrix is not square");
  if (!rational_invertible(M)) throw SingularMatrix("substitution matrix is singular");
  std::vector<SparsePoly<K>> images;
  for (int i = 0; i < n; ++i) {
    SparsePoly<K> img(n);
    for (int j = 0; j < n; ++j)
      if (sgn(M[i][j]) != 0) img += SparsePoly<K>::variable(n, j + 1).scaled(K(M[i][j]));
    images.push_back(std::move(img));
  }
  return substitute(f, images);
}

namespace {

template <class K>
int min_degree(const SparsePoly<K>& f) {
  if (f.is_zero()) return kInfiniteOrder;
  return f.terms().rbegin()->first.degree();
}

}  // namespace

template <class K>
int divisibility_order(const SparsePoly<K>& f, const SparsePoly<K>& g) {
  int n = f.nvars();
  if (g.nvars() != n) throw SizeMismatch("divisor lives in a different ring");
  if (g.degree() != 1) throw NonlinearDivisor("divisor must be a nonconstant affine-linear form");
  if (f.is_zero()) return kInfiniteOrder;
  // Pick a variable v with nonzero coefficient a and substitute x_v -> (x_v - h) / a, so g becomes x_v.
  std::vector<K> lin(n, K(0));
  K constant(0);
  for (const auto& [m, k] : g.terms()) {
    if (m.degree() == 0) {
      constant = k;
      continue;
    }
    for (int i = 0; i < n; ++i)
      if (m.e[i]) lin[i] = k;
  }
  int v = 0;
  while (exactnum::is_zero(lin[v])) ++v;
  K inv = K(1) / lin[v];
  std::vector<SparsePoly<K>> images;
  for (int i = 0; i < n; ++i) images.push_back(SparsePoly<K>::variable(n, i + 1));
  SparsePoly<K> img = SparsePoly<K>::variable(n, v + 1).scaled(inv);
  for (int i = 0; i < n; ++i)
    if (i != v && !exactnum::is_zero(lin[i])) img -= SparsePoly<K>::variable(n, i + 1).scaled(lin[i] * inv);
  if (!exactnum::is_zero(constant)) img -= SparsePoly<K>::constant(n, constant * inv);
  images[v] = img;
  SparsePoly<K> h = substitute(f, images);
  int order = kInfiniteOrder;
  for (const auto& [m, k] : h.terms()) order = std::min(order, static_cast<int>(m.e[v]));
  return order;
}

template <class K>
int vanishing_order_at_point(const SparsePoly<K>& f, const std::vector<Rational>& p) {
  int n = f.nvars();
  if (static_cast<int>(p.size()) != n) throw SizeMismatch("point dimension differs from variable count");
  if (f.is_zero()) return kInfiniteOrder;
  std::vector<SparsePoly<K>> images;
  for (int i = 0; i < n; ++i)
    images.push_back(SparsePoly<K>::variable(n, i + 1) + SparsePoly<K>::constant(n, K(p[i])));
  return min_degree(substitute(f, images));
}

#define JB_INSTANTIATE(K)                                                                             \
  template SparsePoly<K> divided_difference(const SparsePoly<K>&, int, int);                         \
  template SparsePoly<K> partial(const SparsePoly<K>&, int);                                          \
  template SparsePoly<K> dunkl(const SparsePoly<K>&, int, const K&);                                  \
  template SparsePoly<K> cherednik_z(const SparsePoly<K>&, int, const K&);                            \
  template SparsePoly<K> intertwiner_sigma(const SparsePoly<K>&, int, const K&, const K&);            \
  template SparsePoly<K> raising_phi(const SparsePoly<K>&);                                           \
  template SparsePoly<K> symmetrize(const SparsePoly<K>&);                                            \
  template SparsePoly<K> specialize_clusters(const SparsePoly<K>&, const std::vector<int>&, int);     \
  template SparsePoly<K> substitute(const SparsePoly<K>&, const std::vector<SparsePoly<K>>&);         \
  template SparsePoly<K> linear_substitution(const SparsePoly<K>&,                                    \
                                             const std::vector<std::vector<Rational>>&);              \
  template int divisibility_order(const SparsePoly<K>&, const SparsePoly<K>&);                        \
  template int vanishing_order_at_point(const SparsePoly<K>&, const std::vector<Rational>&);

JB_INSTANTIATE(Rational)
JB_INSTANTIATE(RatFunc)

#undef JB_INSTANTIATE

}  // namespace jb::poly
