#include "jackbetti/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "jackbetti/errors.hpp"

namespace jb::symfunc {

using combinat::centralizer_order;
using combinat::partitions_of;

namespace {

// First-column hook lengths of lambda padded to len parts.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) b[i] = lambda[i] + (len - 1 - i);
  return b;
}

Integer mn_rec(std::vector<int> beta, const std::vector<int>& rho, std::size_t at,
               std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
  if (at == rho.size()) return 1;
  auto key = std::make_pair(beta, at);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = rho[at];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<int>());
    Integer v = mn_rec(next, rho, at + 1, memo);
    if (between % 2) total -= v;
    else total += v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

// Cached character tables; chi^lambda(rho) indexed by partitions of n.
const std::map<std::pair<Partition, Partition>, Integer>& table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<std::pair<Partition, Partition>, Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<std::pair<Partition, Partition>, Integer> t;
  for (const auto& lam : partitions_of(n)) {
    for (const auto& rho : partitions_of(n)) {
      std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
      t[{lam, rho}] = mn_rec(beta_set(lam, std::max(lam.length(), 1)), rho.parts(), 0, memo);
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

Integer chi(const Partition& lambda, const Partition& rho) {
  return table(lambda.size()).at({lambda, rho});
}

using PowerSum = std::map<Partition, Rational>;

PowerSum to_power_sum(const SymFunc& f) {
  PowerSum out;
  for (const auto& [lam, c] : f.coeffs)
    for (const auto& rho : partitions_of(f.n)) {
      Rational v = c * Rational(chi(lam, rho)) / Rational(centralizer_order(rho));
      if (sgn(v) != 0) out[rho] += v;
    }
  return out;
}

SymFunc from_power_sum(int n, const PowerSum& p) {
  SymFunc out{n, {}};
  for (const auto& lam : partitions_of(n)) {
    Rational v = 0;
    for (const auto& [rho, a] : p) v += a * Rational(chi(lam, rho));
    if (sgn(v) != 0) out.coeffs[lam] = v;
  }
  return out;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(v);
}

void check_same_n(int a, int b) {
  if (a != b) throw SizeMismatch("class functions on different symmetric groups");
}

}  // namespace

Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw SizeMismatch("character: |lambda| != |rho|");
  return chi(lambda, rho);
}

Rational ClassFunction::at(const Partition& rho) const {
  auto it = values.find(rho);
  return it == values.end() ? Rational(0) : it->second;
}

ClassFunction ClassFunction::irreducible(const Partition& lambda) {
  ClassFunction f{lambda.size(), {}};
  for (const auto& rho : partitions_of(f.n)) f.values[rho] = Rational(chi(lambda, rho));
  return f;
}

ClassFunction ClassFunction::trivial(int n) {
  ClassFunction f{n, {}};
  for (const auto& rho : partitions_of(n)) f.values[rho] = 1;
  return f;
}

ClassFunction ClassFunction::sign(int n) {
  ClassFunction f{n, {}};
  for (const auto& rho : partitions_of(n)) f.values[rho] = (n - rho.length()) % 2 ? -1 : 1;
  return f;
}

ClassFunction ClassFunction::regular(int n) {
  ClassFunction f{n, {}};
  for (const auto& rho : partitions_of(n))
    f.values[rho] = rho.length() == n ? Rational(combinat::factorial(n)) : Rational(0);
  return f;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
  check_same_n(f.n, g.n);
  ClassFunction h{f.n, {}};
  for (const auto& rho : partitions_of(f.n)) h.values[rho] = f.at(rho) * g.at(rho);
  return h;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  check_same_n(f.n, g.n);
  Rational s = 0;
  for (const auto& rho : partitions_of(f.n)) s += f.at(rho) * g.at(rho) / Rational(centralizer_order(rho));
  return s;
}

SymFunc SymFunc::schur(const Partition& lambda) { return SymFunc{lambda.size(), {{lambda, Rational(1)}}}; }

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? Rational(0) : it->second;
}

std::string SymFunc::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Dominance-friendly order: lexicographically decreasing partitions.
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    Rational c = it->second;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    Rational a = abs(c);
    if (a != 1) out << exactnum::to_string(a) << "*";
    out << "s[" << combinat::format_list(it->first.parts()) << "]";
    first = false;
  }
  return out.str();
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  check_same_n(a.n, b.n);
  SymFunc r = a;
  for (const auto& [lam, c] : b.coeffs) {
    Rational v = r.coeff(lam) + c;
    if (sgn(v) == 0) r.coeffs.erase(lam);
    else r.coeffs[lam] = v;
  }
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  SymFunc nb = b;
  for (auto& [lam, c] : nb.coeffs) c = -c;
  return a + nb;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  PowerSum pa = to_power_sum(a), pb = to_power_sum(b), prod;
  for (const auto& [r, x] : pa)
    for (const auto& [s, y] : pb) prod[merge(r, s)] += x * y;
  return from_power_sum(a.n + b.n, prod);
}

SymFunc frobenius_schur_expand(const ClassFunction& f) {
  SymFunc out{f.n, {}};
  for (const auto& lam : partitions_of(f.n)) {
    Rational v = inner_product(f, ClassFunction::irreducible(lam));
    if (sgn(v) != 0) out.coeffs[lam] = v;
  }
  return out;
}

ClassFunction class_function_of(const SymFunc& f) {
  ClassFunction g{f.n, {}};
  for (const auto& rho : partitions_of(f.n)) {
    Rational v = 0;
    for (const auto& [lam, c] : f.coeffs) v += c * Rational(chi(lam, rho));
    g.values[rho] = v;
  }
  return g;
}

ClassFunction sym_power_character(int i, int n) {
  if (i < 0 || n < 0) throw ParameterOutOfRange("sym_power_character needs i, n >= 0");
  ClassFunction f{n, {}};
  for (const auto& rho : partitions_of(n)) {
    // Fixed monomials are products of cycle sums; count coefficient of t^i in prod 1/(1 - t^len).
    std::vector<Integer> series(i + 1, 0);
    series[0] = 1;
    for (int len : rho.parts())
      for (int e = len; e <= i; ++e) series[e] += series[e - len];
    f.values[rho] = Rational(series[i]);
  }
  return f;
}

ClassFunction sym_power_character_closed(int i, int n) {
  if (i < 1 || i > 3) throw ParameterOutOfRange("closed formulas cover i = 1, 2, 3");
  ClassFunction f{n, {}};
  for (const auto& rho : partitions_of(n)) {
    auto mult = combinat::multiplicities(rho);
    auto m = [&](int k) { return k <= static_cast<int>(mult.size()) ? Integer(mult[k - 1]) : Integer(0); };
    Integer v;
    if (i == 1) v = m(1);
    else if (i == 2) v = combinat::binomial(m(1).get_si(), 2) + m(1) + m(2);
    else v = m(1) * m(1) + m(1) * m(2) + m(3) + combinat::binomial(m(1).get_si(), 3);
    f.values[rho] = Rational(v);
  }
  return f;
}

SymFunc kronecker(const ClassFunction& f, const ClassFunction& g) {
  return frobenius_schur_expand(pointwise_product(f, g));
}

SymFunc skew_schur(const Partition& lambda, const Partition& mu) {
  for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i)
    if (mu[i] > lambda[i]) throw NotContained(mu.to_string() + " is not contained in " + lambda.to_string());
  const int k = lambda.size() - mu.size();
  SymFunc out{k, {}};
  const SymFunc smu = SymFunc::schur(mu);
  for (const auto& nu : partitions_of(k)) {
    Rational c = (smu * SymFunc::schur(nu)).coeff(lambda);
    if (sgn(c) != 0) out.coeffs[nu] = c;
  }
  return out;
}

namespace {

// s_{lambda/mu}, or zero of the right degree when mu is not contained in lambda.
SymFunc skew_or_zero(const Partition& lambda, const Partition& mu) {
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > lambda[i]) return SymFunc::zero(lambda.size() - mu.size());
  return skew_schur(lambda, mu);
}

SymFunc term(const Partition& mu, const Partition& lambda) {
  return SymFunc::schur(mu) * skew_or_zero(lambda, mu);
}

}  // namespace

Lemma54Sides lemma54_sides(const Partition& lambda, int i) {
  const int n = lambda.size();
  if (i < 1 || i > 3) throw ParameterOutOfRange("lemma54 covers i = 1, 2, 3");
  if (n < i) throw ParameterOutOfRange("need |lambda| >= i");
  Lemma54Sides sides;
  sides.lhs = kronecker(sym_power_character(i, n), ClassFunction::irreducible(lambda));
  const Partition p1{1}, p2{2}, p11{1, 1}, p3{3}, p21{2, 1}, p111{1, 1, 1};
  if (i == 1) {
    sides.rhs = term(p1, lambda);
  } else if (i == 2) {
    sides.rhs = term(p1, lambda) + term(p2, lambda) + term(p11, lambda);
  } else {
    SymFunc mixed = (SymFunc::schur(p2) + SymFunc::schur(p11)) * (skew_or_zero(lambda, p2) + skew_or_zero(lambda, p11));
    sides.rhs = term(p3, lambda) + term(p21, lambda) + term(p111, lambda) + mixed + term(p1, lambda);
  }
  return sides;
}

bool verify_lemma54(int n, const Partition& lambda, int i) {
  if (lambda.size() != n) throw SizeMismatch("lambda must be a partition of n");
  auto s = lemma54_sides(lambda, i);
  return s.lhs == s.rhs;
}

}  // namespace jb::symfunc
