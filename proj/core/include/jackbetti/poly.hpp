#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jackbetti/combinat.hpp"
#include "jackbetti/exactnum.hpp"

namespace jb::poly {

using combinat::Composition;
using combinat::Permutation;
using exactnum::Rational;
using exactnum::RatFunc;

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 255;

// Exponent vector packed into a fixed array; unused slots stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  Monomial() = default;
  explicit Monomial(const Composition& exps);
  int operator[](int i) const { return e[i]; }
  void set(int i, int v);
  int degree() const;
  Composition to_composition(int n) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Graded reverse lexicographic, larger first.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

Monomial mul(const Monomial& a, const Monomial& b);

// Sparse polynomial in x1..xn with coefficients in K (Rational or RatFunc).
template <class K>
class SparsePoly {
 public:
  using Terms = std::map<Monomial, K, GrevlexGreater>;

  explicit SparsePoly(int n = 0) : n_(n) {
    if (n < 0 || n > kMaxVars) throw ParameterOutOfRange("variable count out of range");
  }
  static SparsePoly constant(int n, const K& k) {
    SparsePoly p(n);
    p.add_term(Monomial(), k);
    return p;
  }
  static SparsePoly variable(int n, int i) {
    SparsePoly p(n);
    Monomial m;
    m.set(i - 1, 1);
    p.add_term(m, K(1));
    return p;
  }
  static SparsePoly monomial(int n, const Composition& exps, const K& k = K(1)) {
    if (static_cast<int>(exps.size()) != n) throw SizeMismatch("exponent vector length differs from n");
    SparsePoly p(n);
    p.add_term(Monomial(exps), k);
    return p;
  }

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }
  bool is_homogeneous() const {
    return t_.empty() || t_.begin()->first.degree() == t_.rbegin()->first.degree();
  }
  K coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? K(0) : it->second;
  }
  K coeff(const Composition& exps) const { return coeff(Monomial(exps)); }

  void add_term(const Monomial& m, const K& k) {
    if (exactnum::is_zero(k)) return;
    auto [it, fresh] = t_.try_emplace(m, k);
    if (!fresh) {
      it->second += k;
      if (exactnum::is_zero(it->second)) t_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r(n_);
    for (const auto& [m, k] : t_) r.t_.emplace_hint(r.t_.end(), m, -k);
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) {
    check_n(o);
    for (const auto& [m, k] : o.t_) add_term(m, k);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_n(o);
    for (const auto& [m, k] : o.t_) add_term(m, -k);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_n(b);
    SparsePoly r(a.n_);
    for (const auto& [ma, ka] : a.t_)
      for (const auto& [mb, kb] : b.t_) r.add_term(mul(ma, mb), ka * kb);
    return r;
  }
  SparsePoly scaled(const K& k) const {
    SparsePoly r(n_);
    if (exactnum::is_zero(k)) return r;
    for (const auto& [m, v] : t_) r.t_.emplace_hint(r.t_.end(), m, v * k);
    return r;
  }
  SparsePoly times_monomial(const Monomial& mono) const {
    SparsePoly r(n_);
    for (const auto& [m, v] : t_) r.t_.emplace_hint(r.t_.end(), mul(m, mono), v);
    return r;
  }
  SparsePoly pow(int e) const {
    SparsePoly r = constant(n_, K(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // x_{w(i)} replaces x_i; on monomials x^a maps to x^b with b_{w(i)} = a_i.
  SparsePoly permuted(const Permutation& w) const {
    if (static_cast<int>(w.size()) != n_) throw SizeMismatch("permutation length differs from n");
    SparsePoly r(n_);
    for (const auto& [m, k] : t_) {
      Monomial nm;
      for (int i = 0; i < n_; ++i) nm.e[w[i] - 1] = m.e[i];
      r.t_.emplace(nm, k);
    }
    return r;
  }
  // Transposition of variables i and j (1-based).
  SparsePoly swapped(int i, int j) const {
    SparsePoly r(n_);
    for (const auto& [m, k] : t_) {
      Monomial nm = m;
      std::swap(nm.e[i - 1], nm.e[j - 1]);
      r.t_.emplace(nm, k);
    }
    return r;
  }

  template <class L, class F>
  SparsePoly<L> map_coeffs(F&& f) const {
    SparsePoly<L> r(n_);
    for (const auto& [m, k] : t_) r.add_term(m, f(k));
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  // "3/2*x1^2*x3 - x2 + 1"
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, k] : t_) {
      std::string cs = exactnum::to_string(k);
      bool neg = !cs.empty() && cs[0] == '-' && is_plain(cs);
      if (neg) cs = cs.substr(1);
      if (!is_plain(cs)) cs = "(" + cs + ")";
      s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mon = monomial_string(m);
      if (mon.empty()) s += cs;
      else if (cs == "1") s += mon;
      else s += cs + "*" + mon;
    }
    return s;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (!m.e[i]) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }

 private:
  // True for "p" or "p/q", which need no parentheses.
  static bool is_plain(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      if (ch == '-' && i == 0) continue;
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/')) return false;
    }
    return true;
  }
  void check_n(const SparsePoly& o) const {
    if (o.n_ != n_) throw SizeMismatch("polynomials in different numbers of variables");
  }

  int n_;
  Terms t_;
};

using QPoly = SparsePoly<Rational>;
using CPoly = SparsePoly<RatFunc>;

// Coefficientwise evaluation of the parameter; PoleError propagates.
QPoly specialize_param(const CPoly& f, const Rational& c0);
CPoly to_generic(const QPoly& f);

}  // namespace jb::poly
