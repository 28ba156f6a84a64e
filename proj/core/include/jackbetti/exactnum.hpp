#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jackbetti/errors.hpp"

namespace jb::exactnum {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; result is canonical.
Rational parse_rational(std::string_view text);
// Reduced num/den; throws ZeroDenominator when den == 0.
Rational frac(const Integer& num, const Integer& den);
std::string to_string(const Rational& q);
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Dense univariate polynomial in the parameter c over Q, coefficients stored
// from the constant term upward with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Rational& constant);
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly variable();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_one() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& k) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws DivisionByZero for a zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);
  UPoly monic() const;
  Rational eval(const Rational& x) const;
  std::string to_string(const std::string& var = "c") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Reduced quotient num/den of polynomials in c with monic den.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT
  static RatFunc param();
  static RatFunc normalize(const UPoly& num, const UPoly& den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc operator-() const;
  RatFunc inverse() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // PoleError if den(c0) = 0 while num(c0) != 0, IndeterminateError if both vanish.
  Rational eval(const Rational& c0) const;
  std::string to_string() const;

 private:
  RatFunc(UPoly num, UPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline std::string to_string(const RatFunc& f) { return f.to_string(); }
Rational evaluate_param(const RatFunc& f, const Rational& c0);

bool is_prime_u64(std::uint64_t p);

// Element of GF(p) for a word-size prime p.
class Zp {
 public:
  Zp(std::int64_t v, std::uint64_t p);
  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Zp operator-() const;
  Zp inverse() const;
  friend Zp operator+(const Zp& a, const Zp& b);
  friend Zp operator-(const Zp& a, const Zp& b);
  friend Zp operator*(const Zp& a, const Zp& b);
  friend Zp operator/(const Zp& a, const Zp& b);
  friend bool operator==(const Zp& a, const Zp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

 private:
  Zp(std::uint64_t v, std::uint64_t p, bool) : v_(v), p_(p) {}
  static std::uint64_t check(const Zp& a, const Zp& b);
  std::uint64_t v_;
  std::uint64_t p_;
};

inline bool is_zero(const Zp& a) { return a.is_zero(); }
inline std::string to_string(const Zp& a) { return std::to_string(a.value()); }

// Modular helpers shared by the elimination kernels.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

// Rational reconstruction of a residue modulo m with |num|, den <= sqrt(m/2).
bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out);

}  // namespace jb::exactnum
