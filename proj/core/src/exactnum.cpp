#include "jackbetti/exactnum.hpp"

#include <sstream>

namespace jb::exactnum {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw InvalidInput("empty rational");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid(num) || !valid(den)) throw InvalidInput("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  return frac(Integer(num), Integer(den));
}

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw ZeroDenominator();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Rational& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::variable() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const UPoly& big = a.c_.size() >= b.c_.size() ? a : b;
  const UPoly& small = a.c_.size() >= b.c_.size() ? b : a;
  UPoly r = big;
  for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& k) const {
  if (sgn(k) == 0) return UPoly();
  UPoly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
  Rational inv_lead = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] * inv_lead;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& k = c_[i];
    if (sgn(k) == 0) continue;
    Rational mag = abs(k);
    if (first) {
      if (sgn(k) < 0) os << "-";
    } else {
      os << (sgn(k) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << exactnum::to_string(mag);
      continue;
    }
    if (mag != 1) os << exactnum::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// -------------------------------------------------------------- RatFunc

RatFunc RatFunc::param() { return RatFunc(UPoly::variable(), UPoly(Rational(1)), true); }

RatFunc RatFunc::normalize(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) return RatFunc();
  if (den.degree() == 0) return RatFunc(num.scaled(1 / den.leading()), UPoly(Rational(1)), true);
  UPoly g = UPoly::gcd(num, den);
  UPoly n = num, d = den;
  if (g.degree() > 0) {
    UPoly r;
    UPoly::divmod(num, g, n, r);
    UPoly::divmod(den, g, d, r);
  }
  Rational lead = d.leading();
  return RatFunc(n.scaled(1 / lead), d.scaled(1 / lead), true);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return normalize(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, true);
    return RatFunc::normalize(a.num_ + b.num_, a.den_);
  }
  return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, a.den_, true);
  if (a.is_constant()) return RatFunc(b.num_.scaled(a.num_.leading()), b.den_, true);
  if (b.is_constant()) return RatFunc(a.num_.scaled(b.num_.leading()), a.den_, true);
  return RatFunc::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) return RatFunc(a.num_.scaled(1 / b.num_.leading()), a.den_, true);
  return RatFunc::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFunc::eval(const Rational& c0) const {
  Rational d = den_.eval(c0);
  Rational n = num_.eval(c0);
  if (sgn(d) == 0) {
    if (sgn(n) == 0) throw IndeterminateError("0/0 at c = " + exactnum::to_string(c0));
    throw PoleError("pole at c = " + exactnum::to_string(c0) + " in " + to_string());
  }
  return n / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) {
    if (num_.degree() <= 0) return num_.to_string();
    return "(" + num_.to_string() + ")";
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational evaluate_param(const RatFunc& f, const Rational& c0) { return f.eval(c0); }

// ------------------------------------------------------------------ Zp

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DivisionByZero();
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  mpz_class pp;
  mpz_set_ui(pp.get_mpz_t(), p);
  mpz_class n = q.get_num() % pp;
  if (n < 0) n += pp;
  mpz_class d = q.get_den() % pp;
  std::uint64_t nu = mpz_get_ui(n.get_mpz_t());
  std::uint64_t du = mpz_get_ui(d.get_mpz_t());
  return mulmod(nu, invmod(du, p), p);
}

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (abs(t1) > bound || t1 == 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

Zp::Zp(std::int64_t v, std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw InvalidInput("modulus is not prime: " + std::to_string(p));
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  v_ = static_cast<std::uint64_t>(r);
}

std::uint64_t Zp::check(const Zp& a, const Zp& b) {
  if (a.p_ != b.p_) throw InvalidInput("mixed prime-field moduli");
  return a.p_;
}

Zp Zp::operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_, true); }

Zp Zp::inverse() const { return Zp(invmod(v_, p_), p_, true); }

Zp operator+(const Zp& a, const Zp& b) {
  std::uint64_t p = Zp::check(a, b);
  std::uint64_t s = a.v_ + b.v_;
  if (s >= p || s < a.v_) s -= p;
  return Zp(s, p, true);
}

Zp operator-(const Zp& a, const Zp& b) { return a + (-b); }

Zp operator*(const Zp& a, const Zp& b) {
  std::uint64_t p = Zp::check(a, b);
  return Zp(mulmod(a.v_, b.v_, p), p, true);
}

Zp operator/(const Zp& a, const Zp& b) {
  Zp::check(a, b);
  return a * b.inverse();
}

}  // namespace jb::exactnum
