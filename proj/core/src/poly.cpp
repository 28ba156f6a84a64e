#include "jackbetti/poly.hpp"

namespace jb::poly {

Monomial::Monomial(const Composition& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw ParameterOutOfRange("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
}

void Monomial::set(int i, int v) {
  if (v < 0 || v > kMaxExponent) throw ParameterOutOfRange("exponent out of range: " + std::to_string(v));
  e[i] = static_cast<std::uint8_t>(v);
}

int Monomial::degree() const {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

Composition Monomial::to_composition(int n) const { return Composition(e.begin(), e.begin() + n); }

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int v = a.e[i] + b.e[i];
    if (v > kMaxExponent) throw ParameterOutOfRange("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(v);
  }
  return r;
}

QPoly specialize_param(const CPoly& f, const Rational& c0) {
  return f.map_coeffs<Rational>([&](const RatFunc& k) { return k.eval(c0); });
}

CPoly to_generic(const QPoly& f) {
  return f.map_coeffs<RatFunc>([](const Rational& k) { return RatFunc(k); });
}

}  // namespace jb::poly
