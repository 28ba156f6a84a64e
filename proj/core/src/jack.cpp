#include "jackbetti/jack.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jb::jack {

using combinat::inverse;
using combinat::rank_word;

bool RSet::subset_of(const RSet& o) const {
  return std::includes(o.pairs.begin(), o.pairs.end(), pairs.begin(), pairs.end()) &&
         std::includes(o.triples.begin(), o.triples.end(), triples.begin(), triples.end());
}

RSet rset(const Composition& mu) {
  int n = static_cast<int>(mu.size());
  Composition lo = combinat::rearrange_increasing(mu);
  Permutation winv = inverse(rank_word(mu));
  RSet r;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= lo[i - 1]; ++k) r.pairs.insert({i, k});
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int gap = lo[j - 1] - lo[i - 1];
      for (int k = 1; k < gap; ++k) r.triples.insert({i, j, k});
      if (gap >= 1 && winv[j - 1] < winv[i - 1]) r.triples.insert({i, j, gap});
    }
  }
  return r;
}

bool nonsemisimple(int i, int j, int k, int ell, int m) {
  if (m <= 0) throw ParameterOutOfRange("m must be positive");
  return static_cast<long>(k) * m == static_cast<long>(ell) * (j - i);
}

bool blocks_at(const RTriple& t, const Rational& c0) { return Rational(t[2]) == c0 * (t[1] - t[0]); }

std::string Move::to_string() const {
  std::ostringstream os;
  if (kind == Kind::Phi) os << "PHI";
  else os << "SIGMA(" << index << ") adjoining (" << adjoined[0] << "," << adjoined[1] << "," << adjoined[2] << ")";
  return os.str();
}

namespace {

std::string triple_string(const RTriple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

struct PathSearch {
  const RSet& target_r;
  const Composition& target;
  const std::optional<Rational>& c0;
  std::set<Composition> failed;
  std::vector<Move> path;
  std::optional<RTriple> first_block;

  bool run(const Composition& mu) {
    if (mu == target) return true;
    if (failed.count(mu)) return false;
    int n = static_cast<int>(mu.size());
    Permutation w = rank_word(mu);
    if (target_r.pairs.count({w[0], mu[0] + 1})) {
      path.push_back({Move::Kind::Phi, 0, {w[0], mu[0] + 1, 0}});
      if (run(combinat::phi_shift(mu))) return true;
      path.pop_back();
    }
    for (int i = 1; i < n; ++i) {
      if (mu[i - 1] >= mu[i]) continue;
      RTriple t{w[i - 1], w[i], mu[i] - mu[i - 1]};
      if (!target_r.triples.count(t)) continue;
      if (c0 && blocks_at(t, *c0)) {
        if (!first_block) first_block = t;
        continue;
      }
      path.push_back({Move::Kind::Sigma, i, t});
      if (run(combinat::swap_adjacent(mu, i))) return true;
      path.pop_back();
    }
    failed.insert(mu);
    return false;
  }
};

}  // namespace

std::vector<Move> build_path(const Composition& start, const Composition& target, const std::optional<Rational>& c0) {
  if (start.size() != target.size()) throw SizeMismatch("start and target have different lengths");
  RSet rs = rset(start), rt = rset(target);
  if (!rs.subset_of(rt)) throw NotComparable("R(start) is not contained in R(target)");
  PathSearch search{rt, target, c0, {}, {}, {}};
  if (search.run(start)) return search.path;
  std::string msg = "every recursion path to (" + combinat::format_list(target) + ") crosses a non-semisimple triple";
  if (search.first_block) msg += " " + triple_string(*search.first_block);
  throw BlockedByPole(msg);
}

template <class K>
SparsePoly<K> replay(SparsePoly<K> f, Composition mu, const std::vector<Move>& path, const K& c) {
  for (const auto& mv : path) {
    if (mv.kind == Move::Kind::Phi) {
      f = poly::raising_phi(f);
      mu = combinat::phi_shift(mu);
    } else {
      int i = mv.index;
      K denom = eigenvalue(mu, i, c) - eigenvalue(mu, i + 1, c);
      f = poly::intertwiner_sigma(f, i, denom, c);
      mu = combinat::swap_adjacent(mu, i);
    }
  }
  return f;
}

template SparsePoly<Rational> replay(SparsePoly<Rational>, Composition, const std::vector<Move>&, const Rational&);
template SparsePoly<RatFunc> replay(SparsePoly<RatFunc>, Composition, const std::vector<Move>&, const RatFunc&);

namespace {

template <class K>
JackResult<K> finish(const Composition& mu, SparsePoly<K> f, const K& c, const Composition& seed) {
  JackResult<K> r{mu, std::move(f), {}, c, seed};
  for (int i = 1; i <= static_cast<int>(mu.size()); ++i) r.eigenvalues.push_back(eigenvalue(mu, i, c));
  return r;
}

void check_composition(const Composition& mu) {
  if (mu.empty()) throw InvalidInput("empty composition");
  if (static_cast<int>(mu.size()) > poly::kMaxVars) throw ParameterOutOfRange("too many variables");
  for (int v : mu)
    if (v < 0) throw InvalidInput("negative entry in composition");
}

}  // namespace

JackResult<RatFunc> nonsym_jack_generic(const Composition& mu) {
  check_composition(mu);
  int n = static_cast<int>(mu.size());
  Composition zero(n, 0);
  RatFunc c = RatFunc::param();
  auto path = build_path(zero, mu);
  return finish(mu, replay(CPoly::constant(n, RatFunc(1)), zero, path, c), c, zero);
}

JackResult<Rational> nonsym_jack(const Composition& mu, const Rational& c0, const JackOptions& opts) {
  check_composition(mu);
  int n = static_cast<int>(mu.size());
  Composition zero(n, 0);
  std::string blocked;
  try {
    auto path = build_path(zero, mu, c0);
    return finish(mu, replay(QPoly::constant(n, Rational(1)), zero, path, c0), c0, zero);
  } catch (const BlockedByPole& e) {
    blocked = e.what();
  }
  // Seed from the lowest-weight generators, computed generically and evaluated at c0.
  if (sgn(c0) > 0 && c0.get_den() >= 2) {
    int ell = static_cast<int>(c0.get_num().get_si());
    int m = static_cast<int>(c0.get_den().get_si());
    for (int s = 1; s * m <= n; ++s) {
      Composition gen = generator_index(s, ell, m, n).mu.padded(n);
      if (!rset(gen).subset_of(rset(mu))) continue;
      std::vector<Move> path;
      try {
        path = build_path(gen, mu, c0);
      } catch (const BlockedByPole&) {
        continue;
      }
      QPoly fg;
      try {
        fg = poly::specialize_param(nonsym_jack_generic(gen).poly, c0);
      } catch (const PoleError&) {
        continue;
      } catch (const IndeterminateError&) {
        continue;
      }
      return finish(mu, replay(fg, gen, path, c0), c0, gen);
    }
  }
  if (combinat::total(mu) <= opts.generic_fallback_max_degree) {
    try {
      return finish(mu, poly::specialize_param(nonsym_jack_generic(mu).poly, c0), c0, zero);
    } catch (const PoleError& e) {
      throw NotWellDefined("f_(" + combinat::format_list(mu) + ") has a pole at c = " + exactnum::to_string(c0) +
                           "; " + blocked);
    } catch (const IndeterminateError&) {
      throw NotWellDefined("f_(" + combinat::format_list(mu) + ") is indeterminate at c = " +
                           exactnum::to_string(c0));
    }
  }
  throw NotWellDefined(blocked);
}

namespace {

Composition anti_partition(const Partition& lambda, int n) {
  return combinat::rearrange_increasing(lambda.padded(n));
}

}  // namespace

CPoly sym_jack_generic(const Partition& lambda, int n) {
  Composition lo = anti_partition(lambda, n);
  CPoly e = poly::symmetrize(nonsym_jack_generic(lo).poly);
  return e.scaled(RatFunc(Rational(1, 1) / Rational(combinat::stabilizer_order(lo))));
}

QPoly sym_jack(const Partition& lambda, int n, const Rational& c0, const JackOptions& opts) {
  Composition lo = anti_partition(lambda, n);
  poly::Monomial lead(lambda.padded(n));
  // e f_nu is a multiple of p_lambda for every rearrangement nu; normalize by the x^lambda coefficient.
  Composition nu = lo;
  std::string reason;
  JackOptions inner = opts;
  inner.generic_fallback_max_degree = -1;
  int tries = 0;
  do {
    if (tries++ >= opts.max_rearrangements) break;
    try {
      QPoly e = poly::symmetrize(nonsym_jack(nu, c0, inner).poly);
      Rational lc = e.coeff(lead);
      if (sgn(lc) != 0) return e.scaled(Rational(1) / lc);
    } catch (const NotWellDefined& err) {
      if (reason.empty()) reason = err.what();
    }
  } while (std::next_permutation(nu.begin(), nu.end()));
  if (lambda.size() <= opts.generic_fallback_max_degree) {
    try {
      return poly::specialize_param(sym_jack_generic(lambda, n), c0);
    } catch (const PoleError&) {
      throw NotWellDefined("p_" + lambda.to_string() + " has a pole at c = " + exactnum::to_string(c0));
    } catch (const IndeterminateError&) {
      throw NotWellDefined("p_" + lambda.to_string() + " is indeterminate at c = " + exactnum::to_string(c0));
    }
  }
  throw NotWellDefined("no pole-free construction of p_" + lambda.to_string() + " at c = " +
                       exactnum::to_string(c0) + (reason.empty() ? "" : "; " + reason));
}

template <class K>
bool eigencheck(const JackResult<K>& r) {
  int n = static_cast<int>(r.index.size());
  for (int i = 1; i <= n; ++i)
    if (poly::cherednik_z(r.poly, i, r.c) != r.poly.scaled(r.eigenvalues[i - 1])) return false;
  return true;
}

template bool eigencheck(const JackResult<Rational>&);
template bool eigencheck(const JackResult<RatFunc>&);

bool singular_check(const QPoly& f, const Rational& c0) {
  for (int i = 1; i <= f.nvars(); ++i)
    if (!poly::dunkl(f, i, c0).is_zero()) return false;
  return true;
}

GeneratorIndex generator_index(int s, int ell, int m, int n) {
  if (s < 1 || ell < 1 || m < 2) throw ParameterOutOfRange("need s >= 1, l >= 1, m >= 2");
  if (s * m > n) throw ParameterOutOfRange("need s*m <= n");
  if (std::gcd(ell, m) != 1) throw ParameterOutOfRange("l and m must be coprime");
  int rest = n - (s * m - 1);
  int q = rest / (m - 1), r = rest % (m - 1);
  std::vector<int> tau{s * m - 1};
  tau.insert(tau.end(), q, m - 1);
  if (r) tau.push_back(r);
  std::vector<int> mu(r, ell * (s + q));
  for (int t = q - 1; t >= 0; --t) mu.insert(mu.end(), m - 1, ell * (s + t));
  mu.insert(mu.end(), s * m - 1, 0);
  return {Partition(mu), Partition(tau)};
}

std::string AdmissibilityReport::first_violation() const {
  for (const auto& c : conditions)
    if (!c.pass) return c.name + ": " + c.detail;
  return {};
}

namespace {

void check_t36_params(int ell, int m, int s, int n) {
  if (ell < 1 || m < 2 || s < 1) throw ParameterOutOfRange("need l >= 1, m >= 2, s >= 1");
  if (std::gcd(ell, m) != 1) throw ParameterOutOfRange("l and m must be coprime");
  if (s * m > n) throw ParameterOutOfRange("need s*m <= n");
}

// The three inequality blocks shared by the symmetric regimes (1-based i).
std::vector<ConditionCheck> symmetric_blocks(const Partition& lambda, int ell, int m, int s, int n,
                                             const std::array<std::string, 3>& names) {
  if (lambda.length() > n) throw SizeMismatch("partition has more than n parts");
  auto lam = [&](int i) { return lambda[i - 1]; };
  std::vector<ConditionCheck> out;
  auto block = [&](const std::string& name, int lo, int hi, auto&& ok, const std::string& shape) {
    ConditionCheck c{name, true, {}};
    for (int i = std::max(lo, 1); i <= hi; ++i) {
      if (!ok(i)) {
        c.pass = false;
        c.detail = "fails at i=" + std::to_string(i) + " (" + shape + ")";
        break;
      }
    }
    out.push_back(c);
  };
  int b1 = n - (s * m + m - 1) + 1;
  int b2 = n - (s * m - 1);
  block(names[0], 1, b1, [&](int i) { return lam(i) >= lam(i + m - 1) + ell + 1; },
        "lambda_i >= lambda_{i+m-1} + l + 1");
  block(names[1], b1 + 1, b2, [&](int i) { return lam(i) >= lam(i + m - 1) + s * ell + 1; },
        "lambda_i >= lambda_{i+m-1} + s*l + 1");
  block(names[2], b2 + 1, n - m, [&](int i) { return lam(i) <= lam(i + m) + ell; },
        "lambda_i <= lambda_{i+m} + l");
  return out;
}

AdmissibilityReport make_report(Regime regime, std::vector<ConditionCheck> checks) {
  bool ok = std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.pass; });
  return {regime, ok, std::move(checks)};
}

}  // namespace

AdmissibilityReport admissible_t36(const Partition& lambda, int ell, int m, int s, int n) {
  check_t36_params(ell, m, s, n);
  return make_report(Regime::T36, symmetric_blocks(lambda, ell, m, s, n, {"condition 1", "condition 2", "condition 3"}));
}

AdmissibilityReport admissible_t11(const Partition& lambda, int n, int k, int r, int s) {
  if (k < 1 || k >= n) throw ParameterOutOfRange("need 1 <= k < n");
  if (r < 2) throw ParameterOutOfRange("need r >= 2");
  check_t36_params(r - 1, k + 1, s, n);
  return make_report(Regime::T11, symmetric_blocks(lambda, r - 1, k + 1, s, n, {"condition 1", "condition 2", "condition 3"}));
}

AdmissibilityReport admissible_t34(const Composition& mu, int ell, int m, int s, int n) {
  check_t36_params(ell, m, s, n);
  if (static_cast<int>(mu.size()) != n) throw SizeMismatch("composition length differs from n");
  Composition lo = combinat::rearrange_increasing(mu);
  Permutation winv = inverse(rank_word(mu));
  auto v = [&](int j) { return lo[j - 1]; };
  auto wi = [&](int j) { return winv[j - 1]; };
  std::vector<ConditionCheck> out;
  auto block = [&](const std::string& name, int lo_j, int hi_j, auto&& ok) {
    ConditionCheck c{name, true, {}};
    for (int j = lo_j; j <= std::min(hi_j, n); ++j) {
      std::string why = ok(j);
      if (!why.empty()) {
        c.pass = false;
        c.detail = "fails at j=" + std::to_string(j) + " (" + why + ")";
        break;
      }
    }
    out.push_back(c);
  };
  block("(a)", m + 1, s * m - 1, [&](int j) -> std::string {
    if (v(j) > v(j - m) + ell) return "mu-_j > mu-_{j-m} + l";
    if (v(j) == v(j - m) + ell && !(wi(j) > wi(j - m))) return "equality without w^{-1}(j) > w^{-1}(j-m)";
    return {};
  });
  block("(b)", s * m, s * m + m - 2, [&](int j) -> std::string {
    int b = j - (m - 1);
    if (v(j) < v(b) + s * ell) return "mu-_j < mu-_{j-(m-1)} + s*l";
    if (v(j) == v(b) + s * ell && !(wi(j) < wi(b))) return "equality without w^{-1}(j) < w^{-1}(j-(m-1))";
    return {};
  });
  block("(c)", s * m + m - 1, n, [&](int j) -> std::string {
    int b = j - (m - 1);
    if (v(j) < v(b) + ell) return "mu-_j < mu-_{j-(m-1)} + l";
    if (v(j) == v(b) + ell && !(wi(j) < wi(b))) return "equality without w^{-1}(j) < w^{-1}(j-(m-1))";
    return {};
  });
  return make_report(Regime::T34, std::move(out));
}

namespace {

MinimalAdmissible minimal_blocks(int ell, int m, int s, int n) {
  std::vector<int> lam(n + m + 1, 0);  // 1-based with zero padding
  int b1 = n - (s * m + m - 1) + 1;
  int tail_start = n - (s * m - 1) + 1;
  for (int i = tail_start - 1; i >= 1; --i) {
    int add = i <= b1 ? ell + 1 : s * ell + 1;
    lam[i] = std::max(lam[i + 1], lam[i + m - 1] + add);
  }
  Partition greedy(std::vector<int>(lam.begin() + 1, lam.begin() + n + 1));

  int rest = n - (s * m - 1);
  int q = rest / (m - 1), r = rest % (m - 1);
  std::vector<int> f(r, s * (ell + q) + q + 1);
  for (int t = q - 1; t >= 0; --t) f.insert(f.end(), m - 1, s * (ell + t) + t + 1);
  Partition formula(f);
  return {greedy, formula, greedy == formula};
}

}  // namespace

MinimalAdmissible minimal_admissible_t36(int ell, int m, int s, int n) {
  check_t36_params(ell, m, s, n);
  auto res = minimal_blocks(ell, m, s, n);
  if (!admissible_t36(res.greedy, ell, m, s, n).admissible)
    throw NotFound("no partition satisfies the inequalities for these parameters");
  return res;
}

MinimalAdmissible minimal_admissible_t11(int n, int k, int r, int s) {
  if (k < 1 || k >= n) throw ParameterOutOfRange("need 1 <= k < n");
  if (r < 2) throw ParameterOutOfRange("need r >= 2");
  check_t36_params(r - 1, k + 1, s, n);
  auto res = minimal_blocks(r - 1, k + 1, s, n);
  if (!admissible_t11(res.greedy, n, k, r, s).admissible)
    throw NotFound("no partition satisfies the inequalities for these parameters");
  return res;
}

}  // namespace jb::jack
