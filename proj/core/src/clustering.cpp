#include "jackbetti/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "jackbetti/errors.hpp"
#include "jackbetti/ideals.hpp"
#include "jackbetti/jack.hpp"
#include "jackbetti/operators.hpp"

namespace jb::clustering {

using poly::QPoly;

namespace {

std::string str(int v) { return std::to_string(v); }

std::string order_string(int e) { return e == poly::kInfiniteOrder ? "infinite" : std::to_string(e); }

// q clusters of `size` variables; the last keeps only size - 1 of them, the rest x_{q*size}..x_n stay free.
struct Clustered {
  QPoly poly;
  int z = 0;                  // 1-based target of the last cluster
  std::vector<int> retained;  // 1-based targets of the free variables, in order
  std::vector<int> sources;   // original indices of the free variables
};

Clustered cluster_specialize(const QPoly& f, int n, int q, int size) {
  const int first_free = q * size;
  if (first_free > n) throw ParameterOutOfRange("clusters exceed the number of variables");
  std::vector<int> assignment(n);
  for (int i = 1; i <= n; ++i)
    assignment[i - 1] = i < first_free ? (i - 1) / size + 1 : q + (i - first_free + 1);
  const int n_out = q + n - first_free + 1;
  Clustered c{poly::specialize_clusters(f, assignment, n_out), q, {}, {}};
  for (int i = first_free; i <= n; ++i) {
    c.retained.push_back(q + (i - first_free + 1));
    c.sources.push_back(i);
  }
  return c;
}

// Orders of (x_i - z) on the specialization, one check per retained variable.
void divisibility_checks(VerificationReport& rep, const Clustered& c, int required) {
  const int nv = c.poly.nvars();
  for (std::size_t t = 0; t < c.retained.size(); ++t) {
    QPoly g = QPoly::variable(nv, c.retained[t]) - QPoly::variable(nv, c.z);
    int e = poly::divisibility_order(c.poly, g);
    rep.add("order of (x" + str(c.sources[t]) + " - z)", ">= " + str(required), order_string(e), e >= required);
  }
}

std::string params_string(const std::vector<int>& v) { return combinat::format_list(v); }

void annihilation_checks(VerificationReport& rep, const QPoly& f, const std::vector<ideals::ClusterLocus>& loci,
                         int ell, const std::string& prefix) {
  for (const auto& z : loci) {
    bool ok = ideals::power_membership(f, z, ell);
    rep.add(prefix + "in I(Z)^" + str(ell) + " for Z = " + z.to_string(), "true", ok ? "true" : "false", ok);
  }
}

}  // namespace

std::vector<std::vector<Rational>> sample_points(const std::vector<int>& block, int n, int count,
                                                 std::uint32_t seed) {
  std::mt19937 gen(seed);
  auto draw = [&] { return static_cast<int>(gen() % 61) - 30; };
  std::vector<std::vector<Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<int> v(n);
    std::set<int> used;
    const int common = draw();
    used.insert(common);
    for (int i = 1; i <= n; ++i) {
      if (std::find(block.begin(), block.end(), i) != block.end()) {
        v[i - 1] = common;
        continue;
      }
      int x;
      do x = draw();
      while (used.count(x));
      used.insert(x);
      v[i - 1] = x;
    }
    std::vector<Rational> p(v.begin(), v.end());
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

VerificationReport verify_T11(int n, int k, int r, int s, int d, const Partition& lambda) {
  if (k < 1 || r < 2 || s < 1 || d < 1) throw ParameterOutOfRange("need k >= 1, r >= 2, s >= 1, d >= 1");
  if (std::gcd(k + 1, r - 1) != 1) throw ParameterOutOfRange("k+1 and r-1 must be coprime");
  if (s * (k + 1) > n) throw ParameterOutOfRange("need s(k+1) <= n");
  if (s % d) throw ParameterOutOfRange("d must divide s");
  auto adm = jack::admissible_t11(lambda, n, k, r, s);
  if (!adm.admissible) throw AdmissibilityFailure(adm.first_violation());

  VerificationReport rep;
  rep.claim = "T1.1";
  rep.params = {{"n", str(n)}, {"k", str(k)}, {"r", str(r)}, {"s", str(s)}, {"d", str(d)},
                {"lambda", params_string(lambda.padded(n))}};
  const Rational c = exactnum::frac(r - 1, k + 1);
  rep.add("admissible", "true", "true", true);
  QPoly p = jack::sym_jack(lambda, n, c);
  rep.add("well-defined at c = " + exactnum::to_string(c), "true", "true", true);
  Clustered sp = cluster_specialize(p, n, s / d, d * (k + 1));
  divisibility_checks(rep, sp, d * (r - 1) + 1);
  return rep;
}

VerificationReport verify_T34(const Composition& mu, int ell, int m, int s, int n) {
  if (static_cast<int>(mu.size()) != n) throw SizeMismatch("mu must have n entries");
  auto adm = jack::admissible_t34(mu, ell, m, s, n);
  if (!adm.admissible) throw AdmissibilityFailure(adm.first_violation());

  VerificationReport rep;
  rep.claim = "T3.4";
  rep.params = {{"mu", params_string(mu)}, {"l", str(ell)}, {"m", str(m)}, {"s", str(s)}, {"n", str(n)}};
  const Rational c = exactnum::frac(ell, m);
  rep.add("admissible", "true", "true", true);
  auto f = jack::nonsym_jack(mu, c);
  const bool eig = jack::eigencheck(f);
  rep.add("eigenvalues", "z_i f = (mu_i + 1 - (w(i)-1)c) f", eig ? "verified" : "mismatch", eig);
  ideals::ClusterIdeal I(s, ell, m, n);
  const bool in = I.contains(f.poly);
  rep.add("f in I_{s,l,m}", "true", in ? "true" : "false", in);
  annihilation_checks(rep, f.poly, I.loci(), ell, "");
  return rep;
}

VerificationReport verify_T36(int ell, int m, int s, int n, const Partition& lambda) {
  auto adm = jack::admissible_t36(lambda, ell, m, s, n);
  if (!adm.admissible) throw AdmissibilityFailure(adm.first_violation());

  VerificationReport rep;
  rep.claim = "T3.6";
  rep.params = {{"l", str(ell)}, {"m", str(m)}, {"s", str(s)}, {"n", str(n)},
                {"lambda", params_string(lambda.padded(n))}};
  const Rational c = exactnum::frac(ell, m);
  rep.add("admissible", "true", "true", true);
  QPoly p = jack::sym_jack(lambda, n, c);
  rep.add("well-defined at c = " + exactnum::to_string(c), "true", "true", true);
  ideals::ClusterIdeal I(s, ell, m, n);
  const bool in = I.contains(p);
  rep.add("p in I_{s,l,m}", "true", in ? "true" : "false", in);
  annihilation_checks(rep, p, I.loci(), ell + 1, "");
  Clustered sp = cluster_specialize(p, n, s, m);
  divisibility_checks(rep, sp, ell + 1);
  return rep;
}

VerificationReport verify_T38(int ell, int m, int d, int d_prime, int n, std::optional<int> degree_bound) {
  if (d < 1 || d_prime < 1) throw ParameterOutOfRange("need d, d' >= 1");
  if (d * d_prime * m > n) throw ParameterOutOfRange("need d d' m <= n");
  const int s = d * d_prime;
  const auto gen = jack::generator_index(s, ell, m, n);
  const int deg0 = gen.mu.size();
  const int bound = degree_bound.value_or(deg0 + 2);

  VerificationReport rep;
  rep.claim = "T3.8";
  rep.params = {{"l", str(ell)}, {"m", str(m)}, {"d", str(d)}, {"d'", str(d_prime)}, {"n", str(n)},
                {"degree_bound", str(bound)}};
  ideals::ClusterIdeal I(s, ell, m, n);
  const auto loci = ideals::components(d_prime, d * m, n);
  for (int deg = 0; deg <= bound; ++deg) {
    auto piece = I.graded_piece(deg);
    if (piece.basis.empty()) continue;
    std::size_t fails = 0, inv_fails = 0, inv_count = 0;
    std::vector<QPoly> sym;
    for (const auto& f : piece.basis) {
      for (const auto& z : loci)
        if (!ideals::power_membership(f, z, d * ell)) ++fails;
      QPoly g = poly::symmetrize(f);
      if (!g.is_zero()) sym.push_back(std::move(g));
    }
    auto inv = ideals::echelon_piece(n, deg, sym);
    for (const auto& g : inv.basis) {
      ++inv_count;
      for (const auto& z : loci)
        if (!ideals::power_membership(g, z, (d * ell) + 1)) ++inv_fails;
    }
    rep.add("degree " + str(deg) + ": basis in I(Z)^" + str(d * ell),
            str(static_cast<int>(piece.basis.size() * loci.size())) + " memberships",
            str(static_cast<int>(piece.basis.size() * loci.size() - fails)) + " memberships", fails == 0);
    rep.add("degree " + str(deg) + ": invariants in I(Z)^" + str(d * ell + 1),
            str(static_cast<int>(inv_count * loci.size())) + " memberships",
            str(static_cast<int>(inv_count * loci.size() - inv_fails)) + " memberships", inv_fails == 0);
  }
  return rep;
}

VerificationReport verify_C12(int n, int s, int m, int degree_bound) {
  if (s < 1 || m < 2 || s * m > n) throw ParameterOutOfRange("need s >= 1, m >= 2, sm <= n");
  VerificationReport rep;
  rep.claim = "C1.2";
  rep.params = {{"n", str(n)}, {"s", str(s)}, {"m", str(m)}, {"degree_bound", str(degree_bound)}};
  const auto loci = ideals::components(1, s * m, n);
  std::vector<std::vector<std::vector<Rational>>> points;
  for (std::size_t zi = 0; zi < loci.size(); ++zi) {
    points.push_back(sample_points(loci[zi].blocks[0], n, 3, kSampleSeed + static_cast<std::uint32_t>(zi)));
    std::string text;
    for (const auto& p : points.back()) {
      std::vector<int> v;
      for (const auto& x : p) v.push_back(static_cast<int>(x.get_num().get_si()));
      text += (text.empty() ? "" : " ") + std::string("(") + combinat::format_list(v) + ")";
    }
    rep.notes.emplace_back("points on " + loci[zi].to_string(), text);
  }
  for (int deg = 0; deg <= degree_bound; ++deg) {
    auto piece = ideals::vanishing_ideal_graded(s, m, n, deg);
    if (piece.basis.empty()) continue;
    int min_order = poly::kInfiniteOrder;
    std::size_t member = 0, total = 0;
    for (const auto& f : piece.basis) {
      for (std::size_t zi = 0; zi < loci.size(); ++zi) {
        for (const auto& p : points[zi]) min_order = std::min(min_order, poly::vanishing_order_at_point(f, p));
        ++total;
        if (ideals::power_membership(f, loci[zi], s)) ++member;
      }
    }
    rep.add("degree " + str(deg) + ": min vanishing order at sample points", ">= " + str(s), order_string(min_order),
            min_order >= s);
    rep.add("degree " + str(deg) + ": basis in I(Z)^" + str(s), str(static_cast<int>(total)) + " memberships",
            str(static_cast<int>(member)) + " memberships", member == total);
  }
  return rep;
}

}  // namespace jb::clustering
