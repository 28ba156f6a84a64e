#include "jackbetti/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace jb::combinat {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 0) throw InvalidInput("negative part in partition");
    if (i + 1 < p_.size() && p_[i] < p_[i + 1])
      throw InvalidInput("parts are not weakly decreasing: " + format_list(p_));
  }
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

Composition Partition::padded(int n) const {
  if (length() > n) throw SizeMismatch("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
  Composition c(p_);
  c.resize(n, 0);
  return c;
}

std::string Partition::to_string() const { return "(" + format_list(p_) + ")"; }

std::vector<int> parse_list(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') s.push_back(ch);
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  auto to_int = [](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("malformed integer list entry: '" + t + "'");
    return std::stoi(t);
  };
  while (std::getline(ss, tok, ',')) {
    auto caret = tok.find('^');
    if (caret == std::string::npos) {
      out.push_back(to_int(tok));
    } else {
      int v = to_int(tok.substr(0, caret));
      int e = to_int(tok.substr(caret + 1));
      out.insert(out.end(), e, v);
    }
  }
  return out;
}

std::string format_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_exponent(const Partition& p) {
  std::string s;
  const auto& v = p.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!s.empty()) s += ",";
    s += std::to_string(v[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "0" : s;
}

int total(const Composition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

Permutation rank_word(const Composition& mu) {
  int n = static_cast<int>(mu.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // Smaller value first; among equal values the rightmost counts as smaller.
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (mu[a] != mu[b]) return mu[a] < mu[b];
    return a > b;
  });
  Permutation w(n);
  for (int r = 0; r < n; ++r) w[idx[r]] = r + 1;
  return w;
}

Permutation inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Permutation identity_permutation(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw SizeMismatch("permutations of different sizes");
  Permutation r(u.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = u[v[i] - 1];
  return r;
}

int inversions(const Permutation& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

int sign(const Permutation& w) { return inversions(w) % 2 ? -1 : 1; }

bool is_permutation(const std::vector<int>& w) {
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Composition rearrange_increasing(const Composition& mu) {
  Composition r = mu;
  std::sort(r.begin(), r.end());
  return r;
}

Composition rearrange_decreasing(const Composition& mu) {
  Composition r = mu;
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

Partition to_partition(const Composition& mu) { return Partition(rearrange_decreasing(mu)); }

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw SizeMismatch("dominance comparison of " + a.to_string() + " and " + b.to_string());
  int len = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (int i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw SizeMismatch("Bruhat comparison of different sizes");
  int n = static_cast<int>(u.size());
  // u <= v iff #{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j} for all i, j.
  for (int j = 1; j <= n; ++j) {
    int cu = 0, cv = 0;
    for (int i = 0; i < n; ++i) {
      if (u[i] >= j) ++cu;
      if (v[i] >= j) ++cv;
      if (cu > cv) return false;
    }
  }
  return true;
}

bool composition_less(const Composition& mu, const Composition& nu) {
  if (mu.size() != nu.size() || total(mu) != total(nu)) return false;
  if (mu == nu) return false;
  Partition a = to_partition(mu), b = to_partition(nu);
  if (a != b) return dominance_leq(a, b);
  return bruhat_leq(rank_word(mu), rank_word(nu));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> c;
  if (lambda.empty()) return Partition();
  for (int j = 1; j <= lambda[0]; ++j) {
    int cnt = 0;
    for (int p : lambda.parts())
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

long nstat(const Partition& lambda) {
  long s = 0;
  for (int i = 0; i < lambda.length(); ++i) s += static_cast<long>(i) * lambda[i];
  return s;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer hook_dimension(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

Integer stabilizer_order(const Composition& mu) {
  Composition s = rearrange_increasing(mu);
  Integer r = 1;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<int> multiplicities(const Partition& rho) {
  std::vector<int> m(std::max(rho.size(), 1), 0);
  for (int p : rho.parts()) ++m[p - 1];
  return m;
}

Integer centralizer_order(const Partition& rho) {
  Integer z = 1;
  auto m = multiplicities(rho);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), i + 1, static_cast<unsigned long>(m[i]));
    z *= pw * factorial(m[i]);
  }
  return z;
}

Composition swap_adjacent(const Composition& mu, int i) {
  Composition r = mu;
  std::swap(r[i - 1], r[i]);
  return r;
}

Composition phi_shift(const Composition& mu) {
  Composition r(mu.begin() + 1, mu.end());
  r.push_back(mu[0] + 1);
  return r;
}

namespace {

// Removes a horizontal strip of size k from lambda in all ways.
void strips(const std::vector<int>& lam, std::size_t i, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i == lam.size()) {
    if (k == 0) out.push_back(cur);
    return;
  }
  int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
  for (int v = lam[i]; v >= lo && lam[i] - v <= k; --v) {
    cur[i] = v;
    strips(lam, i + 1, k - (lam[i] - v), cur, out);
  }
}

Integer kostka_rec(const std::vector<int>& lam, const Composition& mu, std::size_t len,
                   std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
  if (len == 0) return std::all_of(lam.begin(), lam.end(), [](int v) { return v == 0; }) ? 1 : 0;
  auto key = std::make_pair(lam, len);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(lam.size());
  strips(lam, 0, mu[len - 1], cur, out);
  Integer total = 0;
  for (const auto& nu : out) total += kostka_rec(nu, mu, len - 1, memo);
  memo.emplace(key, total);
  return total;
}

}  // namespace

Integer kostka(const Partition& lambda, const Composition& mu) {
  if (lambda.size() != total(mu)) return 0;
  for (int v : mu)
    if (v < 0) throw InvalidInput("content must be nonnegative");
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  return kostka_rec(lambda.parts(), mu, mu.size(), memo);
}

}  // namespace jb::combinat
