#include "jackbetti/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jackbetti/errors.hpp"

namespace jb::linalg {

namespace {

std::uint64_t to_mod(std::int64_t v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % p;  // avoids overflow at INT64_MIN
  r = (r + 1) % p;
  return r ? p - r : 0;
}

void erase_value(std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it != v.end()) {
    *it = v.back();
    v.pop_back();
  }
}

std::uint64_t value_at(const ModRow& r, std::uint32_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const ModEntry& e, std::uint32_t x) { return e.first < x; });
  return (it != r.end() && it->first == c) ? it->second : 0;
}

// x - f*y over GF(p).
ModRow sub_scaled(const ModRow& x, std::uint64_t f, const ModRow& y, std::uint64_t p) {
  ModRow out;
  out.reserve(x.size() + y.size());
  std::size_t a = 0, b = 0;
  while (a < x.size() || b < y.size()) {
    if (b == y.size() || (a < x.size() && x[a].first < y[b].first)) {
      out.push_back(x[a++]);
    } else if (a == x.size() || y[b].first < x[a].first) {
      std::uint64_t v = exactnum::mulmod(f, y[b].second, p);
      if (v) out.emplace_back(y[b].first, p - v);
      ++b;
    } else {
      std::uint64_t v = exactnum::mulmod(f, y[b].second, p);
      v = (x[a].second + p - v) % p;
      if (v) out.emplace_back(x[a].first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

std::vector<std::uint64_t> word_primes(std::size_t k) {
  std::vector<std::uint64_t> out{kDefaultPrime};
  std::uint64_t q = kDefaultPrime;
  while (out.size() < k) {
    q -= 2;
    if (exactnum::is_prime_u64(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

ModElimination eliminate_mod_p(const std::vector<IntRow>& rows, std::size_t ncols, std::uint64_t p,
                               bool track_relations) {
  const std::size_t nr = rows.size();
  ModElimination out;
  out.p = p;
  out.is_pivot.assign(nr, 0);

  std::vector<ModRow> a(nr);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::size_t i = 0; i < nr; ++i) {
    for (auto [c, v] : rows[i]) {
      if (c >= ncols) throw SizeMismatch("column index out of range");
      std::uint64_t r = to_mod(v, p);
      if (!r) continue;
      a[i].emplace_back(c, r);
      col_rows[c].push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::vector<ModRow> comb;
  if (track_relations) {
    comb.resize(nr);
    for (std::size_t i = 0; i < nr; ++i) comb[i] = {{static_cast<std::uint32_t>(i), 1}};
  }

  std::vector<std::vector<std::uint32_t>> buckets(nr + 2);
  std::vector<std::uint8_t> done(ncols, 0);
  std::size_t cur = 1;
  auto bump = [&](std::uint32_t c) {
    std::size_t k = col_rows[c].size();
    if (k == 0 || done[c]) return;
    buckets[k].push_back(c);
    cur = std::min(cur, k);
  };
  for (std::uint32_t c = 0; c < ncols; ++c) bump(c);

  while (true) {
    while (cur < buckets.size() && buckets[cur].empty()) ++cur;
    if (cur >= buckets.size()) break;
    std::uint32_t c = buckets[cur].back();
    buckets[cur].pop_back();
    if (done[c] || col_rows[c].size() != cur) continue;

    std::uint32_t r = col_rows[c][0];
    for (std::uint32_t i : col_rows[c])
      if (a[i].size() < a[r].size()) r = i;
    done[c] = 1;
    out.is_pivot[r] = 1;
    ++out.rank;

    std::uint64_t inv = exactnum::invmod(value_at(a[r], c), p);
    std::vector<std::uint32_t> others;
    for (std::uint32_t i : col_rows[c])
      if (i != r) others.push_back(i);
    for (std::uint32_t i : others) {
      std::uint64_t f = exactnum::mulmod(value_at(a[i], c), inv, p);
      ModRow updated = sub_scaled(a[i], f, a[r], p);
      // Maintain column incidence: fill-ins and cancellations.
      std::size_t x = 0, y = 0;
      const ModRow& old = a[i];
      while (x < old.size() || y < updated.size()) {
        if (y == updated.size() || (x < old.size() && old[x].first < updated[y].first)) {
          erase_value(col_rows[old[x].first], i);
          bump(old[x].first);
          ++x;
        } else if (x == old.size() || updated[y].first < old[x].first) {
          col_rows[updated[y].first].push_back(i);
          bump(updated[y].first);
          ++y;
        } else {
          ++x;
          ++y;
        }
      }
      a[i] = std::move(updated);
      if (track_relations) comb[i] = sub_scaled(comb[i], f, comb[r], p);
    }
    for (auto [cc, v] : a[r]) {
      (void)v;
      erase_value(col_rows[cc], r);
      bump(cc);
    }
    ModRow().swap(a[r]);
    if (track_relations) ModRow().swap(comb[r]);
  }

  if (track_relations) {
    for (std::size_t i = 0; i < nr; ++i) {
      if (out.is_pivot[i]) continue;
      out.relation_rows.push_back(static_cast<std::uint32_t>(i));
      out.relations.push_back(std::move(comb[i]));
    }
  }
  return out;
}

std::size_t rank_mod_p(const std::vector<IntRow>& rows, std::size_t ncols, std::uint64_t p) {
  return eliminate_mod_p(rows, ncols, p, false).rank;
}

namespace {

std::optional<std::vector<std::pair<std::uint32_t, Integer>>> lift_residues(
    const std::vector<std::pair<std::uint32_t, Integer>>& residues, const Integer& modulus) {
  std::vector<std::pair<std::uint32_t, Rational>> q;
  q.reserve(residues.size());
  Integer den = 1;
  for (const auto& [j, v] : residues) {
    Rational r;
    if (!exactnum::rational_reconstruct(v, modulus, r)) return std::nullopt;
    Integer d = r.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    q.emplace_back(j, r);
  }
  std::vector<std::pair<std::uint32_t, Integer>> out;
  out.reserve(q.size());
  for (auto& [j, r] : q) {
    Rational s = r * Rational(den);
    out.emplace_back(j, s.get_num());
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::pair<std::uint32_t, Integer>>> lift_relation(const ModRow& rel, std::uint64_t p) {
  std::vector<std::pair<std::uint32_t, Integer>> residues;
  residues.reserve(rel.size());
  for (auto [j, v] : rel) residues.emplace_back(j, Integer(static_cast<unsigned long>(v)));
  return lift_residues(residues, Integer(static_cast<unsigned long>(p)));
}

bool verify_relation(const std::vector<IntRow>& rows, const std::vector<std::pair<std::uint32_t, Integer>>& rel) {
  bool small = true;
  for (const auto& [j, c] : rel) {
    if (!c.fits_slong_p()) small = false;
    for (auto [col, v] : rows[j]) {
      (void)col;
      if (v > (1LL << 31) || v < -(1LL << 31)) small = false;
    }
  }
  if (small) {
    std::vector<std::pair<std::uint32_t, __int128>> acc;
    for (const auto& [j, c] : rel) {
      __int128 cc = c.get_si();
      for (auto [col, v] : rows[j]) acc.emplace_back(col, cc * v);
    }
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < acc.size();) {
      __int128 s = 0;
      std::size_t k = i;
      for (; k < acc.size() && acc[k].first == acc[i].first; ++k) s += acc[k].second;
      if (s != 0) return false;
      i = k;
    }
    return true;
  }
  std::map<std::uint32_t, Integer> acc;
  for (const auto& [j, c] : rel)
    for (auto [col, v] : rows[j]) acc[col] += c * Integer(static_cast<long>(v));
  for (const auto& [col, s] : acc)
    if (s != 0) return false;
  return true;
}

CertifiedRank certified_rank(const std::vector<IntRow>& rows, std::size_t ncols, bool keep_relations,
                             std::uint64_t p) {
  // Up to three primes combined by CRT when reconstruction from one prime fails.
  std::vector<std::uint64_t> primes = word_primes(3);
  if (p != kDefaultPrime) primes.insert(primes.begin(), p);
  std::vector<ModElimination> runs;
  runs.push_back(eliminate_mod_p(rows, ncols, primes[0], true));
  const ModElimination& base = runs[0];

  CertifiedRank out;
  out.rank = base.rank;
  out.is_pivot = base.is_pivot;
  for (std::size_t t = 0; t < base.relations.size(); ++t) {
    std::optional<std::vector<std::pair<std::uint32_t, Integer>>> lifted = lift_relation(base.relations[t], primes[0]);
    bool ok = lifted && verify_relation(rows, *lifted);
    std::size_t used = 1;
    while (!ok && used < primes.size()) {
      if (runs.size() <= used) runs.push_back(eliminate_mod_p(rows, ncols, primes[used], true));
      const ModElimination& extra = runs[used];
      ++used;
      if (extra.is_pivot != base.is_pivot) break;
      // Combine residues of the first `used` runs by CRT.
      std::map<std::uint32_t, Integer> res;
      Integer modulus = 1;
      for (std::size_t u = 0; u < used; ++u) {
        Integer pu(static_cast<unsigned long>(primes[u]));
        std::map<std::uint32_t, std::uint64_t> vals;
        for (auto [j, v] : runs[u].relations[t]) vals[j] = v;
        std::set<std::uint32_t> keys;
        for (auto& [j, v] : res) keys.insert(j);
        for (auto& [j, v] : vals) keys.insert(j);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), Integer(modulus % pu).get_mpz_t(), pu.get_mpz_t());
        std::map<std::uint32_t, Integer> next;
        for (std::uint32_t j : keys) {
          Integer a = res.count(j) ? res[j] : Integer(0);
          Integer b(static_cast<unsigned long>(vals.count(j) ? vals[j] : 0));
          Integer diff = (b - a) % pu;
          if (diff < 0) diff += pu;
          Integer k = (diff * inv) % pu;
          next[j] = a + modulus * k;
        }
        res = std::move(next);
        modulus *= pu;
      }
      std::vector<std::pair<std::uint32_t, Integer>> residues(res.begin(), res.end());
      lifted = lift_residues(residues, modulus);
      ok = lifted && verify_relation(rows, *lifted);
    }
    if (!ok) throw CertificationFailed("could not certify rank over Q");
    if (keep_relations) {
      out.relation_rows.push_back(base.relation_rows[t]);
      out.relations.push_back(std::move(*lifted));
    }
  }
  return out;
}

template <class F>
typename Echelon<F>::Row Echelon<F>::axpy(const F& f, const Row& x, const T& a, const Row& y) {
  Row out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      T v = f.mul(a, y[j].second);
      if (!f.is_zero(v)) out.emplace_back(y[j].first, v);
      ++j;
    } else {
      T v = f.add(x[i].second, f.mul(a, y[j].second));
      if (!f.is_zero(v)) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
typename Echelon<F>::Row Echelon<F>::reduce(Row v) const {
  std::vector<std::pair<int, T>> hits;
  for (const auto& [c, val] : v)
    if (rows_.count(c)) hits.emplace_back(c, val);
  for (const auto& [c, val] : hits) v = axpy(f_, v, f_.neg(val), rows_.at(c));
  return v;
}

template <class F>
bool Echelon<F>::insert(const Row& v) {
  Row w = reduce(v);
  if (w.empty()) return false;
  T inv = f_.inv(w.front().second);
  for (auto& e : w) e.second = f_.mul(e.second, inv);
  int pc = w.front().first;
  for (auto& [c, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pc, [](const auto& e, int x) { return e.first < x; });
    if (it != row.end() && it->first == pc) row = axpy(f_, row, f_.neg(it->second), w);
  }
  rows_.emplace(pc, std::move(w));
  return true;
}

template <class F>
std::vector<typename Echelon<F>::Row> Echelon<F>::rows() const {
  std::vector<Row> out;
  out.reserve(rows_.size());
  for (const auto& [c, r] : rows_) out.push_back(r);
  return out;
}

template <class F>
std::vector<int> Echelon<F>::pivots() const {
  std::vector<int> out;
  for (const auto& [c, r] : rows_) out.push_back(c);
  return out;
}

template <class F>
std::vector<typename Echelon<F>::Row> nullspace(const std::vector<typename Echelon<F>::Row>& rows, int ncols,
                                                F field) {
  using Row = typename Echelon<F>::Row;
  Echelon<F> e(field);
  for (const auto& r : rows) e.insert(r);
  std::vector<Row> reduced = e.rows();
  std::vector<int> piv = e.pivots();
  std::vector<char> is_piv(ncols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Row> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Row v;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Row& r = reduced[k];
      auto it = std::lower_bound(r.begin(), r.end(), f, [](const auto& x, int y) { return x.first < y; });
      if (it != r.end() && it->first == f) v.emplace_back(piv[k], field.neg(it->second));
    }
    v.emplace_back(f, field.one());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return out;
}

template class Echelon<QField>;
template class Echelon<PField>;
template std::vector<Echelon<QField>::Row> nullspace(const std::vector<Echelon<QField>::Row>&, int, QField);
template std::vector<Echelon<PField>::Row> nullspace(const std::vector<Echelon<PField>::Row>&, int, PField);

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  std::size_t nr = a.size();
  if (!nr) return 0;
  std::size_t nc = a[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = rank;
    while (piv < nr && a[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < nr; ++r) {
      for (std::size_t t = col + 1; t < nc; ++t) {
        Integer v = a[rank][col] * a[r][t] - a[r][col] * a[rank][t];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][t] = v;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace jb::linalg
