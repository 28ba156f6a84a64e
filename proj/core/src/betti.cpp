#include "jackbetti/betti.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>
#include <bit>
#include <set>
#include <sstream>

#include "jackbetti/abacus.hpp"
#include "jackbetti/errors.hpp"
#include "jackbetti/linalg.hpp"

namespace jb::betti {

using combinat::binomial;
using combinat::hook_dimension;

Integer BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Integer(0) : it->second;
}

Integer BettiTable::total(int i) const {
  Integer s = 0;
  for (const auto& [cell, v] : entries)
    if (cell.first == i) s += v;
  return s;
}

int BettiTable::length() const {
  int len = -1;
  for (const auto& [cell, v] : entries) len = std::max(len, cell.first);
  return len;
}

bool BettiTable::labels_consistent() const {
  for (const auto& [cell, ls] : labels) {
    Integer s = 0;
    for (const auto& mu : ls) s += hook_dimension(mu);
    if (s != at(cell.first, cell.second)) return false;
  }
  return true;
}

bool same_numbers(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }

bool same_labels(const BettiTable& a, const BettiTable& b) {
  if (a.labels.size() != b.labels.size()) return false;
  for (const auto& [cell, ls] : a.labels) {
    auto it = b.labels.find(cell);
    if (it == b.labels.end()) return false;
    auto x = ls, y = it->second;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

namespace {

void add_entry(BettiTable& t, int i, int j, const Partition& mu) {
  t.entries[{i, j}] += hook_dimension(mu);
  t.labels[{i, j}].push_back(mu);
}

Partition with_ones(std::vector<int> head, int ones) {
  for (int t = 0; t < ones; ++t) head.push_back(1);
  return Partition(head);
}

}  // namespace

BettiTable conjectural_resolution(int n, int m) {
  if (m < 2 || n < 1) throw ParameterOutOfRange("conjectural_resolution needs 2 <= m and n >= 1");
  BettiTable t;
  t.n = n;
  t.field = "conjectural";
  t.ideal = true;
  if (m > n) return t;
  const Partition lambda = abacus::m_equals_partition(n, m);
  for (const auto& e : abacus::pm_table(lambda, m)) {
    if (e.c.get_den() != 1) throw Error("non-integral c-statistic for " + e.mu.to_string());
    add_entry(t, e.hd, static_cast<int>(e.c.get_num().get_si()), e.mu);
  }
  return t;
}

BettiTable quotient_table(const BettiTable& ideal_table) {
  if (!ideal_table.ideal) return ideal_table;
  BettiTable q;
  q.n = ideal_table.n;
  q.field = ideal_table.field;
  q.ideal = false;
  q.entries[{0, 0}] = 1;
  if (ideal_table.has_labels() || ideal_table.empty()) q.labels[{0, 0}] = {Partition({ideal_table.n})};
  for (const auto& [cell, v] : ideal_table.entries) q.entries[{cell.first + 1, cell.second}] = v;
  for (const auto& [cell, ls] : ideal_table.labels) q.labels[{cell.first + 1, cell.second}] = ls;
  return q;
}

BettiTable ideal_table(const BettiTable& quotient) {
  if (quotient.ideal) return quotient;
  BettiTable t;
  t.n = quotient.n;
  t.field = quotient.field;
  t.ideal = true;
  for (const auto& [cell, v] : quotient.entries)
    if (cell.first > 0) t.entries[{cell.first - 1, cell.second}] = v;
  for (const auto& [cell, ls] : quotient.labels)
    if (cell.first > 0) t.labels[{cell.first - 1, cell.second}] = ls;
  return t;
}

BettiTable pure_resolution_spec(int n, int m) {
  if (m < 2 || m > n) throw ParameterOutOfRange("pure_resolution_spec needs 2 <= m <= n");
  if (2 * m < n + 1) throw RegimeViolation("pure resolution requires 2m >= n + 1");
  const int k = n - m + 1;
  BettiTable t;
  t.n = n;
  t.field = "pure";
  add_entry(t, 0, 0, Partition({n}));
  for (int i = 1; i <= n - 2 * k + 1; ++i) add_entry(t, i, k + i - 1, with_ones({n - k + 1 - i, k}, i - 1));
  for (int i = 0; i <= k - 2; ++i)
    add_entry(t, n - 2 * k + 2 + i, n - k + 2 + i, with_ones({k - 1, k - 1 - i}, n - 2 * k + 2 + i));
  return t;
}

namespace {

struct KoszulContext {
  int nv;
  std::vector<std::vector<std::uint32_t>> subsets;  // bitmasks by size
  std::vector<std::uint32_t> index_of;              // position of a mask within its size class

  explicit KoszulContext(int nvars) : nv(nvars), subsets(nvars + 1), index_of(std::size_t(1) << nvars) {
    for (std::uint32_t s = 0; s < (1u << nv); ++s) {
      int c = std::popcount(s);
      index_of[s] = static_cast<std::uint32_t>(subsets[c].size());
      subsets[c].push_back(s);
    }
  }
};

// Rank of wedge^i (x) M_d -> wedge^{i-1} (x) M_{d+1} over GF(q), M in normal-form coordinates.
std::size_t koszul_rank_mod(ideals::SliceRestriction& slice, const KoszulContext& kc, int i, int d) {
  const auto& src = slice.normal_forms(d);
  if (src.standard.empty()) return 0;
  const auto& dst = slice.normal_forms(d + 1);
  const auto& src_layout = slice.layout(d);
  const auto& dst_layout = slice.layout(d + 1);
  const std::uint64_t q = src.modulus;
  const std::size_t width = dst.standard.size();
  const std::size_t ncols = width * kc.subsets[i - 1].size();
  if (ncols > 0xffffffffull) throw ParameterOutOfRange("Koszul matrix too wide");
  std::vector<linalg::IntRow> rows;
  rows.reserve(kc.subsets[i].size() * src.standard.size());
  for (std::uint32_t S : kc.subsets[i]) {
    for (std::uint32_t b : src.standard) {
      linalg::IntRow row;
      int pos = 0;
      for (int j = 0; j < kc.nv; ++j) {
        if (!(S >> j & 1u)) continue;
        const bool negate = pos++ % 2;
        poly::Monomial mono = src_layout.monomials[b];
        mono.set(j, mono[j] + 1);
        const auto& nf = dst.nf[dst_layout.row_of.at(mono)];
        const std::size_t base = std::size_t(kc.index_of[S & ~(1u << j)]) * width;
        for (const auto& [col, v] : nf) {
          std::uint64_t w = negate && v ? q - v : v;
          row.emplace_back(static_cast<std::uint32_t>(base + col), static_cast<std::int64_t>(w));
        }
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
  }
  return linalg::rank_mod_p(rows, ncols, q);
}

// Ranks of Koszul differentials on S_mu-coinvariants (sign-twisted when requested) for a Young subgroup
// S_mu of S_{n-1}, with A'/I' embedded in the restriction coordinates of the slice components.
// A variable's state packs its exponent (or -1 on a block, -2 on a block through x_n) with its wedge bit.
class EquivariantKoszul {
 public:
  EquivariantKoszul(int m, int n) : nv_(n - 1) {
    for (const auto& z : ideals::components(1, m, n)) {
      Comp c;
      for (int v : z.blocks[0]) {
        if (v == n) c.zero = true;
        else c.in |= 1u << (v - 1);
      }
      comps_.push_back(c);
    }
  }

  // i >= 1: wedge^i (x) A'_d -> wedge^{i-1} (x) R_{d+1}; i = 0: the restriction A'_d -> R_d.
  // modulus 0 means a certified rank over Q.
  std::size_t rank(int i, int d, const Partition& mu, bool sign, std::uint64_t modulus) const {
    std::vector<int> part(nv_);
    {
      int v = 0, p = 0;
      for (int len : mu.parts()) {
        for (int t = 0; t < len; ++t) part[v++] = p;
        ++p;
      }
    }
    std::unordered_map<Key, std::uint32_t, KeyHash> cols;
    std::vector<linalg::IntRow> rows;
    std::map<std::uint32_t, std::int64_t> acc;
    std::array<int, 16> st{};

    auto emit = [&](const poly::Monomial& c, std::uint32_t T, std::int64_t coef) {
      for (const Comp& z : comps_) {
        int bexp = 0;
        bool vanish = false;
        for (int v = 0; v < nv_; ++v) {
          const int bit = (T >> v) & 1u;
          if (z.in >> v & 1u) {
            if (z.zero && c[v]) {
              vanish = true;
              break;
            }
            bexp += c[v];
            st[v] = (z.zero ? -2 : -1) * 2 + bit;
          } else {
            st[v] = c[v] * 2 + bit;
          }
        }
        if (vanish) continue;
        auto f = fold(st, part, sign);
        if (f == 0) continue;
        Key key{};
        for (int v = 0; v < nv_; ++v) key.st[v] = static_cast<std::int8_t>(st[v]);
        key.bexp = static_cast<std::uint8_t>(z.zero ? 0 : bexp);
        auto [it, fresh] = cols.try_emplace(key, static_cast<std::uint32_t>(cols.size()));
        acc[it->second] += f * coef;
      }
    };

    for (const auto& a : ideals::monomials_of_degree(nv_, d)) {
      for (std::uint32_t S = 0; S < (1u << nv_); ++S) {
        if (std::popcount(S) != i) continue;
        for (int v = 0; v < nv_; ++v) st[v] = a[v] * 2 + ((S >> v) & 1u);
        if (!is_rep(st, part, sign)) continue;
        acc.clear();
        if (i == 0) {
          emit(a, 0, 1);
        } else {
          int pos = 0;
          for (int j = 0; j < nv_; ++j) {
            if (!(S >> j & 1u)) continue;
            poly::Monomial c = a;
            c.set(j, c[j] + 1);
            emit(c, S & ~(1u << j), (pos++ % 2) ? -1 : 1);
          }
        }
        linalg::IntRow row;
        for (auto [col, v] : acc)
          if (v) row.emplace_back(col, v);
        rows.push_back(std::move(row));
      }
    }
    if (modulus == 0) return linalg::certified_rank(rows, cols.size()).rank;
    return linalg::rank_mod_p(rows, cols.size(), modulus);
  }

 private:
  struct Comp {
    std::uint32_t in = 0;
    bool zero = false;
  };
  struct Key {
    std::array<std::int8_t, 16> st;
    std::uint8_t bexp;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k.st) h = (h ^ static_cast<std::uint8_t>(v)) * 1099511628211ull;
      return (h ^ k.bexp) * 1099511628211ull;
    }
  };

  // A transposition of two equal states acts by -1 exactly when the wedge bit differs from the twist.
  static bool degenerate(int a, int b, bool sign) { return a == b && (sign != static_cast<bool>(a & 1)); }

  bool is_rep(const std::array<int, 16>& st, const std::vector<int>& part, bool sign) const {
    for (int v = 0; v + 1 < nv_; ++v) {
      if (part[v] != part[v + 1]) continue;
      if (st[v] < st[v + 1] || degenerate(st[v], st[v + 1], sign)) return false;
    }
    return true;
  }

  // Sorts states descending within parts; returns the coinvariant sign, or 0 when the class vanishes.
  int fold(std::array<int, 16>& st, const std::vector<int>& part, bool sign) const {
    int parity = 0;
    for (int u = 0; u < nv_; ++u)
      for (int v = u + 1; v < nv_ && part[v] == part[u]; ++v) {
        if (st[u] >= st[v]) continue;
        if (sign) ++parity;
        if ((st[u] & 1) && (st[v] & 1)) ++parity;
      }
    for (int u = 0; u < nv_;) {
      int v = u;
      while (v < nv_ && part[v] == part[u]) ++v;
      std::sort(st.begin() + u, st.begin() + v, std::greater<int>());
      u = v;
    }
    for (int v = 0; v + 1 < nv_; ++v)
      if (part[v] == part[v + 1] && degenerate(st[v], st[v + 1], sign)) return 0;
    return parity % 2 ? -1 : 1;
  }

  int nv_;
  std::vector<Comp> comps_;
};

}  // namespace

BettiTable koszul_betti(int n, int m, std::uint64_t characteristic, int window, KoszulMethod method) {
  if (n < 1 || m < 1) throw ParameterOutOfRange("koszul_betti needs n, m >= 1");
  if (characteristic != 0 && !exactnum::is_prime_u64(characteristic))
    throw ParameterOutOfRange("characteristic must be 0 or a prime");
  BettiTable t;
  t.n = n;
  t.field = characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
  if (m == 1 || m > n) {
    t.entries[{0, 0}] = 1;
    return t;
  }
  const int k = n - m + 1;
  const int nv = n - 1;
  const int J = window < 0 ? n + k : window;
  if (J < 1) throw ParameterOutOfRange("window must be positive");

  // rank[i][d]: rank of the differential out of wedge^i (x) M_d; h[d] = dim M_d.
  std::vector<std::vector<std::size_t>> rank(nv + 2, std::vector<std::size_t>(J + 1, 0));
  std::vector<std::size_t> h(J + 3);

  // Over Q (and GF(p) with p > n - 1) ranks are assembled from Young-subgroup coinvariants; over Q they are
  // taken modulo a large prime first.
  const bool equivariant_ok = characteristic == 0 || characteristic > static_cast<std::uint64_t>(nv);
  if (method == KoszulMethod::Equivariant && !equivariant_ok)
    throw ParameterOutOfRange("coinvariant ranks need characteristic 0 or p > n - 1");
  if (method == KoszulMethod::NormalForms && characteristic == 0)
    throw ParameterOutOfRange("normal-form ranks need a prime characteristic");
  const bool equivariant = method == KoszulMethod::Auto ? equivariant_ok : method == KoszulMethod::Equivariant;
  const std::uint64_t q = characteristic == 0 ? linalg::kDefaultPrime : characteristic;
  const EquivariantKoszul ek(m, n);
  auto erank = [&](int i, int d, std::uint64_t modulus) {
    Integer r = ideals::isotypic_dimension(nv, [&](const Partition& mu, bool sign) {
      return Integer(static_cast<unsigned long>(ek.rank(i, d, mu, sign, modulus)));
    });
    return static_cast<std::size_t>(r.get_ui());
  };

  if (equivariant) {
    for (int d = 0; d <= J + 2; ++d) h[d] = erank(0, d, q);
    for (int i = 1; i <= nv; ++i)
      for (int d = 0; i + d <= J; ++d) rank[i][d] = erank(i, d, q);
  } else {
    ideals::SliceRestriction slice(1, m, n, characteristic);
    const KoszulContext kc(nv);
    for (int d = 0; d <= J; ++d) h[d] = slice.normal_forms(d).standard.size();
    for (int d = J + 1; d <= J + 2; ++d) h[d] = slice.degree(d).rank;
    for (int i = 1; i <= nv; ++i)
      for (int d = 0; i + d <= J; ++d) rank[i][d] = koszul_rank_mod(slice, kc, i, d);
  }

  auto cell = [&](int i, int d) {
    Integer b = binomial(nv, i) * Integer(static_cast<unsigned long>(h[d]));
    b -= static_cast<unsigned long>(rank[i][d]);
    if (d >= 1) b -= static_cast<unsigned long>(rank[i + 1][d - 1]);
    if (sgn(b) < 0) throw Error("negative Betti number");
    return b;
  };

  // Over Q: once dim M_d agrees with the certified value, the reduction mod q of the Koszul complex is
  // the complex over GF(q), so modular Betti numbers bound the rational ones from above with the same
  // alternating sum in each internal degree. A degree whose nonzero entries share the parity of i is
  // therefore exact; the others are recomputed with certified ranks.
  if (characteristic == 0) {
    for (int d = 0; d <= J; ++d) {
      const std::size_t exact = nv > 1 ? static_cast<std::size_t>(ideals::slice_quotient_dim(m, n, d).get_ui())
                                       : erank(0, d, 0);
      if (h[d] != exact) throw CertificationFailed("reduction modulo q changes dim M_" + std::to_string(d));
    }
    for (int j = 0; j <= J; ++j) {
      bool even = false, odd = false;
      for (int i = 0; i <= std::min(nv, j); ++i)
        if (sgn(cell(i, j - i)) != 0) (i % 2 ? odd : even) = true;
      if (!(even && odd)) continue;
      for (int i = 1; i <= std::min(nv, j); ++i) rank[i][j - i] = erank(i, j - i, 0);
    }
  }

  for (int i = 0; i <= nv; ++i) {
    for (int d = 0; i + d <= J; ++d) {
      Integer b = cell(i, d);
      if (sgn(b) == 0) continue;
      if (i + d == J) throw WindowTooSmall("nonzero Betti number at the window edge j = " + std::to_string(J));
      t.entries[{i, i + d}] = b;
    }
  }

  // The alternating sums sum_i (-1)^i beta_{i,j} are the coefficients of H_M(t)(1-t)^{n-1}; terms just
  // past the window show up as a mismatch with dim M_d for d = J + 1, J + 2.
  std::vector<Integer> k_poly(J + 1);
  for (const auto& [c, v] : t.entries) {
    if (c.first % 2) k_poly[c.second] -= v;
    else k_poly[c.second] += v;
  }
  for (int d = J + 1; d <= J + 2; ++d) {
    Integer predicted = 0;
    for (int j = 0; j <= J; ++j) predicted += k_poly[j] * binomial(d - j + nv - 1, nv - 1);
    if (predicted != Integer(static_cast<unsigned long>(h[d])))
      throw WindowTooSmall("Betti numbers beyond the window j <= " + std::to_string(J) + " (Hilbert series mismatch in degree " +
                           std::to_string(d) + ")");
  }
  return t;
}

std::vector<std::vector<int>> degree_sequence(const BettiTable& t) {
  std::vector<std::vector<int>> out(t.length() + 1);
  for (const auto& [cell, v] : t.entries)
    if (sgn(v) != 0) out[cell.first].push_back(cell.second);
  return out;
}

bool is_pure(const BettiTable& t) {
  for (const auto& ds : degree_sequence(t))
    if (ds.size() > 1) return false;
  return true;
}

std::vector<int> pure_degrees(const BettiTable& t) {
  std::vector<int> out;
  for (const auto& ds : degree_sequence(t)) {
    if (ds.size() != 1) throw InvalidInput("table is not pure");
    out.push_back(ds[0]);
  }
  return out;
}

int regularity(const BettiTable& t) {
  if (t.empty()) throw InvalidInput("regularity of an empty table");
  int r = t.entries.begin()->first.second - t.entries.begin()->first.first;
  for (const auto& [cell, v] : t.entries) r = std::max(r, cell.second - cell.first);
  return r;
}

std::string render(const BettiTable& t) {
  const std::string total_label = "total:";
  const int w0 = static_cast<int>(total_label.size());
  auto pad = [](const std::string& s, int w) { return std::string(std::max(0, w - int(s.size())), ' ') + s; };
  std::ostringstream out;
  if (t.empty()) {
    out << total_label << "\n";
    return out.str();
  }
  int imin = t.entries.begin()->first.first, imax = imin;
  int rmin = t.entries.begin()->first.second - imin, rmax = rmin;
  for (const auto& [cell, v] : t.entries) {
    imin = std::min(imin, cell.first);
    imax = std::max(imax, cell.first);
    rmin = std::min(rmin, cell.second - cell.first);
    rmax = std::max(rmax, cell.second - cell.first);
  }
  auto cell_text = [&](int i, int r) {
    Integer v = t.at(i, i + r);
    return sgn(v) == 0 ? std::string(".") : v.get_str();
  };
  std::vector<int> width;
  for (int i = imin; i <= imax; ++i) {
    int w = std::max(std::to_string(i).size(), t.total(i).get_str().size());
    for (int r = rmin; r <= rmax; ++r) w = std::max<int>(w, cell_text(i, r).size());
    width.push_back(w);
  }
  out << std::string(w0, ' ');
  for (int i = imin; i <= imax; ++i) out << ' ' << pad(std::to_string(i), width[i - imin]);
  out << "\n" << total_label;
  for (int i = imin; i <= imax; ++i) out << ' ' << pad(t.total(i).get_str(), width[i - imin]);
  out << "\n";
  for (int r = rmin; r <= rmax; ++r) {
    out << pad(std::to_string(r) + ":", w0);
    for (int i = imin; i <= imax; ++i) out << ' ' << pad(cell_text(i, r), width[i - imin]);
    out << "\n";
  }
  return out.str();
}

namespace {

std::string poly_string(const std::vector<Integer>& c) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i].get_str();
  out << "]";
  return out.str();
}

void trim(std::vector<Integer>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

VerificationReport euler_checks(const BettiTable& t, const ideals::HilbertData& h) {
  if (!t.has_labels()) throw InvalidInput("euler_checks needs a labelled table");
  if (h.d_min != 0) throw InvalidInput("Hilbert data must start at degree 0");
  const BettiTable it = ideal_table(t);
  VerificationReport rep;
  rep.claim = "euler_checks";
  rep.params = {{"n", std::to_string(t.n)}, {"m", std::to_string(h.m)}};

  Integer rank_sum = 0;
  int cmax = 0;
  std::vector<Integer> lhs;
  for (const auto& [cell, ls] : it.labels) {
    const auto [i, j] = cell;
    if (j < 0) throw InvalidInput("negative internal degree");
    cmax = std::max(cmax, j);
    if (static_cast<int>(lhs.size()) <= j) lhs.resize(j + 1);
    for (const auto& mu : ls) {
      Integer d = hook_dimension(mu);
      if (i % 2) {
        rank_sum -= d;
        lhs[j] -= d;
      } else {
        rank_sum += d;
        lhs[j] += d;
      }
    }
  }
  rep.add("alternating rank", "1", rank_sum.get_str(), rank_sum == 1);

  const int top = cmax + 2;
  if (h.d_max < top) throw InvalidInput("Hilbert data must reach degree " + std::to_string(top));
  std::vector<Integer> rhs(top + 1);
  for (int d = 0; d <= top; ++d) {
    // coefficient of t^d in H_I(t)(1-t)^n
    for (int e = 0; e <= std::min(d, t.n); ++e) {
      Integer term = binomial(t.n, e) * h.ideal[d - e];
      if (e % 2) rhs[d] -= term;
      else rhs[d] += term;
    }
  }
  lhs.resize(top + 1);
  trim(lhs);
  trim(rhs);
  rep.add("alternating series through degree " + std::to_string(top), poly_string(rhs), poly_string(lhs),
          lhs == rhs);
  return rep;
}

}  // namespace jb::betti
