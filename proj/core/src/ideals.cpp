#include "jackbetti/ideals.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "jackbetti/errors.hpp"
#include "jackbetti/jack.hpp"
#include "jackbetti/operators.hpp"

namespace jb::ideals {

using linalg::Echelon;
using linalg::PField;
using linalg::QField;
using combinat::Composition;

std::string ClusterLocus::to_string() const {
  std::string s = "{";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += ",";
    s += "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(blocks[b][i]);
    }
    s += "}";
  }
  return s + "}";
}

namespace {

void subsets(int n, int m, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    subsets(n, m, i + 1, cur, out);
    cur.pop_back();
  }
}

void choose_blocks(const std::vector<std::vector<int>>& all, std::size_t from, int s, std::vector<char>& used,
                   std::vector<std::vector<int>>& cur, int n, std::vector<ClusterLocus>& out) {
  if (static_cast<int>(cur.size()) == s) {
    out.push_back(ClusterLocus{n, cur});
    return;
  }
  for (std::size_t k = from; k < all.size(); ++k) {
    const auto& b = all[k];
    if (!cur.empty() && b.front() <= cur.back().front()) continue;
    bool free = std::none_of(b.begin(), b.end(), [&](int i) { return used[i]; });
    if (!free) continue;
    for (int i : b) used[i] = 1;
    cur.push_back(b);
    choose_blocks(all, k + 1, s, used, cur, n, out);
    cur.pop_back();
    for (int i : b) used[i] = 0;
  }
}

template <class F>
typename Echelon<F>::Row to_row(const QPoly& f, const MonomialIndex& idx, const F& field) {
  typename Echelon<F>::Row row;
  row.reserve(f.size());
  for (const auto& [m, k] : f.terms()) {
    typename F::T v = field.from(k);
    if (!field.is_zero(v)) row.emplace_back(idx.at(m), v);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

template <class F>
QPoly from_row(const typename Echelon<F>::Row& row, const MonomialIndex& idx, const F& field) {
  QPoly f(idx.n());
  for (const auto& [c, v] : row) f.add_term(idx.monomials()[c], field.to_rational(v));
  return f;
}

void check_homogeneous(const QPoly& f, int n, int d) {
  if (f.nvars() != n) throw SizeMismatch("polynomial lives in a different ring");
  if (f.is_zero()) return;
  if (!f.is_homogeneous() || f.degree() != d) throw DegreeMismatch("polynomial is not homogeneous of degree " +
                                                                   std::to_string(d));
}

template <class F>
GradedPiece echelon_with(int n, int d, const std::vector<QPoly>& spanning, std::uint64_t ch, const F& field) {
  MonomialIndex idx(n, d);
  Echelon<F> e(field);
  for (const auto& f : spanning) {
    check_homogeneous(f, n, d);
    e.insert(to_row(f, idx, field));
  }
  GradedPiece out{n, d, ch, {}};
  for (const auto& r : e.rows()) out.basis.push_back(from_row(r, idx, field));
  return out;
}

// Images x_{b_t} -> X_{b_m} + sum_{t <= t' < m} X_{b_t'}: slots b_1..b_{m-1} carry the differences
// u_t = x_{b_t} - x_{b_{t+1}}, slot b_m carries x_{b_m}.
std::vector<QPoly> block_coordinates(const ClusterLocus& z) {
  int n = z.n;
  std::vector<QPoly> images;
  for (int i = 1; i <= n; ++i) images.push_back(QPoly::variable(n, i));
  for (const auto& b : z.blocks) {
    int m = static_cast<int>(b.size());
    for (int t = 0; t < m - 1; ++t) {
      QPoly img = QPoly::variable(n, b[m - 1]);
      for (int u = t; u < m - 1; ++u) img += QPoly::variable(n, b[u]);
      images[b[t] - 1] = img;
    }
  }
  return images;
}

std::vector<int> block_labels(const ClusterLocus& z, int nvars, int zero_var) {
  // label per variable 1..nvars; -1 marks variables that vanish on the locus.
  std::vector<int> label(nvars, -2);
  int next = 0;
  for (const auto& b : z.blocks) {
    bool zero = std::find(b.begin(), b.end(), zero_var) != b.end();
    int id = zero ? -1 : next++;
    for (int i : b)
      if (i <= nvars) label[i - 1] = id;
  }
  for (int i = 0; i < nvars; ++i)
    if (label[i] == -2) label[i] = next++;
  return label;
}

struct ColumnKey {
  std::uint32_t comp;
  Monomial mono;
  bool operator==(const ColumnKey& o) const { return comp == o.comp && mono == o.mono; }
};

struct ColumnKeyHash {
  std::size_t operator()(const ColumnKey& k) const { return poly::MonomialHash()(k.mono) * 31 + k.comp; }
};

// 0/1 restriction rows: monomial -> one column per component on which it does not vanish.
std::vector<linalg::IntRow> restriction_rows(const std::vector<Monomial>& monos,
                                             const std::vector<std::vector<int>>& labels, int nvars,
                                             std::size_t& ncols) {
  std::unordered_map<ColumnKey, std::uint32_t, ColumnKeyHash> cols;
  std::vector<linalg::IntRow> rows;
  rows.reserve(monos.size());
  for (const auto& a : monos) {
    linalg::IntRow row;
    for (std::uint32_t z = 0; z < labels.size(); ++z) {
      const auto& lab = labels[z];
      Monomial key;
      bool vanishes = false;
      for (int i = 0; i < nvars; ++i) {
        if (!a.e[i]) continue;
        if (lab[i] < 0) {
          vanishes = true;
          break;
        }
        key.e[lab[i]] = static_cast<std::uint8_t>(key.e[lab[i]] + a.e[i]);
      }
      if (vanishes) continue;
      auto [it, fresh] = cols.try_emplace(ColumnKey{z, key}, static_cast<std::uint32_t>(cols.size()));
      row.emplace_back(it->second, 1);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  ncols = cols.size();
  return rows;
}

template <class F>
std::vector<typename Echelon<F>::Row> annihilator(const GradedPiece& p, const MonomialIndex& idx, const F& field) {
  std::vector<typename Echelon<F>::Row> rows;
  for (const auto& f : p.basis) rows.push_back(to_row(f, idx, field));
  return linalg::nullspace<F>(rows, static_cast<int>(idx.size()), field);
}

template <class F>
GradedPiece intersect_with(const std::vector<GradedPiece>& pieces, const F& field) {
  const GradedPiece& first = pieces.front();
  MonomialIndex idx(first.n, first.degree);
  std::vector<typename Echelon<F>::Row> ann;
  for (const auto& p : pieces) {
    auto a = annihilator(p, idx, field);
    ann.insert(ann.end(), a.begin(), a.end());
  }
  auto inter = linalg::nullspace<F>(ann, static_cast<int>(idx.size()), field);
  std::vector<QPoly> span;
  for (const auto& r : inter) span.push_back(from_row(r, idx, field));
  return echelon_with(first.n, first.degree, span, first.characteristic, field);
}

}  // namespace

std::vector<ClusterLocus> components(int s, int m, int n) {
  if (s < 0 || m < 1 || n < 1 || s * m > n) throw ParameterOutOfRange("components need s*m <= n");
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  subsets(n, m, 1, cur, all);
  std::vector<ClusterLocus> out;
  std::vector<char> used(n + 1, 0);
  std::vector<std::vector<int>> chosen;
  choose_blocks(all, 0, s, used, chosen, n, out);
  return out;
}

std::string GradedPiece::field_name() const {
  return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Composition e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), poly::GrevlexGreater());
  return out;
}

MonomialIndex::MonomialIndex(int n, int d) : n_(n), d_(d), monos_(monomials_of_degree(n, d)) {
  pos_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) pos_.emplace(monos_[i], static_cast<int>(i));
}

int MonomialIndex::at(const Monomial& m) const {
  auto it = pos_.find(m);
  if (it == pos_.end()) throw DegreeMismatch("monomial outside the indexed degree");
  return it->second;
}

GradedPiece echelon_piece(int n, int d, const std::vector<QPoly>& spanning, std::uint64_t characteristic) {
  if (characteristic == 0) return echelon_with(n, d, spanning, 0, QField());
  if (!exactnum::is_prime_u64(characteristic)) throw ParameterOutOfRange("characteristic must be 0 or a prime");
  return echelon_with(n, d, spanning, characteristic, PField{characteristic});
}

bool piece_contains(const GradedPiece& piece, const QPoly& f) {
  if (f.is_zero()) return true;
  check_homogeneous(f, piece.n, piece.degree);
  MonomialIndex idx(piece.n, piece.degree);
  auto run = [&](const auto& field) {
    Echelon<std::decay_t<decltype(field)>> e(field);
    for (const auto& g : piece.basis) e.insert(to_row(g, idx, field));
    return e.contains(to_row(f, idx, field));
  };
  if (piece.characteristic == 0) return run(QField());
  return run(PField{piece.characteristic});
}

GradedPiece vanishing_ideal_graded(int s, int m, int n, int d, std::uint64_t characteristic) {
  auto comps = components(s, m, n);
  std::vector<std::vector<int>> labels;
  for (const auto& z : comps) labels.push_back(block_labels(z, n, 0));
  MonomialIndex idx(n, d);
  std::size_t ncols = 0;
  auto rows = restriction_rows(idx.monomials(), labels, n, ncols);
  std::vector<QPoly> span;
  if (characteristic == 0) {
    linalg::CertifiedRank cr = linalg::certified_rank(rows, ncols, true);
    for (const auto& rel : cr.relations) {
      QPoly f(n);
      for (const auto& [j, c] : rel) f.add_term(idx.monomials()[j], Rational(c));
      span.push_back(std::move(f));
    }
  } else {
    if (!exactnum::is_prime_u64(characteristic)) throw ParameterOutOfRange("characteristic must be 0 or a prime");
    auto el = linalg::eliminate_mod_p(rows, ncols, characteristic, true);
    for (const auto& rel : el.relations) {
      QPoly f(n);
      for (const auto& [j, c] : rel) f.add_term(idx.monomials()[j], Rational(static_cast<unsigned long>(c)));
      span.push_back(std::move(f));
    }
  }
  return echelon_piece(n, d, span, characteristic);
}

namespace {

// Basis of the span of the S_n-orbit of f, closing under adjacent transpositions.
std::vector<QPoly> orbit_basis(const QPoly& f) {
  std::vector<QPoly> out;
  if (f.is_zero()) return out;
  int n = f.nvars();
  std::unordered_map<Monomial, int, poly::MonomialHash> cols;
  auto row_of = [&](const QPoly& g) {
    Echelon<QField>::Row row;
    for (const auto& [m, k] : g.terms()) {
      auto [it, fresh] = cols.try_emplace(m, static_cast<int>(cols.size()));
      row.emplace_back(it->second, k);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };
  Echelon<QField> e;
  std::deque<QPoly> queue;
  e.insert(row_of(f));
  out.push_back(f);
  queue.push_back(f);
  while (!queue.empty()) {
    QPoly g = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      QPoly h = g.swapped(i, i + 1);
      if (e.insert(row_of(h))) {
        out.push_back(h);
        queue.push_back(std::move(h));
      }
    }
  }
  return out;
}

}  // namespace

GradedPiece ideal_from_orbit(const QPoly& f, int d) {
  int n = f.nvars();
  if (f.is_zero()) return GradedPiece{n, d, 0, {}};
  if (!f.is_homogeneous()) throw DegreeMismatch("generator must be homogeneous");
  int e = f.degree();
  if (d < e) throw DegreeTooSmall("degree " + std::to_string(d) + " is below the generator degree " +
                                  std::to_string(e));
  std::vector<QPoly> orbit = orbit_basis(f);
  std::vector<QPoly> span;
  for (const auto& mono : monomials_of_degree(n, d - e))
    for (const auto& g : orbit) span.push_back(g.times_monomial(mono));
  return echelon_piece(n, d, span);
}

std::size_t orbit_span_dim(const QPoly& f) { return orbit_basis(f).size(); }

bool power_membership(const QPoly& f, const ClusterLocus& z, int ell) {
  if (f.nvars() != z.n) throw SizeMismatch("locus lives in a different ring");
  if (ell <= 0 || f.is_zero()) return true;
  QPoly g = poly::substitute(f, block_coordinates(z));
  std::vector<int> u_slots;
  for (const auto& b : z.blocks)
    for (std::size_t t = 0; t + 1 < b.size(); ++t) u_slots.push_back(b[t] - 1);
  for (const auto& [m, k] : g.terms()) {
    int deg = 0;
    for (int i : u_slots) deg += m.e[i];
    if (deg < ell) return false;
  }
  return true;
}

GradedPiece intersect_graded(const std::vector<GradedPiece>& pieces) {
  if (pieces.empty()) throw InvalidInput("nothing to intersect");
  for (const auto& p : pieces) {
    if (p.degree != pieces[0].degree) throw DegreeMismatch("pieces of different degrees");
    if (p.n != pieces[0].n) throw SizeMismatch("pieces in different rings");
    if (p.characteristic != pieces[0].characteristic) throw InvalidInput("pieces over different fields");
  }
  if (pieces[0].characteristic == 0) return intersect_with(pieces, QField());
  return intersect_with(pieces, PField{pieces[0].characteristic});
}

GradedPiece singular_generator_space(int ell, int m) {
  if (ell < 1 || m < 2 || std::gcd(ell, m) != 1) throw ParameterOutOfRange("need ell >= 1, m >= 2, gcd(ell, m) = 1");
  Rational c = exactnum::frac(ell, m);
  c.canonicalize();
  MonomialIndex src(m, ell), tgt(m, ell - 1);
  std::map<std::pair<int, int>, Echelon<QField>::Row> constraints;
  for (std::size_t j = 0; j < src.size(); ++j) {
    QPoly x(m);
    x.add_term(src.monomials()[j], Rational(1));
    for (int i = 1; i <= m; ++i) {
      QPoly y = poly::dunkl(x, i, c);
      for (const auto& [mono, k] : y.terms()) constraints[{i, tgt.at(mono)}].emplace_back(static_cast<int>(j), k);
    }
  }
  std::vector<Echelon<QField>::Row> rows;
  for (auto& [key, row] : constraints) rows.push_back(row);
  auto kernel = linalg::nullspace<QField>(rows, static_cast<int>(src.size()));
  if (static_cast<int>(kernel.size()) != m - 1)
    throw NotFound("singular kernel has dimension " + std::to_string(kernel.size()) + ", expected " +
                   std::to_string(m - 1));
  // Character of s_1 on the kernel must be that of the reflection representation, m - 3.
  std::vector<int> lead;
  for (const auto& v : kernel) lead.push_back(v.back().first);  // free column, coefficient one
  Rational trace(0);
  std::vector<QPoly> polys;
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    QPoly f = from_row(kernel[k], src, QField());
    QPoly g = f.swapped(1, 2);
    trace += g.coeff(src.monomials()[lead[k]]);
    polys.push_back(std::move(f));
  }
  if (trace != Rational(m - 3)) throw NotFound("singular kernel is not a reflection representation");
  // x_i -> u_i + ... + u_{m-1}, x_m -> 0.
  std::vector<QPoly> images;
  for (int i = 1; i <= m; ++i) {
    QPoly img(m - 1);
    for (int t = i; t <= m - 1; ++t) img += QPoly::variable(m - 1, t);
    images.push_back(img);
  }
  std::vector<QPoly> diff;
  for (const auto& f : polys) diff.push_back(poly::substitute(f, images));
  return echelon_piece(m - 1, ell, diff);
}

ClusterIdeal::ClusterIdeal(int s, int ell, int m, int n)
    : s_(s), ell_(ell), m_(m), n_(n), loci_(components(s, m, n)) {
  GradedPiece gens = singular_generator_space(ell, m);
  const int k = m - 1;
  for (int e = 0;; ++e) {
    if (e > 255) throw NotFound("quotient by the singular generators is not finite-dimensional");
    MonomialIndex idx(k, e);
    std::vector<QPoly> nf;
    if (e < ell) {
      for (const auto& mono : idx.monomials()) {
        QPoly p(k);
        p.add_term(mono, Rational(1));
        nf.push_back(std::move(p));
      }
    } else {
      Echelon<QField> ech;
      for (const auto& g : gens.basis)
        for (const auto& mono : monomials_of_degree(k, e - ell)) ech.insert(to_row(g.times_monomial(mono), idx, QField()));
      if (ech.rank() == idx.size()) break;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        Echelon<QField>::Row unit{{static_cast<int>(j), Rational(1)}};
        nf.push_back(from_row(ech.reduce(unit), idx, QField()));
      }
    }
    nf_.push_back(std::move(nf));
  }
}

QPoly ClusterIdeal::normal_form(const QPoly& f, const ClusterLocus& z) const {
  if (f.nvars() != n_ || z.n != n_) throw SizeMismatch("polynomial lives in a different ring");
  QPoly g = poly::substitute(f, block_coordinates(z));
  const int k = m_ - 1;
  std::vector<MonomialIndex> idx;
  for (int e = 0; e <= top_degree(); ++e) idx.emplace_back(k, e);
  QPoly out(n_);
  for (const auto& [mono, coeff] : g.terms()) {
    Monomial base = mono;
    std::vector<std::pair<Monomial, Rational>> acc;
    bool vanish = false;
    std::vector<const QPoly*> factors;
    for (const auto& b : z.blocks) {
      Composition alpha(k);
      int deg = 0;
      for (int t = 0; t < k; ++t) {
        alpha[t] = mono.e[b[t] - 1];
        deg += alpha[t];
        base.e[b[t] - 1] = 0;
      }
      if (deg > top_degree()) {
        vanish = true;
        break;
      }
      const QPoly& red = nf_[deg][idx[deg].at(Monomial(alpha))];
      if (red.is_zero()) {
        vanish = true;
        break;
      }
      factors.push_back(&red);
    }
    if (vanish) continue;
    acc.emplace_back(base, coeff);
    for (std::size_t p = 0; p < factors.size(); ++p) {
      const auto& b = z.blocks[p];
      std::vector<std::pair<Monomial, Rational>> next;
      for (const auto& [am, ac] : acc)
        for (const auto& [rm, rc] : factors[p]->terms()) {
          Monomial nm = am;
          for (int t = 0; t < k; ++t) nm.e[b[t] - 1] = rm.e[t];
          next.emplace_back(nm, ac * rc);
        }
      acc = std::move(next);
    }
    for (const auto& [am, ac] : acc) out.add_term(am, ac);
  }
  return out;
}

bool ClusterIdeal::contains_at(const QPoly& f, const ClusterLocus& z) const { return normal_form(f, z).is_zero(); }

bool ClusterIdeal::contains(const QPoly& f) const {
  return std::all_of(loci_.begin(), loci_.end(), [&](const ClusterLocus& z) { return contains_at(f, z); });
}

GradedPiece ClusterIdeal::graded_piece(int d) const {
  MonomialIndex idx(n_, d);
  std::map<std::size_t, Echelon<QField>::Row> constraints;
  for (std::size_t zi = 0; zi < loci_.size(); ++zi) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      QPoly x(n_);
      x.add_term(idx.monomials()[j], Rational(1));
      QPoly r = normal_form(x, loci_[zi]);
      for (const auto& [mono, k] : r.terms())
        constraints[zi * idx.size() + idx.at(mono)].emplace_back(static_cast<int>(j), k);
    }
  }
  std::vector<Echelon<QField>::Row> rows;
  for (auto& [key, row] : constraints) rows.push_back(std::move(row));
  auto kernel = linalg::nullspace<QField>(rows, static_cast<int>(idx.size()));
  std::vector<QPoly> span;
  for (const auto& r : kernel) span.push_back(from_row(r, idx, QField()));
  return echelon_piece(n_, d, span);
}

GradedPiece orbit_ideal_piece(int s, int ell, int m, int n, int d) {
  jack::GeneratorIndex g = jack::generator_index(s, ell, m, n);
  Composition mu = g.mu.parts();
  mu.resize(n, 0);
  Rational c = exactnum::frac(ell, m);
  c.canonicalize();
  QPoly f = jack::nonsym_jack(mu, c).poly;
  return ideal_from_orbit(f, d);
}

SliceRestriction::SliceRestriction(int s, int m, int n, std::uint64_t characteristic)
    : s_(s), m_(m), n_(n), char_(characteristic) {
  if (characteristic != 0 && !exactnum::is_prime_u64(characteristic))
    throw ParameterOutOfRange("characteristic must be 0 or a prime");
  for (const auto& z : components(s, m, n)) labels_.push_back(block_labels(z, n - 1, n));
}

const SliceRestriction::Degree& SliceRestriction::layout(int d) {
  if (d < 0) throw ParameterOutOfRange("negative degree");
  if (static_cast<int>(cache_.size()) <= d) cache_.resize(d + 1);
  if (cache_[d]) return *cache_[d];
  auto deg = std::make_unique<Degree>();
  deg->d = d;
  deg->monomials = monomials_of_degree(n_ - 1, d);
  for (std::size_t i = 0; i < deg->monomials.size(); ++i)
    deg->row_of.emplace(deg->monomials[i], static_cast<std::uint32_t>(i));
  deg->rows = restriction_rows(deg->monomials, labels_, n_ - 1, deg->ncols);
  cache_[d] = std::move(deg);
  return *cache_[d];
}

const SliceRestriction::Degree& SliceRestriction::degree(int d) {
  layout(d);
  Degree& deg = *cache_[d];
  if (deg.ranked) return deg;
  std::vector<std::uint8_t> pivot;
  if (char_ == 0) {
    auto cr = linalg::certified_rank(deg.rows, deg.ncols);
    deg.rank = cr.rank;
    pivot = std::move(cr.is_pivot);
  } else {
    auto el = linalg::eliminate_mod_p(deg.rows, deg.ncols, char_, false);
    deg.rank = el.rank;
    pivot = std::move(el.is_pivot);
  }
  for (std::size_t i = 0; i < pivot.size(); ++i)
    if (pivot[i]) deg.standard.push_back(static_cast<std::uint32_t>(i));
  deg.ranked = true;
  return deg;
}

const SliceRestriction::NormalForms& SliceRestriction::normal_forms(int d) {
  if (d < 0) throw ParameterOutOfRange("negative degree");
  if (static_cast<int>(nf_cache_.size()) <= d) nf_cache_.resize(d + 1);
  if (nf_cache_[d]) return *nf_cache_[d];
  const Degree& deg = layout(d);
  auto out = std::make_unique<NormalForms>();
  out->modulus = char_ == 0 ? linalg::kDefaultPrime : char_;
  const std::uint64_t q = out->modulus;
  auto el = linalg::eliminate_mod_p(deg.rows, deg.ncols, q, true);
  if (char_ == 0) {
    const std::size_t exact = (s_ == 1 && n_ > 2) ? static_cast<std::size_t>(slice_quotient_dim(m_, n_, d).get_ui())
                                                  : degree(d).rank;
    if (el.rank != exact) throw CertificationFailed("reduction modulo " + std::to_string(q) + " drops rank");
  }
  const std::size_t nm = deg.monomials.size();
  out->position.assign(nm, -1);
  out->nf.resize(nm);
  for (std::size_t i = 0; i < nm; ++i) {
    if (!el.is_pivot[i]) continue;
    out->position[i] = static_cast<std::int32_t>(out->standard.size());
    out->nf[i] = {{static_cast<std::uint32_t>(out->standard.size()), 1}};
    out->standard.push_back(static_cast<std::uint32_t>(i));
  }
  for (std::size_t t = 0; t < el.relation_rows.size(); ++t) {
    linalg::ModRow& r = out->nf[el.relation_rows[t]];
    for (auto [j, c] : el.relations[t]) {
      if (j == el.relation_rows[t]) continue;
      r.emplace_back(static_cast<std::uint32_t>(out->position[j]), c ? q - c : 0);
    }
    std::sort(r.begin(), r.end());
  }
  nf_cache_[d] = std::move(out);
  return *nf_cache_[d];
}

namespace {

// Rank of the restriction map on the S_mu-invariants (sign-twisted when sign is set) of A'_d,
// read on one column per orbit.
std::size_t twisted_invariant_rank(int m, int n, int d, const combinat::Partition& mu, bool sign) {
  const int nv = n - 1;
  std::vector<int> part_start;
  {
    int at = 0;
    for (int p : mu.parts()) {
      part_start.push_back(at);
      at += p;
    }
    part_start.push_back(at);
  }
  const int nparts = static_cast<int>(part_start.size()) - 1;

  struct Comp {
    bool zero;
    std::vector<char> in;
    int first;
  };
  std::vector<Comp> comps;
  for (const auto& z : components(1, m, n)) {
    const auto& b = z.blocks[0];
    Comp c{false, std::vector<char>(nv, 0), -1};
    for (int i : b) {
      if (i == n) c.zero = true;
      else c.in[i - 1] = 1;
    }
    for (int i = 0; i < nv; ++i)
      if (c.in[i]) {
        c.first = i;
        break;
      }
    comps.push_back(std::move(c));
  }

  std::unordered_map<ColumnKey, std::uint32_t, ColumnKeyHash> cols;
  std::vector<linalg::IntRow> rows;
  std::vector<int> keys(nv);

  auto valid_rep = [&](const Composition& a) {
    for (int p = 0; p < nparts; ++p)
      for (int i = part_start[p]; i + 1 < part_start[p + 1]; ++i) {
        if (a[i] < a[i + 1]) return false;
        if (sign && a[i] == a[i + 1]) return false;
      }
    return true;
  };

  for (const auto& mono : monomials_of_degree(nv, d)) {
    Composition a = mono.to_composition(nv);
    if (!valid_rep(a)) continue;
    std::map<std::uint32_t, std::int64_t> acc;
    Composition b = a;
    // Each part is cycled through its arrangements in increasing order, starting from sorted.
    for (int p = 0; p < nparts; ++p) std::sort(b.begin() + part_start[p], b.begin() + part_start[p + 1]);
    while (true) {
      int eps = 1;
      if (sign) {
        int inv = 0;
        for (int p = 0; p < nparts; ++p)
          for (int i = part_start[p]; i < part_start[p + 1]; ++i)
            for (int j = i + 1; j < part_start[p + 1]; ++j)
              if (b[i] < b[j]) ++inv;
        eps = (inv % 2) ? -1 : 1;
      }
      for (std::uint32_t zi = 0; zi < comps.size(); ++zi) {
        const Comp& c = comps[zi];
        bool vanish = false;
        int block_exp = 0;
        for (int i = 0; i < nv; ++i) {
          if (c.in[i]) {
            if (c.zero && b[i]) {
              vanish = true;
              break;
            }
            keys[i] = c.zero ? -2 : -1;
            block_exp += b[i];
          } else {
            keys[i] = b[i];
          }
        }
        if (vanish) continue;
        bool rep = true;
        for (int p = 0; p < nparts && rep; ++p)
          for (int i = part_start[p]; i + 1 < part_start[p + 1]; ++i) {
            if (keys[i] < keys[i + 1] || (sign && keys[i] == keys[i + 1])) {
              rep = false;
              break;
            }
          }
        if (!rep) continue;
        Monomial key;
        for (int i = 0; i < nv; ++i)
          if (!c.in[i]) key.e[i] = static_cast<std::uint8_t>(b[i]);
        if (!c.zero) key.e[c.first] = static_cast<std::uint8_t>(block_exp);
        auto [it, fresh] = cols.try_emplace(ColumnKey{zi, key}, static_cast<std::uint32_t>(cols.size()));
        acc[it->second] += eps;
      }
      int p = nparts - 1;
      for (; p >= 0; --p) {
        if (std::next_permutation(b.begin() + part_start[p], b.begin() + part_start[p + 1])) break;
      }
      if (p < 0) break;
    }
    linalg::IntRow row;
    for (auto [col, v] : acc)
      if (v) row.emplace_back(col, v);
    rows.push_back(std::move(row));
  }
  return linalg::certified_rank(rows, cols.size()).rank;
}

Integer young_order(const combinat::Partition& p) {
  Integer r = 1;
  for (int v : p.parts()) r *= combinat::factorial(v);
  return r;
}

}  // namespace

Integer isotypic_dimension(int r, const std::function<Integer(const combinat::Partition&, bool)>& invariants) {
  using combinat::Partition;
  if (r < 1) throw ParameterOutOfRange("isotypic_dimension needs r >= 1");
  std::vector<Partition> parts = combinat::partitions_of(r);
  // Lexicographically decreasing order refines dominance.
  std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) { return b < a; });
  std::set<Partition> top;
  for (const auto& p : parts)
    if (young_order(p) >= young_order(combinat::conjugate(p))) top.insert(p);
  for (const auto& p : parts)
    for (const auto& q : parts)
      if (top.count(p) && combinat::dominance_leq(p, q)) top.insert(q);

  std::map<Partition, Integer> mult;
  for (const auto& lam : parts) {
    if (!top.count(lam)) continue;
    Integer v = invariants(lam, false);
    for (const auto& [nu, k] : mult) v -= combinat::kostka(nu, lam.parts()) * k;
    mult[lam] = v;
  }
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const Partition& lam = *it;
    if (top.count(lam)) continue;
    Partition lt = combinat::conjugate(lam);
    Integer v = invariants(lt, true);
    for (const auto& [nu, k] : mult)
      if (!top.count(nu)) v -= combinat::kostka(combinat::conjugate(nu), lt.parts()) * k;
    mult[lam] = v;
  }
  Integer total = 0;
  for (const auto& [lam, k] : mult) {
    if (k < 0) throw CertificationFailed("negative isotypic multiplicity");
    total += k * combinat::hook_dimension(lam);
  }
  return total;
}

Integer slice_quotient_dim(int m, int n, int d) {
  if (m < 1 || m > n) throw ParameterOutOfRange("need 1 <= m <= n");
  const int nv = n - 1;
  if (nv <= 1) return Integer(static_cast<unsigned long>(SliceRestriction(1, m, n).degree(d).rank));
  return isotypic_dimension(nv, [&](const combinat::Partition& mu, bool sign) {
    return Integer(static_cast<unsigned long>(twisted_invariant_rank(m, n, d, mu, sign)));
  });
}

namespace {

void fill_numerator(HilbertData& h, const std::vector<Integer>& quotient_from_zero) {
  // (1-t)^k * sum_d q_d t^d, truncated at d_max.
  std::vector<Integer> coeffs = quotient_from_zero;
  for (int r = 0; r < h.krull_dim; ++r)
    for (std::size_t i = coeffs.size(); i-- > 1;) coeffs[i] -= coeffs[i - 1];
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  h.numerator = coeffs;
  h.numerator_at_one = 0;
  for (const auto& c : coeffs) h.numerator_at_one += c;
}

}  // namespace

HilbertData hilbert_function(int s, int m, int n, int d_min, int d_max) {
  if (d_min < 0 || d_max < d_min) throw ParameterOutOfRange("bad degree range");
  HilbertData h;
  h.s = s;
  h.ell = 1;
  h.m = m;
  h.n = n;
  h.d_min = d_min;
  h.d_max = d_max;
  std::vector<Integer> q;
  if (s * m > n || m == 1) {
    // No clustering condition applies: I = 0.
    h.krull_dim = n;
    for (int d = 0; d <= d_max; ++d) q.push_back(combinat::binomial(n + d - 1, d));
  } else {
    h.krull_dim = n - s * (m - 1);
    SliceRestriction slice(s, m, n);
    Integer acc = 0;
    for (int d = 0; d <= d_max; ++d) {
      if (s == 1 && n > 2) acc += slice_quotient_dim(m, n, d);
      else acc += Integer(static_cast<unsigned long>(slice.degree(d).rank));
      q.push_back(acc);
    }
  }
  for (int d = d_min; d <= d_max; ++d) {
    h.quotient.push_back(q[d]);
    h.ideal.push_back(combinat::binomial(n + d - 1, d) - q[d]);
  }
  fill_numerator(h, q);
  return h;
}

HilbertData hilbert_function_ell(int s, int ell, int m, int n, int d_min, int d_max) {
  if (ell == 1) return hilbert_function(s, m, n, d_min, d_max);
  if (d_min < 0 || d_max < d_min) throw ParameterOutOfRange("bad degree range");
  HilbertData h;
  h.s = s;
  h.ell = ell;
  h.m = m;
  h.n = n;
  h.d_min = d_min;
  h.d_max = d_max;
  h.krull_dim = n - s * (m - 1);
  ClusterIdeal ideal(s, ell, m, n);
  std::vector<Integer> q;
  for (int d = 0; d <= d_max; ++d) {
    Integer total = combinat::binomial(n + d - 1, d);
    q.push_back(total - Integer(static_cast<unsigned long>(ideal.graded_piece(d).dim())));
  }
  for (int d = d_min; d <= d_max; ++d) {
    h.quotient.push_back(q[d]);
    h.ideal.push_back(combinat::binomial(n + d - 1, d) - q[d]);
  }
  fill_numerator(h, q);
  return h;
}

}  // namespace jb::ideals
