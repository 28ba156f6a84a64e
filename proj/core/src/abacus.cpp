#include "jackbetti/abacus.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace jb::abacus {

using combinat::conjugate;

AbacusDiagram::AbacusDiagram(int m, std::vector<int> positions) : m_(m), pos_(std::move(positions)) {
  if (m < 1) throw MalformedDiagram("abacus needs at least one runner");
  std::sort(pos_.begin(), pos_.end());
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    if (pos_[i] < 0) throw MalformedDiagram("negative bead position");
    if (i && pos_[i] == pos_[i - 1]) throw MalformedDiagram("two beads at one position");
  }
}

std::vector<Bead> AbacusDiagram::beads() const {
  std::vector<Bead> b;
  for (int p : pos_) b.push_back({p % m_, p / m_ + 1});
  return b;
}

bool AbacusDiagram::occupied(int position) const {
  return std::binary_search(pos_.begin(), pos_.end(), position);
}

bool AbacusDiagram::one_bead_per_runner() const {
  std::vector<int> cnt(m_, 0);
  for (int p : pos_)
    if (++cnt[p % m_] > 1) return false;
  return true;
}

std::string AbacusDiagram::render(int min_rows) const {
  std::ostringstream os;
  for (int r = 0; r < m_; ++r) os << (r ? " " : "") << r;
  os << "\n" << std::string(2 * m_ - 1, '-') << "\n";
  int rows = std::max(min_rows, pos_.empty() ? 0 : pos_.back() / m_ + 1);
  for (int row = 0; row < rows; ++row) {
    for (int r = 0; r < m_; ++r) os << (r ? " " : "") << (occupied(row * m_ + r) ? "•" : "∘");
    os << "\n";
  }
  for (int r = 0; r < m_; ++r) os << (r ? " " : "") << "⋮";
  os << "\n";
  return os.str();
}

AbacusDiagram abacus_of(const Partition& lambda, int m) { return abacus_of(lambda, m, lambda[0]); }

AbacusDiagram abacus_of(const Partition& lambda, int m, int bead_count) {
  if (m < 2) throw ParameterOutOfRange("abacus needs m >= 2");
  if (bead_count < lambda[0]) throw InvalidInput("bead count below the first part");
  Partition conj = conjugate(lambda);
  std::vector<int> pos;
  for (int j = 1; j <= bead_count; ++j) pos.push_back(conj[j - 1] + bead_count - j);
  return AbacusDiagram(m, pos);
}

Partition partition_of(const AbacusDiagram& d) {
  const auto& p = d.positions();
  int b = d.bead_count();
  std::vector<int> conj;
  for (int j = 1; j <= b; ++j) conj.push_back(p[b - j] - (b - j));
  return conjugate(Partition(conj));
}

int homological_degree(const AbacusDiagram& d) {
  if (!d.one_bead_per_runner()) throw MultipleBeadsOnRunner("homological degree needs at most one bead per runner");
  auto beads = d.beads();
  int hd = 0;
  for (const auto& b1 : beads) {
    for (const auto& b2 : beads) {
      if (b1.runner >= b2.runner) continue;
      if (b1.row > b2.row) hd += b1.row - b2.row - 1;
      else if (b1.row < b2.row) hd += b2.row - b1.row;
    }
  }
  return hd;
}

Partition m_core(const Partition& lambda, int m) {
  AbacusDiagram d = abacus_of(lambda, m);
  std::vector<int> cnt(m, 0);
  for (int p : d.positions()) ++cnt[p % m];
  std::vector<int> pos;
  for (int r = 0; r < m; ++r)
    for (int t = 0; t < cnt[r]; ++t) pos.push_back(r + m * t);
  return partition_of(AbacusDiagram(m, pos));
}

std::vector<AbacusDiagram> single_moves(const AbacusDiagram& d) {
  std::vector<AbacusDiagram> out;
  const auto& p = d.positions();
  int m = d.runners();
  for (std::size_t u = 0; u < p.size(); ++u) {
    if (p[u] < m) continue;
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (u == v) continue;
      std::vector<int> next;
      for (std::size_t t = 0; t < p.size(); ++t)
        if (t != u && t != v) next.push_back(p[t]);
      int up = p[u] - m, down = p[v] + m;
      if (up == down) continue;
      if (std::find(next.begin(), next.end(), up) != next.end()) continue;
      if (std::find(next.begin(), next.end(), down) != next.end()) continue;
      next.push_back(up);
      next.push_back(down);
      AbacusDiagram nd(m, next);
      if (nd == d) continue;
      out.push_back(std::move(nd));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AbacusDiagram> pm_diagrams(const Partition& lambda, int m) {
  std::set<AbacusDiagram> seen;
  std::deque<AbacusDiagram> queue;
  AbacusDiagram start = abacus_of(lambda, m);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    AbacusDiagram cur = queue.front();
    queue.pop_front();
    for (auto& nd : single_moves(cur)) {
      if (seen.insert(nd).second) queue.push_back(nd);
    }
  }
  return {seen.begin(), seen.end()};
}

std::set<Partition> pm_set(const Partition& lambda, int m) {
  std::set<Partition> out;
  for (const auto& d : pm_diagrams(lambda, m)) out.insert(partition_of(d));
  return out;
}

std::vector<PmEntry> pm_table(const Partition& lambda, int m) {
  std::vector<PmEntry> out;
  int n = lambda.size();
  for (auto& d : pm_diagrams(lambda, m)) {
    Partition mu = partition_of(d);
    out.push_back({mu, d, homological_degree(d), c_stat(mu, n, exactnum::frac(1, m))});
  }
  std::sort(out.begin(), out.end(), [](const PmEntry& a, const PmEntry& b) {
    if (a.hd != b.hd) return a.hd < b.hd;
    if (a.c != b.c) return a.c < b.c;
    return b.mu < a.mu;
  });
  return out;
}

std::set<Partition> pm_set_by_dominance(const Partition& lambda, int m) {
  std::set<Partition> out;
  Partition core = m_core(lambda, m);
  for (const auto& mu : combinat::partitions_of(lambda.size()))
    if (combinat::dominance_leq(mu, lambda) && m_core(mu, m) == core) out.insert(mu);
  return out;
}

Rational c_stat(const Partition& mu, int n, const Rational& c) {
  if (mu.size() != n) throw SizeMismatch("c statistic needs |mu| = n");
  long v = combinat::nstat(mu) - combinat::nstat(conjugate(mu)) + static_cast<long>(n) * (n - 1) / 2;
  return c * Rational(v);
}

bool unitary_check(const Partition& lambda, int m) {
  AbacusDiagram d = abacus_of(lambda, m);
  if (d.bead_count() <= 1) return true;
  return d.positions().back() - d.positions().front() <= m - 1;
}

int empties_above(const AbacusDiagram& d) {
  int e = 0;
  int m = d.runners();
  for (int p : d.positions())
    for (int q = p - m; q >= 0; q -= m)
      if (!d.occupied(q)) ++e;
  return e;
}

Partition m_equals_partition(int n, int m) {
  if (m < 2 || m > n) throw ParameterOutOfRange("need 2 <= m <= n");
  int q = n / (m - 1), r = n % (m - 1);
  std::vector<int> parts(q, m - 1);
  if (r) parts.push_back(r);
  return Partition(parts);
}

int projective_dimension_formula(int n, int m) {
  Partition lambda = m_equals_partition(n, m);
  return (m - 2) * empties_above(abacus_of(lambda, m)) + 1;
}

}  // namespace jb::abacus
