#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jackbetti/exactnum.hpp"

namespace jb::linalg {

using exactnum::Integer;
using exactnum::Rational;

// 2^62 - 57.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ull;

using IntEntry = std::pair<std::uint32_t, std::int64_t>;
// Sparse integer row, sorted by column.
using IntRow = std::vector<IntEntry>;

using ModEntry = std::pair<std::uint32_t, std::uint64_t>;
using ModRow = std::vector<ModEntry>;

struct ModElimination {
  std::uint64_t p = 0;
  std::size_t rank = 0;
  std::vector<std::uint8_t> is_pivot;  // per input row
  // For each non-pivot row i (when tracked): coefficients with sum_j c_j row_j = 0 mod p and c_i = 1,
  // supported on i and pivot rows.
  std::vector<std::uint32_t> relation_rows;
  std::vector<ModRow> relations;
};

// Row-wise sparse elimination over GF(p) with Markowitz pivoting
// (sparsest column, then shortest row). Input rows are not modified.
ModElimination eliminate_mod_p(const std::vector<IntRow>& rows, std::size_t ncols, std::uint64_t p,
                               bool track_relations);
std::size_t rank_mod_p(const std::vector<IntRow>& rows, std::size_t ncols, std::uint64_t p);

// Lifts a relation mod p to Q and scales it to integers; nullopt if reconstruction fails.
std::optional<std::vector<std::pair<std::uint32_t, Integer>>> lift_relation(const ModRow& rel, std::uint64_t p);
// sum_j c_j rows[j] == 0 exactly.
bool verify_relation(const std::vector<IntRow>& rows, const std::vector<std::pair<std::uint32_t, Integer>>& rel);

struct CertifiedRank {
  std::size_t rank;
  std::vector<std::uint8_t> is_pivot;
  // Lifted integer relations, one per non-pivot row, in input order of relation_rows.
  std::vector<std::uint32_t> relation_rows;
  std::vector<std::vector<std::pair<std::uint32_t, Integer>>> relations;
};

// Rank over Q: the mod-p rank is a lower bound; every non-pivot row is shown to lie in the span
// of the pivot rows by an exactly verified relation. Throws CertificationFailed otherwise.
CertifiedRank certified_rank(const std::vector<IntRow>& rows, std::size_t ncols, bool keep_relations = false,
                             std::uint64_t p = kDefaultPrime);

// Field policies for the small exact echelon engine.
struct QField {
  using T = Rational;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  T from(const Rational& q) const { return q; }
  Rational to_rational(const T& v) const { return v; }
  bool is_zero(const T& v) const { return sgn(v) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return T(1) / a; }
  T neg(const T& a) const { return -a; }
};

struct PField {
  using T = std::uint64_t;
  std::uint64_t p;
  T zero() const { return 0; }
  T one() const { return 1 % p; }
  T from(const Rational& q) const { return exactnum::reduce_mod(q, p); }
  Rational to_rational(const T& v) const { return Rational(static_cast<unsigned long>(v)); }
  bool is_zero(const T& v) const { return v == 0; }
  T add(const T& a, const T& b) const { return (a + b) % p; }
  T sub(const T& a, const T& b) const { return (a + p - b) % p; }
  T mul(const T& a, const T& b) const { return exactnum::mulmod(a, b, p); }
  T inv(const T& a) const { return exactnum::invmod(a, p); }
  T neg(const T& a) const { return a ? p - a : 0; }
};

// Fully reduced row echelon form maintained incrementally; pivot = smallest column index.
template <class F>
class Echelon {
 public:
  using T = typename F::T;
  using Row = std::vector<std::pair<int, T>>;

  explicit Echelon(F field = F()) : f_(field) {}

  // Remainder of v after reduction by the current rows.
  Row reduce(Row v) const;
  // Adds v if independent; returns whether the rank grew.
  bool insert(const Row& v);
  std::size_t rank() const { return rows_.size(); }
  bool contains(const Row& v) const { return reduce(v).empty(); }
  // Rows ordered by pivot column, each with leading coefficient one.
  std::vector<Row> rows() const;
  std::vector<int> pivots() const;
  const F& field() const { return f_; }

 private:
  static Row axpy(const F& f, const Row& x, const T& a, const Row& y);  // x + a*y
  F f_;
  std::map<int, Row> rows_;
};

// Basis of {x : A x = 0} for A given by sparse rows over F, ncols columns; result in RREF.
template <class F>
std::vector<typename Echelon<F>::Row> nullspace(const std::vector<typename Echelon<F>::Row>& rows, int ncols,
                                                F field = F());

// Fraction-free rank of a dense integer matrix.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> a);

}  // namespace jb::linalg
