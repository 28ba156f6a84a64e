#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "jackbetti/linalg.hpp"
#include "jackbetti/poly.hpp"

namespace jb::ideals {

using exactnum::Integer;
using exactnum::Rational;
using poly::Monomial;
using poly::QPoly;

struct ClusterLocus {
  int n = 0;
  // 1-based, each block increasing, blocks ordered by first element.
  std::vector<std::vector<int>> blocks;
  std::string to_string() const;
  friend bool operator==(const ClusterLocus&, const ClusterLocus&) = default;
};

// All unordered choices of s disjoint m-blocks of {1..n}.
std::vector<ClusterLocus> components(int s, int m, int n);

// Homogeneous degree-d subspace in reduced echelon form (leading coefficient one, grevlex order).
// characteristic 0 means Q; otherwise coefficients are residues in [0, p).
struct GradedPiece {
  int n = 0;
  int degree = 0;
  std::uint64_t characteristic = 0;
  std::vector<QPoly> basis;

  std::size_t dim() const { return basis.size(); }
  std::string field_name() const;
  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

// Monomials of degree d in n variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

// Column index of degree-d monomials in grevlex order.
class MonomialIndex {
 public:
  MonomialIndex(int n, int d);
  int n() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  int at(const Monomial& m) const;

 private:
  int n_, d_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, int, poly::MonomialHash> pos_;
};

// Canonical basis of the span of homogeneous degree-d polynomials.
GradedPiece echelon_piece(int n, int d, const std::vector<QPoly>& spanning, std::uint64_t characteristic = 0);
bool piece_contains(const GradedPiece& piece, const QPoly& f);

GradedPiece vanishing_ideal_graded(int s, int m, int n, int d, std::uint64_t characteristic = 0);
GradedPiece ideal_from_orbit(const QPoly& f, int d);
std::size_t orbit_span_dim(const QPoly& f);
// f in I(Z)^ell, decided on u-degrees after a change of coordinates.
bool power_membership(const QPoly& f, const ClusterLocus& z, int ell);
GradedPiece intersect_graded(const std::vector<GradedPiece>& pieces);
// Degree-ell polynomials on V_m killed by all Dunkl operators at c = ell/m, in the m-1 differences
// u_t = x_t - x_{t+1}.
GradedPiece singular_generator_space(int ell, int m);

// I_{s,ell,m} = intersection over loci Z of the ideal J_Z generated by copies of I_{ell,m}
// in the difference coordinates of each block of Z.
class ClusterIdeal {
 public:
  ClusterIdeal(int s, int ell, int m, int n);
  int s() const { return s_; }
  int ell() const { return ell_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<ClusterLocus>& loci() const { return loci_; }
  // Socle degree of C[V_m] / I_{ell,m}.
  int top_degree() const { return static_cast<int>(nf_.size()) - 1; }

  bool contains(const QPoly& f) const;
  bool contains_at(const QPoly& f, const ClusterLocus& z) const;
  // Normal form of f modulo J_Z, in the block coordinates of Z.
  QPoly normal_form(const QPoly& f, const ClusterLocus& z) const;
  GradedPiece graded_piece(int d) const;

 private:
  int s_, ell_, m_, n_;
  std::vector<ClusterLocus> loci_;
  // Per degree e: normal form of each degree-e monomial in m-1 variables (indexed by MonomialIndex).
  std::vector<std::vector<QPoly>> nf_;
};

// Degree-d piece of the ideal generated by the orbit of f_{mu_{s,ell,m}} at c = ell/m.
GradedPiece orbit_ideal_piece(int s, int ell, int m, int n, int d);

// Restriction of A' = k[x1..x_{n-1}] to the components of X_{s,m} intersected with {x_n = 0}.
// The translation-invariant factor splits off: A/I(X) = (A'/I') [x_n].
class SliceRestriction {
 public:
  struct Degree {
    int d = 0;
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::uint32_t, poly::MonomialHash> row_of;
    std::vector<linalg::IntRow> rows;
    std::size_t ncols = 0;
    std::size_t rank = 0;
    // Monomials whose restrictions form a basis of the image (a basis of (A'/I')_d).
    std::vector<std::uint32_t> standard;
    bool ranked = false;
  };
  // Normal forms modulo I' over GF(q), q = characteristic or linalg::kDefaultPrime over Q.
  struct NormalForms {
    std::uint64_t modulus = 0;
    std::vector<std::uint32_t> standard;  // monomial indices
    std::vector<std::int32_t> position;   // per monomial: index into standard, or -1
    std::vector<linalg::ModRow> nf;       // per monomial: coordinates on the standard monomials
  };

  SliceRestriction(int s, int m, int n, std::uint64_t characteristic = 0);
  int nvars() const { return n_ - 1; }
  std::uint64_t characteristic() const { return char_; }
  // Computed on demand and cached; ranks over Q are certified.
  const Degree& degree(int d);
  // Monomials and restriction rows only; rank and standard are filled by degree(d).
  const Degree& layout(int d);
  // Over Q the reduction is checked to preserve dim (A'/I')_d against the certified rank.
  const NormalForms& normal_forms(int d);

 private:
  int s_, m_, n_;
  std::uint64_t char_;
  // Per component: label per variable of A' (group id, or -1 when the variable is zero on it).
  std::vector<std::vector<int>> labels_;
  std::vector<std::unique_ptr<Degree>> cache_;
  std::vector<std::unique_ptr<NormalForms>> nf_cache_;
};

// Total dimension sum_lambda mult_lambda * dim S^lambda of an S_r-representation W over a field of
// characteristic 0 or p > r, from dim W^{S_mu} (sign = false) and the sign-twisted invariant dimension
// (sign = true) on the Young subgroups requested by the solver. Multiplicities come from Kostka numbers,
// solved top-down on {lambda : |S_lambda| >= |S_lambda'|} and bottom-up through conjugates elsewhere.
Integer isotypic_dimension(int r, const std::function<Integer(const combinat::Partition&, bool)>& invariants);

// dim (A'/I')_d for s = 1 from ranks on twisted Young-subgroup invariants of S_{n-1}, combined
// through Kostka numbers. Agrees with SliceRestriction::degree(d).rank; ranks are certified.
Integer slice_quotient_dim(int m, int n, int d);

struct HilbertData {
  int s = 1, ell = 1, m = 0, n = 0;
  int krull_dim = 0;
  int d_min = 0, d_max = 0;
  std::vector<Integer> quotient;  // dim (A/I)_d for d in [d_min, d_max]
  std::vector<Integer> ideal;     // dim I_d
  // Coefficients of H_{A/I}(t)(1-t)^krull_dim truncated at d_max (trailing zeros removed).
  std::vector<Integer> numerator;
  Integer numerator_at_one;
};

// dims of A/I(X_{s,m}) via the translation slice; d_min..d_max inclusive.
HilbertData hilbert_function(int s, int m, int n, int d_min, int d_max);
// Same for I_{s,ell,m} via the intersection construction (small cases).
HilbertData hilbert_function_ell(int s, int ell, int m, int n, int d_min, int d_max);

}  // namespace jb::ideals
