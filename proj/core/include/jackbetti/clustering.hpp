#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jackbetti/combinat.hpp"
#include "jackbetti/exactnum.hpp"
#include "jackbetti/report.hpp"

namespace jb::clustering {

using combinat::Composition;
using combinat::Partition;
using exactnum::Rational;

// Seed of the sample-point generator used by verify_C12.
inline constexpr std::uint32_t kSampleSeed = 20240611u;

// p_lambda at c = (r-1)/(k+1), clusters of d(k+1) variables, order of each (x_i - z) for i >= s(k+1)
// against d(r-1)+1.
VerificationReport verify_T11(int n, int k, int r, int s, int d, const Partition& lambda);

// f_mu at c = l/m: eigenvalues, membership in I_{s,l,m}, l-annihilation of each component of X_{s,m}.
VerificationReport verify_T34(const Composition& mu, int ell, int m, int s, int n);

// p_lambda at c = l/m: membership in I_{s,l,m}, (l+1)-annihilation of each component of X_{s,m}, and the
// specialized divisibility by prod_{i >= sm} (x_i - z)^{l+1}.
VerificationReport verify_T36(int ell, int m, int s, int n, const Partition& lambda);

// Graded pieces of I_{dd',l,m} up to degree_bound (default: generator degree + 2): every element
// (dl)-annihilates each component of X_{d',dm}; symmetrized elements (dl+1)-annihilate them.
VerificationReport verify_T38(int ell, int m, int d, int d_prime, int n, std::optional<int> degree_bound = {});

// Basis elements of I(X_{s,m})_d for d <= degree_bound vanish to order >= s at three seeded sample points
// of each component of X_{1,sm}, and lie in I(Z)^s for each such component Z.
VerificationReport verify_C12(int n, int s, int m, int degree_bound);

// Sample points on the diagonal block of a component: block coordinates equal, others distinct.
std::vector<std::vector<Rational>> sample_points(const std::vector<int>& block, int n, int count,
                                                 std::uint32_t seed);

}  // namespace jb::clustering
