#pragma once

// Local and global variation of a permutation and the extremal
// constructions attaining their bounds.

#include <cstdint>

#include "permderiv/permutation.hpp"

namespace permderiv {

/// Largest |pi_{i+1} - pi_i|; 0 for order 1.
int local_variation(const Permutation& p);

/// Sum of |pi_{i+1} - pi_i|; 0 for order 1.
std::int64_t global_variation(const Permutation& p);

/// Smallest |pi_{i+1} - pi_i|; 0 for order 1.
int min_abs_derivative(const Permutation& p);

/// |pi_i - pi_j| <= L |i - j| for all i, j, which reduces to
/// local_variation(p) <= L. Throws Error(invalid_argument) for L < 1.
bool is_lipschitz(const Permutation& p, int lipschitz);

/// Consecutive entries straddle the middle: the cut k | k+1 when n = 2k,
/// the pivot value k+1 (counted on both sides) when n = 2k+1.
bool is_mid_alternating(const Permutation& p);

/// {pi_1, pi_n} is {k, k+1} for n = 2k, or one of {k, k+1}, {k+1, k+2}
/// for n = 2k+1.
bool has_max_global_endpoints(const Permutation& p);

/// Maximum global variation over S_n: (n^2-2)/2 for even n, (n^2-3)/2 for
/// odd n. Requires n >= 2.
std::int64_t delta_star(int n);

/// Alternative odd-order closed form (3n^2-6n-13)/4, kept for reporting.
/// It disagrees with exhaustive search except at n = 7.
double delta_star_alt_odd(int n);

/// A maximizer of global variation: k, then alternately k+1+j and j,
/// ending with k+1 (k = floor(n/2)).
Permutation construct_max_global(int n);

/// The alternating permutation whose derivative is (1, -2, 3, -4, ...).
Permutation pi_perm(int k);

/// pi_perm(k) rotated a quarter turn counter-clockwise; always convex.
Permutation pi_star(int k);

/// A 1-Costas permutation with local variation ceil(n/2), assembled from
/// pi_perm blocks. Also minimizes global variation among 1-Costas
/// permutations.
Permutation construct_min_local_1costas(int n);

/// Minimum global variation over 1-Costas permutations: n^2/4 for even n,
/// (n^2-1)/4 + 1 for odd n. Requires n >= 2.
std::int64_t min_global_1costas(int n);

/// Alternative odd-order closed form (n-1)^2/4 + 1, kept for reporting.
/// It falls below what any 1-Costas permutation attains.
std::int64_t min_global_1costas_alt_odd(int n);

/// Attains max over S_n of min |D| = floor(n/2). Even n = 2k:
/// (k+1, 1, k+2, 2, ..., n, k); odd n: 1 followed by the order n-1
/// construction shifted up by one.
Permutation construct_maximin_abs(int n);

int maximin_abs_value(int n);

} // namespace permderiv
