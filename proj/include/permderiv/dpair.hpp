#pragma once

#include "permderiv/permutation.hpp"

namespace permderiv {

/// Two distinct derivative values. The pair is unordered for realization
/// and feasibility purposes; constructions report it as (a, -b).
struct DPair {
    int p;
    int q;
    friend bool operator==(const DPair&, const DPair&) = default;
};

/// The derivative of `perm` takes exactly the two values of `d`.
bool is_dpair_realization(const Permutation& perm, DPair d);

/// Opposite signs, coprime, and distinct magnitudes. These conditions are
/// necessary and sufficient for some permutation to realize the pair.
bool is_feasible_dpair(DPair d);

/// Permutation with derivative values {a, -b}. For a = 1 it is
/// (2, ..., b+1, 1); otherwise pi_i = 1 + (i-1)a reduced into {1..a+b}.
/// Throws Error(out_of_range) for a or b below 1, Error(not_strictly_ordered)
/// for a >= b, Error(not_coprime) when gcd(a, b) > 1.
Permutation construct_dpair(int a, int b);

/// (a', -(a+b-a')) with a * a' = 1 mod (a+b); realized by
/// inverse(construct_dpair(a, b)).
DPair inverse_dpair(int a, int b);

} // namespace permderiv
