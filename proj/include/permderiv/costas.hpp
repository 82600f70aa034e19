#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permderiv/permutation.hpp"
#include "permderiv/triangle.hpp"

namespace permderiv {

/// Rows 0..k of the difference triangle are repeat-free.
/// Throws Error(out_of_range) unless 0 <= k <= n-1.
bool is_k_costas(const Permutation& p, int k);
bool is_costas(const Permutation& p);

// Prefix predicates for the enumeration engine. Each assumes the prefix
// without its last entry already passed and checks only the new entry.
bool last_extends_one_costas(std::span<const int> prefix);
bool last_extends_costas(std::span<const int> prefix);

/// Partial 1-Costas placement, one row at a time. Limited to n <= 64.
class BuilderState {
public:
    static constexpr int kMaxOrder = 64;

    /// Throws Error(out_of_range) unless 1 <= first <= n <= 64.
    static BuilderState start(int n, int first);

    int order() const noexcept { return n_; }
    std::span<const int> prefix() const noexcept { return prefix_; }
    bool complete() const noexcept { return static_cast<int>(prefix_.size()) == n_; }

    bool column_used(int column) const noexcept { return columns_.test(column - 1); }
    bool diff_used(int d) const noexcept { return diffs_.test(d + kMaxOrder); }

    /// Throws Error(invalid_argument) if `column` is not permitted.
    BuilderState extend(int column) const;

private:
    int n_ = 0;
    std::vector<int> prefix_;
    std::bitset<kMaxOrder> columns_;
    std::bitset<2 * kMaxOrder> diffs_;
};

/// Columns that keep the consecutive differences distinct: unused, and
/// with a step from the last entry that has not occurred yet. Requires a
/// non-empty, incomplete prefix; may be empty.
std::vector<int> permitted_positions(const BuilderState& st);

/// Every permutation reachable by extending through permitted positions.
std::vector<Permutation> build_all_one_costas(int n);

struct MatrixPoint {
    int row;
    int col;
    friend bool operator==(const MatrixPoint&, const MatrixPoint&) = default;
};

/// Two segments of the permutation matrix with equal column displacement
/// and opposite row displacement: b-d = s-v and a-c = -(r-u).
struct JedwabWitness {
    MatrixPoint rs, uv, ab, cd;
    bool shares_points = false;
};

/// Lexicographically first witness over (r, u, a, c), or nullopt.
std::optional<JedwabWitness> jedwab_witness(const Permutation& p);

bool is_centrosymmetric(const Permutation& p);

/// Centrosymmetric, and for each k >= 1 the differences pi_{i+k} - pi_i
/// with i + k <= n + 1 - i are pairwise distinct. The skipped differences
/// repeat kept ones by symmetry.
bool is_costas_centrosymmetric(const Permutation& p);

/// Keeps the first n/2 entries and reverses the rest.
/// Throws Error(odd_order) for odd n.
Permutation reverse_second_half(const Permutation& p);

/// Nonzero entries whose absolute values form a permutation.
class SignedPermutation {
public:
    /// Throws Error(invalid_permutation) if |entries| is not a permutation.
    explicit SignedPermutation(std::vector<int> entries);

    int order() const noexcept { return static_cast<int>(entries_.size()); }
    std::span<const int> entries() const noexcept { return entries_; }
    Permutation magnitudes() const;

private:
    std::vector<int> entries_;
};

/// The triangle of the signed values (not of the magnitudes) has no
/// repeated value in any row.
bool is_costas_signed(const SignedPermutation& s);

/// Distinct values from {1..n} whose triangle rows are repeat-free.
bool is_costas_subpermutation(std::span<const std::int64_t> s, int n);

/// One value from each pair {i, 2m+1-i}, i = 1..m, and Costas as a
/// subpermutation of order 2m.
bool is_costas_half(std::span<const std::int64_t> s, int m);

struct GammaResult {
    int m = 0;
    std::vector<int> witness;
};

/// Largest m admitting a Costas m-subpermutation of order n, with the
/// lexicographically first witness. Requires 1 <= n <= 64.
GammaResult gamma(int n);

} // namespace permderiv
