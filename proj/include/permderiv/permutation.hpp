#pragma once

// Permutations of {1..n}, their discrete derivative and the inverse
// operation (reconstruction from first-order differences or from any
// weighted spanning tree of pairwise differences).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permderiv/error.hpp"

namespace permderiv {

/// Largest order accepted by constructions.
inline constexpr int kMaxOrder = 1'000'000;
/// Largest order accepted by matrix rendering.
inline constexpr int kMaxRenderOrder = 64;

/// A bijection of {1..n}, stored as its one-line form.
///
/// Entries are 1-based values; `operator[]` takes a 0-based position like
/// any standard container.
class Permutation {
public:
    /// Throws Error(invalid_permutation) unless `entries` is a bijection of
    /// {1..entries.size()} with at least one entry.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);
    static Permutation anti_identity(int n);

    int order() const noexcept { return static_cast<int>(entries_.size()); }
    std::span<const int> entries() const noexcept { return entries_; }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Trusted {};
    Permutation(std::vector<int> entries, Trusted) : entries_(std::move(entries)) {}
    friend Permutation make_unchecked(std::vector<int> entries);

    std::vector<int> entries_;
};

/// Builds a Permutation without validation. Only for internal constructions
/// whose output is a bijection by construction.
Permutation make_unchecked(std::vector<int> entries);

/// First-order differences of a permutation, entry i is pi_{i+1} - pi_i.
class Derivative {
public:
    explicit Derivative(const Permutation& p);

    int order() const noexcept { return static_cast<int>(diffs_.size()) + 1; }
    std::span<const int> diffs() const noexcept { return diffs_; }
    std::size_t size() const noexcept { return diffs_.size(); }
    int operator[](std::size_t i) const noexcept { return diffs_[i]; }

    friend bool operator==(const Derivative&, const Derivative&) = default;

private:
    std::vector<int> diffs_;
};

Derivative derivative(const Permutation& p);

/// {0} together with every running sum z_1 + ... + z_i, sorted ascending.
struct SumCharacteristic {
    std::vector<std::int64_t> values;

    /// True when the values are `count` consecutive integers containing 0.
    bool is_consecutive_with_zero(std::size_t count) const noexcept;
};

SumCharacteristic sum_characteristic(std::span<const int> z);

/// True iff `z` is the derivative of some permutation of order |z| + 1.
bool is_realizable(std::span<const int> z);

/// Reconstructs the unique permutation with derivative `z`.
/// Throws Error(not_realizable) when no such permutation exists.
Permutation integrate(std::span<const int> z);

/// The permutation (s+1, 1, 2, ..., s, s+2, ..., n), whose sum
/// characteristic is {-s, ..., n-s-1}. Requires 0 <= s <= n-1.
Permutation realize_shift(int n, int s);

struct TreeEdge {
    int i;          // 1-based, i < j
    int j;
    std::int64_t w; // pi_j - pi_i
};

struct WeightedTree {
    int n = 0;
    std::vector<TreeEdge> edges;
};

/// Recovers a permutation from a spanning tree of K_n weighted by pairwise
/// differences. Throws Error(invalid_tree) if the edges are not a spanning
/// tree and Error(inconsistent) if the weights do not fit any permutation.
Permutation from_tree(const WeightedTree& t);

/// The path tree {i, i+1} carrying the derivative of `p` as weights.
WeightedTree path_tree(const Permutation& p);

// D_4 action on the matrix view together with the inverse.
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation rotate90(const Permutation& p);

/// All images of `p` under the eight symmetries of the square.
std::vector<Permutation> dihedral_orbit(const Permutation& p);

int descent_count(const Permutation& p);
bool is_grassmannian(const Permutation& p);

/// Rows of the permutation matrix, '1' at (i, pi_i) and '.' elsewhere.
/// Throws Error(out_of_range) for orders above kMaxRenderOrder.
std::string render_matrix(const Permutation& p);

} // namespace permderiv
