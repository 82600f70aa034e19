#pragma once

// Exact enumeration over S_n with prefix pruning.
//
// The search places values left to right, in increasing order at every
// position, so results are produced in lexicographic order. Work is split by
// the first entry across OpenMP threads; per-subtree results are merged in
// first-entry order, which makes every result independent of the worker
// count.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "permderiv/permutation.hpp"

namespace permderiv {

/// Called on each extended prefix. It may assume the prefix minus its last
/// entry was accepted, and must be hereditary: once false, no extension of
/// the prefix can be a result.
using PrefixPredicate = std::function<bool(std::span<const int>)>;
using LeafPredicate = std::function<bool(std::span<const int>)>;
using Objective = std::function<std::int64_t(std::span<const int>)>;

enum class Direction { maximize, minimize };

struct CountMode {};
struct CollectMode {};
struct OptimizeMode {
    Objective objective;
    Direction direction = Direction::maximize;
};
using SearchMode = std::variant<CountMode, CollectMode, OptimizeMode>;

/// Empty predicates accept everything.
struct SearchSpec {
    int n = 1;
    PrefixPredicate prefix_ok;
    LeafPredicate accept;
    SearchMode mode = CountMode{};
};

inline constexpr int kMaxSearchOrder = 20;

struct Best {
    std::int64_t value;
    Permutation witness; // first in lexicographic order
};

struct SearchResult {
    std::uint64_t count = 0;          // accepted leaves, in every mode
    std::vector<Permutation> items;   // collect mode, lexicographic
    std::optional<Best> best;         // optimize mode
};

/// Throws Error(out_of_range) unless 1 <= n <= kMaxSearchOrder, and
/// Error(invalid_argument) for workers < 1 or a missing objective.
SearchResult enumerate(const SearchSpec& spec, int workers = 1);

SearchSpec one_costas_spec(int n);
SearchSpec costas_spec(int n);

/// One row of a count table: count out of n!, with the percentage
/// 100 * count / n! rounded half-up to one decimal.
struct CountRow {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t count = 0;
    std::int64_t fraction_tenths = 0;

    double fraction() const noexcept { return static_cast<double>(fraction_tenths) / 10.0; }
    /// "66.7", "100.0"
    std::string fraction_text() const;
};

std::uint64_t factorial(int n);
CountRow make_count_row(int n, std::uint64_t count);

inline constexpr int kMaxOneCostasCountOrder = 12;
inline constexpr int kMaxCostasCountOrder = 12;

/// Permutations with distinct consecutive differences, pruned through the
/// incremental 1-Costas builder.
CountRow count_one_costas(int n, int workers = 1);
std::uint64_t count_costas(int n, int workers = 1);

enum class TableKind { one_costas, costas, convex };

/// Rows for n = 1..n_max.
std::vector<CountRow> table(TableKind kind, int n_max, int workers = 1);

} // namespace permderiv
