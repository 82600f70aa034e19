#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permderiv/permutation.hpp"

namespace permderiv {

/// Derivative entries are non-decreasing.
bool is_convex(const Permutation& p);

/// The first k columns of an n x n subpermutation matrix, each holding
/// exactly one 1; the remaining columns are empty. Column j corresponds to
/// the value j, so the state records where the values 1..k sit.
class PartialColumnFill {
public:
    /// One filled column, its 1 in `row`.
    static PartialColumnFill start(int n, int row);
    /// First k columns of the matrix of `p`.
    static PartialColumnFill from_permutation(const Permutation& p, int k);

    int order() const noexcept { return n_; }
    int filled() const noexcept { return static_cast<int>(row_of_column_.size()); }
    std::span<const int> rows_by_column() const noexcept { return row_of_column_; }
    bool row_occupied(int row) const noexcept { return column_of_row_[row] != 0; }
    /// 0 when the row is empty.
    int column_in_row(int row) const noexcept { return column_of_row_[row]; }

    /// Fills the next column with a 1 in `row`. Throws Error(invalid_argument)
    /// if the row is occupied, out of range, or every column is filled.
    PartialColumnFill place(int row) const;

    /// Permutation for a completely filled state.
    Permutation to_permutation() const;

private:
    int n_ = 0;
    std::vector<int> row_of_column_;
    std::vector<int> column_of_row_; // index 0 unused
};

/// Rows containing a 1 in the filled columns, ascending.
std::vector<int> interval_rows(const PartialColumnFill& st);

/// Occupied rows form an interval r..s and the columns read down that
/// interval have non-decreasing consecutive differences.
bool is_k_convex(const PartialColumnFill& st);

/// The rows among {r-1, s+1} whose use for the next column keeps the state
/// convex. Throws Error(state_not_k_convex) if `st` is not k-convex.
std::vector<int> extension_rows(const PartialColumnFill& st);

/// Picks one row from a non-empty candidate list.
using RowChooser = std::function<int(std::span<const int> candidates, const PartialColumnFill&)>;

struct Algorithm1Result {
    std::optional<Permutation> permutation; // empty on failure
    PartialColumnFill state;                // state when the run ended
};

/// Column-by-column construction of a convex permutation matrix, starting
/// with a 1 in (start_row, 1) and asking `chooser` for each later column.
/// Fails when no extension row exists. Throws Error(invalid_argument) if the
/// chooser returns a row outside the candidates.
Algorithm1Result algorithm1(int n, int start_row, const RowChooser& chooser);

RowChooser first_candidate_chooser();
/// Replays a fixed list of rows for columns 2, 3, ...
RowChooser scripted_chooser(std::vector<int> rows);

/// The tree walk costs about n^3 steps; classify_convex has no such bound.
inline constexpr int kMaxConvexWalkOrder = 256;

/// Every completed leaf of the construction tree, sorted.
/// Throws Error(out_of_range) unless 1 <= n <= kMaxConvexWalkOrder.
std::vector<Permutation> enumerate_convex(int n);

/// Identity, (n, 1, ..., n-1), (n-1, 1, ..., n-2, n), pi_star(n) and their
/// reversals, deduplicated and sorted.
std::vector<Permutation> classify_convex(int n);

} // namespace permderiv
