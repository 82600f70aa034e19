#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permderiv/permutation.hpp"

namespace permderiv {

/// Row k, entry i holds a_{i+k} - a_i for a base sequence of distinct
/// integers a_1..a_m. Row 0 is the base itself; the last row has one entry.
///
/// This is not the classical iterated difference table: every row-k entry
/// is the sum of the k consecutive row-1 entries beneath it.
class DifferenceTriangle {
public:
    /// Throws Error(duplicate_values) if the base repeats a value and
    /// Error(invalid_argument) if it is empty.
    explicit DifferenceTriangle(std::span<const std::int64_t> base);
    explicit DifferenceTriangle(const Permutation& p);

    std::size_t size() const noexcept { return rows_.size(); }
    std::span<const std::int64_t> base() const noexcept { return rows_.front(); }

    /// Throws Error(out_of_range) unless k < size().
    std::span<const std::int64_t> row(std::size_t k) const;

    bool row_has_repeat(std::size_t k) const;
    /// Rows 0..k are each repeat-free.
    bool distinct_through(std::size_t k) const;

    const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

DifferenceTriangle build_triangle(std::span<const std::int64_t> base);
DifferenceTriangle build_triangle(const Permutation& p);

enum class RenderMode { plain, staggered };

/// plain: one line per row, single spaces. staggered: right-aligned fields
/// of width (widest entry + 1), row k entry i in field k + 2i, giving the
/// diamond layout. Lines carry no trailing whitespace and end in '\n'.
std::string render(const DifferenceTriangle& t, RenderMode mode);

/// True iff the values are pairwise distinct.
bool all_distinct(std::span<const std::int64_t> values);

std::vector<std::int64_t> widen(std::span<const int> values);

} // namespace permderiv
