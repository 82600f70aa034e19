#pragma once

// Self-checks bundled into the command-line tool so reference values can be
// confirmed without the test harness.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace permderiv {

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ReferenceCountRow {
    int n;
    std::uint64_t total;
    std::uint64_t count;
    const char* fraction;
};

/// Reference counts of permutations with distinct consecutive differences.
inline constexpr std::array<ReferenceCountRow, 10> kOneCostasReference{{
    {1, 1, 1, "100.0"},
    {2, 2, 2, "100.0"},
    {3, 6, 4, "66.7"},
    {4, 24, 12, "50.0"},
    {5, 120, 44, "36.7"},
    {6, 720, 176, "24.4"},
    {7, 5040, 788, "15.6"},
    {8, 40320, 3936, "9.8"},
    {9, 362880, 23264, "6.4"},
    {10, 3628800, 152112, "4.2"},
}};

/// Every worked example, one outcome each.
std::vector<CheckOutcome> verify_examples();

/// Recomputes the 1-Costas count table for n = 1..max_n and compares the
/// rows with reference values (rows beyond the reference range are
/// reported as computed and pass).
std::vector<CheckOutcome> verify_figure1(int max_n, int workers);

} // namespace permderiv
