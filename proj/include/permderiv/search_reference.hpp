#pragma once

// Serial reference for the enumeration engine: visits all n! permutations
// with std::next_permutation and keeps those whose every prefix passes
// prefix_ok and which pass accept. No pruning and no threads. Used by the
// tests as the oracle for enumerate() and by the benchmark as its baseline.

#include "permderiv/search.hpp"

namespace permderiv::reference {

inline constexpr int kMaxReferenceOrder = 11;

SearchResult filter_all(const SearchSpec& spec);

} // namespace permderiv::reference
