#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "permderiv/permutation.hpp"

namespace testing {

// S_n in lexicographic order, straight from next_permutation
inline std::vector<permderiv::Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<permderiv::Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline permderiv::Permutation P(std::vector<int> v) { return permderiv::Permutation(std::move(v)); }

inline std::vector<int> vec(const permderiv::Permutation& p) { return {p.begin(), p.end()}; }

inline std::vector<int> diffs(const permderiv::Permutation& p) {
    const auto d = permderiv::derivative(p);
    return {d.diffs().begin(), d.diffs().end()};
}

} // namespace testing
