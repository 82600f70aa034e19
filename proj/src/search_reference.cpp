#include "permderiv/search_reference.hpp"

#include <algorithm>
#include <numeric>

#include "search_detail.hpp"

namespace permderiv::reference {

SearchResult filter_all(const SearchSpec& spec) {
    detail::validate(spec, kMaxReferenceOrder);
    const int n = spec.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    detail::LeafSink sink(spec);
    do {
        bool ok = true;
        if (spec.prefix_ok) {
            for (int len = 1; len <= n && ok; ++len) {
                ok = spec.prefix_ok(std::span<const int>(perm.data(), len));
            }
        }
        if (ok && spec.accept) ok = spec.accept(perm);
        if (ok) sink.take(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::move(sink.result());
}

} // namespace permderiv::reference
