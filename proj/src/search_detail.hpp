#pragma once

#include "permderiv/search.hpp"

namespace permderiv::detail {

void validate(const SearchSpec& spec, int max_order);

// Folds accepted leaves into a SearchResult according to the mode.
class LeafSink {
public:
    explicit LeafSink(const SearchSpec& spec) : spec_(spec) {}

    void take(std::span<const int> leaf) {
        ++result_.count;
        if (std::holds_alternative<CollectMode>(spec_.mode)) {
            result_.items.push_back(make_unchecked({leaf.begin(), leaf.end()}));
        } else if (const auto* opt = std::get_if<OptimizeMode>(&spec_.mode)) {
            const std::int64_t v = opt->objective(leaf);
            if (!result_.best || better(*opt, v, result_.best->value)) {
                result_.best.emplace(Best{v, make_unchecked({leaf.begin(), leaf.end()})});
            }
        }
    }

    SearchResult& result() noexcept { return result_; }

    static bool better(const OptimizeMode& m, std::int64_t candidate, std::int64_t incumbent) {
        return m.direction == Direction::maximize ? candidate > incumbent : candidate < incumbent;
    }

private:
    const SearchSpec& spec_;
    SearchResult result_;
};

// Appends `part` to `into`; `part` covers lexicographically later leaves.
void merge_in_order(const SearchSpec& spec, SearchResult& into, SearchResult&& part);

} // namespace permderiv::detail
