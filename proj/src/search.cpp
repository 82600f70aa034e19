#include "permderiv/search.hpp"

#include <cstdint>
#include <exception>

#include <omp.h>

#include "permderiv/convexity.hpp"
#include "permderiv/costas.hpp"
#include "search_detail.hpp"

namespace permderiv {

namespace detail {

void validate(const SearchSpec& spec, int max_order) {
    if (spec.n < 1 || spec.n > max_order) {
        throw Error(Errc::out_of_range,
                    "search order must lie in [1, " + std::to_string(max_order) + "]");
    }
    if (const auto* opt = std::get_if<OptimizeMode>(&spec.mode); opt && !opt->objective) {
        throw Error(Errc::invalid_argument, "optimize mode needs an objective");
    }
}

void merge_in_order(const SearchSpec& spec, SearchResult& into, SearchResult&& part) {
    into.count += part.count;
    if (std::holds_alternative<CollectMode>(spec.mode)) {
        into.items.insert(into.items.end(), std::make_move_iterator(part.items.begin()),
                          std::make_move_iterator(part.items.end()));
    } else if (const auto* opt = std::get_if<OptimizeMode>(&spec.mode)) {
        if (part.best && (!into.best || LeafSink::better(*opt, part.best->value, into.best->value))) {
            into.best = std::move(part.best);
        }
    }
}

} // namespace detail

namespace {

// Depth-first search below a fixed first entry.
class SubtreeKernel {
public:
    SubtreeKernel(const SearchSpec& spec, detail::LeafSink& sink)
        : spec_(spec), sink_(sink), prefix_(spec.n) {}

    void run(int first) {
        prefix_[0] = first;
        if (!ok(1)) return;
        descend(1, std::uint32_t{1} << (first - 1));
    }

private:
    bool ok(int len) const {
        return !spec_.prefix_ok || spec_.prefix_ok(std::span<const int>(prefix_.data(), len));
    }

    void descend(int len, std::uint32_t used) {
        const int n = spec_.n;
        if (len == n) {
            const std::span<const int> leaf(prefix_.data(), n);
            if (!spec_.accept || spec_.accept(leaf)) sink_.take(leaf);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << (v - 1);
            if (used & bit) continue;
            prefix_[len] = v;
            if (ok(len + 1)) descend(len + 1, used | bit);
        }
    }

    const SearchSpec& spec_;
    detail::LeafSink& sink_;
    std::vector<int> prefix_;
};

} // namespace

SearchResult enumerate(const SearchSpec& spec, int workers) {
    detail::validate(spec, kMaxSearchOrder);
    if (workers < 1) throw Error(Errc::invalid_argument, "workers must be >= 1");

    const int n = spec.n;
    std::vector<SearchResult> parts(n);
    std::vector<std::exception_ptr> failures(n);

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (int first = 1; first <= n; ++first) {
        try {
            detail::LeafSink sink(spec);
            SubtreeKernel(spec, sink).run(first);
            parts[first - 1] = std::move(sink.result());
        } catch (...) {
            failures[first - 1] = std::current_exception();
        }
    }

    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    SearchResult total;
    for (auto& part : parts) detail::merge_in_order(spec, total, std::move(part));
    return total;
}

SearchSpec one_costas_spec(int n) {
    SearchSpec spec;
    spec.n = n;
    spec.prefix_ok = last_extends_one_costas;
    return spec;
}

SearchSpec costas_spec(int n) {
    SearchSpec spec;
    spec.n = n;
    spec.prefix_ok = last_extends_costas;
    return spec;
}

std::string CountRow::fraction_text() const {
    return std::to_string(fraction_tenths / 10) + "." + std::to_string(fraction_tenths % 10);
}

namespace {
__extension__ using u128 = unsigned __int128;
} // namespace

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw Error(Errc::out_of_range, "factorial argument outside [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

CountRow make_count_row(int n, std::uint64_t count) {
    CountRow row;
    row.n = n;
    row.total = factorial(n);
    if (count > row.total) throw Error(Errc::invalid_argument, "count exceeds n!");
    row.count = count;
    // round half-up: floor(1000 * count / total + 1/2)
    const u128 num = static_cast<u128>(count) * 2000 + row.total;
    row.fraction_tenths = static_cast<std::int64_t>(num / (static_cast<u128>(row.total) * 2));
    return row;
}

namespace {

void check_count_order(int n, int max_order, const char* what) {
    if (n < 1 || n > max_order) {
        throw Error(Errc::out_of_range, std::string(what) + " counts are limited to 1 <= n <= " +
                                            std::to_string(max_order));
    }
}

} // namespace

CountRow count_one_costas(int n, int workers) {
    check_count_order(n, kMaxOneCostasCountOrder, "1-Costas");
    return make_count_row(n, enumerate(one_costas_spec(n), workers).count);
}

std::uint64_t count_costas(int n, int workers) {
    check_count_order(n, kMaxCostasCountOrder, "Costas");
    return enumerate(costas_spec(n), workers).count;
}

std::vector<CountRow> table(TableKind kind, int n_max, int workers) {
    if (n_max < 1) throw Error(Errc::out_of_range, "max-n must be >= 1");
    std::vector<CountRow> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        switch (kind) {
        case TableKind::one_costas:
            rows.push_back(count_one_costas(n, workers));
            break;
        case TableKind::costas:
            rows.push_back(make_count_row(n, count_costas(n, workers)));
            break;
        case TableKind::convex:
            check_count_order(n, kMaxSearchOrder, "convex");
            rows.push_back(make_count_row(n, enumerate_convex(n).size()));
            break;
        }
    }
    return rows;
}

} // namespace permderiv
