#include "permderiv/triangle.hpp"

#include <algorithm>

namespace permderiv {

bool all_distinct(std::span<const std::int64_t> values) {
    std::vector<std::int64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<std::int64_t> widen(std::span<const int> values) {
    return {values.begin(), values.end()};
}

DifferenceTriangle::DifferenceTriangle(std::span<const std::int64_t> base) {
    if (base.empty()) throw Error(Errc::invalid_argument, "triangle base must be non-empty");
    if (!all_distinct(base)) throw Error(Errc::duplicate_values, "triangle base repeats a value");
    const std::size_t m = base.size();
    rows_.reserve(m);
    rows_.emplace_back(base.begin(), base.end());
    for (std::size_t k = 1; k < m; ++k) {
        std::vector<std::int64_t> r(m - k);
        for (std::size_t i = 0; i + k < m; ++i) r[i] = base[i + k] - base[i];
        rows_.push_back(std::move(r));
    }
}

DifferenceTriangle::DifferenceTriangle(const Permutation& p)
    : DifferenceTriangle(widen(p.entries())) {}

std::span<const std::int64_t> DifferenceTriangle::row(std::size_t k) const {
    if (k >= rows_.size()) {
        throw Error(Errc::out_of_range, "row " + std::to_string(k) + " outside 0.." +
                                            std::to_string(rows_.size() - 1));
    }
    return rows_[k];
}

bool DifferenceTriangle::row_has_repeat(std::size_t k) const { return !all_distinct(row(k)); }

bool DifferenceTriangle::distinct_through(std::size_t k) const {
    row(k); // range check
    for (std::size_t j = 0; j <= k; ++j) {
        if (!all_distinct(rows_[j])) return false;
    }
    return true;
}

DifferenceTriangle build_triangle(std::span<const std::int64_t> base) {
    return DifferenceTriangle(base);
}

DifferenceTriangle build_triangle(const Permutation& p) { return DifferenceTriangle(p); }

std::string render(const DifferenceTriangle& t, RenderMode mode) {
    std::string out;
    if (mode == RenderMode::plain) {
        for (const auto& r : t.rows()) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(r[i]);
            }
            out += '\n';
        }
        return out;
    }

    std::size_t widest = 0;
    for (const auto& r : t.rows()) {
        for (auto v : r) widest = std::max(widest, std::to_string(v).size());
    }
    const std::size_t w = widest + 1;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const auto& r = t.rows()[k];
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const std::size_t field = k + 2 * i;
            const std::string s = std::to_string(r[i]);
            line.resize(field * w, ' ');
            line.append(w - s.size(), ' ');
            line += s;
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace permderiv
