#include "permderiv/convexity.hpp"

#include <algorithm>
#include <set>

#include "permderiv/variation.hpp"

namespace permderiv {

bool is_convex(const Permutation& p) {
    const auto d = derivative(p);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] > d[i + 1]) return false;
    }
    return true;
}

PartialColumnFill PartialColumnFill::start(int n, int row) {
    if (n < 1 || n > kMaxOrder) throw Error(Errc::out_of_range, "order outside limits");
    PartialColumnFill st;
    st.n_ = n;
    st.column_of_row_.assign(n + 1, 0);
    return st.place(row);
}

PartialColumnFill PartialColumnFill::from_permutation(const Permutation& p, int k) {
    const int n = p.order();
    if (k < 1 || k > n) throw Error(Errc::out_of_range, "k must lie in [1, n]");
    const Permutation inv = inverse(p);
    PartialColumnFill st = start(n, inv[0]);
    for (int j = 2; j <= k; ++j) st = st.place(inv[j - 1]);
    return st;
}

PartialColumnFill PartialColumnFill::place(int row) const {
    if (filled() == n_) throw Error(Errc::invalid_argument, "all columns are filled");
    if (row < 1 || row > n_) throw Error(Errc::invalid_argument, "row outside 1..n");
    if (row_occupied(row)) {
        throw Error(Errc::invalid_argument, "row " + std::to_string(row) + " already occupied");
    }
    PartialColumnFill next = *this;
    next.row_of_column_.push_back(row);
    next.column_of_row_[row] = next.filled();
    return next;
}

Permutation PartialColumnFill::to_permutation() const {
    if (filled() != n_) throw Error(Errc::invalid_argument, "state is not complete");
    return make_unchecked({column_of_row_.begin() + 1, column_of_row_.end()});
}

std::vector<int> interval_rows(const PartialColumnFill& st) {
    std::vector<int> rows(st.rows_by_column().begin(), st.rows_by_column().end());
    std::sort(rows.begin(), rows.end());
    return rows;
}

bool is_k_convex(const PartialColumnFill& st) {
    if (st.filled() == 0) return false;
    const auto rows = interval_rows(st);
    const int r = rows.front();
    const int s = rows.back();
    if (s - r + 1 != st.filled()) return false;
    for (int i = r; i + 2 <= s; ++i) {
        const int left = st.column_in_row(i + 1) - st.column_in_row(i);
        const int right = st.column_in_row(i + 2) - st.column_in_row(i + 1);
        if (left > right) return false;
    }
    return true;
}

std::vector<int> extension_rows(const PartialColumnFill& st) {
    if (!is_k_convex(st)) {
        throw Error(Errc::state_not_k_convex, "extension rows need a k-convex state");
    }
    std::vector<int> out;
    if (st.filled() == st.order()) return out;
    const auto rows = interval_rows(st);
    const int r = rows.front();
    const int s = rows.back();
    if (r > 1 && is_k_convex(st.place(r - 1))) out.push_back(r - 1);
    if (s < st.order() && is_k_convex(st.place(s + 1))) out.push_back(s + 1);
    return out;
}

Algorithm1Result algorithm1(int n, int start_row, const RowChooser& chooser) {
    PartialColumnFill st = PartialColumnFill::start(n, start_row);
    while (st.filled() < n) {
        const auto candidates = extension_rows(st);
        if (candidates.empty()) return {std::nullopt, st};
        const int row = chooser(candidates, st);
        if (std::find(candidates.begin(), candidates.end(), row) == candidates.end()) {
            throw Error(Errc::invalid_argument,
                        "chooser returned row " + std::to_string(row) + " outside I*_k");
        }
        st = st.place(row);
    }
    return {st.to_permutation(), st};
}

RowChooser first_candidate_chooser() {
    return [](std::span<const int> candidates, const PartialColumnFill&) {
        return candidates.front();
    };
}

RowChooser scripted_chooser(std::vector<int> rows) {
    return [rows = std::move(rows)](std::span<const int>, const PartialColumnFill& st) {
        const auto idx = static_cast<std::size_t>(st.filled() - 1);
        if (idx >= rows.size()) throw Error(Errc::invalid_argument, "script exhausted");
        return rows[idx];
    };
}

namespace {

void walk(const PartialColumnFill& st, std::vector<Permutation>& out) {
    if (st.filled() == st.order()) {
        out.push_back(st.to_permutation());
        return;
    }
    for (int row : extension_rows(st)) walk(st.place(row), out);
}

} // namespace

std::vector<Permutation> enumerate_convex(int n) {
    if (n < 1 || n > kMaxConvexWalkOrder) {
        throw Error(Errc::out_of_range,
                    "convex enumeration is limited to 1 <= n <= " + std::to_string(kMaxConvexWalkOrder));
    }
    std::vector<Permutation> out;
    for (int row = 1; row <= n; ++row) walk(PartialColumnFill::start(n, row), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Permutation> classify_convex(int n) {
    if (n < 1 || n > kMaxOrder) throw Error(Errc::out_of_range, "order outside limits");
    std::set<Permutation> found;
    auto add = [&](const Permutation& p) {
        found.insert(p);
        found.insert(reverse(p));
    };
    add(Permutation::identity(n));

    std::vector<int> rotated{n};
    for (int v = 1; v < n; ++v) rotated.push_back(v);
    add(make_unchecked(std::move(rotated)));

    if (n >= 2) {
        std::vector<int> fam{n - 1};
        for (int v = 1; v <= n - 2; ++v) fam.push_back(v);
        fam.push_back(n);
        add(make_unchecked(std::move(fam)));
    }
    add(pi_star(n));
    return {found.begin(), found.end()};
}

} // namespace permderiv
