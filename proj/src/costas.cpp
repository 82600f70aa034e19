#include "permderiv/costas.hpp"

#include <algorithm>

namespace permderiv {

namespace {

// Distinctness check for small integer ranges reused across rows.
class StampSet {
public:
    explicit StampSet(std::int64_t lo, std::int64_t hi) : lo_(lo), marks_(hi - lo + 1, 0) {}

    void next_round() noexcept { ++stamp_; }

    // false if the value was already present this round
    bool insert(std::int64_t v) noexcept {
        auto& m = marks_[v - lo_];
        if (m == stamp_) return false;
        m = stamp_;
        return true;
    }

private:
    std::int64_t lo_;
    std::vector<unsigned> marks_;
    unsigned stamp_ = 1;
};

} // namespace

bool is_k_costas(const Permutation& p, int k) {
    const int n = p.order();
    if (k < 0 || k > n - 1) {
        throw Error(Errc::out_of_range, "k must lie in [0, n-1]");
    }
    StampSet seen(-(n - 1), n - 1);
    for (int row = 1; row <= k; ++row) {
        seen.next_round();
        for (int i = 0; i + row < n; ++i) {
            if (!seen.insert(p[i + row] - p[i])) return false;
        }
    }
    return true;
}

bool is_costas(const Permutation& p) { return is_k_costas(p, p.order() - 1); }

bool last_extends_one_costas(std::span<const int> prefix) {
    const std::size_t len = prefix.size();
    if (len < 3) return true;
    const int fresh = prefix[len - 1] - prefix[len - 2];
    for (std::size_t i = 0; i + 2 < len; ++i) {
        if (prefix[i + 1] - prefix[i] == fresh) return false;
    }
    return true;
}

bool last_extends_costas(std::span<const int> prefix) {
    const std::size_t len = prefix.size();
    if (len < 3) return true;
    const int last = prefix[len - 1];
    // row k gains last - prefix[len-1-k]; compare with the older row-k entries
    for (std::size_t k = 1; k + 1 < len; ++k) {
        const int fresh = last - prefix[len - 1 - k];
        for (std::size_t i = 0; i + k < len - 1; ++i) {
            if (prefix[i + k] - prefix[i] == fresh) return false;
        }
    }
    return true;
}

BuilderState BuilderState::start(int n, int first) {
    if (n < 1 || n > kMaxOrder) {
        throw Error(Errc::out_of_range, "builder order must lie in [1, 64]");
    }
    if (first < 1 || first > n) throw Error(Errc::out_of_range, "first column outside 1..n");
    BuilderState st;
    st.n_ = n;
    st.prefix_.reserve(n);
    st.prefix_.push_back(first);
    st.columns_.set(first - 1);
    return st;
}

BuilderState BuilderState::extend(int column) const {
    if (complete()) throw Error(Errc::invalid_argument, "builder state is already complete");
    if (column < 1 || column > n_ || column_used(column)) {
        throw Error(Errc::invalid_argument, "column " + std::to_string(column) + " unavailable");
    }
    const int d = column - prefix_.back();
    if (diff_used(d)) {
        throw Error(Errc::invalid_argument, "difference " + std::to_string(d) + " already used");
    }
    BuilderState next = *this;
    next.prefix_.push_back(column);
    next.columns_.set(column - 1);
    next.diffs_.set(d + kMaxOrder);
    return next;
}

std::vector<int> permitted_positions(const BuilderState& st) {
    std::vector<int> out;
    if (st.prefix().empty() || st.complete()) return out;
    const int last = st.prefix().back();
    for (int j = 1; j <= st.order(); ++j) {
        if (!st.column_used(j) && !st.diff_used(j - last)) out.push_back(j);
    }
    return out;
}

namespace {

void grow(const BuilderState& st, std::vector<Permutation>& out) {
    if (st.complete()) {
        out.push_back(make_unchecked({st.prefix().begin(), st.prefix().end()}));
        return;
    }
    for (int j : permitted_positions(st)) grow(st.extend(j), out);
}

} // namespace

std::vector<Permutation> build_all_one_costas(int n) {
    std::vector<Permutation> out;
    for (int first = 1; first <= n; ++first) grow(BuilderState::start(n, first), out);
    return out;
}

std::optional<JedwabWitness> jedwab_witness(const Permutation& p) {
    const int n = p.order();
    auto point = [&](int row) { return MatrixPoint{row, p[row - 1]}; };
    for (int r = 1; r <= n; ++r) {
        for (int u = 1; u <= n; ++u) {
            if (u == r) continue;
            const int rows = u - r;               // a - c
            const int cols = p[r - 1] - p[u - 1]; // b - d
            for (int a = std::max(1, 1 + rows); a <= std::min(n, n + rows); ++a) {
                const int c = a - rows;
                if (p[a - 1] - p[c - 1] != cols) continue;
                JedwabWitness w{point(r), point(u), point(a), point(c)};
                const MatrixPoint first[] = {w.rs, w.uv};
                for (const auto& q : first) {
                    w.shares_points = w.shares_points || q == w.ab || q == w.cd;
                }
                return w;
            }
        }
    }
    return std::nullopt;
}

bool is_centrosymmetric(const Permutation& p) {
    const int n = p.order();
    for (int k = 0; k < n; ++k) {
        if (p[k] + p[n - 1 - k] != n + 1) return false;
    }
    return true;
}

bool is_costas_centrosymmetric(const Permutation& p) {
    if (!is_centrosymmetric(p)) return false;
    const int n = p.order();
    StampSet seen(-(n - 1), n - 1);
    for (int k = 1; k < n; ++k) {
        seen.next_round();
        // 1-based i with i + k <= n + 1 - i
        for (int i = 1; 2 * i + k <= n + 1; ++i) {
            if (!seen.insert(p[i + k - 1] - p[i - 1])) return false;
        }
    }
    return true;
}

Permutation reverse_second_half(const Permutation& p) {
    const int n = p.order();
    if (n % 2 != 0) throw Error(Errc::odd_order, "reverse_second_half needs even order");
    std::vector<int> e(p.begin(), p.end());
    std::reverse(e.begin() + n / 2, e.end());
    return make_unchecked(std::move(e));
}

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<int> mags(entries_.size());
    std::transform(entries_.begin(), entries_.end(), mags.begin(),
                   [](int v) { return v < 0 ? -v : v; });
    Permutation check(std::move(mags)); // throws on zeros, repeats, range
}

Permutation SignedPermutation::magnitudes() const {
    std::vector<int> mags(entries_.size());
    std::transform(entries_.begin(), entries_.end(), mags.begin(),
                   [](int v) { return v < 0 ? -v : v; });
    return make_unchecked(std::move(mags));
}

namespace {

bool triangle_rows_distinct(std::span<const std::int64_t> base) {
    if (base.empty() || !all_distinct(base)) return false;
    const DifferenceTriangle t(base);
    return t.distinct_through(t.size() - 1);
}

} // namespace

bool is_costas_signed(const SignedPermutation& s) {
    return triangle_rows_distinct(widen(s.entries()));
}

bool is_costas_subpermutation(std::span<const std::int64_t> s, int n) {
    if (std::any_of(s.begin(), s.end(), [n](std::int64_t v) { return v < 1 || v > n; })) {
        return false;
    }
    return triangle_rows_distinct(s);
}

bool is_costas_half(std::span<const std::int64_t> s, int m) {
    if (m < 1 || s.size() != static_cast<std::size_t>(m)) return false;
    std::vector<bool> covered(m + 1, false);
    for (auto v : s) {
        if (v < 1 || v > 2 * m) return false;
        const auto pair = std::min<std::int64_t>(v, 2 * m + 1 - v);
        if (covered[pair]) return false;
        covered[pair] = true;
    }
    return is_costas_subpermutation(s, 2 * m);
}

namespace {

// Depth-first search for a Costas subpermutation of fixed length, values
// tried in increasing order. rows[k] marks the differences in row k.
class SubpermSearch {
public:
    SubpermSearch(int n, int m)
        : n_(n), m_(m), used_(n + 1, false),
          rows_(m, std::vector<bool>(2 * n + 1, false)) {}

    bool run() { return step(); }
    const std::vector<int>& found() const noexcept { return seq_; }

private:
    bool step() {
        if (static_cast<int>(seq_.size()) == m_) return true;
        const std::size_t len = seq_.size();
        for (int v = 1; v <= n_; ++v) {
            if (used_[v]) continue;
            bool fresh = true;
            for (std::size_t k = 1; k <= len && fresh; ++k) {
                fresh = !rows_[k][v - seq_[len - k] + n_];
            }
            if (!fresh) continue;
            for (std::size_t k = 1; k <= len; ++k) rows_[k][v - seq_[len - k] + n_] = true;
            used_[v] = true;
            seq_.push_back(v);
            if (step()) return true;
            seq_.pop_back();
            used_[v] = false;
            for (std::size_t k = 1; k <= len; ++k) rows_[k][v - seq_[len - k] + n_] = false;
        }
        return false;
    }

    int n_;
    int m_;
    std::vector<bool> used_;
    std::vector<std::vector<bool>> rows_;
    std::vector<int> seq_;
};

} // namespace

GammaResult gamma(int n) {
    if (n < 1 || n > 64) throw Error(Errc::out_of_range, "gamma order must lie in [1, 64]");
    for (int m = n; m >= 1; --m) {
        SubpermSearch search(n, m);
        if (search.run()) return {m, search.found()};
    }
    return {1, {1}}; // unreachable: a single value always qualifies
}

} // namespace permderiv
