#include "permderiv/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace permderiv {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::not_realizable: return "NotRealizable";
    case Errc::invalid_tree: return "InvalidTree";
    case Errc::inconsistent: return "Inconsistent";
    case Errc::duplicate_values: return "DuplicateValues";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_strictly_ordered: return "NotStrictlyOrdered";
    case Errc::state_not_k_convex: return "StateNotKConvex";
    case Errc::odd_order: return "OddOrder";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxOrder) {
        throw Error(Errc::out_of_range,
                    "order must lie in [1, " + std::to_string(kMaxOrder) + "], got " +
                        std::to_string(n));
    }
}

} // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const auto n = entries_.size();
    if (n == 0) throw Error(Errc::invalid_permutation, "permutation must be non-empty");
    if (n > static_cast<std::size_t>(kMaxOrder)) {
        throw Error(Errc::out_of_range, "permutation order exceeds limit");
    }
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw Error(Errc::invalid_permutation,
                        "entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        if (seen[v]) {
            throw Error(Errc::invalid_permutation, "entry " + std::to_string(v) + " repeated");
        }
        seen[v] = true;
    }
}

Permutation make_unchecked(std::vector<int> entries) {
    return Permutation(std::move(entries), Permutation::Trusted{});
}

Permutation Permutation::identity(int n) {
    check_order(n);
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return make_unchecked(std::move(e));
}

Permutation Permutation::anti_identity(int n) {
    check_order(n);
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = n - i;
    return make_unchecked(std::move(e));
}

Derivative::Derivative(const Permutation& p) {
    const auto e = p.entries();
    diffs_.reserve(e.size() - 1);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) diffs_.push_back(e[i + 1] - e[i]);
}

Derivative derivative(const Permutation& p) { return Derivative(p); }

bool SumCharacteristic::is_consecutive_with_zero(std::size_t count) const noexcept {
    if (values.size() != count || values.empty()) return false;
    // values are sorted and unique, so consecutiveness is a span check
    if (values.back() - values.front() != static_cast<std::int64_t>(count) - 1) return false;
    return values.front() <= 0 && values.back() >= 0;
}

SumCharacteristic sum_characteristic(std::span<const int> z) {
    SumCharacteristic s;
    s.values.reserve(z.size() + 1);
    s.values.push_back(0);
    std::int64_t run = 0;
    for (int d : z) {
        run += d;
        s.values.push_back(run);
    }
    std::sort(s.values.begin(), s.values.end());
    s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
    return s;
}

bool is_realizable(std::span<const int> z) {
    return sum_characteristic(z).is_consecutive_with_zero(z.size() + 1);
}

Permutation integrate(std::span<const int> z) {
    if (z.size() + 1 > static_cast<std::size_t>(kMaxOrder)) {
        throw Error(Errc::out_of_range, "derivative too long");
    }
    if (!is_realizable(z)) {
        throw Error(Errc::not_realizable,
                    "running sums are not n consecutive integers containing 0");
    }
    std::vector<std::int64_t> run(z.size() + 1, 0);
    for (std::size_t i = 0; i < z.size(); ++i) run[i + 1] = run[i] + z[i];
    const std::int64_t lowest = *std::min_element(run.begin(), run.end());
    std::vector<int> e(run.size());
    for (std::size_t i = 0; i < run.size(); ++i) e[i] = static_cast<int>(run[i] - lowest + 1);
    return make_unchecked(std::move(e));
}

Permutation realize_shift(int n, int s) {
    check_order(n);
    if (s < 0 || s > n - 1) {
        throw Error(Errc::out_of_range, "shift s must lie in [0, n-1]");
    }
    std::vector<int> e;
    e.reserve(n);
    e.push_back(s + 1);
    for (int v = 1; v <= s; ++v) e.push_back(v);
    for (int v = s + 2; v <= n; ++v) e.push_back(v);
    return make_unchecked(std::move(e));
}

Permutation from_tree(const WeightedTree& t) {
    const int n = t.n;
    check_order(n);
    if (t.edges.size() != static_cast<std::size_t>(n - 1)) {
        throw Error(Errc::invalid_tree, "a spanning tree on " + std::to_string(n) +
                                            " vertices has " + std::to_string(n - 1) + " edges");
    }
    struct Arc {
        int to;
        std::int64_t w;
    };
    std::vector<std::vector<Arc>> adj(n + 1);
    for (const auto& e : t.edges) {
        if (e.i < 1 || e.j > n || e.i >= e.j) {
            throw Error(Errc::invalid_tree, "edge {" + std::to_string(e.i) + "," +
                                                std::to_string(e.j) + "} needs 1 <= i < j <= n");
        }
        adj[e.i].push_back({e.j, e.w});
        adj[e.j].push_back({e.i, -e.w});
    }

    // n-1 edges plus connectivity implies acyclic
    std::vector<std::int64_t> value(n + 1, 0);
    std::vector<bool> seen(n + 1, false);
    std::queue<int> frontier;
    frontier.push(1);
    seen[1] = true;
    int reached = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (const auto& a : adj[u]) {
            if (seen[a.to]) continue;
            seen[a.to] = true;
            value[a.to] = value[u] + a.w;
            frontier.push(a.to);
            ++reached;
        }
    }
    if (reached != n) throw Error(Errc::invalid_tree, "edges do not connect all vertices");

    const std::int64_t lowest = *std::min_element(value.begin() + 1, value.end());
    std::vector<int> e(n);
    std::vector<bool> used(n + 1, false);
    for (int v = 1; v <= n; ++v) {
        const std::int64_t shifted = value[v] - lowest + 1;
        if (shifted > n || used[shifted]) {
            throw Error(Errc::inconsistent, "tree weights do not describe a permutation");
        }
        used[shifted] = true;
        e[v - 1] = static_cast<int>(shifted);
    }
    return make_unchecked(std::move(e));
}

WeightedTree path_tree(const Permutation& p) {
    WeightedTree t;
    t.n = p.order();
    for (int i = 1; i < t.n; ++i) t.edges.push_back({i, i + 1, p[i] - p[i - 1]});
    return t;
}

Permutation reverse(const Permutation& p) {
    std::vector<int> e(p.begin(), p.end());
    std::reverse(e.begin(), e.end());
    return make_unchecked(std::move(e));
}

Permutation complement(const Permutation& p) {
    const int n = p.order();
    std::vector<int> e(p.begin(), p.end());
    for (int& v : e) v = n + 1 - v;
    return make_unchecked(std::move(e));
}

Permutation inverse(const Permutation& p) {
    const int n = p.order();
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[p[i] - 1] = i + 1;
    return make_unchecked(std::move(e));
}

// Counter-clockwise quarter turn: new(i, j) = old(j, n+1-i), so the new
// row i holds its 1 in the column j whose old row carries value n+1-i.
Permutation rotate90(const Permutation& p) {
    const int n = p.order();
    const Permutation inv = inverse(p);
    std::vector<int> e(n);
    for (int i = 1; i <= n; ++i) e[i - 1] = inv[n - i];
    return make_unchecked(std::move(e));
}

std::vector<Permutation> dihedral_orbit(const Permutation& p) {
    std::vector<Permutation> out;
    out.reserve(8);
    Permutation r = p;
    for (int turn = 0; turn < 4; ++turn) {
        out.push_back(r);
        out.push_back(reverse(r));
        r = rotate90(r);
    }
    return out;
}

int descent_count(const Permutation& p) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < p.entries().size(); ++i) c += p[i + 1] < p[i];
    return c;
}

bool is_grassmannian(const Permutation& p) { return descent_count(p) == 1; }

std::string render_matrix(const Permutation& p) {
    const int n = p.order();
    if (n > kMaxRenderOrder) {
        throw Error(Errc::out_of_range, "matrix rendering is limited to order " +
                                            std::to_string(kMaxRenderOrder));
    }
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ' ';
            out += (p[i] == j) ? '1' : '.';
        }
        out += '\n';
    }
    return out;
}

} // namespace permderiv
