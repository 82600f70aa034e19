#include "permderiv/variation.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace permderiv {

namespace {

void check_construct_order(int n, int lowest) {
    if (n < lowest || n > kMaxOrder) {
        throw Error(Errc::out_of_range, "order must lie in [" + std::to_string(lowest) + ", " +
                                            std::to_string(kMaxOrder) + "]");
    }
}

} // namespace

int local_variation(const Permutation& p) {
    int best = 0;
    for (const Derivative d_ = derivative(p); int d : d_.diffs()) best = std::max(best, std::abs(d));
    return best;
}

std::int64_t global_variation(const Permutation& p) {
    std::int64_t sum = 0;
    for (const Derivative d_ = derivative(p); int d : d_.diffs()) sum += std::abs(d);
    return sum;
}

int min_abs_derivative(const Permutation& p) {
    if (p.order() < 2) return 0;
    int best = std::numeric_limits<int>::max();
    for (const Derivative d_ = derivative(p); int d : d_.diffs()) best = std::min(best, std::abs(d));
    return best;
}

bool is_lipschitz(const Permutation& p, int lipschitz) {
    if (lipschitz < 1) throw Error(Errc::invalid_argument, "Lipschitz constant must be >= 1");
    return local_variation(p) <= lipschitz;
}

bool is_mid_alternating(const Permutation& p) {
    const int n = p.order();
    const int k = n / 2;
    // even: low means <= k, high means >= k+1; odd: the pivot k+1 is both
    const int low_max = (n % 2 == 0) ? k : k + 1;
    const int high_min = k + 1;
    for (int i = 0; i + 1 < n; ++i) {
        const int x = p[i];
        const int y = p[i + 1];
        const bool up = x <= low_max && y >= high_min;
        const bool down = x >= high_min && y <= low_max;
        if (!up && !down) return false;
    }
    return true;
}

bool has_max_global_endpoints(const Permutation& p) {
    const int n = p.order();
    const int lo = std::min(p[0], p[n - 1]);
    const int hi = std::max(p[0], p[n - 1]);
    if (n % 2 == 0) return lo == n / 2 && hi == n / 2 + 1;
    const int k = n / 2;
    return (lo == k && hi == k + 1) || (lo == k + 1 && hi == k + 2);
}

std::int64_t delta_star(int n) {
    check_construct_order(n, 2);
    const std::int64_t sq = static_cast<std::int64_t>(n) * n;
    return (n % 2 == 0) ? (sq - 2) / 2 : (sq - 3) / 2;
}

double delta_star_alt_odd(int n) {
    const double x = n;
    return (3 * x * x - 6 * x - 13) / 4;
}

Permutation construct_max_global(int n) {
    check_construct_order(n, 2);
    const int k = n / 2;
    std::vector<int> e;
    e.reserve(n);
    e.push_back(k);
    for (int pos = 2; pos < n; ++pos) {
        const int j = pos / 2;
        e.push_back(pos % 2 == 0 ? k + 1 + j : j);
    }
    e.push_back(k + 1);
    return make_unchecked(std::move(e));
}

Permutation pi_perm(int k) {
    check_construct_order(k, 1);
    std::vector<int> e;
    e.reserve(k);
    int v = (k + 1) / 2;
    e.push_back(v);
    for (int step = 1; step < k; ++step) {
        v += (step % 2 == 1) ? step : -step;
        e.push_back(v);
    }
    return make_unchecked(std::move(e));
}

Permutation pi_star(int k) { return rotate90(pi_perm(k)); }

Permutation construct_min_local_1costas(int n) {
    check_construct_order(n, 2);
    const int k = n / 2;
    std::vector<int> e;
    e.reserve(n);
    if (n % 2 == 0) {
        // Pi_k on the diagonal, then its row-reversal shifted by k
        const Permutation block = pi_perm(k);
        e.assign(block.begin(), block.end());
        for (int i = k - 1; i >= 0; --i) e.push_back(k + block[i]);
        return make_unchecked(std::move(e));
    }
    // top-right (k+1)-block over bottom-left k-block; rows of the top block
    // are reversed, and for odd k both blocks also have columns reversed
    const Permutation top = pi_perm(k + 1);
    const Permutation bottom = pi_perm(k);
    const bool flip = (k % 2 == 1);
    for (int i = k; i >= 0; --i) {
        const int col = flip ? (k + 2 - top[i]) : top[i];
        e.push_back(k + col);
    }
    for (int i = 0; i < k; ++i) e.push_back(flip ? (k + 1 - bottom[i]) : bottom[i]);
    return make_unchecked(std::move(e));
}

std::int64_t min_global_1costas(int n) {
    check_construct_order(n, 2);
    const std::int64_t sq = static_cast<std::int64_t>(n) * n;
    return (n % 2 == 0) ? sq / 4 : (sq - 1) / 4 + 1;
}

std::int64_t min_global_1costas_alt_odd(int n) {
    const std::int64_t m = n - 1;
    return m * m / 4 + 1;
}

Permutation construct_maximin_abs(int n) {
    check_construct_order(n, 2);
    const int even = n - (n % 2);
    const int k = even / 2;
    const int shift = n % 2;
    std::vector<int> e;
    e.reserve(n);
    if (shift) e.push_back(1);
    for (int j = 1; j <= k; ++j) {
        e.push_back(k + j + shift);
        e.push_back(j + shift);
    }
    return make_unchecked(std::move(e));
}

int maximin_abs_value(int n) {
    check_construct_order(n, 2);
    return n / 2;
}

} // namespace permderiv
