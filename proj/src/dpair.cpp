#include "permderiv/dpair.hpp"

#include <cstdlib>
#include <numeric>

namespace permderiv {

namespace {

void check_construct_args(int a, int b) {
    if (a < 1 || b < 1) throw Error(Errc::out_of_range, "a and b must be positive");
    if (a >= b) throw Error(Errc::not_strictly_ordered, "need a < b");
    if (static_cast<long long>(a) + b > kMaxOrder) {
        throw Error(Errc::out_of_range, "a + b exceeds the order limit");
    }
    if (std::gcd(a, b) != 1) {
        throw Error(Errc::not_coprime, "a and b must be relatively prime");
    }
}

} // namespace

bool is_dpair_realization(const Permutation& perm, DPair d) {
    if (d.p == d.q || perm.order() < 2) return false;
    bool saw_p = false;
    bool saw_q = false;
    for (const Derivative d_ = derivative(perm); int v : d_.diffs()) {
        if (v == d.p) {
            saw_p = true;
        } else if (v == d.q) {
            saw_q = true;
        } else {
            return false;
        }
    }
    return saw_p && saw_q;
}

bool is_feasible_dpair(DPair d) {
    if ((d.p > 0) == (d.q > 0) || d.p == 0 || d.q == 0) return false;
    const int ap = std::abs(d.p);
    const int aq = std::abs(d.q);
    return ap != aq && std::gcd(ap, aq) == 1;
}

Permutation construct_dpair(int a, int b) {
    check_construct_args(a, b);
    std::vector<int> e;
    if (a == 1) {
        e.reserve(b + 1);
        for (int v = 2; v <= b + 1; ++v) e.push_back(v);
        e.push_back(1);
        return make_unchecked(std::move(e));
    }
    const int n = a + b;
    e.reserve(n);
    int v = 1;
    for (int i = 0; i < n; ++i) {
        e.push_back(v);
        v += a;
        if (v > n) v -= n;
    }
    return make_unchecked(std::move(e));
}

DPair inverse_dpair(int a, int b) {
    check_construct_args(a, b);
    const int n = a + b;
    int inv = 1;
    for (; inv < n; ++inv) {
        if (static_cast<long long>(a) * inv % n == 1) break;
    }
    return {inv, -(n - inv)};
}

} // namespace permderiv
