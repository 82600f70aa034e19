#include <algorithm>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"

#include "permderiv/costas.hpp"
#include "permderiv/error.hpp"
#include "permderiv/variation.hpp"

using namespace permderiv;
using testing::P;
using testing::diffs;
using testing::vec;

TEST_CASE("local variation") {
    CHECK(local_variation(P({1, 3, 4, 2, 5})) == 3);
    CHECK(local_variation(P({4, 6, 2, 7, 3, 8, 1, 5})) == 7);
    for (int n = 2; n <= 10; ++n) CHECK(local_variation(Permutation::identity(n)) == 1);
    CHECK(local_variation(P({1})) == 0);
}

TEST_CASE("global variation") {
    CHECK(global_variation(P({4, 6, 2, 7, 3, 8, 1, 5})) == 31);
    CHECK(global_variation(P({4, 5, 2, 7, 1, 6, 3})) == 23);
    for (int n = 1; n <= 10; ++n) CHECK(global_variation(Permutation::identity(n)) == n - 1);
}

TEST_CASE("Lipschitz") {
    CHECK(is_lipschitz(Permutation::identity(5), 1));
    CHECK(is_lipschitz(Permutation::anti_identity(5), 1));
    CHECK_FALSE(is_lipschitz(P({2, 4, 1, 3}), 2));
    CHECK(is_lipschitz(P({2, 4, 1, 3}), 3));
    CHECK_THROWS_AS(is_lipschitz(P({1, 2}), 0), Error);
    for (int n = 2; n <= 7; ++n) {
        int count = 0;
        for (const auto& p : testing::all_permutations(n)) count += is_lipschitz(p, 1);
        CHECK(count == 2);
    }
}

TEST_CASE("mid-alternating") {
    CHECK(is_mid_alternating(P({4, 6, 2, 7, 3, 8, 1, 5})));
    CHECK_FALSE(is_mid_alternating(P({1, 2, 3, 4})));
    CHECK(is_mid_alternating(P({4, 5, 2, 7, 1, 6, 3})));
}

TEST_CASE("delta_star and max-global construction") {
    CHECK(delta_star(8) == 31);
    CHECK(delta_star(7) == 23);
    CHECK(delta_star(5) == 11);
    CHECK(delta_star_alt_odd(7) == doctest::Approx(23.0));
    CHECK(delta_star_alt_odd(5) == doctest::Approx(8.0));
    CHECK(vec(construct_max_global(8)) == std::vector<int>{4, 6, 1, 7, 2, 8, 3, 5});
    CHECK(vec(construct_max_global(7)) == std::vector<int>{3, 5, 1, 6, 2, 7, 4});
    CHECK(vec(construct_max_global(2)) == std::vector<int>{1, 2});
    for (int n = 2; n <= 200; ++n) {
        const auto p = construct_max_global(n);
        CHECK(global_variation(p) == delta_star(n));
        CHECK(is_mid_alternating(p));
        CHECK(has_max_global_endpoints(p));
    }
}

TEST_CASE("maximizers of global variation are the mid-alternating permutations with extremal ends") {
    for (int n = 2; n <= 8; ++n) {
        std::int64_t best = 0;
        for (const auto& p : testing::all_permutations(n)) best = std::max(best, global_variation(p));
        CHECK(best == delta_star(n));
        for (const auto& p : testing::all_permutations(n)) {
            const bool maximal = global_variation(p) == best;
            REQUIRE(maximal == (is_mid_alternating(p) && has_max_global_endpoints(p)));
        }
    }
}

TEST_CASE("pi and pi-star") {
    CHECK(vec(pi_perm(4)) == std::vector<int>{2, 3, 1, 4});
    CHECK(vec(pi_perm(5)) == std::vector<int>{3, 4, 2, 5, 1});
    CHECK(vec(pi_perm(1)) == std::vector<int>{1});
    CHECK(vec(pi_star(6)) == std::vector<int>{6, 4, 2, 1, 3, 5});
    CHECK(diffs(pi_star(6)) == std::vector<int>{-2, -2, -1, 2, 2});
    for (int k = 2; k <= 30; ++k) {
        const auto d = diffs(pi_perm(k));
        for (int i = 0; i < k - 1; ++i) {
            CHECK(std::abs(d[static_cast<std::size_t>(i)]) == i + 1);
        }
        CHECK(is_k_costas(pi_perm(k), 1));
    }
}

TEST_CASE("min-local 1-Costas construction") {
    CHECK(diffs(construct_min_local_1costas(12)) ==
          std::vector<int>{1, -2, 3, -4, 5, 6, -5, 4, -3, 2, -1});
    CHECK(diffs(construct_min_local_1costas(11)) ==
          std::vector<int>{5, -4, 3, -2, 1, -6, -1, 2, -3, 4});
    CHECK(diffs(construct_min_local_1costas(13)) ==
          std::vector<int>{6, -5, 4, -3, 2, -1, -7, 1, -2, 3, -4, 5});
    CHECK(min_global_1costas(12) == 36);
    CHECK(min_global_1costas(5) == 7);
    CHECK(min_global_1costas(2) == 1);
    CHECK(min_global_1costas_alt_odd(5) == 5);
    for (int n = 2; n <= 40; ++n) {
        const auto p = construct_min_local_1costas(n);
        CHECK(is_k_costas(p, 1));
        CHECK(local_variation(p) == (n + 1) / 2);
        CHECK(global_variation(p) == min_global_1costas(n));
    }
}

TEST_CASE("1-Costas extremes by brute force, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        int min_local = std::numeric_limits<int>::max();
        std::int64_t min_global = std::numeric_limits<std::int64_t>::max();
        for (const auto& p : build_all_one_costas(n)) {
            min_local = std::min(min_local, local_variation(p));
            min_global = std::min(min_global, global_variation(p));
        }
        CHECK(min_local == (n + 1) / 2);
        CHECK(min_global == min_global_1costas(n));
    }
}

TEST_CASE("maximin construction") {
    CHECK(vec(construct_maximin_abs(6)) == std::vector<int>{4, 1, 5, 2, 6, 3});
    CHECK(vec(construct_maximin_abs(7)) == std::vector<int>{1, 5, 2, 6, 3, 7, 4});
    CHECK(vec(construct_maximin_abs(2)) == std::vector<int>{2, 1});
    for (int n = 2; n <= 8; ++n) {
        int best = 0;
        for (const auto& p : testing::all_permutations(n)) best = std::max(best, min_abs_derivative(p));
        CHECK(best == maximin_abs_value(n));
        CHECK(best == n / 2);
    }
    for (int n = 2; n <= 2000; ++n) CHECK(min_abs_derivative(construct_maximin_abs(n)) == n / 2);
}

TEST_CASE("orders below range") {
    CHECK_THROWS_AS(construct_max_global(0), Error);
    CHECK_THROWS_AS(construct_min_local_1costas(0), Error);
    CHECK_THROWS_AS(construct_maximin_abs(0), Error);
    CHECK_THROWS_AS(pi_perm(0), Error);
}
