#include <functional>

#include "doctest.h"
#include "helpers.hpp"

#include "permderiv/convexity.hpp"
#include "permderiv/costas.hpp"
#include "permderiv/error.hpp"
#include "permderiv/search.hpp"
#include "permderiv/search_reference.hpp"
#include "permderiv/variation.hpp"

using namespace permderiv;
using testing::P;

namespace {

using PermPredicate = std::function<bool(const Permutation&)>;

LeafPredicate leaf(PermPredicate f) {
    return [f = std::move(f)](std::span<const int> s) {
        return f(make_unchecked(std::vector<int>(s.begin(), s.end())));
    };
}

struct Named {
    const char* name;
    PermPredicate pred;
};

std::vector<Named> shipped_predicates() {
    return {
        {"costas", [](const Permutation& p) { return is_costas(p); }},
        {"one-costas", [](const Permutation& p) { return p.order() == 1 || is_k_costas(p, 1); }},
        {"two-costas", [](const Permutation& p) { return is_k_costas(p, std::min(2, p.order() - 1)); }},
        {"convex", [](const Permutation& p) { return is_convex(p); }},
        {"mid-alternating", [](const Permutation& p) { return is_mid_alternating(p); }},
        {"centrosymmetric", [](const Permutation& p) { return is_centrosymmetric(p); }},
        {"costas-centrosymmetric", [](const Permutation& p) { return is_costas_centrosymmetric(p); }},
        {"grassmannian", [](const Permutation& p) { return is_grassmannian(p); }},
        {"lipschitz-2", [](const Permutation& p) { return is_lipschitz(p, 2); }},
    };
}

} // namespace

TEST_CASE("enumerate examples") {
    SearchSpec all;
    all.n = 3;
    CHECK(enumerate(all).count == 6);
    CHECK(enumerate(one_costas_spec(5)).count == 44);

    SearchSpec opt;
    opt.n = 5;
    opt.mode = OptimizeMode{[](std::span<const int> s) {
        std::int64_t sum = 0;
        for (std::size_t i = 1; i < s.size(); ++i) sum += std::abs(s[i] - s[i - 1]);
        return sum;
    }, Direction::maximize};
    const auto r = enumerate(opt);
    REQUIRE(r.best);
    CHECK(r.best->value == 11);
    CHECK(global_variation(r.best->witness) == 11);
    // lexicographically first maximizer
    CHECK(r.best->witness == P({2, 4, 1, 5, 3}));
}

TEST_CASE("enumerate validation") {
    SearchSpec s;
    s.n = 0;
    CHECK_THROWS_AS(enumerate(s), Error);
    s.n = kMaxSearchOrder + 1;
    CHECK_THROWS_AS(enumerate(s), Error);
    s.n = 3;
    CHECK_THROWS_AS(enumerate(s, 0), Error);
    s.mode = OptimizeMode{};
    CHECK_THROWS_AS(enumerate(s), Error);

    SearchSpec throwing;
    throwing.n = 4;
    throwing.accept = [](std::span<const int>) -> bool { throw Error(Errc::invalid_argument, "boom"); };
    CHECK_THROWS_AS(enumerate(throwing, 3), Error);
}

TEST_CASE("pruned enumeration equals the naive filter, n <= 7") {
    for (const auto& [name, pred] : shipped_predicates()) {
        CAPTURE(name);
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(n);
            std::vector<Permutation> direct;
            for (const auto& p : testing::all_permutations(n)) {
                if (pred(p)) direct.push_back(p);
            }
            SearchSpec spec;
            spec.n = n;
            spec.accept = leaf(pred);
            spec.mode = CollectMode{};
            CHECK(enumerate(spec).items == direct);
            CHECK(reference::filter_all(spec).items == direct);
        }
    }
    for (int n = 1; n <= 7; ++n) {
        auto one = one_costas_spec(n);
        auto full = costas_spec(n);
        CHECK(enumerate(one).count == reference::filter_all(one).count);
        CHECK(enumerate(full).count == reference::filter_all(full).count);
        one.mode = CollectMode{};
        CHECK(enumerate(one).items == build_all_one_costas(n));
    }
}

TEST_CASE("results do not depend on the worker count") {
    for (int n = 1; n <= 8; ++n) {
        for (auto spec : {one_costas_spec(n), costas_spec(n)}) {
            const auto serial = enumerate(spec, 1);
            CHECK(enumerate(spec, 3).count == serial.count);
            CHECK(enumerate(spec, 16).count == serial.count);
            spec.mode = CollectMode{};
            CHECK(enumerate(spec, 1).items == enumerate(spec, 4).items);
        }
    }
}

TEST_CASE("count rows") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == 2432902008176640000ULL);
    CHECK_THROWS_AS(factorial(21), Error);

    CHECK(make_count_row(3, 4).fraction_text() == "66.7");
    CHECK(make_count_row(5, 44).fraction_text() == "36.7");
    CHECK(make_count_row(1, 1).fraction_text() == "100.0");
    CHECK(make_count_row(8, 0).fraction_text() == "0.0");
    CHECK(make_count_row(4, 1).fraction_text() == "4.2");
    CHECK(make_count_row(4, 3).fraction_text() == "12.5");
    // 9/720 = 1.25% exactly: half-up
    CHECK(make_count_row(6, 9).fraction_text() == "1.3");
    CHECK_THROWS_AS(make_count_row(3, 7), Error);
}

TEST_CASE("1-Costas counts") {
    const std::uint64_t expected[] = {1, 2, 4, 12, 44, 176, 788, 3936};
    const char* fractions[] = {"100.0", "100.0", "66.7", "50.0", "36.7", "24.4", "15.6", "9.8"};
    for (int n = 1; n <= 8; ++n) {
        const auto row = count_one_costas(n, 2);
        CHECK(row.count == expected[n - 1]);
        CHECK(row.fraction_text() == fractions[n - 1]);
    }
    CHECK_THROWS_AS(count_one_costas(0), Error);
    CHECK_THROWS_AS(count_one_costas(kMaxOneCostasCountOrder + 1), Error);
}

TEST_CASE("Costas counts") {
    CHECK(count_costas(1) == 1);
    CHECK(count_costas(4) == 12);
    const std::uint64_t expected[] = {1, 2, 4, 12, 40, 116, 200, 444};
    for (int n = 1; n <= 8; ++n) CHECK(count_costas(n, 2) == expected[n - 1]);
}

TEST_CASE("tables") {
    const auto convex = table(TableKind::convex, 6);
    REQUIRE(convex.size() == 6);
    CHECK(convex[3].count == 6);
    CHECK(convex[5].count == 8);
    for (auto kind : {TableKind::one_costas, TableKind::costas, TableKind::convex}) {
        const auto t = table(kind, 1);
        REQUIRE(t.size() == 1);
        CHECK(t[0].count == 1);
    }
    CHECK_THROWS_AS(table(TableKind::one_costas, 0), Error);
}
