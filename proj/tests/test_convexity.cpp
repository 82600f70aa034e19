#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "permderiv/convexity.hpp"
#include "permderiv/error.hpp"
#include "permderiv/variation.hpp"

using namespace permderiv;
using testing::P;
using testing::vec;

namespace {

bool is_interval(const std::vector<int>& rows) {
    return rows.empty() || rows.back() - rows.front() + 1 == static_cast<int>(rows.size());
}

} // namespace

TEST_CASE("is_convex") {
    CHECK(is_convex(P({6, 4, 2, 1, 3, 5})));
    for (int n = 1; n <= 8; ++n) {
        CHECK(is_convex(Permutation::identity(n)));
        CHECK(is_convex(Permutation::anti_identity(n)));
    }
    CHECK_FALSE(is_convex(P({4, 3, 1, 2})));
}

TEST_CASE("partial column fills") {
    const auto st = PartialColumnFill::start(5, 3);
    CHECK(st.filled() == 1);
    CHECK(st.row_occupied(3));
    CHECK(st.column_in_row(3) == 1);
    CHECK(interval_rows(st) == std::vector<int>{3});
    CHECK(is_k_convex(st));
    CHECK(extension_rows(st) == std::vector<int>{2, 4});
    CHECK(extension_rows(PartialColumnFill::start(5, 1)) == std::vector<int>{2});
    CHECK(extension_rows(PartialColumnFill::start(5, 5)) == std::vector<int>{4});
    CHECK_THROWS_AS(st.place(3), Error);
    CHECK_THROWS_AS(PartialColumnFill::start(5, 6), Error);
    CHECK_THROWS_AS(st.to_permutation(), Error);

    const auto full = PartialColumnFill::from_permutation(P({2, 3, 1}), 3);
    CHECK(full.to_permutation() == P({2, 3, 1}));
}

TEST_CASE("interval rows do not imply convexity") {
    const auto p = P({4, 3, 1, 2});
    for (int k = 1; k <= 4; ++k) {
        CHECK(is_interval(interval_rows(PartialColumnFill::from_permutation(p, k))));
    }
    CHECK(is_k_convex(PartialColumnFill::from_permutation(p, 3)));
    CHECK_FALSE(is_k_convex(PartialColumnFill::from_permutation(p, 4)));
    // the only convex continuation would need a fifth row
    CHECK(extension_rows(PartialColumnFill::from_permutation(p, 3)).empty());
    try {
        extension_rows(PartialColumnFill::from_permutation(P({2, 3, 1}), 3));
        FAIL("expected StateNotKConvex");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::state_not_k_convex);
    }
}

TEST_CASE("blocked extension") {
    // rows 5,6,7 hold columns 3,1,2: derivative so far (-2, 1)
    auto st = PartialColumnFill::start(7, 6).place(7).place(5);
    CHECK(is_k_convex(st));
    CHECK(extension_rows(st).empty());
}

TEST_CASE("prefixes of convex permutations are k-convex intervals, n <= 9") {
    for (int n = 1; n <= 9; ++n) {
        for (const auto& p : enumerate_convex(n)) {
            for (int k = 1; k <= n; ++k) {
                const auto st = PartialColumnFill::from_permutation(p, k);
                REQUIRE(is_k_convex(st));
                const auto rows = interval_rows(st);
                REQUIRE(rows.size() == static_cast<std::size_t>(k));
                REQUIRE(is_interval(rows));
            }
        }
    }
}

TEST_CASE("algorithm 1") {
    const auto id = algorithm1(4, 1, first_candidate_chooser());
    REQUIRE(id.permutation);
    CHECK(*id.permutation == Permutation::identity(4));

    const auto star = algorithm1(6, 4, scripted_chooser({3, 5, 2, 6, 1}));
    REQUIRE(star.permutation);
    CHECK(vec(*star.permutation) == std::vector<int>{6, 4, 2, 1, 3, 5});
    CHECK(*star.permutation == pi_star(6));

    const auto stuck = algorithm1(7, 4, scripted_chooser({5, 6, 3, 7}));
    CHECK_FALSE(stuck.permutation);
    CHECK(stuck.state.filled() == 5);
    CHECK(extension_rows(stuck.state).empty());

    CHECK_THROWS_AS(algorithm1(4, 1, scripted_chooser({3})), Error);
    CHECK_THROWS_AS(enumerate_convex(0), Error);
    CHECK_THROWS_AS(enumerate_convex(kMaxConvexWalkOrder + 1), Error);
}

TEST_CASE("convex enumeration and classification") {
    CHECK(enumerate_convex(1) == std::vector<Permutation>{P({1})});
    CHECK(enumerate_convex(4).size() == 6);
    const auto six = enumerate_convex(6);
    CHECK(six.size() == 8);
    CHECK(std::find(six.begin(), six.end(), P({6, 4, 2, 1, 3, 5})) != six.end());
    const std::size_t expected[] = {1, 2, 4, 6, 8, 8, 8, 8, 8};
    for (int n = 1; n <= 9; ++n) {
        std::vector<Permutation> filtered;
        for (const auto& p : testing::all_permutations(n)) {
            if (is_convex(p)) filtered.push_back(p);
        }
        CHECK(enumerate_convex(n) == filtered);
        CHECK(classify_convex(n) == filtered);
        CHECK(filtered.size() == expected[n - 1]);
        for (const auto& p : filtered) CHECK(is_convex(reverse(p)));
    }
}
