#include "permderiv/verify.hpp"

#include <functional>
#include <sstream>

#include "permderiv/cli.hpp"
#include "permderiv/convexity.hpp"
#include "permderiv/costas.hpp"
#include "permderiv/dpair.hpp"
#include "permderiv/permutation.hpp"
#include "permderiv/search.hpp"
#include "permderiv/triangle.hpp"
#include "permderiv/variation.hpp"

namespace permderiv {

namespace {

using Seq = std::vector<int>;
using Rows = std::vector<std::vector<std::int64_t>>;

Permutation P(Seq e) { return Permutation(std::move(e)); }

Seq diffs(const Permutation& p) {
    const auto d = derivative(p);
    return {d.diffs().begin(), d.diffs().end()};
}

Seq entries(const Permutation& p) { return {p.begin(), p.end()}; }

std::vector<std::int64_t> range64(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    for (auto x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

class Checklist {
public:
    void add(std::string name, const std::function<bool()>& check) {
        CheckOutcome c{std::move(name), false, {}};
        try {
            c.passed = check();
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        items_.push_back(std::move(c));
    }

    std::vector<CheckOutcome> take() { return std::move(items_); }

private:
    std::vector<CheckOutcome> items_;
};

void perm_core_examples(Checklist& c) {
    c.add("derivative of (5,2,7,4,1,6,3)", [] {
        return diffs(P({5, 2, 7, 4, 1, 6, 3})) == Seq{-3, 5, -3, -3, 5, -3};
    });
    c.add("derivative of (3,5,1,6,2,4)", [] {
        return diffs(P({3, 5, 1, 6, 2, 4})) == Seq{2, -4, 5, -4, 2};
    });
    c.add("integrate (-3,5,-3,-3,5,-3)", [] {
        return entries(integrate(Seq{-3, 5, -3, -3, 5, -3})) == Seq{5, 2, 7, 4, 1, 6, 3};
    });
    c.add("sum characteristic of (-3,5,-3,-3,5,-3)", [] {
        return sum_characteristic(Seq{-3, 5, -3, -3, 5, -3}).values == range64(-4, 2);
    });
    c.add("sum characteristic of (-4,1,1,1,2,1)", [] {
        return sum_characteristic(Seq{-4, 1, 1, 1, 2, 1}).values == range64(-4, 2);
    });
    c.add("(-3,5,-3,-3,5,-3) is realizable", [] {
        return is_realizable(Seq{-3, 5, -3, -3, 5, -3});
    });
    c.add("shift witness n=7 s=4", [] {
        const auto p = realize_shift(7, 4);
        return entries(p) == Seq{5, 1, 2, 3, 4, 6, 7} && diffs(p) == Seq{-4, 1, 1, 1, 2, 1};
    });
    c.add("spanning tree recovers (3,6,1,5,2,4)", [] {
        WeightedTree t{6, {{1, 2, 3}, {2, 3, -5}, {4, 6, -1}, {1, 4, 2}, {2, 5, -4}}};
        return entries(from_tree(t)) == Seq{3, 6, 1, 5, 2, 4};
    });
    c.add("inverse of the order-18 (5,-13) realization", [] {
        return entries(inverse(P({1, 6, 11, 16, 3, 8, 13, 18, 5, 10, 15, 2, 7, 12, 17, 4, 9, 14}))) ==
               Seq{1, 12, 5, 16, 9, 2, 13, 6, 17, 10, 3, 14, 7, 18, 11, 4, 15, 8};
    });
    c.add("(6,3,5,2,4,1) alternates -3, 2", [] {
        return diffs(P({6, 3, 5, 2, 4, 1})) == Seq{-3, 2, -3, 2, -3};
    });
}

void triangle_examples(Checklist& c) {
    c.add("triangle of (3,5,1,6,2,4)", [] {
        const Rows expected{{3, 5, 1, 6, 2, 4}, {2, -4, 5, -4, 2}, {-2, 1, 1, -2},
                            {3, -3, 3},         {-1, -1},          {1}};
        return build_triangle(P({3, 5, 1, 6, 2, 4})).rows() == expected;
    });
    c.add("triangle of (4,3,1,2)", [] {
        const Rows expected{{4, 3, 1, 2}, {-1, -2, 1}, {-3, -1}, {-2}};
        return build_triangle(P({4, 3, 1, 2})).rows() == expected;
    });
    c.add("rows 3 and 5 of the (3,5,1,6,2,4) triangle", [] {
        const auto t = build_triangle(P({3, 5, 1, 6, 2, 4}));
        const auto r3 = t.row(3);
        const auto r5 = t.row(5);
        return std::vector<std::int64_t>(r3.begin(), r3.end()) == std::vector<std::int64_t>{3, -3, 3} &&
               std::vector<std::int64_t>(r5.begin(), r5.end()) == std::vector<std::int64_t>{1};
    });
    c.add("row 1 of (3,5,1,6,2,4) repeats -4", [] {
        return build_triangle(P({3, 5, 1, 6, 2, 4})).row_has_repeat(1);
    });
    c.add("triangle of (3,6,1,5,2,4)", [] {
        const Rows expected{{3, 6, 1, 5, 2, 4}, {3, -5, 4, -3, 2}, {-2, -1, 1, -1},
                            {2, -4, 3},         {-1, -2},          {1}};
        return build_triangle(P({3, 6, 1, 5, 2, 4})).rows() == expected;
    });
    c.add("triangle differs from the iterated difference table", [] {
        const auto t = build_triangle(P({3, 5, 1, 6, 2, 4}));
        const auto r1 = t.row(1);
        std::vector<std::int64_t> iterated;
        for (std::size_t i = 0; i + 1 < r1.size(); ++i) iterated.push_back(r1[i + 1] - r1[i]);
        const auto r2 = t.row(2);
        return iterated == std::vector<std::int64_t>{-6, 9, -9, 6} &&
               std::vector<std::int64_t>(r2.begin(), r2.end()) ==
                   std::vector<std::int64_t>{-2, 1, 1, -2};
    });
    c.add("staggered layout of (4,3,1,2)", [] {
        const std::string expected = "  4     3     1     2\n"
                                     "    -1    -2     1\n"
                                     "       -3    -1\n"
                                     "          -2\n";
        return render(build_triangle(P({4, 3, 1, 2})), RenderMode::staggered) == expected;
    });
    c.add("centrosymmetric example triangle rows", [] {
        const Rows expected{{2, 3, 5, 8, 1, 4, 6, 7}, {1, 2, 3, -7, 3, 2, 1}, {3, 5, -4, -4, 5, 3},
                            {6, -2, -1, -2, 6},       {-1, 1, 1, -1},         {2, 3, 2},
                            {4, 4},                   {5}};
        return build_triangle(P({2, 3, 5, 8, 1, 4, 6, 7})).rows() == expected;
    });
}

void costas_examples(Checklist& c) {
    c.add("(1,3,4,2,5) is 1-Costas", [] { return is_k_costas(P({1, 3, 4, 2, 5}), 1); });
    c.add("(5,2,7,4,1,6,3) is not 1-Costas", [] { return !is_k_costas(P({5, 2, 7, 4, 1, 6, 3}), 1); });
    c.add("(4,3,1,2) is Costas", [] { return is_costas(P({4, 3, 1, 2})); });
    c.add("(3,5,1,6,2,4) is not Costas", [] { return !is_costas(P({3, 5, 1, 6, 2, 4})); });
    c.add("every Costas permutation of order 4..6 has a mirrored segment pair", [] {
        for (int n = 4; n <= 6; ++n) {
            for (const auto& p : enumerate([&] {
                     auto s = costas_spec(n);
                     s.mode = CollectMode{};
                     return s;
                 }()).items) {
                if (!jedwab_witness(p)) return false;
            }
        }
        return true;
    });
    c.add("(2,3,5,8,1,4,6,7) is centrosymmetric", [] {
        return is_centrosymmetric(P({2, 3, 5, 8, 1, 4, 6, 7}));
    });
    c.add("(2,3,5,8,1,4,6,7) is Costas-centrosymmetric", [] {
        return is_costas_centrosymmetric(P({2, 3, 5, 8, 1, 4, 6, 7}));
    });
    c.add("(2,4,3,1,8,6,5,7) is Costas-centrosymmetric", [] {
        return is_costas_centrosymmetric(P({2, 4, 3, 1, 8, 6, 5, 7}));
    });
    c.add("(5,2,7,4,1,6,3) is centrosymmetric with palindromic derivative", [] {
        const auto p = P({5, 2, 7, 4, 1, 6, 3});
        const auto d = diffs(p);
        return is_centrosymmetric(p) && Seq(d.rbegin(), d.rend()) == d;
    });
    c.add("order-16 Costas permutation reversed in its second half", [] {
        const auto p = P({1, 3, 9, 10, 13, 5, 15, 11, 16, 14, 8, 7, 4, 12, 2, 6});
        const auto q = reverse_second_half(p);
        return is_costas(p) &&
               entries(q) == Seq{1, 3, 9, 10, 13, 5, 15, 11, 6, 2, 12, 4, 7, 8, 14, 16} &&
               is_costas_centrosymmetric(q);
    });
    c.add("(2,4,3,1,8,6,5,7) with reversed second half is not Costas", [] {
        const auto q = reverse_second_half(P({2, 4, 3, 1, 8, 6, 5, 7}));
        return entries(q) == Seq{2, 4, 3, 1, 7, 5, 6, 8} &&
               build_triangle(q).row_has_repeat(1) && !is_costas(q);
    });
    c.add("(2,4,-1,-3) is Costas-signed", [] {
        return is_costas_signed(SignedPermutation({2, 4, -1, -3}));
    });
    c.add("(1,8,10,9,2,7) is a Costas 6-subpermutation of order 12", [] {
        return is_costas_subpermutation(std::vector<std::int64_t>{1, 8, 10, 9, 2, 7}, 12);
    });
    c.add("(1,8,10,9,2,7) is a Costas half-permutation of order 6", [] {
        return is_costas_half(std::vector<std::int64_t>{1, 8, 10, 9, 2, 7}, 6);
    });
}

void dpair_examples(Checklist& c) {
    c.add("(6,3,5,2,4,1) realizes (2,-3)", [] {
        return is_dpair_realization(P({6, 3, 5, 2, 4, 1}), {2, -3});
    });
    c.add("(5,2,7,4,1,6,3) realizes (5,-3)", [] {
        return is_dpair_realization(P({5, 2, 7, 4, 1, 6, 3}), {5, -3});
    });
    c.add("(5,-13) feasible, (2,-4) not", [] {
        return is_feasible_dpair({5, -13}) && !is_feasible_dpair({2, -4});
    });
    c.add("construction for a=5, b=13", [] {
        const auto p = construct_dpair(5, 13);
        return entries(p) == Seq{1, 6, 11, 16, 3, 8, 13, 18, 5, 10, 15, 2, 7, 12, 17, 4, 9, 14} &&
               diffs(p) == Seq{5, 5, 5, -13, 5, 5, 5, -13, 5, 5, -13, 5, 5, 5, -13, 5, 5};
    });
    c.add("inverse of the a=5, b=13 construction realizes (11,-7)", [] {
        const auto q = inverse(construct_dpair(5, 13));
        return inverse_dpair(5, 13) == DPair{11, -7} &&
               diffs(q) == Seq{11, -7, 11, -7, -7, 11, -7, 11, -7, -7, 11, -7, 11, -7, -7, 11, -7};
    });
    c.add("construction for a=4, b=5", [] {
        const auto p = construct_dpair(4, 5);
        return entries(p) == Seq{1, 5, 9, 4, 8, 3, 7, 2, 6} && diffs(p) == Seq{4, 4, -5, 4, -5, 4, -5, 4};
    });
    c.add("inverse of the a=4, b=5 construction realizes (7,-2)", [] {
        const auto q = inverse(construct_dpair(4, 5));
        return inverse_dpair(4, 5) == DPair{7, -2} && entries(q) == Seq{1, 8, 6, 4, 2, 9, 7, 5, 3} &&
               diffs(q) == Seq{7, -2, -2, -2, 7, -2, -2, -2};
    });
}

void variation_examples(Checklist& c) {
    c.add("local variation of (1,3,4,2,5) is 3", [] { return local_variation(P({1, 3, 4, 2, 5})) == 3; });
    c.add("global variation of (4,6,2,7,3,8,1,5) is 31 = maximum for n=8", [] {
        return global_variation(P({4, 6, 2, 7, 3, 8, 1, 5})) == 31 && delta_star(8) == 31;
    });
    c.add("global variation of (4,5,2,7,1,6,3) is 23 = maximum for n=7", [] {
        return global_variation(P({4, 5, 2, 7, 1, 6, 3})) == 23 && delta_star(7) == 23;
    });
    c.add("identity has global variation n-1", [] {
        for (int n = 1; n <= 12; ++n) {
            if (global_variation(Permutation::identity(n)) != n - 1) return false;
        }
        return true;
    });
    c.add("only identity and anti-identity are 1-Lipschitz (n=6)", [] {
        int count = 0;
        for (const auto& p : enumerate([] {
                 SearchSpec s;
                 s.n = 6;
                 s.mode = CollectMode{};
                 return s;
             }()).items) {
            count += is_lipschitz(p, 1);
        }
        return count == 2 && is_lipschitz(Permutation::identity(6), 1) &&
               is_lipschitz(Permutation::anti_identity(6), 1);
    });
    c.add("mid-alternating examples", [] {
        return is_mid_alternating(P({4, 6, 2, 7, 3, 8, 1, 5})) &&
               is_mid_alternating(P({4, 5, 2, 7, 1, 6, 3}));
    });
    c.add("alternating blocks of order 4 and 5", [] {
        return entries(pi_perm(4)) == Seq{2, 3, 1, 4} && entries(pi_perm(5)) == Seq{3, 4, 2, 5, 1};
    });
    c.add("rotated alternating block of order 6", [] {
        const auto p = pi_star(6);
        return entries(p) == Seq{6, 4, 2, 1, 3, 5} && diffs(p) == Seq{-2, -2, -1, 2, 2};
    });
    c.add("(3,2,4,1,5,10,6,9,7,8) is 1-Costas with local variation 5", [] {
        const auto p = P({3, 2, 4, 1, 5, 10, 6, 9, 7, 8});
        return diffs(p) == Seq{-1, 2, -3, 4, 5, -4, 3, -2, 1} && is_k_costas(p, 1) &&
               local_variation(p) == 5;
    });
    c.add("minimal local variation construction, n=12", [] {
        const auto p = construct_min_local_1costas(12);
        return diffs(p) == Seq{1, -2, 3, -4, 5, 6, -5, 4, -3, 2, -1} && local_variation(p) == 6 &&
               global_variation(p) == min_global_1costas(12) && min_global_1costas(12) == 36;
    });
    c.add("minimal local variation construction, n=11", [] {
        const auto p = construct_min_local_1costas(11);
        return diffs(p) == Seq{5, -4, 3, -2, 1, -6, -1, 2, -3, 4} && local_variation(p) == 6;
    });
    c.add("maximin constructions for n=6 and n=7", [] {
        return entries(construct_maximin_abs(6)) == Seq{4, 1, 5, 2, 6, 3} &&
               entries(construct_maximin_abs(7)) == Seq{1, 5, 2, 6, 3, 7, 4} &&
               maximin_abs_value(6) == 3 && maximin_abs_value(7) == 3 &&
               min_abs_derivative(P({5, 2, 7, 4, 1, 6, 3})) == 3;
    });
}

void convexity_examples(Checklist& c) {
    c.add("(6,4,2,1,3,5) is convex", [] { return is_convex(P({6, 4, 2, 1, 3, 5})); });
    c.add("identity and anti-identity are convex", [] {
        return is_convex(Permutation::identity(7)) && is_convex(Permutation::anti_identity(7));
    });
    c.add("(4,3,1,2) has interval prefixes but is not convex", [] {
        const auto p = P({4, 3, 1, 2});
        for (int k = 1; k <= 4; ++k) {
            const auto rows = interval_rows(PartialColumnFill::from_permutation(p, k));
            if (rows.back() - rows.front() + 1 != k) return false;
        }
        return !is_convex(p) && !is_k_convex(PartialColumnFill::from_permutation(p, 4));
    });
    c.add("first extension rows", [] {
        return extension_rows(PartialColumnFill::start(6, 1)) == Seq{2} &&
               extension_rows(PartialColumnFill::start(6, 3)) == Seq{2, 4} &&
               extension_rows(PartialColumnFill::start(6, 6)) == Seq{5};
    });
    c.add("convex permutations of order 6", [] {
        const auto all = enumerate_convex(6);
        const std::vector<Permutation> listed{
            P({1, 2, 3, 4, 5, 6}), P({6, 1, 2, 3, 4, 5}), P({5, 1, 2, 3, 4, 6}), P({5, 3, 1, 2, 4, 6})};
        for (const auto& p : listed) {
            if (!std::binary_search(all.begin(), all.end(), p) ||
                !std::binary_search(all.begin(), all.end(), reverse(p))) {
                return false;
            }
        }
        return all.size() == 8 && all == classify_convex(6);
    });
}

void search_examples(Checklist& c) {
    c.add("44 1-Costas permutations of order 5", [] { return count_one_costas(5).count == 44; });
    c.add("1-Costas count rows for n=1, 7, 10", [] {
        const auto r1 = count_one_costas(1);
        const auto r7 = count_one_costas(7);
        const auto r10 = count_one_costas(10);
        return r1.count == 1 && r1.fraction_text() == "100.0" && r7.count == 788 &&
               r7.fraction_text() == "15.6" && r10.count == 152112 && r10.fraction_text() == "4.2";
    });
}

void cli_examples(Checklist& c) {
    c.add("derive 5,2,7,4,1,6,3 prints -3,5,-3,-3,5,-3", [] {
        std::ostringstream out;
        std::ostringstream err;
        const std::vector<std::string> args{"derive", "5,2,7,4,1,6,3"};
        return cli::run(args, out, err) == cli::kExitOk && out.str() == "-3,5,-3,-3,5,-3\n";
    });
}

} // namespace

std::vector<CheckOutcome> verify_examples() {
    Checklist c;
    perm_core_examples(c);
    triangle_examples(c);
    costas_examples(c);
    dpair_examples(c);
    variation_examples(c);
    convexity_examples(c);
    search_examples(c);
    cli_examples(c);
    return c.take();
}

std::vector<CheckOutcome> verify_figure1(int max_n, int workers) {
    std::vector<CheckOutcome> out;
    for (const auto& row : table(TableKind::one_costas, max_n, workers)) {
        CheckOutcome c;
        c.name = "n=" + std::to_string(row.n);
        std::ostringstream detail;
        detail << "total=" << row.total << " count=" << row.count << " fraction=" << row.fraction_text();
        if (row.n <= static_cast<int>(kOneCostasReference.size())) {
            const auto& ref = kOneCostasReference[row.n - 1];
            c.passed = row.total == ref.total && row.count == ref.count &&
                       row.fraction_text() == ref.fraction;
            if (!c.passed) {
                detail << " expected count=" << ref.count << " fraction=" << ref.fraction;
            }
        } else {
            c.passed = true;
            detail << " (beyond reference range)";
        }
        c.detail = detail.str();
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace permderiv
