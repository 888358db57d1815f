#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qkostka/bundles.hpp"
#include "qkostka/fills.hpp"
#include "qkostka/sweep.hpp"

using namespace qkostka;

TEST(Content, Basics) {
    Content mu{3, 2, 2, 0};
    EXPECT_EQ(mu.total(), 7);
    EXPECT_EQ(mu.amount(2), 2);
    EXPECT_EQ(mu.amount(9), 0);
    EXPECT_EQ(mu.tail_sum(3), 2);
    EXPECT_TRUE(mu.is_descending());
    EXPECT_FALSE(Content({1, 2}).is_descending());
    EXPECT_THROW(Content({1, -1}), ValidationError);
}

TEST(Tableau, EntryCountMismatchIsRejected) {
    EXPECT_THROW(Tableau(SkewShape(Partition{2, 1}), {1, 1}), ValidationError);
}

TEST(Tableau, AccessAndContent) {
    Tableau t = fixtures::level6_unique();
    EXPECT_EQ(t.at(3, 6), 4);
    EXPECT_EQ(t.at(5, 4), 0);
    EXPECT_EQ(t.content(), (Content{6, 6, 5, 5, 5, 2, 1}));
    EXPECT_EQ(t.column_entries(6), (std::vector<int>{1, 2, 4, 5}));
    EXPECT_EQ(t.with_entry({6, 3}, 6).at(6, 3), 6);
}

TEST(Semistandard, Examples) {
    EXPECT_TRUE(is_semistandard(fixtures::level6_unique()));
    EXPECT_FALSE(is_semistandard(Tableau::from_rows({{1}, {1}, {2}})));
    EXPECT_TRUE(is_semistandard(Tableau::from_rows({{1, 1, 2, 3}})));
    EXPECT_FALSE(is_semistandard(Tableau::from_rows({{2, 1}})));
    EXPECT_FALSE(is_semistandard(Tableau::from_rows({{0, 1}})));
}

TEST(Semistandard, SkewShapesIgnoreInnerBoxes) {
    Tableau t(SkewShape(Partition{2, 2}, Partition{1}), {1, 1, 2});
    EXPECT_TRUE(is_semistandard(t));
    Tableau u(SkewShape(Partition{2, 2}, Partition{1}), {2, 1, 2});
    EXPECT_FALSE(is_semistandard(u));
}

TEST(Proper, Examples) {
    EXPECT_TRUE(is_proper(fixtures::level5_maximal(), 5));
    Tableau t = Tableau::from_rows({{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    EXPECT_TRUE(is_semistandard(t));
    EXPECT_TRUE(is_proper(t, 2));
    EXPECT_FALSE(is_proper(t.with_entry({3, 1}, 1), 2));
}

TEST(Proper, FlavorsInTwoConsecutiveRows) {
    for (const Tableau& t : {fixtures::level6_unique(), fixtures::level9_unique(), fixtures::level10_fill()})
        EXPECT_TRUE(is_proper(t, t.width()));
}

TEST(Proper, AgreesWithReferencePredicate) {
    std::vector<int> shape{2, 2, 2, 1};
    std::vector<int> flat{1, 1, 2, 2, 3, 3, 4};
    do {
        auto rows = oracle::to_rows(shape, flat);
        Tableau t = Tableau::from_rows(rows);
        EXPECT_EQ(is_semistandard(t), oracle::semistandard_rows(rows));
        EXPECT_EQ(is_proper(t, 2), oracle::proper_rows(rows, 2));
    } while (std::next_permutation(flat.begin(), flat.end()));
}

TEST(ForwardFill, Examples) {
    EXPECT_EQ(forward_fill(Partition{7, 7, 7, 7, 5, 5}, Content{7, 6, 6, 6, 6, 6, 1}), fixtures::forward_7());
    EXPECT_EQ(forward_fill(Partition{4}, Content{4}), Tableau::from_rows({{1, 1, 1, 1}}));
    EXPECT_EQ(forward_fill(Partition{2, 2}, Content{2, 2}), Tableau::from_rows({{1, 1}, {2, 2}}));
    EXPECT_THROW(forward_fill(Partition{2, 2}, Content{2, 1}), ValidationError);
}

TEST(ReverseFill, Examples) {
    auto t = reverse_fill(Partition{7, 7, 7, 7, 5, 5}, Content{7, 6, 6, 6, 6, 6, 1});
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, fixtures::reverse_7());
    EXPECT_EQ(*reverse_fill(Partition{2, 2}, Content{2, 2}), Tableau::from_rows({{1, 1}, {2, 2}}));
}

TEST(ReverseFill, ReportsOverflowingAmount) {
    // low-row of (2,2) has two boxes; three copies of the last flavor cannot fit
    EXPECT_FALSE(reverse_fill(Partition{2, 2}, Content{1, 3}));
}

TEST(LowRowStep, ThreeCases) {
    // (9,9,5,3) has low-row (4,2,3)
    EXPECT_EQ(low_row_step(LowRow{{4, 2, 3}}, 2, 9), (LowRow{{4, 4, 1}}));
    EXPECT_EQ(low_row_step(LowRow{{4, 2, 3}}, 4, 9), (LowRow{{5, 4, 0}}));
    EXPECT_EQ(low_row_step(LowRow{{4, 2, 3}}, 7, 9), (LowRow{{2, 4, 3}}));
}

TEST(LowRowStep, ConservesTotal) {
    for (int level = 1; level <= 8; ++level)
        for (int l1 = 0; l1 <= level; ++l1)
            for (int l2 = 0; l1 + l2 <= level; ++l2) {
                LowRow lr{{l1, l2, level - l1 - l2}};
                for (int amount = 0; amount <= level; ++amount)
                    EXPECT_EQ(low_row_step(lr, amount, level).total(), level);
            }
}

TEST(LowRowStep, RejectsLargeAmount) {
    EXPECT_THROW(low_row_step(LowRow{{4, 2, 3}}, 10, 9), ValidationError);
    EXPECT_THROW(low_row_step(LowRow{{4, 2}}, 1, 6), ValidationError);
}

TEST(LowRowStep, MatchesSimulatedPlacement) {
    // Diagram (level^2, l2+l3, l3) with a filler flavor on the first rows; the
    // new flavor goes into its largest low-row boxes.
    for (int level = 1; level <= 7; ++level)
        for (int l3 = 0; l3 <= level; ++l3)
            for (int l2 = 0; l2 + l3 <= level; ++l2) {
                const int l1 = level - l2 - l3;
                Partition open{level, level, l2 + l3, l3};
                for (int amount = 0; amount <= level; ++amount) {
                    LowRow got = low_row_step(LowRow{{l1, l2, l3}}, amount, level);
                    std::vector<int> rows = open.rows();
                    rows.resize(4, 0);
                    std::vector<BoxRef> low;
                    for (int a = 1; a <= 4; ++a)
                        for (int b = open.row(a + 1) + 1; b <= open.row(a); ++b)
                            low.push_back({a, b});
                    std::sort(low.begin(), low.end(), std::greater<>());
                    if (amount > static_cast<int>(low.size()))
                        continue;
                    for (int i = 0; i < amount; ++i)
                        --rows[static_cast<std::size_t>(low[static_cast<std::size_t>(i)].row - 1)];
                    // window of the last three rows, or the three above an emptied last row
                    bool matched = false;
                    for (int bottom : {4, 3}) {
                        int r3 = rows[static_cast<std::size_t>(bottom - 1)];
                        int r2 = rows[static_cast<std::size_t>(bottom - 2)];
                        int r1 = rows[static_cast<std::size_t>(bottom - 3)];
                        if (bottom == 3 && rows[3] != 0)
                            continue;
                        if (r1 == level && got.sizes == std::vector<int>{r1 - r2, r2 - r3, r3})
                            matched = true;
                    }
                    EXPECT_TRUE(matched) << level << " (" << l1 << "," << l2 << "," << l3 << ") " << amount;
                }
            }
}

TEST(CombinedFill, Examples) {
    EXPECT_EQ(combined_fill(6, 2, 3, Content{6, 6, 5, 5, 5, 2, 1}), fixtures::level6_unique());
    EXPECT_EQ(combined_fill(10, 2, 2, Content{10, 8, 8, 7, 6, 3, 1, 1}), fixtures::level10_fill());
    EXPECT_EQ(combined_fill(1, 0, 1, Content{1, 1}), Tableau::from_rows({{1}, {2}}));
    EXPECT_EQ(combined_fill(9, 3, 3, Content{9, 8, 8, 8, 8, 8, 8, 2, 1}), fixtures::level9_unique());
    EXPECT_EQ(combined_fill(6, 2, 3, Content{6, 6, 6, 6, 2, 2, 2}), fixtures::level6_maximal());
}

TEST(CombinedFill, RejectsBadContent) {
    EXPECT_THROW(combined_fill(6, 2, 3, Content{6, 6, 5, 5, 5, 1, 2}), ValidationError);
    EXPECT_THROW(combined_fill(6, 2, 3, Content{7, 6, 5, 5, 4, 2, 1}), ValidationError);
    EXPECT_THROW(combined_fill(6, 2, 3, Content{6, 6, 6, 5, 5, 1, 1}), ValidationError);
    EXPECT_THROW(combined_fill(6, 2, 3, Content{6, 6, 5, 5, 5, 2}), ValidationError);
}

TEST(CombinedFill, ValidWheneverTailReachesP) {
    int built = 0;
    for (int level = 1; level <= 5; ++level)
        for (int n = 3; n <= 7; ++n) {
            std::vector<int> w(static_cast<std::size_t>(n));
            std::function<void(int, int)> rec = [&](int i, int bound) {
                if (i == n) {
                    BundleSpec spec{1, level, w};
                    if (spec.total() % 2 || spec.total() == 0)
                        return;
                    Classification c = classify(spec);
                    if (c.certificate.tail_sum < c.certificate.p)
                        return;
                    Tableau t = combined_fill(level, c.certificate.k, c.certificate.p,
                                              Content(normalized_weights(spec)));
                    EXPECT_TRUE(is_semistandard(t));
                    EXPECT_TRUE(is_proper(t, level));
                    EXPECT_EQ(t.content(), Content(normalized_weights(spec)));
                    ++built;
                    return;
                }
                for (int c = bound; c >= 1; --c) {
                    w[static_cast<std::size_t>(i)] = c;
                    rec(i + 1, c);
                }
            };
            rec(0, level);
        }
    EXPECT_GT(built, 500);
}

TEST(CombinedFill, FallsBackToLowerSplit) {
    CombinedFill f = combined_fill_detailed(4, 2, 1, Content{3, 3, 3, 3, 3, 3});
    EXPECT_LT(f.split, 2 * 2 + 2);
    EXPECT_TRUE(is_semistandard(f.tableau));
    EXPECT_TRUE(is_proper(f.tableau, 4));
    EXPECT_EQ(combined_fill_detailed(6, 2, 3, Content{6, 6, 5, 5, 5, 2, 1}).split, 6);
}

TEST(ModifyTableau, SwapsTheMarkedBoxes) {
    auto m = modify_tableau_detailed(fixtures::level10_fill(), 2, 2);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->upper, (BoxRef{3, 10}));
    EXPECT_EQ(m->lower, (BoxRef{4, 4}));
    EXPECT_TRUE(m->literal_row);
    EXPECT_EQ(m->tableau, fixtures::level10_swapped());
}

TEST(ModifyTableau, NoneWhenTailEqualsP) {
    EXPECT_FALSE(modify_tableau(fixtures::level6_unique(), 2, 3));
}

TEST(ModifyTableau, NoneWhenMaximal) {
    Tableau t = combined_fill(5, 3, 2, Content{5, 5, 5, 5, 5, 3, 3, 3});
    EXPECT_EQ(t, fixtures::level5_maximal());
    EXPECT_FALSE(modify_tableau(t, 3, 2));
}

TEST(ModifyTableau, OutputIsANewValidTableau) {
    for (int level = 2; level <= 5; ++level)
        for (int n = 4; n <= 7; ++n) {
            std::vector<int> w(static_cast<std::size_t>(n));
            std::function<void(int, int)> rec = [&](int i, int bound) {
                if (i == n) {
                    BundleSpec spec{1, level, w};
                    if (spec.total() % 2)
                        return;
                    Classification c = classify(spec);
                    if (c.certificate.tail_sum < c.certificate.p)
                        return;
                    Content mu(normalized_weights(spec));
                    Tableau t = combined_fill(level, c.certificate.k, c.certificate.p, mu);
                    if (auto u = modify_tableau(t, c.certificate.k, c.certificate.p)) {
                        EXPECT_NE(*u, t);
                        EXPECT_EQ(u->content(mu.num_flavors()), mu);
                        EXPECT_TRUE(is_semistandard(*u));
                        EXPECT_TRUE(is_proper(*u, level));
                    }
                    return;
                }
                for (int c = bound; c >= 1; --c) {
                    w[static_cast<std::size_t>(i)] = c;
                    rec(i + 1, c);
                }
            };
            rec(0, level);
        }
}

// modify_tableau finds a second tableau exactly when the tail exceeds p
// and the content is not maximal.
TEST(ModifyTableau, SucceedsExactlyOnSurplusNonMaximal) {
    std::vector<std::string> mismatches;
    for (int level = 1; level <= 5; ++level)
        for (int n = 3; n <= 7; ++n)
            for (const auto& w : weight_vectors(n, level)) {
                BundleSpec spec{1, level, w};
                if (spec.total() == 0)
                    continue;
                Certificate c = classify(spec).certificate;
                if (c.tail_sum < c.p)
                    continue;
                Tableau t = combined_fill(level, c.k, c.p, Content(normalized_weights(spec)));
                bool expected = c.tail_sum > c.p && !c.maximal;
                if (modify_tableau(t, c.k, c.p).has_value() != expected)
                    mismatches.push_back("level " + std::to_string(level) + " " + Content(w).to_string());
            }
    EXPECT_TRUE(mismatches.empty()) << mismatches.size() << " mismatches, first "
                                    << (mismatches.empty() ? "" : mismatches.front());
}

TEST(RenderText, OneRowPerLine) {
    EXPECT_EQ(render_text(Tableau::from_rows({{1, 1}, {2}})), "1 1\n2\n");
    EXPECT_EQ(render_text(Tableau(SkewShape(Partition{2, 1}, Partition{1}), {1, 2})), ". 1\n2\n");
}
