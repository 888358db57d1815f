#include <gtest/gtest.h>

#include "qkostka/shapes.hpp"

using namespace qkostka;

TEST(Partition, TrimsTrailingZeros) {
    EXPECT_EQ(Partition({3, 2, 0, 0}), Partition({3, 2}));
    EXPECT_TRUE(Partition({0, 0}).empty());
    EXPECT_EQ(Partition({0}).area(), 0);
}

TEST(Partition, RejectsBadRows) {
    EXPECT_THROW(Partition({1, 2}), ValidationError);
    EXPECT_THROW(Partition({2, -1}), ValidationError);
}

TEST(Partition, Accessors) {
    Partition p{4, 4, 2, 1};
    EXPECT_EQ(p.width(), 4);
    EXPECT_EQ(p.area(), 11);
    EXPECT_EQ(p.row(5), 0);
    EXPECT_EQ(p.column_height(1), 4);
    EXPECT_EQ(p.column_height(3), 2);
    EXPECT_TRUE(p.contains(BoxRef{3, 2}));
    EXPECT_FALSE(p.contains(BoxRef{3, 3}));
    EXPECT_TRUE(p.contains(Partition{4, 1}));
    EXPECT_FALSE(p.contains(Partition{5}));
}

TEST(SkewShape, RequiresContainment) {
    EXPECT_THROW(SkewShape(Partition{2}, Partition{3}), ValidationError);
    SkewShape s(Partition{3, 2, 1}, Partition{2, 1});
    EXPECT_EQ(s.area(), 3);
    auto boxes = s.boxes();
    ASSERT_EQ(boxes.size(), 3u);
    EXPECT_EQ(boxes[0], (BoxRef{1, 3}));
    EXPECT_EQ(boxes[2], (BoxRef{3, 1}));
    EXPECT_FALSE(s.contains({1, 1}));
}

TEST(LowRow, DefinitionKeepsInteriorZeros) {
    EXPECT_EQ(low_row(Partition{9, 9, 5, 3}).sizes, (std::vector<int>{4, 2, 3}));
    EXPECT_EQ(low_row(Partition{4, 4, 3, 3}).sizes, (std::vector<int>{1, 0, 3}));
    EXPECT_EQ(low_row(Partition{6, 6, 6, 6, 3, 3}).sizes, (std::vector<int>{3, 0, 3}));
    EXPECT_TRUE(low_row(Partition{}).sizes.empty());
}

TEST(LowRow, SumsToWidth) {
    for (const Partition& p : {Partition{7, 7, 5, 5}, Partition{3, 1}, Partition{2, 2, 2}})
        EXPECT_EQ(low_row(p).total(), p.width());
}

TEST(SplitByLevel, Examples) {
    EXPECT_EQ(split_by_level(15, 6), (LevelSplit{2, 3}));
    EXPECT_EQ(split_by_level(22, 10), (LevelSplit{2, 2}));
    EXPECT_EQ(split_by_level(30, 9), (LevelSplit{3, 3}));
    EXPECT_EQ(split_by_level(6, 6), (LevelSplit{0, 6}));
    EXPECT_EQ(split_by_level(1, 1), (LevelSplit{0, 1}));
    EXPECT_THROW(split_by_level(0, 3), ValidationError);
}

TEST(ReducedShape, Examples) {
    EXPECT_EQ(reduced_shape(6, 2, 3), (Partition{6, 6, 6, 6, 3, 3}));
    EXPECT_EQ(reduced_shape(1, 0, 1), (Partition{1, 1}));
    EXPECT_EQ(reduced_shape(5, 3, 2), (Partition{5, 5, 5, 5, 5, 5, 2, 2}));
    EXPECT_THROW(reduced_shape(4, 0, 0), ValidationError);
    EXPECT_THROW(reduced_shape(4, 0, 5), ValidationError);
}

TEST(QuantumShape, Examples) {
    // s = (k-1)*level + p
    EXPECT_EQ(quantum_shape(4, 5), (Partition{4, 4, 4, 4, 4, 4, 4, 4, 1, 1}));
    EXPECT_EQ(quantum_shape(6, 9), (Partition{6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3, 3}));
    EXPECT_EQ(quantum_shape(1, 1), (Partition{1, 1, 1, 1}));
    EXPECT_EQ(quantum_shape(3, 3), (Partition{3, 3, 3, 3, 3, 3}));
    EXPECT_THROW(quantum_shape(3, 0), ValidationError);
}

TEST(RimHooks, SingleHookShapes) {
    EXPECT_EQ(add_rim_hook(Partition{2, 2}, 4, 2), (Partition{2, 2, 2, 1, 1}));
    EXPECT_EQ(add_rim_hook(Partition{3, 3}, 5, 3), (Partition{3, 3, 3, 1, 1}));
    EXPECT_EQ(add_rim_hook(Partition{2, 2}, 4, 1), (Partition{2, 2, 1, 1, 1, 1}));
    EXPECT_THROW(add_rim_hook(Partition{2, 2}, 1, 2), ValidationError);
}

TEST(RimHooks, QuotientMatchesQuantumShape) {
    for (int level = 1; level <= 6; ++level)
        for (int s = 1; s <= 12; ++s) {
            Partition nu = rim_hook_shape(level, s);
            EXPECT_EQ(nu.area(), 2 * level + s * (level + 2)) << level << " " << s;
            std::vector<int> rows(nu.rows().begin() + 1, nu.rows().end());
            ASSERT_EQ(nu.row(1), level);
            EXPECT_EQ(Partition(rows), quantum_shape(level, s)) << level << " " << s;
        }
}

TEST(Transpose, Involution) {
    Partition p{5, 3, 3, 1};
    EXPECT_EQ(transpose(p), (Partition{4, 3, 3, 1, 1}));
    EXPECT_EQ(transpose(transpose(p)), p);
    EXPECT_TRUE(transpose(Partition{}).empty());
}

TEST(DropLastColumn, Examples) {
    EXPECT_EQ(drop_last_column(Partition{6, 6, 6, 6, 3, 3}), (Partition{5, 5, 5, 5, 3, 3}));
    EXPECT_EQ(drop_last_column(Partition{1, 1}), Partition{});
    EXPECT_THROW(drop_last_column(Partition{}), ValidationError);
}
