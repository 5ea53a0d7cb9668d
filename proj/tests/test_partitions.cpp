#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symfn/partition.hpp"

using namespace symfn;

TEST(Partition, RejectsIncreasingOrNonPositiveParts) {
    EXPECT_THROW(Partition({1, 2}), domain_error);
    EXPECT_THROW(Partition({2, -1}), domain_error);
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate({2, 2, 1}), Partition({3, 2}));
    EXPECT_EQ(conjugate({}), Partition{});
    EXPECT_EQ(conjugate({7, 3, 2}), Partition({3, 3, 2, 1, 1, 1, 1}));
    for (int d = 0; d <= 8; ++d)
        for (const auto& l : partitions_of(d)) {
            EXPECT_EQ(conjugate(conjugate(l)), l);
            EXPECT_EQ(conjugate(l), oracle::conjugate(l));
        }
}

TEST(Partition, Dominance) {
    EXPECT_TRUE(dominates({2, 1}, {1, 1, 1}));
    EXPECT_FALSE(dominates({3, 3}, {4, 1, 1}));
    EXPECT_FALSE(dominates({4, 1, 1}, {3, 3}));
    EXPECT_TRUE(dominates({3}, {3}));
    EXPECT_FALSE(dominates({3}, {2}));
}

TEST(Partition, SmallestIncomparablePairIsAtSix) {
    auto has_incomparable = [](int d) {
        for (const auto& a : partitions_of(d))
            for (const auto& b : partitions_of(d))
                if (!dominates(a, b) && !dominates(b, a)) return true;
        return false;
    };
    for (int d = 0; d < 6; ++d) EXPECT_FALSE(has_incomparable(d)) << d;
    EXPECT_TRUE(has_incomparable(6));
}

TEST(Partition, DominanceIsPartialOrderReversedByConjugation) {
    for (int d = 1; d <= 7; ++d) {
        const auto ps = partitions_of(d);
        for (const auto& a : ps) {
            EXPECT_TRUE(dominates(a, a));
            EXPECT_TRUE(dominates(Partition({d}), a));
            EXPECT_TRUE(dominates(a, Partition(std::vector<int>(static_cast<std::size_t>(d), 1))));
            for (const auto& b : ps) {
                EXPECT_EQ(dominates(a, b), oracle::dominates(a, b));
                if (dominates(a, b) && dominates(b, a)) EXPECT_EQ(a, b);
                if (dominates(a, b)) EXPECT_TRUE(dominates(conjugate(b), conjugate(a)));
                for (const auto& c : ps)
                    if (dominates(a, b) && dominates(b, c)) EXPECT_TRUE(dominates(a, c));
            }
        }
    }
}

TEST(Partition, ContainmentAndStrips) {
    EXPECT_TRUE(contains({3, 3, 2, 2}, {3, 2, 2}));
    EXPECT_FALSE(contains({3, 2, 2}, {3, 3, 2, 2}));
    const SkewShape strip{{3, 3, 3, 2, 2}, {3, 3, 2, 2}};
    EXPECT_TRUE(is_horizontal_strip(strip));
    EXPECT_EQ(strip.size(), 3);
    EXPECT_FALSE(is_horizontal_strip({{2, 2}, {1}}));
    EXPECT_TRUE(is_vertical_strip({{2, 2}, {1, 1}}));
    EXPECT_FALSE(is_vertical_strip({{3}, {1}}));
    EXPECT_THROW(make_skew({1}, {2}), domain_error);
}

TEST(Partition, Frobenius) {
    const auto f = to_frobenius({6, 4, 4, 2, 2});
    EXPECT_EQ(f.arms, (std::vector<int>{5, 2, 1}));
    EXPECT_EQ(f.legs, (std::vector<int>{4, 3, 0}));
    EXPECT_EQ(from_frobenius(f), Partition({6, 4, 4, 2, 2}));
    EXPECT_EQ(to_frobenius({4, 1, 1}).arms, (std::vector<int>{3}));
    EXPECT_EQ(to_frobenius({4, 1, 1}).legs, (std::vector<int>{2}));
    EXPECT_EQ(to_frobenius({}).rank(), 0u);
    for (int d = 0; d <= 8; ++d)
        for (const auto& l : partitions_of(d)) {
            const auto fl = to_frobenius(l);
            EXPECT_EQ(from_frobenius(fl), l);
            const auto fc = to_frobenius(conjugate(l));
            EXPECT_EQ(fc.arms, fl.legs);
            EXPECT_EQ(fc.legs, fl.arms);
            int size = static_cast<int>(fl.rank());
            for (int a : fl.arms) size += a;
            for (int b : fl.legs) size += b;
            EXPECT_EQ(size, d);
        }
}

TEST(Partition, EnumerationOrderAndBounds) {
    EXPECT_EQ(partitions_of(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
    EXPECT_EQ(partitions_of(4, 2), (std::vector<Partition>{{4}, {3, 1}, {2, 2}}));
    EXPECT_EQ(partitions_of(0), (std::vector<Partition>{{}}));
    EXPECT_EQ(partitions_of(10).size(), 42u);
    EXPECT_EQ(partitions_of(5, std::nullopt, 2).size(), 3u);
}

TEST(Partition, StripExtensions) {
    EXPECT_EQ(strip_extensions({2, 2}, 1, StripKind::horizontal, 3), (std::vector<Partition>{{3, 2}, {2, 2, 1}}));
    EXPECT_EQ(strip_extensions({}, 2, StripKind::vertical, 5), (std::vector<Partition>{{1, 1}}));
    EXPECT_EQ(strip_extensions({2}, 2, StripKind::horizontal, 2), (std::vector<Partition>{{4}, {3, 1}, {2, 2}}));
}

TEST(Partition, StripExtensionsMatchBruteForce) {
    for (int d = 0; d <= 5; ++d)
        for (const auto& l : partitions_of(d))
            for (int k = 1; k <= 3; ++k)
                for (auto kind : {StripKind::horizontal, StripKind::vertical}) {
                    std::vector<Partition> expect;
                    for (const auto& m : partitions_of(d + k, 4)) {
                        if (!contains(m, l)) continue;
                        const SkewShape s{m, l};
                        if (kind == StripKind::horizontal ? is_horizontal_strip(s) : is_vertical_strip(s))
                            expect.push_back(m);
                    }
                    EXPECT_EQ(strip_extensions(l, k, kind, 4), expect);
                }
}

TEST(Partition, TextForm) {
    EXPECT_EQ(to_string(Partition{3, 3, 2, 2}), "[3,3,2,2]");
    EXPECT_EQ(to_string(Partition{}), "[]");
    EXPECT_EQ(parse_partition(" [3, 1] "), Partition({3, 1}));
    EXPECT_EQ(parse_partition("[]"), Partition{});
    EXPECT_THROW(parse_partition("3,1"), parse_error);
    EXPECT_THROW(parse_partition("[1,3]"), parse_error);
    const auto s = parse_skew_shape("[2,1]/[1]");
    EXPECT_EQ(s.outer, Partition({2, 1}));
    EXPECT_EQ(to_string(s), "[2,1]/[1]");
}
