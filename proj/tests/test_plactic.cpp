#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "symfn/plactic.hpp"

using namespace symfn;

namespace {
Word W(std::string_view s) { return parse_word(s); }
}

TEST(Greene, WorkedExamples) {
    const auto g = greene_invariants(W("2133"));
    EXPECT_EQ(g.increasing[1], 3);
    EXPECT_EQ(g.increasing[2], 4);
    EXPECT_EQ(g.decreasing[1], 2);
    EXPECT_EQ(g.decreasing[2], 3);
    EXPECT_EQ(g.decreasing[3], 4);
    EXPECT_EQ(greene_invariants(W("2133"), 2), (std::pair<int, int>{4, 3}));
    const auto h = greene_invariants(W("111"));
    EXPECT_EQ(h.increasing[1], 3);
    EXPECT_EQ(h.decreasing, (std::vector<int>{0, 1, 2, 3}));
    const auto e = greene_invariants({});
    EXPECT_EQ(e.increasing, (std::vector<int>{0}));
    EXPECT_EQ(shape_from_greene(W("2133")), (std::pair<Partition, Partition>{{3, 1}, {2, 1, 1}}));
    EXPECT_EQ(shape_from_greene({}), (std::pair<Partition, Partition>{{}, {}}));
}

TEST(Greene, MatchesBruteForce) {
    for (const auto& w : oracle::all_words(3, 5)) {
        const auto g = greene_invariants(w);
        for (std::size_t k = 1; k <= w.size(); ++k) {
            EXPECT_EQ(g.increasing[k], oracle::greene(w, static_cast<int>(k), true));
            EXPECT_EQ(g.decreasing[k], oracle::greene(w, static_cast<int>(k), false));
        }
    }
}

TEST(Greene, ShapeOfInsertionTableau) {
    for (int len = 0; len <= 6; ++len)
        for (const auto& w : oracle::all_words(3, len)) {
            const auto [lam, lamc] = shape_from_greene(w);
            const auto sh = p_tableau(w).shape();
            EXPECT_EQ(lam, sh) << to_string(w);
            EXPECT_EQ(lamc, conjugate(sh)) << to_string(w);
        }
    EXPECT_THROW(greene_invariants(Word(greene_max_length + 1, 1)), domain_error);
}

TEST(Greene, ReadingWordsGiveTheShape) {
    for (const auto& t : oracle::all_tableaux(3, 6)) EXPECT_EQ(shape_from_greene(reading_word(t)).first, t.shape());
}

TEST(Knuth, Relations) {
    EXPECT_TRUE(knuth_class(W("213")).contains(W("231")));
    EXPECT_FALSE(knuth_equivalent(W("12"), W("21")));
    EXPECT_EQ(knuth_class(W("11")), (std::set<Word>{W("11")}));
    EXPECT_EQ(knuth_class({}), (std::set<Word>{Word{}}));
}

TEST(Knuth, ClassesAreInsertionFibers) {
    for (int len = 0; len <= 6; ++len) {
        std::map<Tableau, std::set<Word>> fibers;
        for (const auto& w : oracle::all_words(3, len)) fibers[p_tableau(w)].insert(w);
        for (const auto& [t, fiber] : fibers) {
            const Word r = reading_word(t);
            EXPECT_TRUE(fiber.contains(r));
            EXPECT_EQ(knuth_class(r), fiber) << to_compact(t);
            const auto g = greene_invariants(r);
            for (const auto& w : fiber) {
                const auto gw = greene_invariants(w);
                EXPECT_EQ(gw.increasing, g.increasing);
                EXPECT_EQ(gw.decreasing, g.decreasing);
            }
        }
    }
}

TEST(Knuth, ClassAlgebraCommutation) {
    // sums of classes multiply by concatenation; the plactic images of
    // E1 E2 / E2 E1 and H1 H2 / H2 H1 agree
    auto class_product = [](const std::vector<Word>& a, const std::vector<Word>& b) {
        std::map<Tableau, int> out;
        for (const auto& u : a)
            for (const auto& v : b) {
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                ++out[p_tableau(uv)];
            }
        return out;
    };
    auto strictly_decreasing = [](int k, int n) {
        std::vector<Word> out;
        for (const auto& w : oracle::all_words(n, k))
            if (std::is_sorted(w.begin(), w.end(), std::greater_equal<>()) && std::adjacent_find(w.begin(), w.end()) == w.end())
                out.push_back(w);
        return out;
    };
    auto weakly_increasing = [](int k, int n) {
        std::vector<Word> out;
        for (const auto& w : oracle::all_words(n, k))
            if (std::is_sorted(w.begin(), w.end())) out.push_back(w);
        return out;
    };
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l) {
                const auto ek = strictly_decreasing(k, n), el = strictly_decreasing(l, n);
                EXPECT_EQ(class_product(ek, el), class_product(el, ek));
                const auto hk = weakly_increasing(k, n), hl = weakly_increasing(l, n);
                EXPECT_EQ(class_product(hk, hl), class_product(hl, hk));
            }
}

TEST(Forgotten, Relations) {
    EXPECT_TRUE(forgotten_class(W("132")).contains(W("213")));
    EXPECT_TRUE(forgotten_class(W("311")).contains(W("131")));
    for (const auto& w : oracle::all_words(3, 4)) {
        const auto cls = forgotten_class(w);
        // content is preserved
        for (const auto& v : cls) EXPECT_EQ(word_weight(v, 3), word_weight(w, 3));
        for (const auto& v : cls) EXPECT_TRUE(forgotten_class(v) == cls);
    }
}

TEST(Yamanouchi, Examples) {
    EXPECT_TRUE(is_yamanouchi(W("211")));
    EXPECT_EQ(p_tableau(W("211")), unit_tableau({2, 1}));
    EXPECT_FALSE(is_yamanouchi(W("12")));
    EXPECT_TRUE(is_yamanouchi({}));
    for (int len = 0; len <= 5; ++len)
        for (const auto& w : oracle::all_words(3, len)) {
            const bool y = is_yamanouchi(w);
            // a word is Yamanouchi exactly when it inserts to a unit tableau
            const Tableau p = p_tableau(w);
            EXPECT_EQ(y, p == unit_tableau(p.shape())) << to_string(w);
        }
}
