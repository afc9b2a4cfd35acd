#include <gtest/gtest.h>

#include <random>

#include "qmn/labeled_poset.hpp"
#include "support/fixtures.hpp"

using namespace qmn;

namespace {

// less as a full boolean matrix rebuilt from the Hasse diagram alone.
std::vector<std::vector<bool>> closure_of_covers(const LabeledPoset& p) {
    const int n = p.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (const auto& e : p.covers()) {
        r[e.lower][e.upper] = true;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (r[i][k] && r[k][j]) {
                    r[i][j] = true;
                }
            }
        }
    }
    return r;
}

void expect_invariants(const LabeledPoset& p) {
    const int n = p.size();
    std::vector<bool> seen(n + 1, false);
    for (int a = 0; a < n; ++a) {
        ASSERT_GE(p.label(a), 1);
        ASSERT_LE(p.label(a), n);
        EXPECT_FALSE(seen[p.label(a)]);
        seen[p.label(a)] = true;
        EXPECT_GE(p.weight(a), 1);
        EXPECT_FALSE(p.less(a, a));
        for (int b = 0; b < n; ++b) {
            if (p.less(a, b)) {
                EXPECT_FALSE(p.less(b, a));
            }
            for (int c = 0; c < n; ++c) {
                if (p.less(a, b) && p.less(b, c)) {
                    EXPECT_TRUE(p.less(a, c));
                }
            }
        }
    }
    const auto r = closure_of_covers(p);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            EXPECT_EQ(r[a][b], p.less(a, b));
        }
    }
    for (const auto& e : p.covers()) {
        EXPECT_TRUE(p.covered_by(e.lower, e.upper));
        EXPECT_EQ(p.edge_kind(e) == EdgeKind::Strict, p.label(e.lower) > p.label(e.upper));
    }
    const auto& ext = p.linear_extension();
    ASSERT_EQ(static_cast<int>(ext.size()), n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            EXPECT_FALSE(p.less(ext[j], ext[i]));
        }
    }
}

}  // namespace

TEST(FromCovers, WeakTwoChain) {
    const auto p = LabeledPoset::from_covers(2, {{0, 1}}, {1, 2}, {1, 1});
    ASSERT_EQ(p.covers().size(), 1u);
    EXPECT_EQ(p.edge_kind(p.covers()[0]), EdgeKind::Weak);
    EXPECT_TRUE(is_naturally_labeled(p));
}

TEST(FromCovers, Errors) {
    EXPECT_THROW(LabeledPoset::from_covers(2, {{0, 1}, {1, 0}}, {1, 2}, {1, 1}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 2, 3}, {1, 1, 1}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(2, {{0, 0}}, {1, 2}, {1, 1}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(2, {}, {1, 1}, {1, 1}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(2, {}, {1, 3}, {1, 1}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(2, {}, {1, 2}, {1, 0}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(2, {}, {1, 2}, {1}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(2, {{0, 2}}, {1, 2}, {1, 1}), poset_error);
    EXPECT_THROW(LabeledPoset::from_covers(0, {}, {}, {}), poset_error);
}

TEST(FromCovers, RedundantRelationsAreAbsorbed) {
    const auto p = LabeledPoset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 2, 3}, {1, 1, 1});
    EXPECT_EQ(p.covers().size(), 2u);
    EXPECT_TRUE(p.less(0, 2));
    EXPECT_FALSE(p.covered_by(0, 2));
}

TEST(FromCovers, StripEdgeKinds) {
    const auto p = fixture::strip6();
    expect_invariants(p);
    EXPECT_EQ(p.total_weight(), 8);
    int strict = 0;
    for (const auto& e : p.covers()) {
        const int lo = p.label(e.lower);
        const int hi = p.label(e.upper);
        const bool expect_strict = (lo == 6 && hi == 5) || (lo == 5 && hi == 1);
        EXPECT_EQ(p.edge_kind(e) == EdgeKind::Strict, expect_strict) << lo << "<" << hi;
        strict += p.edge_kind(e) == EdgeKind::Strict;
    }
    EXPECT_EQ(strict, 2);
    EXPECT_EQ(p.covers().size(), 5u);
}

TEST(NaturalLabeling, Predicate) {
    EXPECT_TRUE(is_naturally_labeled(fixture::chain({1, 2}, {1, 1})));
    EXPECT_FALSE(is_naturally_labeled(fixture::chain({2, 1}, {1, 1})));
    EXPECT_FALSE(is_naturally_labeled(fixture::strip6()));
}

TEST(NaturalLabeling, Relabeling) {
    const auto anti = natural_relabeling(fixture::antichain({3, 1, 2}, {1, 1, 1}));
    EXPECT_TRUE(is_naturally_labeled(anti));
    const auto c = natural_relabeling(fixture::chain({2, 1}, {1, 1}));
    EXPECT_EQ(c.labels(), (std::vector<int>{1, 2}));
    const auto s = fixture::strip6();
    const auto n = natural_relabeling(s);
    EXPECT_TRUE(is_naturally_labeled(n));
    EXPECT_EQ(n.weights(), s.weights());
    for (int a = 0; a < s.size(); ++a) {
        for (int b = 0; b < s.size(); ++b) {
            EXPECT_EQ(n.less(a, b), s.less(a, b));
        }
    }
}

TEST(InducedSubposet, FullSetAndSingleton) {
    const auto s = fixture::strip6();
    EXPECT_EQ(induced_subposet(s, s.all()), s);
    const auto one = induced_subposet(s, bit(3));
    EXPECT_EQ(one.size(), 1);
    EXPECT_TRUE(one.covers().empty());
    EXPECT_EQ(one.weight(0), 2);
    EXPECT_THROW(induced_subposet(s, Mask{0}), poset_error);
}

TEST(InducedSubposet, StripBlockFiveOneTwo) {
    const auto s = fixture::strip6();
    const Mask block = fixture::by_labels(s, {1, 5, 2});
    const auto q = induced_subposet(s, block);
    ASSERT_EQ(q.size(), 3);
    // members in index order: label 5, label 1, label 2
    const int five = 0;
    const int one = 1;
    const int two = 2;
    EXPECT_TRUE(q.less(five, one));
    EXPECT_TRUE(q.less(one, two));
    ASSERT_EQ(q.covers().size(), 2u);
    for (const auto& e : q.covers()) {
        if (e.lower == five) {
            EXPECT_EQ(q.edge_kind(e), EdgeKind::Strict);
        } else {
            EXPECT_EQ(e.lower, one);
            EXPECT_EQ(q.edge_kind(e), EdgeKind::Weak);
        }
    }
    // relative label order is kept
    EXPECT_GT(q.label(five), q.label(one));
    EXPECT_LT(q.label(one), q.label(two));
}

TEST(InducedSubposet, SkippedMiddleElementBecomesACover) {
    const auto c = fixture::chain({1, 2, 3}, {1, 1, 1});
    const auto q = induced_subposet(c, bit(0) | bit(2));
    ASSERT_EQ(q.covers().size(), 1u);
    EXPECT_TRUE(q.covered_by(0, 1));
}

TEST(InducedSubposet, RestrictionCommutes) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        const auto p = random_poset(n, 0.5, 1000 + trial);
        const Mask s = (rng() & p.all()) | bit(0);
        const auto ps = induced_subposet(p, s);
        const auto members = mask_elements(s);
        Mask t_local = 0;
        Mask t = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i == 0 || (rng() & 1U)) {
                t_local |= bit(static_cast<int>(i));
                t |= bit(members[i]);
            }
        }
        EXPECT_EQ(induced_subposet(ps, t_local), induced_subposet(p, t));
    }
}

TEST(RandomPoset, DeterministicAndValid) {
    EXPECT_EQ(random_poset(1, 0.5, 7).size(), 1);
    EXPECT_EQ(random_poset(6, 0.5, 42), random_poset(6, 0.5, 42));
    expect_invariants(random_poset(6, 0.5, 42));
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto p = random_poset(n, 0.2 + 0.2 * static_cast<double>(seed % 4), seed);
            expect_invariants(p);
            for (int a = 0; a < n; ++a) {
                EXPECT_LE(p.weight(a), 3);
            }
        }
    }
    EXPECT_THROW(random_poset(0, 0.5, 1), poset_error);
}

TEST(RandomPoset, DensityExtremes) {
    const auto empty = random_poset(6, 0.0, 3);
    EXPECT_TRUE(empty.covers().empty());
    const auto total = random_poset(6, 1.0, 3);
    EXPECT_EQ(total.covers().size(), 5u);
}

TEST(LabeledPoset, LabelLookupAndDerivations) {
    const auto s = fixture::strip6();
    for (int l = 1; l <= 6; ++l) {
        EXPECT_EQ(s.label(s.element_with_label(l)), l);
    }
    EXPECT_THROW(s.with_weights({1, 1}), poset_error);
    const auto heavier = s.with_weights({3, 3, 3, 3, 3, 3});
    EXPECT_EQ(heavier.total_weight(), 18);
    EXPECT_NE(heavier, s);
}
