#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "qmn/rewrites.hpp"
#include "qmn/surjections.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace qmn;

namespace {

// All maps P -> [ell] that hit every level and satisfy the order condition,
// straight from the definition.
std::set<std::vector<int>> brute_surjections(const LabeledPoset& p, int ell, bool strict) {
    const int n = p.size();
    std::set<std::vector<int>> out;
    std::vector<int> f(static_cast<std::size_t>(n), 1);
    while (true) {
        std::vector<bool> hit(ell + 1, false);
        for (int v : f) {
            hit[v] = true;
        }
        bool ok = std::count(hit.begin() + 1, hit.end(), true) == ell;
        for (int a = 0; a < n && ok; ++a) {
            for (int b = 0; b < n && ok; ++b) {
                if (p.less(a, b)) {
                    ok = f[a] < f[b] || (f[a] == f[b] && !(strict && p.label(a) > p.label(b)));
                }
            }
        }
        if (ok) {
            out.insert(f);
        }
        int i = 0;
        while (i < n && ++f[i] > ell) {
            f[i++] = 1;
        }
        if (i == n) {
            break;
        }
    }
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<OrderSurjection>& v) {
    std::set<std::vector<int>> out;
    for (const auto& f : v) {
        out.insert(f.levels);
    }
    return out;
}

QsymExpr mono(std::initializer_list<std::pair<Composition, int>> terms) {
    QsymExpr e(Basis::Monomial);
    for (const auto& [alpha, c] : terms) {
        e.add(alpha, c);
    }
    return e;
}

}  // namespace

TEST(OrderSurjections, SmallExamples) {
    const auto chain2 = fixture::chain({1, 2}, {1, 1});
    const auto anti2 = fixture::antichain({1, 2}, {1, 1});
    ASSERT_EQ(enumerate_order_surjections(chain2, 2).size(), 1u);
    EXPECT_EQ(enumerate_order_surjections(chain2, 2)[0].levels, (std::vector<int>{1, 2}));
    EXPECT_EQ(enumerate_order_surjections(anti2, 2).size(), 2u);
    EXPECT_EQ(enumerate_order_surjections(anti2, 1).size(), 1u);
    EXPECT_TRUE(enumerate_order_surjections(chain2, 3).empty());
}

TEST(PartitionSurjections, SmallExamples) {
    EXPECT_EQ(enumerate_partition_surjections(fixture::chain({1, 2}, {1, 1}), 1).size(), 1u);
    EXPECT_TRUE(enumerate_partition_surjections(fixture::chain({2, 1}, {1, 1}), 1).empty());
    EXPECT_TRUE(enumerate_partition_surjections(fixture::strip6(), 1).empty());
}

TEST(Surjections, DerivedCompositions) {
    const auto s = fixture::strip6();
    OrderSurjection f;
    f.ell = 3;
    // labels 6 | 5,1,2 | 3,4
    f.levels = {1, 2, 2, 2, 3, 3};
    EXPECT_EQ(f.wt(), (Composition{1, 3, 2}));
    EXPECT_EQ(f.wtd(s), (Composition{1, 5, 2}));
    const auto blocks = f.blocks();
    EXPECT_EQ(blocks[1], fixture::by_labels(s, {5, 1, 2}));
}

TEST(Surjections, MatchDefinitionOnRandomPosets) {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const auto p = random_poset(n, 0.4, seed * 31 + n);
            for (int ell = 1; ell <= n; ++ell) {
                const auto order = as_set(enumerate_order_surjections(p, ell));
                const auto part = as_set(enumerate_partition_surjections(p, ell));
                EXPECT_EQ(order, brute_surjections(p, ell, false));
                EXPECT_EQ(part, brute_surjections(p, ell, true));
                EXPECT_TRUE(std::includes(order.begin(), order.end(), part.begin(), part.end()));
            }
        }
    }
}

TEST(Surjections, PartitionSubsetOfOrderUpToSeven) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto p = random_poset(7, 0.3 + 0.1 * static_cast<double>(seed % 4), seed);
        for (int ell = 1; ell <= 7; ++ell) {
            const auto order = as_set(enumerate_order_surjections(p, ell));
            const auto part = as_set(enumerate_partition_surjections(p, ell));
            EXPECT_TRUE(std::includes(order.begin(), order.end(), part.begin(), part.end()));
        }
    }
}

TEST(Surjections, DeterministicOrder) {
    const auto s = fixture::strip6();
    EXPECT_EQ(enumerate_order_surjections(s, 3), enumerate_order_surjections(s, 3));
}

TEST(MonomialExpansion, SmallExamples) {
    EXPECT_EQ(monomial_expansion(fixture::chain({2, 1}, {1, 1})), mono({{{1, 1}, 1}}));
    EXPECT_EQ(monomial_expansion(fixture::antichain({1, 2}, {1, 1})), mono({{{1, 1}, 2}, {{2}, 1}}));
    EXPECT_EQ(monomial_expansion(fixture::antichain({1}, {3})), mono({{{3}, 1}}));
}

TEST(MonomialExpansion, NaturalChainIsSumOverCoarsenings) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& d : compositions_of(n)) {
            std::vector<int> labels(d.length());
            for (std::size_t i = 0; i < labels.size(); ++i) {
                labels[i] = static_cast<int>(i) + 1;
            }
            QsymExpr expected(Basis::Monomial);
            for (const auto& beta : coarsenings(d)) {
                expected.add(beta, 1);
            }
            EXPECT_EQ(monomial_expansion(fixture::chain(labels, d.parts())), expected) << to_string(d);
        }
    }
}

TEST(MonomialExpansion, AgreesWithBruteForcePolynomial) {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const auto p = random_poset(n, 0.1 + 0.2 * static_cast<double>(seed % 5), 500 + seed);
            // n variables suffice: a (P,omega)-partition uses at most n distinct values
            EXPECT_EQ(oracle::monomial_polynomial(monomial_expansion(p), n), oracle::poset_polynomial(p, n));
        }
    }
    EXPECT_EQ(oracle::monomial_polynomial(monomial_expansion(fixture::strip6()), 6),
              oracle::poset_polynomial(fixture::strip6(), 6));
}

TEST(MonomialExpansion, HomogeneousOfTotalWeight) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto p = random_poset(6, 0.5, seed);
        EXPECT_EQ(monomial_expansion(p).degree(), p.total_weight());
    }
}

TEST(MonomialExpansion, AddEdgeAndSplitWeightIdentities) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const auto p = random_poset(n, 0.35, seed + 7000);
        const QsymExpr k = monomial_expansion(p);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!p.comparable(a, b)) {
                    const auto [lo, hi] = add_edge_pair(p, a, b);
                    EXPECT_EQ(k, monomial_expansion(lo) + monomial_expansion(hi));
                }
            }
            for (int d1 = 1; d1 < p.weight(a); ++d1) {
                const auto sp = split_weight(p, a, d1, p.weight(a) - d1);
                EXPECT_EQ(k, monomial_expansion(sp.p_prime) - monomial_expansion(sp.p_doubleprime));
            }
        }
    }
}

TEST(MonomialExpansion, NaturalLabelingsAgree) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto p = natural_relabeling(random_poset(6, 0.4, seed));
        // a second natural labeling from the reversed tie order
        std::vector<int> order = p.linear_extension();
        std::vector<int> labels(order.size());
        // reverse within equal predecessor counts keeps a linear extension
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            const int cx = std::popcount(p.below(x));
            const int cy = std::popcount(p.below(y));
            return cx != cy ? cx < cy : x > y;
        });
        for (std::size_t i = 0; i < order.size(); ++i) {
            labels[order[i]] = static_cast<int>(i) + 1;
        }
        const auto q = p.with_labels(labels);
        ASSERT_TRUE(is_naturally_labeled(q));
        EXPECT_EQ(monomial_expansion(p), monomial_expansion(q));
    }
}

TEST(SizeGuard, RefusesLargePosets) {
    const auto p = random_poset(11, 0.5, 1);
    EXPECT_THROW(monomial_expansion(p), size_guard_error);
    EXPECT_THROW(enumerate_order_surjections(p, 2), size_guard_error);
    EXPECT_NO_THROW(enumerate_order_surjections(random_poset(11, 1.0, 1), 11, 11));
}
