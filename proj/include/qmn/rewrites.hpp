#pragma once

// Structural recurrences on weighted labeled posets:
//   K(P) = K(P') + K(P'')          adding a relation between incomparable a, b
//   K(P) = K(P', w') - K(P', w'')  splitting a vertex's weight d1 + d2
// and a reduction of any poset to a signed list of naturally labeled chains.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "labeled_poset.hpp"
#include "surjections.hpp"

namespace qmn {

/// Adds a < b (first) and b < a (second), after ordering the pair so that
/// omega(a) < omega(b). The first poset therefore gains a weak relation and
/// the second a strict one.
inline std::pair<LabeledPoset, LabeledPoset> add_edge_pair(const LabeledPoset& p, int a, int b) {
    if (a < 0 || b < 0 || a >= p.size() || b >= p.size()) {
        throw poset_error("add_edge_pair: element out of range");
    }
    if (p.comparable(a, b)) {
        throw poset_error("add_edge_pair: elements " + std::to_string(a) + " and " + std::to_string(b) +
                          " are comparable");
    }
    if (p.label(a) > p.label(b)) {
        std::swap(a, b);
    }
    std::vector<Mask> up(static_cast<std::size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) {
        up[x] = p.above(x);
    }
    auto with_relation = [&](int lower, int upper) {
        auto copy = up;
        copy[lower] |= bit(upper);
        return LabeledPoset::from_upsets(std::move(copy), p.labels(), p.weights());
    };
    return {with_relation(a, b), with_relation(b, a)};
}

struct SplitResult {
    LabeledPoset p_prime;        // a- below a+, weak: omega'(a-) < omega'(a+)
    LabeledPoset p_doubleprime;  // same order, labels of a- and a+ swapped
};

/// Splits element a into a- (index a, weight d1) and a+ (index n, weight d2),
/// with a- < a+ and both inheriting every relation of a. Labels above
/// omega(a) shift up by one so both labelings stay bijections onto 1..n+1.
inline SplitResult split_weight(const LabeledPoset& p, int a, int d1, int d2) {
    if (a < 0 || a >= p.size()) {
        throw poset_error("split_weight: element out of range");
    }
    if (d1 < 1 || d2 < 1 || d1 + d2 != p.weight(a)) {
        throw poset_error("split_weight: parts " + std::to_string(d1) + "+" + std::to_string(d2) +
                          " must be positive and sum to d(a) = " + std::to_string(p.weight(a)));
    }
    const int n = p.size();
    const int plus = n;
    std::vector<Mask> up(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 0; x < n; ++x) {
        up[x] = p.above(x);
        if (p.less(x, a)) {
            up[x] |= bit(plus);
        }
    }
    up[a] |= bit(plus);
    up[plus] = p.above(a);

    const int i = p.label(a);
    std::vector<int> labels(static_cast<std::size_t>(n) + 1);
    std::vector<int> weights(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x < n; ++x) {
        labels[x] = p.label(x) + (p.label(x) > i ? 1 : 0);
        weights[x] = p.weight(x);
    }
    weights[a] = d1;
    weights[plus] = d2;

    std::vector<int> swapped = labels;
    labels[a] = i;
    labels[plus] = i + 1;
    swapped[a] = i + 1;
    swapped[plus] = i;
    return {LabeledPoset::from_upsets(up, std::move(labels), weights),
            LabeledPoset::from_upsets(up, std::move(swapped), weights)};
}

/// A chain c_1 < ... < c_m with the given weights whose strict covers are
/// exactly the positions in `descents` (1-based: k means c_k < c_{k+1} is strict).
///
/// Labels are assigned run by run from the top run down, so each maximal run
/// without descents increases and each run boundary is a descent.
inline LabeledPoset labeled_chain(const std::vector<int>& weights, const std::set<int>& descents) {
    const int m = static_cast<int>(weights.size());
    std::vector<std::pair<int, int>> relations;
    for (int k = 0; k + 1 < m; ++k) {
        relations.emplace_back(k, k + 1);
    }
    std::vector<int> labels(static_cast<std::size_t>(m));
    int next = 1;
    int run_end = m;  // exclusive
    for (int start = m - 1; start >= 0; --start) {
        // start begins a run when it is the bottom or the edge below it is a descent
        if (start == 0 || descents.count(start)) {
            for (int k = start; k < run_end; ++k) {
                labels[k] = next++;
            }
            run_end = start;
        }
    }
    return LabeledPoset::from_covers(m, relations, std::move(labels), weights);
}

struct SignedChain {
    int sign;
    LabeledPoset chain;   // naturally labeled chain
    Composition weights;  // bottom to top
};

/// Rewrites K^d_{(P,omega)} as a signed sum of naturally labeled weighted chains.
///
/// While two elements are incomparable, the lexicographically smallest pair
/// (by index) is split with add_edge_pair. A chain is then reduced through its
/// strict covers: for the lowest strict cover c_k < c_{k+1},
///   K(chain) = K(chain with that cover weak) - K(chain with c_k, c_{k+1} merged),
/// which is the weight splitting identity read right to left (a chain's K
/// depends only on its weights and the positions of its strict covers). Each
/// step removes an incomparable pair, a strict cover, or an element.
inline std::vector<SignedChain> reduce_to_natural_chains(const LabeledPoset& p, int max_n = kDefaultMaxN) {
    check_size_guard(p, max_n);
    std::vector<SignedChain> out;

    auto reduce_chain = [&](auto&& self, int sign, std::vector<int> weights, std::set<int> descents) -> void {
        if (descents.empty()) {
            out.push_back({sign, labeled_chain(weights, descents), Composition(weights)});
            return;
        }
        const int k = *descents.begin();
        std::set<int> relaxed = descents;
        relaxed.erase(k);
        self(self, sign, weights, relaxed);

        std::vector<int> merged = weights;
        merged[k - 1] += merged[k];
        merged.erase(merged.begin() + k);
        std::set<int> shifted;
        for (int j : descents) {
            if (j < k) {
                shifted.insert(j);
            } else if (j > k) {
                shifted.insert(j - 1);
            }
        }
        self(self, -sign, std::move(merged), std::move(shifted));
    };

    auto reduce = [&](auto&& self, int sign, const LabeledPoset& q) -> void {
        for (int a = 0; a < q.size(); ++a) {
            for (int b = a + 1; b < q.size(); ++b) {
                if (!q.comparable(a, b)) {
                    auto [lower, upper] = add_edge_pair(q, a, b);
                    self(self, sign, lower);
                    self(self, sign, upper);
                    return;
                }
            }
        }
        const auto& order = q.linear_extension();
        std::vector<int> weights;
        std::set<int> descents;
        for (std::size_t k = 0; k < order.size(); ++k) {
            weights.push_back(q.weight(order[k]));
            if (k + 1 < order.size() && q.label(order[k]) > q.label(order[k + 1])) {
                descents.insert(static_cast<int>(k) + 1);
            }
        }
        reduce_chain(reduce_chain, sign, std::move(weights), std::move(descents));
    };

    reduce(reduce, 1, p);
    return out;
}

}  // namespace qmn
