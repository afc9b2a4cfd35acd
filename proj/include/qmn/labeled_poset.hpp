#pragma once

// Weighted labeled posets (P, omega, d).
//
// Elements are indices 0..n-1. The labeling omega is a separate permutation
// of 1..n and d assigns a positive weight to every element. The order is
// stored transitively closed as bit masks, so n is capped at 64; enumeration
// guards elsewhere keep real inputs far below that.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmn {

using Mask = std::uint64_t;

inline constexpr int kMaxPosetSize = 64;

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }
constexpr Mask full_mask(int n) noexcept { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// Indices of the set bits in ascending order.
inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

class poset_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class EdgeKind { Weak, Strict };

struct Cover {
    int lower;
    int upper;
    friend auto operator<=>(const Cover&, const Cover&) = default;
};

class LabeledPoset {
public:
    /// Builds from any generating set of relations (lower, upper).
    /// Redundant pairs are absorbed; the Hasse diagram is recomputed.
    static LabeledPoset from_covers(int n, const std::vector<std::pair<int, int>>& relations, std::vector<int> labels,
                                    std::vector<int> weights) {
        check_size(n);
        std::vector<Mask> up(static_cast<std::size_t>(n), 0);
        for (const auto& [a, b] : relations) {
            if (a < 0 || a >= n || b < 0 || b >= n) {
                throw poset_error("relation (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") references an element outside 0.." + std::to_string(n - 1));
            }
            if (a == b) {
                throw poset_error("cycle detected: element " + std::to_string(a) + " related to itself");
            }
            up[a] |= bit(b);
        }
        return LabeledPoset(std::move(up), std::move(labels), std::move(weights));
    }

    /// Builds from per-element masks of (not necessarily all) strictly greater elements.
    static LabeledPoset from_upsets(std::vector<Mask> up, std::vector<int> labels, std::vector<int> weights) {
        check_size(static_cast<int>(up.size()));
        return LabeledPoset(std::move(up), std::move(labels), std::move(weights));
    }

    int size() const noexcept { return n_; }
    Mask all() const noexcept { return full_mask(n_); }

    bool less(int a, int b) const noexcept { return (above_[a] >> b) & 1U; }
    bool comparable(int a, int b) const noexcept { return a == b || less(a, b) || less(b, a); }
    /// Elements strictly above / below a.
    Mask above(int a) const noexcept { return above_[a]; }
    Mask below(int a) const noexcept { return below_[a]; }

    int label(int a) const noexcept { return labels_[a]; }
    int weight(int a) const noexcept { return weights_[a]; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    int total_weight() const noexcept { return std::accumulate(weights_.begin(), weights_.end(), 0); }

    /// Element carrying label k (1-based).
    int element_with_label(int k) const {
        auto it = std::find(labels_.begin(), labels_.end(), k);
        if (it == labels_.end()) {
            throw poset_error("no element has label " + std::to_string(k));
        }
        return static_cast<int>(it - labels_.begin());
    }

    /// Hasse diagram edges, sorted.
    const std::vector<Cover>& covers() const noexcept { return covers_; }

    /// a covered by b in P.
    bool covered_by(int a, int b) const noexcept { return less(a, b) && (above_[a] & below_[b]) == 0; }

    /// a <_P b and omega(a) > omega(b).
    bool strict_relation(int a, int b) const noexcept { return less(a, b) && labels_[a] > labels_[b]; }

    EdgeKind edge_kind(const Cover& e) const noexcept {
        return labels_[e.lower] > labels_[e.upper] ? EdgeKind::Strict : EdgeKind::Weak;
    }

    /// A fixed linear extension: elements by number of predecessors, ties by index.
    const std::vector<int>& linear_extension() const noexcept { return linear_extension_; }

    /// Same order and labeling, different weights.
    LabeledPoset with_weights(std::vector<int> weights) const {
        return LabeledPoset(above_, labels_, std::move(weights));
    }

    /// Same order and weights, different labeling.
    LabeledPoset with_labels(std::vector<int> labels) const {
        return LabeledPoset(above_, std::move(labels), weights_);
    }

    friend bool operator==(const LabeledPoset& a, const LabeledPoset& b) {
        return a.above_ == b.above_ && a.labels_ == b.labels_ && a.weights_ == b.weights_;
    }

private:
    static void check_size(int n) {
        if (n < 1 || n > kMaxPosetSize) {
            throw poset_error("poset size must be in 1.." + std::to_string(kMaxPosetSize));
        }
    }

    LabeledPoset(std::vector<Mask> up, std::vector<int> labels, std::vector<int> weights)
        : n_(static_cast<int>(up.size())),
          above_(std::move(up)),
          below_(above_.size(), 0),
          labels_(std::move(labels)),
          weights_(std::move(weights)) {
        const auto n = static_cast<std::size_t>(n_);
        if (labels_.size() != n) {
            throw poset_error("expected " + std::to_string(n) + " labels");
        }
        if (weights_.size() != n) {
            throw poset_error("expected " + std::to_string(n) + " weights");
        }
        std::vector<int> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n_; ++i) {
            if (sorted[i] != i + 1) {
                throw poset_error("labels must be a permutation of 1.." + std::to_string(n_));
            }
        }
        for (int w : weights_) {
            if (w < 1) {
                throw poset_error("weights must be positive");
            }
        }
        close_transitively();
        for (int a = 0; a < n_; ++a) {
            for (int b : mask_elements(above_[a])) {
                below_[b] |= bit(a);
            }
        }
        for (int a = 0; a < n_; ++a) {
            for (int b : mask_elements(above_[a])) {
                if (covered_by(a, b)) {
                    covers_.push_back({a, b});
                }
            }
        }
        linear_extension_.resize(n);
        std::iota(linear_extension_.begin(), linear_extension_.end(), 0);
        std::stable_sort(linear_extension_.begin(), linear_extension_.end(), [this](int a, int b) {
            return std::popcount(below_[a]) < std::popcount(below_[b]);
        });
    }

    void close_transitively() {
        // Warshall on bit rows
        for (int k = 0; k < n_; ++k) {
            for (int a = 0; a < n_; ++a) {
                if ((above_[a] >> k) & 1U) {
                    above_[a] |= above_[k];
                }
            }
        }
        for (int a = 0; a < n_; ++a) {
            if ((above_[a] >> a) & 1U) {
                throw poset_error("cycle detected through element " + std::to_string(a));
            }
        }
    }

    int n_;
    std::vector<Mask> above_;
    std::vector<Mask> below_;
    std::vector<int> labels_;
    std::vector<int> weights_;
    std::vector<Cover> covers_;
    std::vector<int> linear_extension_;
};

/// True iff every Hasse edge is weak.
inline bool is_naturally_labeled(const LabeledPoset& p) {
    return std::none_of(p.covers().begin(), p.covers().end(),
                        [&](const Cover& e) { return p.edge_kind(e) == EdgeKind::Strict; });
}

/// Relabels along the poset's fixed linear extension.
inline LabeledPoset natural_relabeling(const LabeledPoset& p) {
    std::vector<int> labels(static_cast<std::size_t>(p.size()));
    int next = 1;
    for (int a : p.linear_extension()) {
        labels[a] = next++;
    }
    return p.with_labels(std::move(labels));
}

/// Restriction of p to the elements of `subset`.
///
/// Element k of the result is the k-th smallest index of `subset`. Labels are
/// standardized to 1..|subset| keeping their relative order, which leaves
/// every strict/weak relation unchanged.
inline LabeledPoset induced_subposet(const LabeledPoset& p, Mask subset) {
    subset &= p.all();
    if (!subset) {
        throw poset_error("induced_subposet requires a nonempty subset");
    }
    const std::vector<int> members = mask_elements(subset);
    const auto k = members.size();
    std::vector<int> local(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t i = 0; i < k; ++i) {
        local[members[i]] = static_cast<int>(i);
    }
    std::vector<Mask> up(k, 0);
    std::vector<int> labels(k);
    std::vector<int> weights(k);
    for (std::size_t i = 0; i < k; ++i) {
        const int a = members[i];
        for (int b : mask_elements(p.above(a) & subset)) {
            up[i] |= bit(local[b]);
        }
        weights[i] = p.weight(a);
        labels[i] = 1;
        for (int b : members) {
            if (p.label(b) < p.label(a)) {
                ++labels[i];
            }
        }
    }
    return LabeledPoset::from_upsets(std::move(up), std::move(labels), std::move(weights));
}

inline LabeledPoset induced_subposet(const LabeledPoset& p, const std::vector<int>& subset) {
    Mask m = 0;
    for (int a : subset) {
        if (a < 0 || a >= p.size()) {
            throw poset_error("subset element out of range");
        }
        m |= bit(a);
    }
    return induced_subposet(p, m);
}

namespace detail {

/// Uniform integer in [0, bound) by rejection; identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
    }
}

}  // namespace detail

/// Seeded random weighted labeled poset.
///
/// Each pair of a random element order is related with probability
/// `edge_density`; the relation is then transitively closed. Labels are a
/// random permutation and weights are uniform in 1..max_weight.
inline LabeledPoset random_poset(int n, double edge_density, std::uint64_t seed, int max_weight = 3) {
    if (n < 1) {
        throw poset_error("random_poset requires n >= 1");
    }
    if (max_weight < 1) {
        throw poset_error("random_poset requires max_weight >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    detail::shuffle(order, rng);
    std::vector<std::pair<int, int>> relations;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (detail::uniform_unit(rng) < edge_density) {
                relations.emplace_back(order[i], order[j]);
            }
        }
    }
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    detail::shuffle(labels, rng);
    std::vector<int> weights(static_cast<std::size_t>(n));
    for (int& w : weights) {
        w = 1 + static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(max_weight)));
    }
    return LabeledPoset::from_covers(n, relations, std::move(labels), std::move(weights));
}

}  // namespace qmn
