#pragma once

// Order-preserving surjections P -> [ell] and the brute-force monomial
// expansion of the weighted (P, omega)-partition generating function.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "labeled_poset.hpp"
#include "numeric.hpp"
#include "qsym.hpp"

namespace qmn {

inline constexpr int kDefaultMaxN = 10;

/// Raised when an enumeration would exceed the configured poset size limit.
class size_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check_size_guard(const LabeledPoset& p, int max_n) {
    if (p.size() > max_n) {
        throw size_guard_error("poset has " + std::to_string(p.size()) + " elements; the enumeration limit is " +
                               std::to_string(max_n));
    }
}

/// A surjective level map P -> {1..ell}, weakly order-preserving.
struct OrderSurjection {
    std::vector<int> levels;  // levels[a] in 1..ell
    int ell = 0;

    /// Preimages f^{-1}(1), ..., f^{-1}(ell) as element masks.
    std::vector<Mask> blocks() const {
        std::vector<Mask> out(static_cast<std::size_t>(ell), 0);
        for (std::size_t a = 0; a < levels.size(); ++a) {
            out[levels[a] - 1] |= bit(static_cast<int>(a));
        }
        return out;
    }

    /// Block sizes.
    Composition wt() const {
        std::vector<int> parts(static_cast<std::size_t>(ell), 0);
        for (int level : levels) {
            ++parts[level - 1];
        }
        return Composition(std::move(parts));
    }

    /// Block weight totals.
    Composition wtd(const LabeledPoset& p) const {
        std::vector<int> parts(static_cast<std::size_t>(ell), 0);
        for (std::size_t a = 0; a < levels.size(); ++a) {
            parts[levels[a] - 1] += p.weight(static_cast<int>(a));
        }
        return Composition(std::move(parts));
    }

    friend bool operator==(const OrderSurjection&, const OrderSurjection&) = default;
};

namespace detail {

/// Depth-first level assignment along p's linear extension. Each element gets
/// a level no lower than any predecessor (strictly higher across strict
/// relations when `respect_strict`), and branches that can no longer reach
/// every level are cut.
template <class Visitor>
void for_each_level_map(const LabeledPoset& p, int ell, bool respect_strict, Visitor&& visit) {
    const int n = p.size();
    if (ell < 1 || ell > n) {
        return;
    }
    const auto& order = p.linear_extension();
    std::vector<int> levels(static_cast<std::size_t>(n), 0);
    std::vector<int> used(static_cast<std::size_t>(ell) + 1, 0);
    int distinct = 0;
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        preds[a] = mask_elements(p.below(a));
    }

    auto recurse = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            if (distinct == ell) {
                visit(static_cast<const std::vector<int>&>(levels));
            }
            return;
        }
        const int a = order[idx];
        int lo = 1;
        for (int b : preds[a]) {
            const int need = levels[b] + ((respect_strict && p.label(b) > p.label(a)) ? 1 : 0);
            lo = std::max(lo, need);
        }
        const int remaining_after = n - idx - 1;
        for (int level = lo; level <= ell; ++level) {
            const bool fresh = used[level] == 0;
            const int distinct_after = distinct + (fresh ? 1 : 0);
            if (ell - distinct_after > remaining_after) {
                continue;
            }
            levels[a] = level;
            ++used[level];
            distinct = distinct_after;
            self(self, idx + 1);
            --used[level];
            distinct -= fresh ? 1 : 0;
        }
        levels[a] = 0;
    };
    recurse(recurse, 0);
}

}  // namespace detail

/// Visits every order-preserving surjection onto [ell] (strict edges ignored).
template <class Visitor>
void for_each_order_surjection(const LabeledPoset& p, int ell, Visitor&& visit) {
    detail::for_each_level_map(p, ell, false, std::forward<Visitor>(visit));
}

/// Visits every surjective (P, omega)-partition onto [ell].
template <class Visitor>
void for_each_partition_surjection(const LabeledPoset& p, int ell, Visitor&& visit) {
    detail::for_each_level_map(p, ell, true, std::forward<Visitor>(visit));
}

inline std::vector<OrderSurjection> enumerate_order_surjections(const LabeledPoset& p, int ell,
                                                                int max_n = kDefaultMaxN) {
    check_size_guard(p, max_n);
    std::vector<OrderSurjection> out;
    for_each_order_surjection(p, ell, [&](const std::vector<int>& levels) { out.push_back({levels, ell}); });
    return out;
}

inline std::vector<OrderSurjection> enumerate_partition_surjections(const LabeledPoset& p, int ell,
                                                                    int max_n = kDefaultMaxN) {
    check_size_guard(p, max_n);
    std::vector<OrderSurjection> out;
    for_each_partition_surjection(p, ell, [&](const std::vector<int>& levels) { out.push_back({levels, ell}); });
    return out;
}

/// K^d_{(P,omega)} in the monomial basis: the coefficient of M_beta counts the
/// surjective (P, omega)-partitions whose block weight totals equal beta.
inline QsymExpr monomial_expansion(const LabeledPoset& p, int max_n = kDefaultMaxN) {
    check_size_guard(p, max_n);
    std::map<std::vector<int>, std::uint64_t> counts;
    std::vector<int> parts;
    for (int ell = 1; ell <= p.size(); ++ell) {
        for_each_partition_surjection(p, ell, [&](const std::vector<int>& levels) {
            parts.assign(static_cast<std::size_t>(ell), 0);
            for (int a = 0; a < p.size(); ++a) {
                parts[levels[a] - 1] += p.weight(a);
            }
            ++counts[parts];
        });
    }
    QsymExpr out(Basis::Monomial);
    for (const auto& [key, count] : counts) {
        out.add(Composition(key), Rational(count));
    }
    return out;
}

}  // namespace qmn
