#pragma once

// Generalized border strips, the Liu-Weselcouch tagging, and the weighted
// Murnaghan-Nakayama expansion of K^d_{(P,omega)} in the psi-hat basis.
//
// A block of a surjection is tagged through the Hasse diagram of the induced
// subposet, i.e. covers a < b inside the block with no block element between
// them, never through the ambient covers.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "compositions.hpp"
#include "labeled_poset.hpp"
#include "numeric.hpp"
#include "qsym.hpp"
#include "surjections.hpp"

namespace qmn {

enum class Tag { MinusOne, PlusOne, Star };

struct StripData {
    bool is_gbs = false;
    /// Indexed by element of the poset the data was computed on; only entries
    /// of `members` are meaningful, and only when is_gbs.
    std::vector<Tag> tags;
    Mask members = 0;
    bool is_rooted = false;
    int sign = 0;   // +1 or -1 when rooted
    int root = -1;  // element tagged Star when rooted
    int strict_edges = 0;  // strict covers inside the block
};

namespace detail {

/// Covers of the subposet induced on `block`.
template <class Visitor>
void for_each_block_cover(const LabeledPoset& p, Mask block, Visitor&& visit) {
    for (int a : mask_elements(block)) {
        for (int b : mask_elements(p.above(a) & block)) {
            if ((p.above(a) & p.below(b) & block) == 0) {
                visit(a, b);
            }
        }
    }
}

}  // namespace detail

/// No chain a < b < c in the block with omega(a) < omega(b) > omega(c).
inline bool is_generalized_border_strip(const LabeledPoset& p, Mask block) {
    for (int b : mask_elements(block)) {
        for (int a : mask_elements(p.below(b) & block)) {
            if (p.label(a) > p.label(b)) {
                continue;
            }
            for (int c : mask_elements(p.above(b) & block)) {
                if (p.label(c) < p.label(b)) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_generalized_border_strip(const LabeledPoset& p) { return is_generalized_border_strip(p, p.all()); }

/// Hasse-edge criterion: no element is both the top of a natural cover and
/// the bottom of a strict cover.
inline bool is_gbs_via_hasse(const LabeledPoset& p, Mask block) {
    Mask top_of_natural = 0;
    Mask bottom_of_strict = 0;
    detail::for_each_block_cover(p, block, [&](int a, int b) {
        if (p.label(a) > p.label(b)) {
            bottom_of_strict |= bit(a);
        } else {
            top_of_natural |= bit(b);
        }
    });
    return (top_of_natural & bottom_of_strict) == 0;
}

inline bool is_gbs_via_hasse(const LabeledPoset& p) { return is_gbs_via_hasse(p, p.all()); }

/// Tagging, rootedness, sign and root of the subposet induced on `block`.
/// Uses the Hasse criterion for the border strip test.
inline StripData strip_data(const LabeledPoset& p, Mask block) {
    StripData out;
    out.members = block;
    Mask top_of_natural = 0;
    Mask bottom_of_strict = 0;
    detail::for_each_block_cover(p, block, [&](int a, int b) {
        if (p.label(a) > p.label(b)) {
            bottom_of_strict |= bit(a);
            ++out.strict_edges;
        } else {
            top_of_natural |= bit(b);
        }
    });
    out.is_gbs = (top_of_natural & bottom_of_strict) == 0;
    if (!out.is_gbs) {
        return out;
    }
    out.tags.assign(static_cast<std::size_t>(p.size()), Tag::Star);
    for (int a : mask_elements(block)) {
        if (bottom_of_strict & bit(a)) {
            out.tags[a] = Tag::MinusOne;
        } else if (top_of_natural & bit(a)) {
            out.tags[a] = Tag::PlusOne;
        }
    }
    const Mask stars = block & ~top_of_natural & ~bottom_of_strict;
    out.is_rooted = std::popcount(stars) == 1;
    if (out.is_rooted) {
        out.root = std::countr_zero(stars);
        out.sign = (std::popcount(bottom_of_strict) % 2 == 0) ? 1 : -1;
    }
    return out;
}

/// Whole-poset strip data, with the border strip test done on all chains.
inline StripData strip_data(const LabeledPoset& p) {
    if (!is_generalized_border_strip(p)) {
        StripData out;
        out.members = p.all();
        return out;
    }
    return strip_data(p, p.all());
}

/// Connectivity of the comparability graph restricted to `block`.
inline bool is_connected(const LabeledPoset& p, Mask block) {
    if (!block) {
        return true;
    }
    Mask seen = bit(std::countr_zero(block));
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int a : mask_elements(frontier)) {
            next |= (p.above(a) | p.below(a)) & block;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == block;
}

struct RootedSurjection {
    OrderSurjection f;
    std::vector<StripData> blocks;  // one per level
};

/// O*(P, omega): order-preserving surjections whose every block is a rooted
/// generalized border strip, over all ell.
inline std::vector<RootedSurjection> rooted_surjections(const LabeledPoset& p, int max_n = kDefaultMaxN) {
    check_size_guard(p, max_n);
    std::vector<RootedSurjection> out;
    for (int ell = 1; ell <= p.size(); ++ell) {
        for_each_order_surjection(p, ell, [&](const std::vector<int>& levels) {
            OrderSurjection f{levels, ell};
            std::vector<StripData> data;
            for (Mask block : f.blocks()) {
                data.push_back(strip_data(p, block));
                if (!data.back().is_rooted) {
                    return;
                }
            }
            out.push_back({std::move(f), std::move(data)});
        });
    }
    return out;
}

namespace detail {

/// Accumulates integer coefficients keyed by a composition's parts.
class CoefficientTally {
public:
    void add(const std::vector<int>& key, std::int64_t small, bool overflowed, const Integer& big) {
        Integer& slot = tally_[key];
        if (overflowed) {
            slot += big;
        } else {
            slot += small;
        }
    }

    QsymExpr finish(Basis basis) const {
        QsymExpr out(basis);
        for (const auto& [key, c] : tally_) {
            out.add(Composition(key), Rational(c));
        }
        return out;
    }

private:
    std::map<std::vector<int>, Integer> tally_;
};

/// Product of signed root weights, falling back to big integers on overflow.
struct SignedProduct {
    std::int64_t small = 1;
    bool overflowed = false;
    Integer big = 1;

    void multiply(std::int64_t factor) {
        if (!overflowed) {
            std::int64_t next;
            if (!__builtin_mul_overflow(small, factor, &next)) {
                small = next;
                return;
            }
            overflowed = true;
            big = small;
        }
        big *= factor;
    }
};

struct BlockSummary {
    bool rooted = false;
    std::int64_t factor = 0;  // sign * d(root)
};

}  // namespace detail

/// Weighted Murnaghan-Nakayama expansion: each rooted surjection f adds
/// prod_i sgn(f^{-1}(i)) * d(root(f^{-1}(i))) to the coefficient of psi-hat_{wt(f,d)}.
inline QsymExpr mn_expansion(const LabeledPoset& p, int max_n = kDefaultMaxN) {
    check_size_guard(p, max_n);
    std::unordered_map<Mask, detail::BlockSummary> memo;
    auto summary = [&](Mask block) -> const detail::BlockSummary& {
        auto it = memo.find(block);
        if (it == memo.end()) {
            const StripData data = strip_data(p, block);
            detail::BlockSummary s;
            s.rooted = data.is_rooted;
            if (s.rooted) {
                s.factor = static_cast<std::int64_t>(data.sign) * p.weight(data.root);
            }
            it = memo.emplace(block, s).first;
        }
        return it->second;
    };

    detail::CoefficientTally tally;
    std::vector<Mask> blocks;
    std::vector<int> parts;
    for (int ell = 1; ell <= p.size(); ++ell) {
        for_each_order_surjection(p, ell, [&](const std::vector<int>& levels) {
            blocks.assign(static_cast<std::size_t>(ell), 0);
            parts.assign(static_cast<std::size_t>(ell), 0);
            for (int a = 0; a < p.size(); ++a) {
                blocks[levels[a] - 1] |= bit(a);
                parts[levels[a] - 1] += p.weight(a);
            }
            detail::SignedProduct product;
            for (Mask block : blocks) {
                const auto& s = summary(block);
                if (!s.rooted) {
                    return;
                }
                product.multiply(s.factor);
            }
            tally.add(parts, product.small, product.overflowed, product.big);
        });
    }
    return tally.finish(Basis::PsiHat);
}

/// Expansion for naturally labeled posets through pointed surjections (every
/// block has a unique minimum), weighted by the product of the minima's weights.
inline QsymExpr natural_mn_expansion(const LabeledPoset& p, int max_n = kDefaultMaxN) {
    if (!is_naturally_labeled(p)) {
        throw std::invalid_argument("natural_mn_expansion requires a naturally labeled poset");
    }
    check_size_guard(p, max_n);
    detail::CoefficientTally tally;
    std::vector<Mask> blocks;
    std::vector<int> parts;
    for (int ell = 1; ell <= p.size(); ++ell) {
        for_each_order_surjection(p, ell, [&](const std::vector<int>& levels) {
            blocks.assign(static_cast<std::size_t>(ell), 0);
            parts.assign(static_cast<std::size_t>(ell), 0);
            for (int a = 0; a < p.size(); ++a) {
                blocks[levels[a] - 1] |= bit(a);
                parts[levels[a] - 1] += p.weight(a);
            }
            detail::SignedProduct product;
            for (Mask block : blocks) {
                int minimum = -1;
                for (int a : mask_elements(block)) {
                    if ((p.below(a) & block) == 0) {
                        if (minimum >= 0) {
                            return;
                        }
                        minimum = a;
                    }
                }
                product.multiply(p.weight(minimum));
            }
            tally.add(parts, product.small, product.overflowed, product.big);
        });
    }
    return tally.finish(Basis::PsiHat);
}

}  // namespace qmn
