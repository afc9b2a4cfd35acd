#pragma once

// Skew Young diagrams as labeled posets and the symmetric group characters
// chi_lambda(mu), computed two ways: as psi-hat coefficients of the shape
// poset, and by summing (-1)^height over border strip tableaux.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "labeled_poset.hpp"
#include "mn_rule.hpp"
#include "numeric.hpp"
#include "qsym.hpp"
#include "surjections.hpp"

namespace qmn {

/// outer / inner, English convention (row 0 on top).
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (inner_.length() > outer_.length()) {
            throw std::invalid_argument("inner shape has more rows than outer shape");
        }
        for (std::size_t r = 0; r < inner_.length(); ++r) {
            if (inner_[r] > outer_[r]) {
                throw std::invalid_argument("inner shape does not fit inside outer shape");
            }
        }
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.weight() - inner_.weight(); }
    std::size_t rows() const noexcept { return outer_.length(); }
    int row_begin(std::size_t r) const noexcept { return inner_.part_or_zero(r); }
    int row_end(std::size_t r) const noexcept { return outer_.part_or_zero(r); }

    /// Cells (row, column) in row-major order; position = element index of shape_to_poset.
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t r = 0; r < rows(); ++r) {
            for (int c = row_begin(r); c < row_end(r); ++c) {
                out.emplace_back(static_cast<int>(r), c);
            }
        }
        return out;
    }

private:
    Partition outer_;
    Partition inner_;
};

enum class ShapeLabeling {
    BottomRowFirst,  // rows from the bottom up, left to right within a row
    ColumnWise,      // columns left to right, bottom to top within a column
};

/// One element per cell, (r,c) < (r,c+1) weak and (r,c) < (r+1,c) strict,
/// all weights 1. K of the result is the skew Schur function.
inline LabeledPoset shape_to_poset(const SkewShape& shape, ShapeLabeling labeling = ShapeLabeling::BottomRowFirst) {
    const auto cells = shape.cells();
    if (cells.empty()) {
        throw std::invalid_argument("shape_to_poset requires a nonempty shape");
    }
    const int n = static_cast<int>(cells.size());
    auto index_of = [&](int r, int c) -> int {
        for (int i = 0; i < n; ++i) {
            if (cells[i] == std::pair{r, c}) {
                return i;
            }
        }
        return -1;
    };
    std::vector<std::pair<int, int>> relations;
    for (int i = 0; i < n; ++i) {
        const auto [r, c] = cells[i];
        if (int right = index_of(r, c + 1); right >= 0) {
            relations.emplace_back(i, right);
        }
        if (int down = index_of(r + 1, c); down >= 0) {
            relations.emplace_back(i, down);
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }
    if (labeling == ShapeLabeling::BottomRowFirst) {
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return cells[a].first > cells[b].first; });
    } else {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (cells[a].second != cells[b].second) {
                return cells[a].second < cells[b].second;
            }
            return cells[a].first > cells[b].first;
        });
    }
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        labels[order[k]] = k + 1;
    }
    return LabeledPoset::from_covers(n, relations, std::move(labels), std::vector<int>(static_cast<std::size_t>(n), 1));
}

/// chi_lambda(mu) read off as the psi-hat_mu coefficient of the shape poset.
/// Works for skew shapes; mu may be given in any order.
inline Integer chi(const SkewShape& shape, const Composition& mu, int max_n = kDefaultMaxN) {
    if (shape.size() != mu.weight()) {
        throw std::invalid_argument("chi: |shape| = " + std::to_string(shape.size()) +
                                    " differs from |mu| = " + std::to_string(mu.weight()));
    }
    const Rational c = mn_expansion(shape_to_poset(shape), max_n).coefficient(mu);
    return boost::multiprecision::numerator(c);
}

inline Integer chi(const Partition& lambda, const Partition& mu, int max_n = kDefaultMaxN) {
    if (lambda.weight() != mu.weight()) {
        throw std::invalid_argument("chi: |lambda| differs from |mu|");
    }
    return chi(SkewShape(lambda), mu.as_composition(), max_n);
}

/// strip_of[r][c - row_begin(r)] is the 1-based strip holding cell (r, c).
/// Strips 1..i always form a skew shape over the inner shape.
struct BorderStripTableau {
    std::vector<std::vector<int>> strip_of;
    std::vector<int> heights;  // per strip: rows spanned minus one

    int height() const {
        int total = 0;
        for (int h : heights) {
            total += h;
        }
        return total;
    }
};

/// All border strip tableaux of the given shape whose i-th strip has mu[i] cells.
inline std::vector<BorderStripTableau> border_strip_tableaux(const SkewShape& shape, const Composition& mu) {
    if (shape.size() != mu.weight()) {
        throw std::invalid_argument("border_strip_tableaux: size mismatch");
    }
    const std::size_t rows = shape.rows();
    std::vector<int> lower(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        lower[r] = shape.row_begin(r);
    }

    std::vector<BorderStripTableau> out;
    BorderStripTableau current;
    current.strip_of.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        current.strip_of[r].assign(static_cast<std::size_t>(shape.row_end(r) - shape.row_begin(r)), 0);
    }
    current.heights.assign(mu.length(), 0);

    // Removes strip k (size mu[k-1]) from the current outer rows `outer`.
    auto remove_strip = [&](auto&& self, std::vector<int>& outer, std::size_t k) -> void {
        if (k == 0) {
            out.push_back(current);
            return;
        }
        const int size = mu[k - 1];
        std::vector<int> kept(rows);
        // choose kept[r] row by row: lower[r] <= kept[r] <= outer[r], kept weakly decreasing
        auto choose = [&](auto&& choose_self, std::size_t r, int removed) -> void {
            if (removed > size) {
                return;
            }
            if (r == rows) {
                if (removed != size) {
                    return;
                }
                int first = -1;
                int last = -1;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (outer[i] > kept[i]) {
                        if (first < 0) {
                            first = static_cast<int>(i);
                        } else if (last != static_cast<int>(i) - 1) {
                            return;  // gap between occupied rows
                        }
                        last = static_cast<int>(i);
                    }
                }
                for (int i = first; i < last; ++i) {
                    // rows i, i+1 must share exactly one column
                    if (outer[i + 1] - kept[i] != 1) {
                        return;
                    }
                }
                for (int i = first; i <= last; ++i) {
                    for (int c = kept[i]; c < outer[i]; ++c) {
                        current.strip_of[i][c - lower[i]] = static_cast<int>(k);
                    }
                }
                current.heights[k - 1] = last - first;
                std::vector<int> next = kept;
                self(self, next, k - 1);
                return;
            }
            const int hi = std::min(outer[r], r == 0 ? outer[r] : kept[r - 1]);
            for (int v = lower[r]; v <= hi; ++v) {
                kept[r] = v;
                choose_self(choose_self, r + 1, removed + (outer[r] - v));
            }
        };
        choose(choose, 0, 0);
    };

    std::vector<int> outer(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        outer[r] = shape.row_end(r);
    }
    remove_strip(remove_strip, outer, mu.length());
    return out;
}

/// chi via border strip tableaux: sum of (-1)^height.
inline Integer chi_bst(const SkewShape& shape, const Composition& mu) {
    Integer total = 0;
    for (const auto& t : border_strip_tableaux(shape, mu)) {
        total += (t.height() % 2 == 0) ? 1 : -1;
    }
    return total;
}

inline Integer chi_bst(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) {
        throw std::invalid_argument("chi_bst: |lambda| differs from |mu|");
    }
    return chi_bst(SkewShape(lambda), mu.as_composition());
}

/// The level map of shape_to_poset(shape) sending each cell to its strip.
inline OrderSurjection tableau_surjection(const SkewShape& shape, const BorderStripTableau& t) {
    OrderSurjection f;
    f.ell = static_cast<int>(t.heights.size());
    for (const auto& [r, c] : shape.cells()) {
        f.levels.push_back(t.strip_of[r][c - shape.row_begin(static_cast<std::size_t>(r))]);
    }
    return f;
}

struct CharacterValue {
    Partition lambda;
    Partition mu;
    Integer value;
};

/// Full character table of S_n, both indices in canonical partition order.
inline std::vector<CharacterValue> character_table(int n, int max_n = kDefaultMaxN) {
    std::vector<CharacterValue> out;
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
        const QsymExpr expansion = mn_expansion(shape_to_poset(SkewShape(lambda)), max_n);
        for (const auto& mu : parts) {
            out.push_back({lambda, mu, boost::multiprecision::numerator(expansion.coefficient(mu.as_composition()))});
        }
    }
    return out;
}

}  // namespace qmn
