#pragma once

// Reference posets used across the test suite.

#include <utility>
#include <vector>

#include "qmn/labeled_poset.hpp"

namespace fixture {

using qmn::LabeledPoset;

/// Six-element weighted border strip. Index i carries labels()[i]; the two
/// lowest covers are strict.
inline LabeledPoset strip6() {
    return LabeledPoset::from_covers(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}}, {6, 5, 1, 2, 3, 4},
                                     {1, 2, 1, 2, 1, 1});
}

/// Four-element diamond where two rooted surjections of type (2,2) cancel.
inline LabeledPoset cancellation4() {
    return LabeledPoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {4, 3, 1, 2}, {1, 1, 1, 1});
}

/// Nine-element poset that is not a generalized border strip. Element i has
/// label i + 1; relations are listed by label.
inline LabeledPoset non_strip9() {
    const std::vector<std::pair<int, int>> by_label{{7, 1}, {7, 2}, {2, 6}, {6, 3}, {3, 8}, {2, 5},
                                                    {1, 6}, {5, 9}, {6, 9}, {1, 4}, {4, 3}, {9, 8}};
    std::vector<std::pair<int, int>> relations;
    for (const auto& [a, b] : by_label) {
        relations.emplace_back(a - 1, b - 1);
    }
    return LabeledPoset::from_covers(9, relations, {1, 2, 3, 4, 5, 6, 7, 8, 9}, std::vector<int>(9, 1));
}

/// Mask of the elements carrying the given labels.
inline qmn::Mask by_labels(const LabeledPoset& p, std::initializer_list<int> labels) {
    qmn::Mask m = 0;
    for (int l : labels) {
        m |= qmn::bit(p.element_with_label(l));
    }
    return m;
}

inline LabeledPoset chain(std::vector<int> labels, std::vector<int> weights) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) {
        rel.emplace_back(i, i + 1);
    }
    return LabeledPoset::from_covers(n, rel, std::move(labels), std::move(weights));
}

inline LabeledPoset antichain(std::vector<int> labels, std::vector<int> weights) {
    const int n = static_cast<int>(labels.size());
    return LabeledPoset::from_covers(n, {}, std::move(labels), std::move(weights));
}

}  // namespace fixture
