#pragma once

// Integer compositions and partitions, the refinement order, and the
// scalars z(alpha) and pi(alpha, beta) used by the power sum bases.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace qmn {

/// Nonempty ordered list of positive parts.
///
/// Ordering is graded: first by weight, then lexicographically on parts.
/// Every map keyed by compositions iterates in this order.
class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) {
            throw std::invalid_argument("composition must have at least one part");
        }
        for (int p : parts_) {
            if (p < 1) {
                throw std::invalid_argument("composition parts must be positive");
            }
        }
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Composition& a, const Composition& b) noexcept { return a.parts_ == b.parts_; }

    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) noexcept {
        if (auto c = a.weight_ <=> b.weight_; c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                      b.parts_.end());
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Comma-joined parts, no spaces: "1,5,2".
inline std::string to_string(const Composition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(c[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << '(' << to_string(c) << ')'; }

namespace detail {

inline std::vector<int> parse_parts(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) {
        return parts;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto first = token.find_first_not_of(" \t");
        token = first == std::string_view::npos ? std::string_view{} : token.substr(first, token.find_last_not_of(" \t") - first + 1);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos || token.size() > 9) {
            throw std::invalid_argument("malformed part list: '" + std::string(text) + "'");
        }
        parts.push_back(std::stoi(std::string(token)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return parts;
}

}  // namespace detail

inline Composition parse_composition(std::string_view text) { return Composition(detail::parse_parts(text)); }

/// Weakly decreasing list of positive parts. The empty partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// Part i, or 0 past the end.
    int part_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        if (auto c = a.weight() <=> b.weight(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                      b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(p[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << to_string(p) << ')'; }

inline Partition parse_partition(std::string_view text) { return Partition(detail::parse_parts(text)); }

/// The partition obtained by sorting the parts of alpha.
inline Partition sorted_partition(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

/// All compositions beta that alpha refines, in canonical order.
/// There are 2^(length-1) of them: one per subset of the internal cut points.
inline std::vector<Composition> coarsenings(const Composition& alpha) {
    const std::size_t len = alpha.length();
    const std::size_t cuts = len - 1;
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << cuts);
    for (std::size_t keep = 0; keep < (std::size_t{1} << cuts); ++keep) {
        std::vector<int> parts;
        int run = alpha[0];
        for (std::size_t i = 1; i < len; ++i) {
            if (keep & (std::size_t{1} << (i - 1))) {
                parts.push_back(run);
                run = alpha[i];
            } else {
                run += alpha[i];
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff beta is obtained from alpha by summing consecutive runs of parts.
inline bool is_refinement(const Composition& alpha, const Composition& beta) {
    if (alpha.weight() != beta.weight() || alpha.length() < beta.length()) {
        return false;
    }
    std::size_t i = 0;
    for (int target : beta) {
        int run = 0;
        while (run < target && i < alpha.length()) {
            run += alpha[i++];
        }
        if (run != target) {
            return false;
        }
    }
    return i == alpha.length();
}

/// The blocks of alpha summing to the successive parts of beta.
/// Precondition: is_refinement(alpha, beta).
inline std::vector<std::vector<int>> refinement_blocks(const Composition& alpha, const Composition& beta) {
    if (!is_refinement(alpha, beta)) {
        throw std::invalid_argument(to_string(alpha) + " does not refine " + to_string(beta));
    }
    std::vector<std::vector<int>> blocks;
    std::size_t i = 0;
    for (int target : beta) {
        std::vector<int> block;
        int run = 0;
        while (run < target) {
            run += alpha[i];
            block.push_back(alpha[i++]);
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

/// z_alpha = prod_i i^{m_i} m_i!, with m_i the multiplicity of part i.
inline Integer z(const Composition& alpha) {
    std::map<int, int> multiplicity;
    for (int p : alpha) {
        ++multiplicity[p];
    }
    Integer result = 1;
    for (const auto& [part, m] : multiplicity) {
        for (int k = 1; k <= m; ++k) {
            result *= part;
            result *= k;
        }
    }
    return result;
}

inline Integer z(const Partition& mu) { return mu.empty() ? Integer(1) : z(mu.as_composition()); }

/// Product over the blocks of beta of the running sums of alpha's parts within the block.
inline Integer pi(const Composition& alpha, const Composition& beta) {
    Integer result = 1;
    for (const auto& block : refinement_blocks(alpha, beta)) {
        int running = 0;
        for (int part : block) {
            running += part;
            result *= running;
        }
    }
    return result;
}

/// All distinct orderings of mu's parts, in canonical order.
inline std::vector<Composition> rearrangements(const Partition& mu) {
    std::vector<int> parts = mu.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

/// All compositions of n in canonical order (n >= 1).
inline std::vector<Composition> compositions_of(int n) {
    if (n < 1) {
        throw std::invalid_argument("compositions_of requires n >= 1");
    }
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    return coarsenings(Composition(ones));
}

/// All partitions of n, in canonical (lexicographic) order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qmn
