#pragma once

// Exact checks for naturally labeled weighted chains: the coarsening sum that
// equals one, its q-analog, beta-trees and their linear extensions, and the
// staircase sampling experiment behind the coarsening sum.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "labeled_poset.hpp"
#include "numeric.hpp"

namespace qmn {

/// Integer polynomial in q; coeffs[i] multiplies q^i. No trailing zeros.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<int> coeffs) {
        for (int c : coeffs) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    /// [m]_q = 1 + q + ... + q^{m-1}.
    static QPolynomial q_integer(int m) {
        return QPolynomial(std::vector<Integer>(static_cast<std::size_t>(std::max(m, 0)), Integer(1)));
    }

    static QPolynomial q_power(int k) {
        std::vector<Integer> c(static_cast<std::size_t>(k) + 1, Integer(0));
        c.back() = 1;
        return QPolynomial(std::move(c));
    }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Integer at(const Integer& q) const {
        Integer value = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            value = value * q + *it;
        }
        return value;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), Integer(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    QPolynomial& operator-=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), Integer(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return QPolynomial(std::move(c));
    }

    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    /// Quotient and remainder by a monic divisor.
    friend std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& monic) {
        if (monic.is_zero() || monic.coeffs_.back() != 1) {
            throw std::invalid_argument("divmod requires a monic divisor");
        }
        std::vector<Integer> rem = a.coeffs_;
        const std::size_t dd = monic.coeffs_.size();
        if (rem.size() < dd) {
            return {QPolynomial{}, a};
        }
        std::vector<Integer> quot(rem.size() - dd + 1, Integer(0));
        for (std::size_t i = rem.size(); i-- >= dd;) {
            const Integer lead = rem[i];
            if (lead == 0) {
                continue;
            }
            const std::size_t shift = i - (dd - 1);
            quot[shift] = lead;
            for (std::size_t j = 0; j < dd; ++j) {
                rem[shift + j] -= lead * monic.coeffs_[j];
            }
        }
        return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
    }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Integer> coeffs_;
};

inline std::string to_string(const QPolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Integer& c = p.coeffs()[i];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
        } else if (c < 0) {
            out += "-";
        }
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (i == 0 || mag != 1) {
            out += mag.str();
        }
        if (i >= 1) {
            out += "q";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

/// Block structure of a coarsening alpha of d: the 1-based index i_j where
/// each block starts and the weight d_{i_j} leading it.
struct CoarseningData {
    std::vector<int> breakpoints;
    std::vector<int> root_weights;
};

inline CoarseningData coarsening_data(const Composition& d, const Composition& alpha) {
    if (!is_refinement(d, alpha)) {
        throw std::invalid_argument(to_string(alpha) + " is not a coarsening of " + to_string(d));
    }
    CoarseningData out;
    std::size_t i = 0;
    for (int target : alpha) {
        out.breakpoints.push_back(static_cast<int>(i) + 1);
        out.root_weights.push_back(d[i]);
        int run = 0;
        while (run < target) {
            run += d[i++];
        }
    }
    return out;
}

/// The coarsening of d that groups consecutive parts by the block sizes in beta
/// (beta is a composition of length(d)).
inline Composition coarsening_from_blocks(const Composition& d, const Composition& beta) {
    if (beta.weight() != static_cast<int>(d.length())) {
        throw std::invalid_argument("block sizes " + to_string(beta) + " must sum to length(d) = " +
                                    std::to_string(d.length()));
    }
    std::vector<int> parts;
    std::size_t i = 0;
    for (int size : beta) {
        int sum = 0;
        for (int k = 0; k < size; ++k) {
            sum += d[i++];
        }
        parts.push_back(sum);
    }
    return Composition(std::move(parts));
}

/// prod_j d_{i_j} / (alpha_1 + ... + alpha_j).
inline Rational probabilistic_term(const Composition& d, const Composition& alpha) {
    const CoarseningData data = coarsening_data(d, alpha);
    Rational term = 1;
    int prefix = 0;
    for (std::size_t j = 0; j < alpha.length(); ++j) {
        prefix += alpha[j];
        term *= Rational(data.root_weights[j], prefix);
    }
    return term;
}

/// Sum of probabilistic_term over all coarsenings of d; exactly 1 for every d.
inline Rational probabilistic_sum(const Composition& d) {
    Rational total = 0;
    for (const auto& alpha : coarsenings(d)) {
        total += probabilistic_term(d, alpha);
    }
    return total;
}

/// Numerator and denominator of the q-analog term
/// prod_j q^{alpha_1+...+alpha_{j-1}} [d_{i_j}]_q / [alpha_1+...+alpha_j]_q.
inline std::pair<QPolynomial, QPolynomial> q_probabilistic_term(const Composition& d, const Composition& alpha) {
    const CoarseningData data = coarsening_data(d, alpha);
    QPolynomial num{1};
    QPolynomial den{1};
    int prefix = 0;
    for (std::size_t j = 0; j < alpha.length(); ++j) {
        num *= QPolynomial::q_power(prefix) * QPolynomial::q_integer(data.root_weights[j]);
        prefix += alpha[j];
        den *= QPolynomial::q_integer(prefix);
    }
    return {num, den};
}

/// The q-analog sum over a common denominator.
///
/// Every partial sum alpha_1+...+alpha_j is a prefix sum S_t of d, so
/// prod_t [S_t]_q clears all denominators; a term's numerator is multiplied
/// by the [S_t]_q factors for the prefixes t that do not end one of its blocks.
inline std::pair<QPolynomial, QPolynomial> q_probabilistic_fraction(const Composition& d) {
    const std::size_t len = d.length();
    std::vector<int> prefix(len + 1, 0);
    for (std::size_t t = 1; t <= len; ++t) {
        prefix[t] = prefix[t - 1] + d[t - 1];
    }
    QPolynomial common{1};
    for (std::size_t t = 1; t <= len; ++t) {
        common *= QPolynomial::q_integer(prefix[t]);
    }
    QPolynomial total;
    for (const auto& alpha : coarsenings(d)) {
        const CoarseningData data = coarsening_data(d, alpha);
        std::vector<bool> ends(len + 1, false);
        for (std::size_t j = 0; j < alpha.length(); ++j) {
            const int next_start = j + 1 < alpha.length() ? data.breakpoints[j + 1] : static_cast<int>(len) + 1;
            ends[static_cast<std::size_t>(next_start - 1)] = true;
        }
        QPolynomial num = q_probabilistic_term(d, alpha).first;
        for (std::size_t t = 1; t <= len; ++t) {
            if (!ends[t]) {
                num *= QPolynomial::q_integer(prefix[t]);
            }
        }
        total += num;
    }
    return {total, common};
}

inline bool q_identity_holds(const Composition& d) {
    const auto [num, den] = q_probabilistic_fraction(d);
    return num == den;
}

/// The q-analog sum as a polynomial (the constant 1 when the identity holds).
/// Throws if the cleared numerator is not divisible by the denominator.
inline QPolynomial q_probabilistic_sum(const Composition& d) {
    const auto [num, den] = q_probabilistic_fraction(d);
    auto [quot, rem] = divmod(num, den);
    if (!rem.is_zero()) {
        throw std::logic_error("q-analog sum for " + to_string(d) + " is not a polynomial");
    }
    return quot;
}

/// Tree with internal vertices v_1 < ... < v_k on a spine (v_j a child of
/// v_{j+1}, v_k the root) and alpha_j - 1 leaves hanging from v_j, split into
/// groups d_{i_j} - 1, d_{i_j + 1}, ..., d_{i_{j+1} - 1}.
struct BetaTree {
    int internal_count = 0;
    std::vector<std::vector<int>> leaf_blocks;
    std::vector<Integer> hooks;  // internal vertices only; leaves have hook 1
    /// parent[v] for vertices 0..N-1: internal v_j is vertex j-1, leaves follow.
    std::vector<int> parent;

    int vertex_count() const noexcept { return static_cast<int>(parent.size()); }
};

inline BetaTree beta_tree(const Composition& d, const Composition& beta) {
    const Composition alpha = coarsening_from_blocks(d, beta);
    BetaTree t;
    t.internal_count = static_cast<int>(beta.length());
    for (int j = 0; j < t.internal_count; ++j) {
        t.parent.push_back(j + 1 < t.internal_count ? j + 1 : -1);
    }
    std::size_t i = 0;
    Integer hook = 0;
    for (int j = 0; j < t.internal_count; ++j) {
        std::vector<int> blocks;
        for (int k = 0; k < beta[j]; ++k, ++i) {
            blocks.push_back(k == 0 ? d[i] - 1 : d[i]);
        }
        for (int size : blocks) {
            for (int leaf = 0; leaf < size; ++leaf) {
                t.parent.push_back(j);
            }
        }
        t.leaf_blocks.push_back(std::move(blocks));
        hook += alpha[j];
        t.hooks.push_back(hook);
    }
    return t;
}

/// Hook length formula for trees: N! / prod of hooks.
inline Integer linear_extension_count(const BetaTree& t) {
    Integer denominator = 1;
    for (const auto& h : t.hooks) {
        denominator *= h;
    }
    return factorial(t.vertex_count()) / denominator;
}

struct LinextIdentity {
    Integer lhs;
    Integer rhs;
};

/// sum over beta |= length(d) of |LinExt(beta-tree)| * prod_j d_{i_j}, against (d_1+...+d_l)!.
inline LinextIdentity linext_identity_check(const Composition& d) {
    LinextIdentity out{0, factorial(d.weight())};
    for (const auto& beta : compositions_of(static_cast<int>(d.length()))) {
        const BetaTree t = beta_tree(d, beta);
        const CoarseningData data = coarsening_data(d, coarsening_from_blocks(d, beta));
        Integer product = 1;
        for (int w : data.root_weights) {
            product *= w;
        }
        out.lhs += linear_extension_count(t) * product;
    }
    return out;
}

/// Row (1-based, from the bottom) of the staircase box that value a in
/// 1..d_1+...+d_j falls into: the r with S_{r-1} < a <= S_r.
inline int staircase_row(const Composition& d, int value) {
    int prefix = 0;
    for (std::size_t r = 0; r < d.length(); ++r) {
        prefix += d[r];
        if (value <= prefix) {
            return static_cast<int>(r) + 1;
        }
    }
    throw std::invalid_argument("staircase value out of range");
}

/// Classifies a staircase selection (selected_rows[j] is the chosen row of
/// column j+1) into its event: the last column's box, counted from the top,
/// gives the last block size; that many columns are dropped and the rest
/// is classified the same way.
inline Composition classify_staircase(std::span<const int> selected_rows) {
    std::vector<int> blocks;
    int columns = static_cast<int>(selected_rows.size());
    while (columns > 0) {
        const int row = selected_rows[static_cast<std::size_t>(columns) - 1];
        if (row < 1 || row > columns) {
            throw std::invalid_argument("selected row outside its staircase column");
        }
        const int from_top = columns - row + 1;
        blocks.push_back(from_top);
        columns -= from_top;
    }
    return Composition(std::vector<int>(blocks.rbegin(), blocks.rend()));
}

/// Empirical event frequencies from `samples` uniform draws of
/// (a_1, ..., a_l) with 1 <= a_i <= d_1 + ... + d_i.
inline std::map<Composition, Rational> staircase_monte_carlo(const Composition& d, std::uint64_t samples,
                                                             std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("staircase_monte_carlo requires at least one sample");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> prefix;
    std::uint64_t s = 0;
    for (int part : d) {
        s += static_cast<std::uint64_t>(part);
        prefix.push_back(s);
    }
    std::map<Composition, std::uint64_t> counts;
    std::vector<int> rows(d.length());
    for (std::uint64_t n = 0; n < samples; ++n) {
        for (std::size_t j = 0; j < d.length(); ++j) {
            const auto value = 1 + detail::uniform_below(rng, prefix[j]);
            rows[j] = staircase_row(d, static_cast<int>(value));
        }
        ++counts[classify_staircase(rows)];
    }
    std::map<Composition, Rational> out;
    for (const auto& [beta, count] : counts) {
        out.emplace(beta, Rational(Integer(count), Integer(samples)));
    }
    return out;
}

}  // namespace qmn
