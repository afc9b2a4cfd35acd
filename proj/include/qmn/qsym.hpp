#pragma once

// Quasisymmetric function expressions in the monomial basis M and the
// quasisymmetric power sum bases Psi and psi-hat = Psi / z.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "compositions.hpp"
#include "numeric.hpp"

namespace qmn {

enum class Basis { Monomial, Psi, PsiHat };

/// Short tag used by the text and JSON formats: "M", "Psi", "PsiHat".
inline std::string to_string(Basis b) {
    switch (b) {
        case Basis::Monomial:
            return "M";
        case Basis::Psi:
            return "Psi";
        case Basis::PsiHat:
            return "PsiHat";
    }
    return "?";
}

inline Basis parse_basis(const std::string& text) {
    if (text == "M") {
        return Basis::Monomial;
    }
    if (text == "Psi") {
        return Basis::Psi;
    }
    if (text == "PsiHat") {
        return Basis::PsiHat;
    }
    throw std::invalid_argument("unknown basis '" + text + "' (expected M, Psi or PsiHat)");
}

/// Sparse linear combination of basis elements indexed by compositions.
/// Zero coefficients are never stored.
class QsymExpr {
public:
    using Terms = std::map<Composition, Rational>;

    explicit QsymExpr(Basis basis) : basis_(basis) {}
    QsymExpr(Basis basis, Terms terms) : basis_(basis) {
        for (auto& [alpha, c] : terms) {
            add(alpha, c);
        }
    }

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Common weight of all keys, or nullopt when empty or inhomogeneous.
    std::optional<int> degree() const {
        if (terms_.empty()) {
            return std::nullopt;
        }
        const int d = terms_.begin()->first.weight();
        // keys are graded by weight, so the last key has the largest
        if (terms_.rbegin()->first.weight() != d) {
            return std::nullopt;
        }
        return d;
    }

    void add(const Composition& alpha, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    QsymExpr& operator+=(const QsymExpr& other) {
        require_same_basis(other);
        for (const auto& [alpha, c] : other.terms_) {
            add(alpha, c);
        }
        return *this;
    }

    QsymExpr& operator-=(const QsymExpr& other) {
        require_same_basis(other);
        for (const auto& [alpha, c] : other.terms_) {
            add(alpha, -c);
        }
        return *this;
    }

    QsymExpr& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [alpha, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend QsymExpr operator+(QsymExpr a, const QsymExpr& b) { return a += b; }
    friend QsymExpr operator-(QsymExpr a, const QsymExpr& b) { return a -= b; }
    friend QsymExpr operator*(const Rational& s, QsymExpr a) { return a *= s; }

    /// Structural equality (same basis, same stored terms). See equals() for
    /// equality as quasisymmetric functions.
    friend bool operator==(const QsymExpr&, const QsymExpr&) = default;

private:
    void require_same_basis(const QsymExpr& other) const {
        if (other.basis_ != basis_) {
            throw std::invalid_argument("cannot combine expressions in different bases");
        }
    }

    Basis basis_;
    Terms terms_;
};

/// Expands Psi_alpha = z_alpha * sum_{beta >= alpha} M_beta / pi(alpha, beta),
/// or the same without z_alpha for psi-hat. Monomial input is returned as is.
inline QsymExpr to_monomial(const QsymExpr& expr) {
    if (expr.basis() == Basis::Monomial) {
        return expr;
    }
    QsymExpr out(Basis::Monomial);
    for (const auto& [alpha, c] : expr.terms()) {
        const Rational scale = expr.basis() == Basis::Psi ? Rational(c * z(alpha)) : c;
        for (const auto& beta : coarsenings(alpha)) {
            out.add(beta, scale / Rational(pi(alpha, beta)));
        }
    }
    return out;
}

/// Same as to_monomial but rejects monomial input.
inline QsymExpr psi_to_monomial(const QsymExpr& expr) {
    if (expr.basis() == Basis::Monomial) {
        throw std::invalid_argument("psi_to_monomial expects a Psi or PsiHat expression");
    }
    return to_monomial(expr);
}

/// Rescales between Psi and psi-hat (c psi-hat_alpha = (c / z_alpha) Psi_alpha).
inline QsymExpr rescale_power_sum(const QsymExpr& expr, Basis target) {
    if (expr.basis() == Basis::Monomial || target == Basis::Monomial) {
        throw std::invalid_argument("rescale_power_sum works between Psi and PsiHat only");
    }
    if (expr.basis() == target) {
        return expr;
    }
    QsymExpr out(target);
    for (const auto& [alpha, c] : expr.terms()) {
        const Rational zz(z(alpha));
        out.add(alpha, target == Basis::Psi ? Rational(c / zz) : Rational(c * zz));
    }
    return out;
}

/// Inverts the unitriangular psi-hat -> M change of basis.
///
/// The coefficient of M_beta in sum_a c_a psi-hat_a is sum over a refining beta
/// of c_a / pi(a, beta), so coefficients are solved from finest to coarsest.
inline QsymExpr monomial_to_psihat(const QsymExpr& expr) {
    if (expr.basis() != Basis::Monomial) {
        throw std::invalid_argument("monomial_to_psihat expects a monomial expression");
    }
    std::set<int> degrees;
    for (const auto& [beta, c] : expr.terms()) {
        degrees.insert(beta.weight());
    }
    QsymExpr out(Basis::PsiHat);
    for (int n : degrees) {
        auto all = compositions_of(n);
        std::stable_sort(all.begin(), all.end(),
                         [](const Composition& a, const Composition& b) { return a.length() > b.length(); });
        std::map<Composition, Rational> solved;
        for (const auto& beta : all) {
            Rational residual = expr.coefficient(beta);
            for (const auto& [alpha, c] : solved) {
                if (alpha.length() > beta.length() && is_refinement(alpha, beta)) {
                    residual -= c / Rational(pi(alpha, beta));
                }
            }
            Rational c = residual * Rational(pi(beta, beta));
            if (c != 0) {
                solved.emplace(beta, c);
                out.add(beta, c);
            }
        }
    }
    return out;
}

/// Converts to the requested basis through the monomial basis when needed.
inline QsymExpr to_basis(const QsymExpr& expr, Basis target) {
    if (expr.basis() == target) {
        return expr;
    }
    if (target == Basis::Monomial) {
        return to_monomial(expr);
    }
    if (expr.basis() != Basis::Monomial) {
        return rescale_power_sum(expr, target);
    }
    const QsymExpr hat = monomial_to_psihat(expr);
    return target == Basis::PsiHat ? hat : rescale_power_sum(hat, target);
}

/// p_mu = sum of Psi_alpha over the rearrangements alpha of mu.
inline QsymExpr power_sum_symmetric(const Partition& mu) {
    if (mu.empty()) {
        throw std::invalid_argument("power_sum_symmetric requires a nonempty partition");
    }
    QsymExpr out(Basis::Psi);
    for (const auto& alpha : rearrangements(mu)) {
        out.add(alpha, 1);
    }
    return out;
}

/// Value of M_alpha at a finite point: sum over increasing index tuples.
inline Rational evaluate_monomial(const Composition& alpha, std::span<const Rational> point) {
    const std::size_t m = point.size();
    const std::size_t len = alpha.length();
    if (len > m) {
        return 0;
    }
    // partial[k] = sum over tuples using the first k parts on the variables seen so far
    std::vector<Rational> partial(len + 1, Rational(0));
    partial[0] = 1;
    for (std::size_t v = 0; v < m; ++v) {
        for (std::size_t k = std::min(len, v + 1); k >= 1; --k) {
            Rational power = 1;
            for (int e = 0; e < alpha[k - 1]; ++e) {
                power *= point[v];
            }
            partial[k] += partial[k - 1] * power;
        }
    }
    return partial[len];
}

inline Rational evaluate(const QsymExpr& expr, std::span<const Rational> point) {
    const QsymExpr mono = to_monomial(expr);
    Rational total = 0;
    for (const auto& [alpha, c] : mono.terms()) {
        total += c * evaluate_monomial(alpha, point);
    }
    return total;
}

/// Equality as quasisymmetric functions: identical monomial expansions.
inline bool equals(const QsymExpr& a, const QsymExpr& b) { return to_monomial(a) == to_monomial(b); }

/// First composition whose monomial coefficients differ, if any.
inline std::optional<Composition> first_difference(const QsymExpr& a, const QsymExpr& b) {
    QsymExpr diff = to_monomial(a) - to_monomial(b);
    if (diff.is_zero()) {
        return std::nullopt;
    }
    return diff.terms().begin()->first;
}

}  // namespace qmn
