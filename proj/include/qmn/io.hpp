#pragma once

// JSON and text serialization for posets and expressions.
//
// Poset file:  {"n":6,"covers":[[0,1],...],"labels":[6,5,...],"weights":[1,2,...]}
// Expression:  {"basis":"PsiHat","terms":[{"alpha":"1,5,2","coeff":"-3/1"},...]}

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "labeled_poset.hpp"
#include "qsym.hpp"

namespace qmn {

/// Malformed or unreadable input file.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline LabeledPoset poset_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> relations;
        for (const auto& edge : j.at("covers")) {
            if (!edge.is_array() || edge.size() != 2) {
                throw parse_error("each cover must be a pair [lower, upper]");
            }
            relations.emplace_back(edge[0].get<int>(), edge[1].get<int>());
        }
        auto labels = j.at("labels").get<std::vector<int>>();
        auto weights = j.contains("weights") ? j.at("weights").get<std::vector<int>>()
                                             : std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1);
        return LabeledPoset::from_covers(n, relations, std::move(labels), std::move(weights));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid poset JSON: ") + e.what());
    } catch (const poset_error& e) {
        throw parse_error(std::string("invalid poset: ") + e.what());
    }
}

inline nlohmann::json poset_to_json(const LabeledPoset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& e : p.covers()) {
        covers.push_back({e.lower, e.upper});
    }
    return {{"n", p.size()}, {"covers", covers}, {"labels", p.labels()}, {"weights", p.weights()}};
}

inline LabeledPoset read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open poset file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("'" + path + "' is not valid JSON: " + e.what());
    }
    return poset_from_json(j);
}

inline nlohmann::ordered_json expr_to_json(const QsymExpr& expr) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [alpha, c] : expr.terms()) {
        nlohmann::ordered_json term;
        term["alpha"] = to_string(alpha);
        term["coeff"] = to_string(c);
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json out;
    out["basis"] = to_string(expr.basis());
    out["terms"] = std::move(terms);
    return out;
}

inline QsymExpr expr_from_json(const nlohmann::json& j) {
    try {
        QsymExpr out(parse_basis(j.at("basis").get<std::string>()));
        for (const auto& term : j.at("terms")) {
            out.add(parse_composition(term.at("alpha").get<std::string>()),
                    parse_rational(term.at("coeff").get<std::string>()));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid expression JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("invalid expression: ") + e.what());
    }
}

/// One "alpha<TAB>coeff" line per term, canonical order.
inline std::string expr_to_text(const QsymExpr& expr) {
    std::ostringstream out;
    for (const auto& [alpha, c] : expr.terms()) {
        out << to_string(alpha) << '\t' << to_string(c) << '\n';
    }
    return out.str();
}

}  // namespace qmn
