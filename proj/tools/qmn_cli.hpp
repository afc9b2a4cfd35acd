#pragma once

// Command-line front end. run_cli() is kept separate from main() so the test
// suite can drive it with in-memory streams.
//
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 input error, 3 size guard.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmn/io.hpp"
#include "qmn/qmn.hpp"

namespace qmn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

/// --max-n wins, then QMN_MAX_N, then the library default.
inline int resolve_max_n(std::optional<int> flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("QMN_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw parse_error(std::string("QMN_MAX_N is not an integer: '") + env + "'");
        }
    }
    return kDefaultMaxN;
}

inline void emit(std::ostream& out, const QsymExpr& expr, bool json) {
    if (json) {
        out << expr_to_json(expr).dump() << '\n';
    } else {
        out << expr_to_text(expr);
    }
}

struct RandomCheckSummary {
    int count = 0;
    int main_ok = 0;
    int add_edge_ok = 0;
    int split_ok = 0;
    int add_edge_vacuous = 0;
    int split_vacuous = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Main theorem plus both recurrences (monomial and psi-hat level) on `count`
/// seeded random posets with 1..n_max elements.
inline RandomCheckSummary random_check(int count, int n_max, std::uint64_t seed, int max_n) {
    RandomCheckSummary s;
    s.count = count;
    std::mt19937_64 rng(seed);
    const double densities[] = {0.25, 0.5, 0.75};
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(n_max)));
        const double density = densities[detail::uniform_below(rng, 3)];
        const std::uint64_t poset_seed = rng();
        const LabeledPoset p = random_poset(n, density, poset_seed);
        const std::string tag = "sample " + std::to_string(i) + " (n=" + std::to_string(n) +
                                ", seed=" + std::to_string(poset_seed) + ")";

        const QsymExpr mono = monomial_expansion(p, max_n);
        const QsymExpr mn = mn_expansion(p, max_n);
        if (equals(mn, mono)) {
            ++s.main_ok;
        } else {
            s.failures.push_back(tag + ": main theorem");
        }

        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!p.comparable(a, b)) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        if (pairs.empty()) {
            ++s.add_edge_vacuous;
            ++s.add_edge_ok;
        } else {
            const auto [a, b] = pairs[detail::uniform_below(rng, pairs.size())];
            const auto [lower, upper] = add_edge_pair(p, a, b);
            const bool ok = mono == monomial_expansion(lower, max_n) + monomial_expansion(upper, max_n) &&
                            mn == mn_expansion(lower, max_n) + mn_expansion(upper, max_n);
            if (ok) {
                ++s.add_edge_ok;
            } else {
                s.failures.push_back(tag + ": addEdge on (" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }

        std::vector<int> heavy;
        for (int a = 0; a < n; ++a) {
            if (p.weight(a) >= 2) {
                heavy.push_back(a);
            }
        }
        if (heavy.empty() || n + 1 > max_n) {
            ++s.split_vacuous;
            ++s.split_ok;
        } else {
            const int a = heavy[detail::uniform_below(rng, heavy.size())];
            const int d1 = 1 + static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(p.weight(a) - 1)));
            const auto split = split_weight(p, a, d1, p.weight(a) - d1);
            const bool ok =
                mono == monomial_expansion(split.p_prime, max_n) - monomial_expansion(split.p_doubleprime, max_n) &&
                mn == mn_expansion(split.p_prime, max_n) - mn_expansion(split.p_doubleprime, max_n);
            if (ok) {
                ++s.split_ok;
            } else {
                s.failures.push_back(tag + ": splitWeight on element " + std::to_string(a));
            }
        }
    }
    return s;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted Murnaghan-Nakayama expansions of (P, omega)-partition generating functions"};
    app.require_subcommand(1);

    std::string poset_path;
    bool json = false;
    std::optional<int> max_n_flag;
    std::uint64_t seed = 1;
    std::uint64_t samples = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-n", max_n_flag, "Largest poset size to enumerate (default 10 or $QMN_MAX_N)");
        sub->add_flag("--json", json, "Emit JSON instead of text");
    };
    auto add_poset = [&](CLI::App* sub) {
        sub->add_option("--poset", poset_path, "Poset JSON file")->required();
    };

    auto* expand = app.add_subcommand("expand", "Weighted Murnaghan-Nakayama expansion of a poset");
    add_poset(expand);
    add_common(expand);
    std::string expand_basis = "PsiHat";
    expand->add_option("--basis", expand_basis, "Output basis")
        ->check(CLI::IsMember({"M", "Psi", "PsiHat"}))
        ->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "Brute-force monomial expansion of a poset");
    add_poset(oracle);
    add_common(oracle);
    std::string oracle_basis = "M";
    oracle->add_option("--basis", oracle_basis, "Output basis")
        ->check(CLI::IsMember({"M", "Psi", "PsiHat"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Compare the expansion against the brute-force oracle");
    add_poset(verify);
    add_common(verify);
    bool corrupt = false;
    verify->add_flag("--corrupt", corrupt, "Self-test: perturb the expansion before comparing");

    auto* schur = app.add_subcommand("schur", "Expansion of the (skew) Schur function of a shape");
    std::string shape_text;
    std::string inner_text;
    std::string schur_basis = "PsiHat";
    schur->add_option("--shape", shape_text, "Outer partition, e.g. 3,2,1")->required();
    schur->add_option("--inner", inner_text, "Inner partition for skew shapes");
    schur->add_option("--basis", schur_basis, "Output basis")
        ->check(CLI::IsMember({"M", "Psi", "PsiHat"}))
        ->capture_default_str();
    add_common(schur);

    auto* chi_cmd = app.add_subcommand("chi", "Symmetric group characters");
    int chi_n = 0;
    std::string lambda_text;
    std::string mu_text;
    chi_cmd->add_option("--n", chi_n, "Print the full character table of S_n");
    chi_cmd->add_option("--lambda", lambda_text, "Single value: shape");
    chi_cmd->add_option("--mu", mu_text, "Single value: cycle type");
    add_common(chi_cmd);

    auto* ident = app.add_subcommand("identities", "Coarsening identities for a weight composition");
    std::string d_text;
    ident->add_option("--d", d_text, "Weights of a naturally labeled chain, e.g. 1,2,2")->required();
    ident->add_option("--samples", samples, "Staircase Monte Carlo samples (0 = skip)");
    ident->add_option("--seed", seed, "Monte Carlo seed");
    add_common(ident);

    auto* rcheck = app.add_subcommand("random-check", "Batch property check on random posets");
    int count = 100;
    int n_max = 6;
    rcheck->add_option("--count", count, "Number of random posets")->capture_default_str();
    rcheck->add_option("--n-max", n_max, "Largest poset size")->capture_default_str();
    rcheck->add_option("--seed", seed, "Seed")->capture_default_str();
    add_common(rcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        const int max_n = resolve_max_n(max_n_flag);

        if (*expand) {
            const LabeledPoset p = read_poset_file(poset_path);
            emit(out, to_basis(mn_expansion(p, max_n), parse_basis(expand_basis)), json);
            return kExitOk;
        }
        if (*oracle) {
            const LabeledPoset p = read_poset_file(poset_path);
            emit(out, to_basis(monomial_expansion(p, max_n), parse_basis(oracle_basis)), json);
            return kExitOk;
        }
        if (*verify) {
            const LabeledPoset p = read_poset_file(poset_path);
            QsymExpr mn = mn_expansion(p, max_n);
            if (corrupt) {
                const Composition first = mn.is_zero() ? Composition{p.total_weight()} : mn.terms().begin()->first;
                mn.add(first, 1);
            }
            const QsymExpr mono = monomial_expansion(p, max_n);
            if (auto diff = first_difference(mn, mono)) {
                out << "FAIL: coefficient of M_" << to_string(*diff) << " is "
                    << to_string(to_monomial(mn).coefficient(*diff)) << " from the psi-hat expansion but "
                    << to_string(mono.coefficient(*diff)) << " by enumeration\n";
                return kExitFail;
            }
            out << "PASS\n";
            return kExitOk;
        }
        if (*schur) {
            const SkewShape shape(parse_partition(shape_text), parse_partition(inner_text));
            const LabeledPoset p = shape_to_poset(shape);
            emit(out, to_basis(mn_expansion(p, max_n), parse_basis(schur_basis)), json);
            return kExitOk;
        }
        if (*chi_cmd) {
            if (!lambda_text.empty() || !mu_text.empty()) {
                const Partition lambda = parse_partition(lambda_text);
                const Partition mu = parse_partition(mu_text);
                const Integer value = chi(lambda, mu, max_n);
                if (json) {
                    nlohmann::ordered_json j;
                    j["lambda"] = to_string(lambda);
                    j["mu"] = to_string(mu);
                    j["chi"] = nlohmann::json::parse(value.str());
                    out << j.dump() << '\n';
                } else {
                    out << value.str() << '\n';
                }
                return kExitOk;
            }
            if (chi_n < 1) {
                err << "error: chi needs --n N or both --lambda and --mu\n";
                return kExitInput;
            }
            if (chi_n > max_n) {
                throw size_guard_error("character table of S_" + std::to_string(chi_n) +
                                       " exceeds the enumeration limit " + std::to_string(max_n));
            }
            const auto table = character_table(chi_n, max_n);
            if (json) {
                nlohmann::ordered_json j;
                j["n"] = chi_n;
                j["table"] = nlohmann::ordered_json::array();
                for (const auto& entry : table) {
                    nlohmann::ordered_json row;
                    row["lambda"] = to_string(entry.lambda);
                    row["mu"] = to_string(entry.mu);
                    row["chi"] = nlohmann::json::parse(entry.value.str());
                    j["table"].push_back(std::move(row));
                }
                out << j.dump() << '\n';
            } else {
                for (const auto& entry : table) {
                    out << to_string(entry.lambda) << '\t' << to_string(entry.mu) << '\t' << entry.value.str() << '\n';
                }
            }
            return kExitOk;
        }
        if (*ident) {
            const Composition d = parse_composition(d_text);
            const Rational sum = probabilistic_sum(d);
            const bool q_ok = q_identity_holds(d);
            const LinextIdentity linext = linext_identity_check(d);
            nlohmann::ordered_json j;
            j["d"] = to_string(d);
            j["sum"] = to_string(sum);
            j["q_identity"] = q_ok;
            j["linext_lhs"] = linext.lhs.str();
            j["linext_rhs"] = linext.rhs.str();
            if (samples > 0) {
                nlohmann::ordered_json mc = nlohmann::ordered_json::array();
                for (const auto& [beta, freq] : staircase_monte_carlo(d, samples, seed)) {
                    nlohmann::ordered_json row;
                    row["beta"] = to_string(beta);
                    row["frequency"] = to_string(freq);
                    row["exact"] = to_string(probabilistic_term(d, coarsening_from_blocks(d, beta)));
                    mc.push_back(std::move(row));
                }
                j["monte_carlo"] = std::move(mc);
            }
            if (json) {
                out << j.dump() << '\n';
            } else {
                for (const auto& [key, value] : j.items()) {
                    if (key != "monte_carlo") {
                        out << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
                    }
                }
                if (j.contains("monte_carlo")) {
                    for (const auto& row : j["monte_carlo"]) {
                        out << "beta " << row["beta"].get<std::string>() << '\t' << row["frequency"].get<std::string>()
                            << '\t' << row["exact"].get<std::string>() << '\n';
                    }
                }
            }
            return (sum == 1 && q_ok && linext.lhs == linext.rhs) ? kExitOk : kExitFail;
        }
        if (*rcheck) {
            if (count < 0 || n_max < 1) {
                err << "error: --count must be >= 0 and --n-max >= 1\n";
                return kExitInput;
            }
            if (n_max > max_n) {
                throw size_guard_error("--n-max " + std::to_string(n_max) + " exceeds the enumeration limit " +
                                       std::to_string(max_n));
            }
            const RandomCheckSummary s = random_check(count, n_max, seed, max_n);
            out << s.main_ok << '/' << s.count << " main, " << s.add_edge_ok << '/' << s.count << " addEdge, "
                << s.split_ok << '/' << s.count << " splitWeight\n";
            out << "vacuous: " << s.add_edge_vacuous << " addEdge (no incomparable pair), " << s.split_vacuous
                << " splitWeight (no weight >= 2)\n";
            for (const auto& f : s.failures) {
                out << "failed " << f << '\n';
            }
            out << (s.passed() ? "PASS" : "FAIL") << '\n';
            return s.passed() ? kExitOk : kExitFail;
        }
    } catch (const size_guard_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace qmn::cli
