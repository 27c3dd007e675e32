// Command line front end: evaluates group expressions, spectra and element
// order ratios, and runs verification suites.
//
// Exit codes: 0 success (all checks pass), 1 verification failure,
// 2 usage error, 3 enumeration cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ordspec/census.hpp"
#include "ordspec/errors.hpp"
#include "ordspec/expr.hpp"
#include "ordspec/group_ops.hpp"

using namespace ordspec;

namespace {

struct GlobalOpts {
    std::uint64_t cap = default_element_cap;
    unsigned threads = 1;
    std::string fixtures_dir;
};

Nat parse_k(const std::string& text) {
    Nat k;
    if (mpz_set_str(k.get_mpz_t(), text.c_str(), 10) != 0 || k < 1)
        throw value_error("k must be a positive integer, got `" + text + "`");
    return k;
}

std::string inline_spectrum(const OrderSpectrum& s) {
    std::string out;
    for (const auto& [order, count] : s.counts()) {
        if (!out.empty())
            out += ' ';
        out += order.get_str() + ":" + count.get_str();
    }
    return out;
}

const std::map<std::string, Family>& family_names() {
    static const std::map<std::string, Family> names = {
        {"Sym", Family::Sym},           {"Alt", Family::Alt},
        {"Cyclic", Family::Cyclic},     {"PSL2", Family::PSL2},
        {"PGL2", Family::PGL2},         {"PSigmaL2", Family::PSigmaL2},
        {"PGammaL2", Family::PGammaL2}, {"Sz", Family::Sz},
    };
    return names;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Element order spectra and order-dividing ratios of finite groups"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts global;
    app.add_option("--cap", global.cap, "Enumeration cap (elements)")->capture_default_str();
    app.add_option("--threads", global.threads, "Worker threads for enumeration")
        ->capture_default_str();
    app.add_option("--fixtures", global.fixtures_dir,
                   "Fixture directory (default: ./fixtures when present)");

    std::string expr_text, k_text, mode = "spectrum", rep_text, family_name, out_path;
    std::string suite_path, format = "text";
    bool star = false, index2 = false;
    unsigned long family_q = 0;
    std::uint64_t sylow_p = 0;
    std::string bound_k_text;

    CLI::App* rho_cmd = app.add_subcommand("rho", "Ratio of elements of order dividing k");
    rho_cmd->add_option("-e,--expr", expr_text, "Group expression")->required();
    rho_cmd->add_option("-k", k_text, "Order divisor k")->required();
    rho_cmd->add_flag("--star", star, "Count order exactly k instead of dividing k");
    rho_cmd->add_option("--mode", mode, "Evaluation mode")
        ->check(CLI::IsMember({"spectrum", "concrete"}))
        ->capture_default_str();

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Full order spectrum of a group");
    spectrum_cmd->add_option("-e,--expr", expr_text, "Group expression")->required();
    spectrum_cmd->add_option("-o", out_path, "Write to file instead of stdout");

    CLI::App* family_cmd =
        app.add_subcommand("family-rho", "Closed-form family evaluation of rho");
    family_cmd->add_option("--family", family_name, "Family tag")
        ->required()
        ->check(CLI::IsMember({"Sym", "Alt", "Cyclic", "PSL2", "PGL2", "PSigmaL2", "PGammaL2",
                               "Sz"}));
    family_cmd->add_option("--q", family_q, "Family parameter (q or n)")->required();
    family_cmd->add_option("-k", k_text, "Order divisor k")->required();

    CLI::App* coset_cmd =
        app.add_subcommand("coset-rho", "Order-dividing ratio on the coset rep*N");
    coset_cmd->add_option("--group", expr_text, "Group expression for N")->required();
    coset_cmd->add_option("--rep", rep_text, "Coset representative permutation")->required();
    coset_cmd->add_option("-k", k_text, "Order divisor k")->required();

    CLI::App* subgroups_cmd = app.add_subcommand("subgroups", "Subgroup listing");
    subgroups_cmd->add_flag("--index2", index2, "List all subgroups of index 2")->required();
    subgroups_cmd->add_option("-e,--expr", expr_text, "Group expression")->required();

    CLI::App* sylow_cmd = app.add_subcommand("sylow", "Sylow p-subgroup of a concrete group");
    sylow_cmd->add_option("-e,--expr", expr_text, "Group expression")->required();
    sylow_cmd->add_option("-p", sylow_p, "Prime p")->required();
    sylow_cmd->add_option("--check-bound", bound_k_text,
                          "Check rho_k(G) <= rho_k(P)/[N:P] - 1/|N| + 1/|G|");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite_path, "Suite file")->required();
    verify_cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        FixtureSet fixtures;
        if (global.fixtures_dir.empty()) {
            if (std::filesystem::is_directory("fixtures"))
                fixtures = FixtureSet("fixtures");
        } else {
            if (!std::filesystem::is_directory(global.fixtures_dir))
                throw value_error("fixture directory `" + global.fixtures_dir +
                                  "` does not exist");
            fixtures = FixtureSet(global.fixtures_dir);
        }
        EvalConfig config{global.cap, global.threads, &fixtures};

        if (rho_cmd->parsed()) {
            const ExprPtr expr = parse_expr(expr_text);
            const Nat k = parse_k(k_text);
            const OrderSpectrum s = mode == "concrete"
                                        ? spectrum_of(evaluate_concrete(expr, config),
                                                      config.threads)
                                        : evaluate_spectrum(expr, config);
            std::cout << format_rational(star ? rho_star(s, k) : rho(s, k)) << "\n";
        } else if (spectrum_cmd->parsed()) {
            const OrderSpectrum s = evaluate_spectrum(parse_expr(expr_text), config);
            if (out_path.empty()) {
                write_spectrum(std::cout, s);
            } else {
                std::ofstream out(out_path);
                if (!out)
                    throw io_error("cannot open " + out_path);
                write_spectrum(out, s);
            }
        } else if (family_cmd->parsed()) {
            auto expr = std::make_shared<GroupExpr>();
            expr->kind = GroupExpr::Kind::FamilyAtom;
            expr->family = FamilySpec::make(family_names().at(family_name),
                                            static_cast<unsigned>(family_q));
            const OrderSpectrum s = evaluate_spectrum(expr, config);
            std::cout << format_rational(rho(s, parse_k(k_text))) << "\n";
        } else if (coset_cmd->parsed()) {
            const ElementSet n = evaluate_concrete(parse_expr(expr_text), config);
            const Permutation rep = parse_perm(rep_text, n.degree());
            const OrderSpectrum s = coset_spectrum(n, rep);
            std::cout << format_rational(rho(s, parse_k(k_text))) << "\n";
        } else if (subgroups_cmd->parsed()) {
            const ElementSet g = evaluate_concrete(parse_expr(expr_text), config);
            const auto subs = index2_subgroups(g);
            std::cout << "found " << subs.size() << " subgroups of index 2 in " << expr_text
                      << " (order " << g.size() << ")\n";
            for (std::size_t i = 0; i < subs.size(); ++i) {
                const OrderSpectrum s = spectrum_of(subs[i], config.threads);
                std::cout << "subgroup " << i + 1 << ": order " << subs[i].size()
                          << "  spectrum " << inline_spectrum(s) << "\n";
            }
        } else if (sylow_cmd->parsed()) {
            const ElementSet g = evaluate_concrete(parse_expr(expr_text), config);
            const ElementSet p = sylow_subgroup(g, sylow_p);
            const OrderSpectrum ps = spectrum_of(p, config.threads);
            std::cout << "order " << p.size() << "\n"
                      << "spectrum " << inline_spectrum(ps) << "\n";
            if (!bound_k_text.empty()) {
                const Nat k = parse_k(bound_k_text);
                const ElementSet norm = normalizer(g, p);
                const Rational lhs = rho(spectrum_of(g, config.threads), k);
                const Rational rhs = rho(ps, k) / Rational(Nat(norm.size()) / Nat(p.size())) -
                                     make_ratio(1, Nat(norm.size())) +
                                     make_ratio(1, Nat(g.size()));
                std::cout << "normalizer order " << norm.size() << "\n"
                          << "rho_" << k.get_str() << "(G) = " << format_rational(lhs) << "\n"
                          << "bound = " << format_rational(rhs) << "\n"
                          << "bound " << (lhs <= rhs ? "holds" : "violated") << "\n";
                if (lhs > rhs)
                    return 1;
            }
        } else if (verify_cmd->parsed()) {
            const auto results = run_suite(read_suite(suite_path), config);
            if (format == "json")
                write_report_json(std::cout, results);
            else if (format == "csv")
                write_report_csv(std::cout, results);
            else
                write_report_text(std::cout, results);
            return all_passed(results) ? 0 : 1;
        }
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
