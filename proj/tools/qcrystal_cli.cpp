// Command-line front end: branching tables, crystal dumps, and the
// verification suites.
//
// Exit codes: 0 success, 1 verification mismatch / check failure,
// 2 invalid input, 3 enumeration budget exceeded.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcrystal/branching.hpp"
#include "qcrystal/crystal.hpp"
#include "qcrystal/iota.hpp"
#include "qcrystal/irrep_small.hpp"
#include "qcrystal/oracle.hpp"
#include "qcrystal/qlaurent.hpp"

namespace {

using namespace qcrystal;

struct RunConfig {
    int n = 3;
    std::vector<int> lambda;
    std::vector<long> nu;
    std::string format;
    bool verify = false;
    std::size_t budget = 0; // 0: use default_budget()
    long max_k = 12;
    long l = 3;
    long nu3 = 2;
};

std::size_t effective_budget(const RunConfig& cfg) {
    return cfg.budget > 0 ? cfg.budget : default_budget();
}

int run_branch(const RunConfig& cfg) {
    DominantWeight lambda(cfg.n, cfg.lambda);
    CrystalGraph g = build_crystal(lambda, effective_budget(cfg));

    BranchTable table;
    if (!cfg.nu.empty()) {
        KWeight nu(cfg.nu);
        if (!kweight_dominant(nu, cfg.n))
            throw std::invalid_argument("nu is not a dominant integer so_n weight");
        table.lambda = lambda;
        const long mult = branch_multiplicity(g, nu);
        if (mult != 0) table.entries[nu] = mult;
        std::cout << (cfg.format == "json" ? to_json(table) : to_tsv(table));
        if (cfg.verify) {
            BranchTable oracle = decompose(g);
            auto it = oracle.entries.find(nu);
            const long expected = it == oracle.entries.end() ? 0 : it->second;
            if (expected != mult) {
                std::cerr << "verification mismatch at nu=" << nu.str() << ": branching " << mult
                          << ", oracle " << expected << "\n";
                return 1;
            }
        }
        return 0;
    }

    table = branch_table(g);
    std::cout << (cfg.format == "json" ? to_json(table) : to_tsv(table));
    if (cfg.verify) {
        BranchTable oracle = decompose(g);
        if (oracle.entries != table.entries) {
            std::cerr << "verification mismatch: branching and oracle tables differ\n";
            return 1;
        }
    }
    return 0;
}

int run_crystal(const RunConfig& cfg) {
    DominantWeight lambda(cfg.n, cfg.lambda);
    CrystalGraph g = build_crystal(lambda, effective_budget(cfg));
    if (cfg.format == "dot")
        std::cout << export_dot(g);
    else if (cfg.format.empty() || cfg.format == "json")
        std::cout << export_json(g, /*iota_annotations=*/true);
    else
        throw std::invalid_argument("unsupported format for crystal: " + cfg.format);
    return 0;
}

int report_exit(const CheckReport& report) {
    std::cout << report.to_json();
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"branching multiplicities of sl_n-modules restricted to so_n, "
                 "via crystal combinatorics, with a character-theoretic verifier"};
    app.require_subcommand(1);

    auto* branch = app.add_subcommand("branch", "print the branching table of V(lambda)");
    branch->add_option("--n", cfg.n, "rank parameter of sl_n")->required();
    branch->add_option("--lambda", cfg.lambda, "dominant weight, comma separated")
        ->required()
        ->delimiter(',')
        ->allow_extra_args(false);
    branch->add_option("--nu", cfg.nu, "single so_n weight to evaluate")
        ->delimiter(',')
        ->allow_extra_args(false);
    branch->add_option("--format", cfg.format, "tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    branch->add_flag("--verify", cfg.verify, "cross-check against the character oracle");
    branch->add_option("--budget", cfg.budget, "crystal vertex budget");

    auto* crystal = app.add_subcommand("crystal", "dump the crystal graph B(lambda)");
    crystal->add_option("--n", cfg.n, "rank parameter of sl_n")->required();
    crystal->add_option("--lambda", cfg.lambda, "dominant weight, comma separated")
        ->required()
        ->delimiter(',')
        ->allow_extra_args(false);
    crystal->add_option("--format", cfg.format, "json (default) or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    crystal->add_option("--budget", cfg.budget, "crystal vertex budget");

    auto* qcheck = app.add_subcommand("qcheck", "q-identity suite");
    qcheck->add_option("--max-k", cfg.max_k, "bound for recursion/binomial checks");

    auto* irrep3 = app.add_subcommand("irrep3", "based-module verification of V(nu), n = 3");
    irrep3->add_option("--nu", cfg.nu3, "highest weight")->required();

    auto* rank1 = app.add_subcommand("rank1", "rank-1 module checks");
    rank1->add_option("--l", cfg.l, "highest weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (branch->parsed()) return run_branch(cfg);
        if (crystal->parsed()) return run_crystal(cfg);
        if (qcheck->parsed()) return report_exit(qcheck_identities(cfg.max_k));
        if (irrep3->parsed()) {
            CheckReport report = qcrystal::verify_based_structure(cfg.nu3);
            CheckReport relations = check_defining_relations(cfg.nu3);
            for (auto& item : relations.items) report.items.push_back(std::move(item));
            return report_exit(report);
        }
        if (rank1->parsed()) return report_exit(rank1_module_checks(cfg.l));
    } catch (const qcrystal::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qcrystal::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const qcrystal::NotInLattice& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
