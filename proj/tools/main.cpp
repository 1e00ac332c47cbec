#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quandlink/cli.hpp"

int main(int argc, char** argv) {
    using namespace quandlink;

    CLI::App app{"Quandle counting invariants and linking numbers for virtual link diagrams"};
    app.require_subcommand(1);

    std::string format_name = "table";
    bool quiet = false;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_flag("--quiet", quiet, "Suppress the report; exit code only");

    // check
    auto* check = app.add_subcommand("check", "Verify the quandle axioms of an operation matrix");
    check->fallthrough();
    std::string quandle_spec;
    check->add_option("--quandle", quandle_spec, "Matrix file, Xn:k, or Tn:k ('-' = stdin)")
        ->required();

    // present
    auto* present = app.add_subcommand("present", "Print the knot quandle presentation");
    present->fallthrough();
    std::string link_path;
    present->add_option("--link", link_path, "Gauss code file ('-' = stdin)")->required();

    // linking
    auto* linking = app.add_subcommand("linking", "Virtual and classical linking numbers");
    linking->fallthrough();
    std::string linking_path;
    linking->add_option("--link", linking_path, "Gauss code file ('-' = stdin)")->required();

    // hom-count
    auto* hom = app.add_subcommand("hom-count", "Count colorings by a finite quandle");
    hom->fallthrough();
    std::string hom_path, hom_quandle, hom_method = "propagate";
    bool hom_list = false;
    double hom_budget = 1e8;
    hom->add_option("--link", hom_path, "Gauss code file ('-' = stdin)")->required();
    hom->add_option("--quandle", hom_quandle, "Matrix file, Xn:k, or Tn:k")->required();
    hom->add_option("--method", hom_method, "Counting engine")
        ->check(CLI::IsMember({"oracle", "propagate"}))
        ->capture_default_str();
    hom->add_flag("--list", hom_list, "List every coloring");
    hom->add_option("--budget", hom_budget, "Oracle assignment budget")->capture_default_str();

    // invariants
    auto* invariants = app.add_subcommand("invariants", "Sweep coloring counts by X_n over a range");
    invariants->fallthrough();
    std::string inv_path;
    cli::InvariantsOptions inv_options;
    invariants->add_option("--link", inv_path, "Gauss code file ('-' = stdin)")->required();
    invariants->add_option("--min-n", inv_options.min_n, "Smallest n")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    invariants->add_option("--max-n", inv_options.max_n, "Largest n")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    invariants->add_option("--method", inv_options.method, "closed | oracle | propagate")
        ->check(CLI::IsMember({"closed", "oracle", "propagate"}))
        ->capture_default_str();
    invariants->add_option("--budget", inv_options.budget, "Oracle assignment budget")
        ->capture_default_str();

    // recover
    auto* recover = app.add_subcommand("recover", "Recover |lk| from X_n coloring counts");
    recover->fallthrough();
    std::string rec_path, rec_method = "propagate";
    double rec_budget = 1e8;
    std::optional<int> rec_max_n;
    recover->add_option("--link", rec_path, "Gauss code file ('-' = stdin)")->required();
    recover->add_option("--max-n", rec_max_n,
                        "Largest n to test (default: the two-component crossing count)");
    recover->add_option("--method", rec_method, "closed | oracle | propagate")
        ->check(CLI::IsMember({"closed", "oracle", "propagate"}))
        ->capture_default_str();
    recover->add_option("--budget", rec_budget, "Oracle assignment budget")->capture_default_str();

    // perturb
    auto* perturb = app.add_subcommand("perturb", "Rewrite a diagram by random R1/R2 insertions");
    perturb->fallthrough();
    std::string pert_path;
    std::uint64_t pert_seed = 0;
    int pert_budget = 0;
    perturb->add_option("--link", pert_path, "Gauss code file ('-' = stdin)")->required();
    perturb->add_option("--seed", pert_seed, "RNG seed")->capture_default_str();
    perturb->add_option("--budget", pert_budget, "Number of moves to insert")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    cli::Common common;
    common.format = *cli::parse_format(format_name);
    common.quiet = quiet;

    if (check->parsed()) return cli::cmd_check(quandle_spec, common, std::cout, std::cerr);
    if (present->parsed()) return cli::cmd_present(link_path, common, std::cout, std::cerr);
    if (linking->parsed()) return cli::cmd_linking(linking_path, common, std::cout, std::cerr);
    if (hom->parsed())
        return cli::cmd_hom_count(hom_path, hom_quandle, hom_method, hom_list, hom_budget, common,
                                  std::cout, std::cerr);
    if (invariants->parsed())
        return cli::cmd_invariants(inv_path, inv_options, common, std::cout, std::cerr);
    if (recover->parsed())
        return cli::cmd_recover(rec_path, rec_max_n, rec_method, rec_budget, common, std::cout,
                                std::cerr);
    if (perturb->parsed())
        return cli::cmd_perturb(pert_path, pert_seed, pert_budget, common, std::cout, std::cerr);
    return 0;
}
