#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ssalign/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ssalign: recover and apply similarity transforms between equivalent "
                 "observable state-space realizations"};
    app.require_subcommand(1);

    ssalign::CliOptions opts;
    std::string         system0_path, system_path, transform_path, out_path;

    const auto add_tolerance_flags = [&](CLI::App* cmd) {
        cmd->add_option("--tol", opts.residual_tol,
                        "Relative residual acceptance threshold (default 1e-8)");
        cmd->add_option("--rank-tol", opts.rank_tol,
                        "Absolute singular-value cutoff for rank decisions (0 = automatic)");
    };

    CLI::App* find = app.add_subcommand(
        "find-transform", "Recover T with A0 = T^-1 A T and C0 = C T from two documents");
    find->add_option("system0", system0_path, "Target realization document")->required();
    find->add_option("system", system_path, "Source realization document")->required();
    find->add_option("-o,--output", out_path, "Transform document path (default: stdout)");
    add_tolerance_flags(find);

    CLI::App* transform =
        app.add_subcommand("transform", "Apply a transform document to a realization document");
    transform->add_option("system", system_path, "Realization document")->required();
    transform->add_option("transform", transform_path, "Transform document")->required();
    transform->add_option("-o,--output", out_path, "Output document path (default: stdout)");
    add_tolerance_flags(transform);

    CLI::App* verify = app.add_subcommand(
        "verify", "Recover T and check Markov-parameter equivalence of two documents");
    verify->add_option("system0", system0_path, "Target realization document")->required();
    verify->add_option("system", system_path, "Source realization document")->required();
    verify->add_option("--markov-count", opts.markov_count,
                       "Markov parameters to compare (default 2 * n_x)");
    add_tolerance_flags(verify);

    CLI::App* check =
        app.add_subcommand("check-observability", "Kalman rank test for one document");
    check->add_option("system", system_path, "Realization document")->required();
    add_tolerance_flags(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ssalign::exit_code::ok : ssalign::exit_code::parse;
    }

    if (find->parsed()) {
        return ssalign::cmd_find_transform(system0_path, system_path, out_path, opts, std::cout,
                                           std::cerr);
    }
    if (transform->parsed()) {
        return ssalign::cmd_transform(system_path, transform_path, out_path, opts, std::cout,
                                      std::cerr);
    }
    if (verify->parsed()) {
        return ssalign::cmd_verify(system0_path, system_path, opts, std::cout, std::cerr);
    }
    if (check->parsed()) {
        return ssalign::cmd_check_observability(system_path, opts, std::cout, std::cerr);
    }
    return ssalign::exit_code::failure;
}
