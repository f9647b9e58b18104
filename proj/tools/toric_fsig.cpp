#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Exact F-signatures of affine toric rings, pairs and triples"};
    app.require_subcommand(1);

    std::string compute_path;
    toric::cli::ComputeOptions compute;
    bool no_reflection = false;
    auto* compute_cmd = app.add_subcommand("compute", "compute s(R), s(R,D) or s(R,D,a^t)");
    compute_cmd->add_option("file", compute_path, "problem JSON")->required();
    compute_cmd->add_flag("--pair", compute.pair, "treat the problem as a pair (zero divisor if absent)");
    compute_cmd->add_flag("--triple", compute.triple, "treat the problem as a triple");
    compute_cmd->add_flag("--no-reflection-check", no_reflection, "skip the Q-Gorenstein reflection cross-check");
    compute_cmd->add_flag("--lattice-volume", compute.lattice_volume, "also report the lattice index and Lebesgue volume");

    std::string verify_path;
    toric::cli::VerifyOptions verify;
    std::string q_list = "2,4,8";
    auto* verify_cmd = app.add_subcommand("verify", "check the volume against brute-force counting oracles");
    verify_cmd->add_option("file", verify_path, "problem JSON")->required();
    verify_cmd->add_option("--mode", verify.mode, "plain|pair|triple|singh|product")
        ->check(CLI::IsMember({"plain", "pair", "triple", "singh", "product"}));
    verify_cmd->add_option("--q", q_list, "comma-separated scaling factors");
    verify_cmd->add_option("--radius", verify.radius, "search radius for the lattice-vector oracle")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute_cmd->parsed()) {
            compute.reflection_check = !no_reflection;
            const auto problem = toric::load_problem(compute_path);
            std::cout << toric::cli::run_compute(problem, compute).dump(2) << "\n";
            return 0;
        }
        verify.q_values = toric::cli::parse_q_list(q_list);
        const auto problem = toric::load_problem(verify_path);
        const auto report = toric::cli::run_verify(problem, verify);
        std::cout << report.dump(2) << "\n";
        return report["pass"].get<bool>() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "toric-fsig: " << e.what() << "\n";
        return toric::cli::exit_code(e);
    }
}
