#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "starkres_cli/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"starkres: Stark resonance computations via complex absorbing "
                 "potentials and complex distortion"};
    app.require_subcommand(1);

    std::string config_path, output_dir = ".", suite;

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues for a single eps");
    spectrum->add_option("-c,--config", config_path, "JSON config file")->required();
    spectrum->add_option("-o,--output-dir", output_dir, "output directory");

    CLI::App* sweep = app.add_subcommand("sweep", "trajectory sweep over the schedule");
    sweep->add_option("-c,--config", config_path, "JSON config file")->required();
    sweep->add_option("-o,--output-dir", output_dir, "output directory");

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "lemma1|oracles|form_sign|resolvent|crossmethod")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? stark::cli::kExitOk : stark::cli::kExitConfigError;
    }

    try {
        if (spectrum->parsed()) {
            const stark::cli::RunConfig cfg = stark::cli::parse_config_file(config_path);
            return stark::cli::cmd_spectrum(cfg, output_dir);
        }
        if (sweep->parsed()) {
            const stark::cli::RunConfig cfg = stark::cli::parse_config_file(config_path);
            return stark::cli::cmd_sweep(cfg, output_dir);
        }
        return stark::cli::cmd_verify(suite);
    } catch (const stark::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return stark::cli::kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return stark::cli::kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return stark::cli::kExitSolverFailure;
    }
}
